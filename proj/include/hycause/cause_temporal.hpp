#pragma once

#include "hycause/cause_discrete.hpp"
#include "hycause/evaluator.hpp"
#include "hycause/theory.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hycause {

/// Throws SettingViolation naming the failed requirement: the scenario is
/// non-empty and executable, and φ is false at start(S0) and at the time of
/// the first action in S0 but holds at start(σ) in σ.
void check_hybrid_setting(const Evaluator& ev, const TemporalEffect& effect, const Scenario& scenario);

/// Earliest prefix k such that φ holds at end(k) and on the whole interval
/// of every later prefix.
std::optional<std::size_t> achv_sit(const Timeline& tl, const TemporalEffect& effect);
std::optional<std::size_t> achv_sit(const Evaluator& ev, const TemporalEffect& effect, const Scenario& scenario);

struct CauseVerdict {
  enum class Status {
    Cause,
    /// The context active at achievement held from S0 on, so no action in
    /// the scenario brought it about.
    ImplicitInInitialState,
    NoCause,
  };
  enum class Via { DirectDefinition, ContributionDefinition };

  Status status = Status::NoCause;
  Via via = Via::DirectDefinition;
  std::optional<CausePair> cause;
  std::optional<std::size_t> achievement;
  std::optional<std::string> context;
  std::optional<std::size_t> context_index;
  bool agreement = true;

  friend bool operator==(const CauseVerdict&, const CauseVerdict&) = default;
};

std::string to_string(CauseVerdict::Status s);
std::string to_string(CauseVerdict::Via v);

/// Direct cause of the context active in the achievement situation.
CauseVerdict primary_cause_direct(const Evaluator& ev, const TemporalEffect& effect, const Scenario& scenario);
CauseVerdict primary_cause_direct(const Timeline& tl, const TemporalEffect& effect);

/// Executable s_a with Poss(a, s_a), s_a ⊏ s_φ ⊑ σ′, φ false at time(a) in
/// s_a, φ true at end(s_φ, σ′) in s_φ, and a performed in s_a directly
/// causing some context of the effect's fluent in s_φ.
bool dir_poss_contr(const Evaluator& ev, const ActionTerm& action, const Situation& s_a, const Situation& s_phi,
                    const Situation& sigma_prime, const TemporalEffect& effect);

/// dir_poss_contr for some σ′ ⊑ σ.
bool dir_act_contr(const Evaluator& ev, const ActionTerm& action, const Situation& s_a, const Situation& s_phi,
                   const TemporalEffect& effect, const Scenario& scenario);

/// The direct actual contributor performed before the achievement situation.
CauseVerdict prim_cause(const Evaluator& ev, const TemporalEffect& effect, const Scenario& scenario);
CauseVerdict prim_cause(const Timeline& tl, const TemporalEffect& effect);

struct Equivalence {
  CauseVerdict direct;
  CauseVerdict contribution;
  bool agree() const { return direct.cause == contribution.cause && direct.status == contribution.status; }
};

/// Runs both definitions on a valid setting.
Equivalence check_equivalence(const Evaluator& ev, const TemporalEffect& effect, const Scenario& scenario);

/// Both definitions agree; the answer has a disagreement flag when they do not.
CauseVerdict analyze_temporal(const Evaluator& ev, const TemporalEffect& effect, const Scenario& scenario);

/// Index of the context of `fluent` that holds from S0 through prefix k, if any.
std::optional<std::size_t> persistent_initial_context(const Timeline& tl, const GroundAtom& fluent, std::size_t k);

}  // namespace hycause
