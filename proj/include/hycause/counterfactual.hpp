#pragma once

#include "hycause/cause_discrete.hpp"
#include "hycause/cause_temporal.hpp"
#include "hycause/dsl.hpp"
#include "hycause/evaluator.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hycause {

/// Put `new_action` where `old_action` was performed at `ts`.
struct Replacement {
  ActionTerm new_action;
  ActionTerm old_action;
  Timestamp ts;

  friend bool operator==(const Replacement&, const Replacement&) = default;
};

/// The effect has no primary cause in the scenario, so nothing can be defused.
class NoPrimaryCause : public Error {
 public:
  using Error::Error;
};

/// σ with one action replaced; every other action keeps its position.
Scenario cf_one(const Scenario& scenario, const Replacement& r);
/// cf_one when the result is executable.
std::optional<Scenario> cfex_one(const Evaluator& ev, const Scenario& scenario, const Replacement& r);

std::size_t noop_count(const Situation& s);

/// The noOp replacement of a cause: same position, same time.
Replacement defuse(const CausePair& cause);

struct EliminationStep {
  CausePair cause;
  Scenario scenario;  // after replacing `cause` with noOp
};

/// Repeatedly replaces the current primary cause with noOp until the
/// scenario stops being executable, stops being a valid setting, or has no
/// primary cause left. Throws NoPrimaryCause when σ itself has none.
std::vector<EliminationStep> preempted_contributors(const Evaluator& ev, const TemporalEffect& effect,
                                                    const Scenario& scenario);
/// The same loop for a discrete effect, eliminating its direct cause.
std::vector<EliminationStep> preempted_contributors(const Evaluator& ev, const Formula& effect,
                                                    const Scenario& scenario);

/// Final scenario of the elimination loop.
Scenario defused_situation(const Evaluator& ev, const TemporalEffect& effect, const Scenario& scenario);
Scenario defused_situation(const Evaluator& ev, const Formula& effect, const Scenario& scenario);

struct ButForReport {
  enum class Verdict { DependenceConfirmed, ImplicitInInitialState, NotApplicable };

  Scenario original;
  std::optional<CausePair> cause;
  Scenario defused;
  std::vector<Replacement> replacements;
  bool single_removal = false;
  bool defused_executable = false;
  bool effect_in_defused = false;
  bool contexts_initially_false = true;
  Verdict verdict = Verdict::NotApplicable;

  bool effect_persists() const { return defused_executable && effect_in_defused; }
};

std::string to_string(ButForReport::Verdict v);

/// Defuses the scenario (or, with `single_removal`, replaces only the cause)
/// and tests whether the effect still follows. The dependence is confirmed
/// iff every context of the effect's fluent is false in S0 and the defused
/// scenario is not both executable and satisfying the effect at its start.
/// Discrete effects have no contexts; that condition holds vacuously.
ButForReport butfor_report(const Evaluator& ev, const Effect& effect, const Scenario& scenario,
                           bool single_removal = false);

}  // namespace hycause
