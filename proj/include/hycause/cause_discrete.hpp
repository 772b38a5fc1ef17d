#pragma once

#include "hycause/evaluator.hpp"
#include "hycause/formula.hpp"
#include "hycause/model.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hycause {

/// An action occurrence: the action and the index of the situation it was performed in.
struct CausePair {
  ActionTerm action;
  Timestamp ts;

  friend bool operator==(const CausePair&, const CausePair&) = default;
  friend bool operator<(const CausePair& a, const CausePair& b) { return a.ts < b.ts; }
};

std::string to_string(const CausePair& c);

/// A causal question is ill posed; `conjunct` names the requirement that failed.
class SettingViolation : public Error {
 public:
  SettingViolation(std::string conjunct, const std::string& detail);
  std::string conjunct;
};

/// Throws SettingViolation unless the scenario is executable, φ is false
/// initially and φ holds at the end of the scenario.
void check_discrete_setting(const Evaluator& ev, const Formula& effect, const Scenario& scenario);

/// Truth of φ at every prefix 0..k of the timeline.
std::vector<bool> truth_by_prefix(const Timeline& tl, const Formula& effect, std::size_t k);

/// `action` is performed at index `ts` of the scenario, φ is false just
/// before it and stays true at every later prefix.
bool causes_dir(const Evaluator& ev, const ActionTerm& action, Timestamp ts, const Formula& effect,
                const Scenario& scenario);

/// The unique direct cause, or none when φ holds from the start or fails at the end.
std::optional<CausePair> find_direct_cause(const Evaluator& ev, const Formula& effect, const Scenario& scenario);
std::optional<CausePair> find_direct_cause(const Timeline& tl, const Formula& effect, std::size_t length);

/// Direct and indirect causes, ascending by timestamp. The direct cause of
/// φ in s enables its predecessor question: what caused Poss(a) ∧ After(a, φ)
/// in the prefix where a was performed. Each step shortens the prefix, so the
/// least fixpoint is a single chain.
std::vector<CausePair> causes(const Evaluator& ev, const Formula& effect, const Scenario& scenario);

/// Poss(a) ∧ After(a, φ) for a ground action.
Formula enabling_effect(const ActionTerm& action, const Formula& effect);

}  // namespace hycause
