#include "hycause/cause_discrete.hpp"

#include <algorithm>

namespace hycause {

std::string to_string(const CausePair& c) { return to_string(c.action) + "@" + std::to_string(c.ts.index); }

SettingViolation::SettingViolation(std::string c, const std::string& detail)
    : Error("invalid causal setting: " + c + " fails: " + detail), conjunct(std::move(c)) {}

void check_discrete_setting(const Evaluator& ev, const Formula& effect, const Scenario& scenario) {
  if (auto failure = check_executable(ev, scenario)) throw SettingViolation("Exec(scenario)", to_string(*failure));
  Timeline tl = progress(ev, scenario);
  if (ev.holds(effect, tl.state(0))) throw SettingViolation("not effect in S0", "the effect already holds initially");
  if (!ev.holds(effect, tl.state(scenario.length()))) {
    throw SettingViolation("effect at end", "the effect does not hold at the end of the scenario");
  }
}

std::vector<bool> truth_by_prefix(const Timeline& tl, const Formula& effect, std::size_t k) {
  std::vector<bool> out;
  out.reserve(k + 1);
  for (std::size_t i = 0; i <= k; ++i) out.push_back(tl.evaluator().holds(effect, tl.state(i)));
  return out;
}

bool causes_dir(const Evaluator& ev, const ActionTerm& action, Timestamp ts, const Formula& effect,
                const Scenario& scenario) {
  if (ts.index >= scenario.length() || !(scenario.action_at(ts.index) == action)) return false;
  Timeline tl = progress_unchecked(ev, scenario);
  auto truth = truth_by_prefix(tl, effect, scenario.length());
  if (truth[ts.index]) return false;
  for (std::size_t k = ts.index + 1; k <= scenario.length(); ++k) {
    if (!truth[k]) return false;
  }
  return true;
}

std::optional<CausePair> find_direct_cause(const Timeline& tl, const Formula& effect, std::size_t length) {
  auto truth = truth_by_prefix(tl, effect, length);
  for (std::size_t k = length; k-- > 0;) {
    if (!truth[k + 1]) return std::nullopt;
    if (!truth[k]) return CausePair{tl.scenario().action_at(k), Timestamp{k}};
  }
  return std::nullopt;
}

std::optional<CausePair> find_direct_cause(const Evaluator& ev, const Formula& effect, const Scenario& scenario) {
  return find_direct_cause(progress_unchecked(ev, scenario), effect, scenario.length());
}

Formula enabling_effect(const ActionTerm& action, const Formula& effect) {
  ActionRef ref{action.name, {}, action.time};
  for (const auto& a : action.args) ref.args.push_back(Term::constant(a));
  return Formula::conjunction(Formula::poss(ref), Formula::after(ref, effect));
}

std::vector<CausePair> causes(const Evaluator& ev, const Formula& effect, const Scenario& scenario) {
  Timeline tl = progress_unchecked(ev, scenario);
  std::vector<CausePair> chain;
  Formula current = effect;
  std::size_t length = scenario.length();
  while (auto direct = find_direct_cause(tl, current, length)) {
    chain.push_back(*direct);
    current = enabling_effect(direct->action, current);
    length = direct->ts.index;
  }
  std::reverse(chain.begin(), chain.end());
  return chain;
}

}  // namespace hycause
