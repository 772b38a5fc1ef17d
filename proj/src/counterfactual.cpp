#include "hycause/counterfactual.hpp"

#include <algorithm>

namespace hycause {

Scenario cf_one(const Scenario& scenario, const Replacement& r) {
  if (r.ts.index >= scenario.length()) {
    throw Error("replacement timestamp " + std::to_string(r.ts.index) + " is outside the scenario");
  }
  if (!(scenario.action_at(r.ts.index) == r.old_action)) {
    throw Error("action at timestamp " + std::to_string(r.ts.index) + " is " +
                to_string(scenario.action_at(r.ts.index)) + ", not " + to_string(r.old_action));
  }
  if (r.new_action == r.old_action) throw Error("replacement must differ from " + to_string(r.old_action));
  std::vector<ActionTerm> actions = scenario.actions();
  actions[r.ts.index] = r.new_action;
  return Scenario(scenario.initial_start(), std::move(actions));
}

std::optional<Scenario> cfex_one(const Evaluator& ev, const Scenario& scenario, const Replacement& r) {
  Scenario cf = cf_one(scenario, r);
  if (!is_executable(ev, cf)) return std::nullopt;
  return cf;
}

std::size_t noop_count(const Situation& s) {
  return static_cast<std::size_t>(
      std::count_if(s.actions().begin(), s.actions().end(), [](const ActionTerm& a) { return a.is_noop(); }));
}

Replacement defuse(const CausePair& cause) { return Replacement{make_noop(cause.action.time), cause.action, cause.ts}; }

namespace {

std::optional<CausePair> temporal_cause(const Evaluator& ev, const TemporalEffect& effect, const Scenario& s) {
  try {
    return prim_cause(ev, effect, s).cause;
  } catch (const SettingViolation&) {
    return std::nullopt;
  }
}

std::optional<CausePair> discrete_cause(const Evaluator& ev, const Formula& effect, const Scenario& s) {
  try {
    check_discrete_setting(ev, effect, s);
  } catch (const SettingViolation&) {
    return std::nullopt;
  }
  return find_direct_cause(ev, effect, s);
}

template <class FindCause>
std::vector<EliminationStep> eliminate(const Scenario& scenario, std::optional<CausePair> first, FindCause find) {
  if (!first) throw NoPrimaryCause("the effect has no primary cause in the scenario");
  std::vector<EliminationStep> steps;
  Scenario current = scenario;
  std::optional<CausePair> cause = first;
  while (cause) {
    current = cf_one(current, defuse(*cause));
    steps.push_back(EliminationStep{*cause, current});
    cause = find(current);
  }
  return steps;
}

}  // namespace

std::vector<EliminationStep> preempted_contributors(const Evaluator& ev, const TemporalEffect& effect,
                                                    const Scenario& scenario) {
  auto first = prim_cause(ev, effect, scenario).cause;
  return eliminate(scenario, first, [&](const Scenario& s) { return temporal_cause(ev, effect, s); });
}

std::vector<EliminationStep> preempted_contributors(const Evaluator& ev, const Formula& effect,
                                                    const Scenario& scenario) {
  check_discrete_setting(ev, effect, scenario);
  auto first = find_direct_cause(ev, effect, scenario);
  return eliminate(scenario, first, [&](const Scenario& s) { return discrete_cause(ev, effect, s); });
}

Scenario defused_situation(const Evaluator& ev, const TemporalEffect& effect, const Scenario& scenario) {
  return preempted_contributors(ev, effect, scenario).back().scenario;
}

Scenario defused_situation(const Evaluator& ev, const Formula& effect, const Scenario& scenario) {
  return preempted_contributors(ev, effect, scenario).back().scenario;
}

std::string to_string(ButForReport::Verdict v) {
  switch (v) {
    case ButForReport::Verdict::DependenceConfirmed: return "dependence-confirmed";
    case ButForReport::Verdict::ImplicitInInitialState: return "implicit-in-initial-state";
    case ButForReport::Verdict::NotApplicable: return "not-applicable";
  }
  return "?";
}

namespace {

void conclude(ButForReport& r) {
  if (!r.contexts_initially_false) {
    r.verdict = ButForReport::Verdict::ImplicitInInitialState;
  } else if (!r.effect_persists()) {
    r.verdict = ButForReport::Verdict::DependenceConfirmed;
  } else {
    r.verdict = ButForReport::Verdict::NotApplicable;
  }
}

void record(ButForReport& r, const std::vector<EliminationStep>& steps, bool single_removal) {
  r.cause = steps.front().cause;
  std::size_t used = single_removal ? 1 : steps.size();
  for (std::size_t i = 0; i < used; ++i) r.replacements.push_back(defuse(steps[i].cause));
  r.defused = steps[used - 1].scenario;
}

ButForReport temporal_report(const Evaluator& ev, const TemporalEffect& effect, const Scenario& scenario,
                             bool single_removal) {
  ButForReport r;
  r.original = scenario;
  r.single_removal = single_removal;
  CauseVerdict verdict = prim_cause(ev, effect, scenario);
  std::size_t f = *ev.temporal_index(effect.fluent);
  SituationState s0 = ev.initial_state();
  const auto& gt = ev.temporals()[f];
  for (std::size_t c = 0; c < gt.conditions.size(); ++c) {
    if (ev.holds_context(f, c, s0)) r.contexts_initially_false = false;
  }
  if (!verdict.cause) {
    if (verdict.status != CauseVerdict::Status::ImplicitInInitialState) {
      throw NoPrimaryCause("the effect has no primary cause in the scenario");
    }
    r.defused = scenario;
  } else {
    record(r, preempted_contributors(ev, effect, scenario), single_removal);
  }
  r.defused_executable = is_executable(ev, r.defused);
  Timeline tl = progress_unchecked(ev, r.defused);
  std::size_t n = r.defused.length();
  r.effect_in_defused = holds_effect(tl, effect, tl.start(n), n);
  conclude(r);
  return r;
}

ButForReport discrete_report(const Evaluator& ev, const Formula& effect, const Scenario& scenario,
                             bool single_removal) {
  ButForReport r;
  r.original = scenario;
  r.single_removal = single_removal;
  record(r, preempted_contributors(ev, effect, scenario), single_removal);
  r.defused_executable = is_executable(ev, r.defused);
  r.effect_in_defused = eval_dynamic(ev, effect, r.defused);
  conclude(r);
  return r;
}

}  // namespace

ButForReport butfor_report(const Evaluator& ev, const Effect& effect, const Scenario& scenario, bool single_removal) {
  if (const auto* t = std::get_if<TemporalEffect>(&effect)) return temporal_report(ev, *t, scenario, single_removal);
  return discrete_report(ev, std::get<Formula>(effect), scenario, single_removal);
}

}  // namespace hycause
