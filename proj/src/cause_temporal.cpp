#include "hycause/cause_temporal.hpp"

namespace hycause {

std::string to_string(CauseVerdict::Status s) {
  switch (s) {
    case CauseVerdict::Status::Cause: return "cause";
    case CauseVerdict::Status::ImplicitInInitialState: return "implicit-in-initial-state";
    case CauseVerdict::Status::NoCause: return "no-cause";
  }
  return "?";
}

std::string to_string(CauseVerdict::Via v) {
  return v == CauseVerdict::Via::DirectDefinition ? "direct-definition" : "contribution-definition";
}

namespace {

Timeline setting_timeline(const Evaluator& ev, const TemporalEffect& effect, const Scenario& scenario) {
  if (!ev.temporal_index(effect.fluent)) throw Error("unknown temporal fluent " + to_string(effect.fluent));
  if (scenario.is_initial()) throw SettingViolation("scenario != S0", "the scenario is empty");
  std::optional<Timeline> tl;
  try {
    tl.emplace(progress(ev, scenario));
  } catch (const NotExecutable& e) {
    throw SettingViolation("Exec(scenario)", to_string(e.failure));
  }
  if (holds_effect(*tl, effect, tl->start(0), 0)) {
    throw SettingViolation("not effect at start(S0)", "the effect holds when the scenario starts");
  }
  if (holds_effect(*tl, effect, scenario.action_at(0).time, 0)) {
    throw SettingViolation("not effect at time(first action) in S0", "the effect holds before the first action");
  }
  std::size_t n = scenario.length();
  if (!holds_effect(*tl, effect, tl->start(n), n)) {
    throw SettingViolation("effect at start(scenario)", "the effect does not hold at the end of the scenario");
  }
  return std::move(*tl);
}

}  // namespace

void check_hybrid_setting(const Evaluator& ev, const TemporalEffect& effect, const Scenario& scenario) {
  setting_timeline(ev, effect, scenario);
}

std::optional<std::size_t> achv_sit(const Timeline& tl, const TemporalEffect& effect) {
  std::size_t n = tl.size() - 1;
  std::optional<std::size_t> found;
  // Walk backwards while every later interval satisfies the effect.
  for (std::size_t k = n + 1; k-- > 0;) {
    if (holds_effect(tl, effect, tl.end(k), k)) found = k;
    if (k == 0 || !holds_on_interval(tl, effect, k)) break;
  }
  return found;
}

std::optional<std::size_t> achv_sit(const Evaluator& ev, const TemporalEffect& effect, const Scenario& scenario) {
  return achv_sit(progress_unchecked(ev, scenario), effect);
}

std::optional<std::size_t> persistent_initial_context(const Timeline& tl, const GroundAtom& fluent, std::size_t k) {
  auto f = tl.evaluator().temporal_index(fluent);
  if (!f) return std::nullopt;
  auto c = tl.state(0).active[*f];
  if (!c) return std::nullopt;
  for (std::size_t i = 1; i <= k; ++i) {
    if (tl.state(i).active[*f] != c) return std::nullopt;
  }
  return c;
}

namespace {

// Fills achievement, context and the no-cause status; returns the context index.
std::optional<std::size_t> achievement_context(const Timeline& tl, const TemporalEffect& effect, CauseVerdict& v) {
  v.achievement = achv_sit(tl, effect);
  if (!v.achievement) return std::nullopt;
  std::size_t f = *tl.evaluator().temporal_index(effect.fluent);
  auto c = tl.state(*v.achievement).active[f];
  if (!c) return std::nullopt;
  v.context_index = c;
  v.context = tl.evaluator().temporals()[f].labels[*c];
  return c;
}

void settle_without_cause(const Timeline& tl, const TemporalEffect& effect, CauseVerdict& v) {
  if (v.achievement && persistent_initial_context(tl, effect.fluent, *v.achievement)) {
    v.status = CauseVerdict::Status::ImplicitInInitialState;
  } else {
    v.status = CauseVerdict::Status::NoCause;
  }
}

}  // namespace

CauseVerdict primary_cause_direct(const Timeline& tl, const TemporalEffect& effect) {
  CauseVerdict v;
  v.via = CauseVerdict::Via::DirectDefinition;
  auto c = achievement_context(tl, effect, v);
  if (c) {
    const auto& gt = tl.evaluator().temporals()[*tl.evaluator().temporal_index(effect.fluent)];
    v.cause = find_direct_cause(tl, gt.conditions[*c], *v.achievement);
  }
  if (v.cause) {
    v.status = CauseVerdict::Status::Cause;
  } else {
    settle_without_cause(tl, effect, v);
  }
  return v;
}

CauseVerdict primary_cause_direct(const Evaluator& ev, const TemporalEffect& effect, const Scenario& scenario) {
  return primary_cause_direct(setting_timeline(ev, effect, scenario), effect);
}

namespace {

// Exec of the first k actions, read off states the timeline already holds.
bool prefix_executable(const Timeline& tl, std::size_t k) {
  for (std::size_t i = 0; i < k; ++i) {
    const ActionTerm& a = tl.scenario().action_at(i);
    if (a.time < tl.start(i) || !tl.evaluator().poss(a, tl.state(i))) return false;
  }
  return true;
}

// Direct contribution over a timeline of σ′ with s_a and s_φ given as prefix lengths.
bool contributes(const Timeline& tl, std::size_t sigma_prime, const ActionTerm& action, std::size_t s_a,
                 std::size_t s_phi, const TemporalEffect& effect) {
  const Evaluator& ev = tl.evaluator();
  const Scenario& sigma = tl.scenario();
  if (!(s_a < s_phi && s_phi <= sigma_prime && sigma_prime <= sigma.length())) return false;
  if (!prefix_executable(tl, s_a)) return false;
  if (!ev.poss(action, tl.state(s_a))) return false;
  if (effect.satisfied_by(ev.value(effect.fluent, tl.state(s_a), action.time))) return false;
  TimePoint end = s_phi == sigma_prime ? tl.start(s_phi) : sigma.action_at(s_phi).time;
  if (!effect.satisfied_by(ev.value(effect.fluent, tl.state(s_phi), end))) return false;
  // CausesDir(a, ts(s_a), γ_i, s_φ) for some context i.
  if (!(sigma.action_at(s_a) == action)) return false;
  const auto& gt = ev.temporals()[*ev.temporal_index(effect.fluent)];
  for (const auto& gamma : gt.conditions) {
    if (ev.holds(gamma, tl.state(s_a))) continue;
    bool persists = true;
    for (std::size_t k = s_a + 1; k <= s_phi && persists; ++k) persists = ev.holds(gamma, tl.state(k));
    if (persists) return true;
  }
  return false;
}

}  // namespace

bool dir_poss_contr(const Evaluator& ev, const ActionTerm& action, const Situation& s_a, const Situation& s_phi,
                    const Situation& sigma_prime, const TemporalEffect& effect) {
  if (!ev.temporal_index(effect.fluent)) throw Error("unknown temporal fluent " + to_string(effect.fluent));
  if (!s_a.is_proper_prefix_of(s_phi) || !s_phi.is_prefix_of(sigma_prime)) return false;
  Timeline tl = progress_unchecked(ev, sigma_prime);
  return contributes(tl, sigma_prime.length(), action, s_a.length(), s_phi.length(), effect);
}

bool dir_act_contr(const Evaluator& ev, const ActionTerm& action, const Situation& s_a, const Situation& s_phi,
                   const TemporalEffect& effect, const Scenario& scenario) {
  if (!ev.temporal_index(effect.fluent)) throw Error("unknown temporal fluent " + to_string(effect.fluent));
  if (!s_a.is_proper_prefix_of(s_phi) || !s_phi.is_prefix_of(scenario)) return false;
  Timeline tl = progress_unchecked(ev, scenario);
  for (std::size_t m = s_phi.length(); m <= scenario.length(); ++m) {
    if (contributes(tl, m, action, s_a.length(), s_phi.length(), effect)) return true;
  }
  return false;
}

CauseVerdict prim_cause(const Timeline& tl, const TemporalEffect& effect) {
  CauseVerdict v;
  v.via = CauseVerdict::Via::ContributionDefinition;
  achievement_context(tl, effect, v);
  if (v.achievement) {
    std::size_t s_phi = *v.achievement;
    const Scenario& sigma = tl.scenario();
    std::vector<CausePair> found;
    for (std::size_t ts = 0; ts < s_phi; ++ts) {
      for (std::size_t m = s_phi; m <= sigma.length(); ++m) {
        if (contributes(tl, m, sigma.action_at(ts), ts, s_phi, effect)) {
          found.push_back(CausePair{sigma.action_at(ts), Timestamp{ts}});
          break;
        }
      }
    }
    if (found.size() > 1) {
      throw Error("internal error: " + std::to_string(found.size()) + " primary causes found for " + to_string(effect));
    }
    if (!found.empty()) v.cause = found.front();
  }
  if (v.cause) {
    v.status = CauseVerdict::Status::Cause;
  } else {
    settle_without_cause(tl, effect, v);
  }
  return v;
}

CauseVerdict prim_cause(const Evaluator& ev, const TemporalEffect& effect, const Scenario& scenario) {
  return prim_cause(setting_timeline(ev, effect, scenario), effect);
}

Equivalence check_equivalence(const Evaluator& ev, const TemporalEffect& effect, const Scenario& scenario) {
  Timeline tl = setting_timeline(ev, effect, scenario);
  return Equivalence{primary_cause_direct(tl, effect), prim_cause(tl, effect)};
}

CauseVerdict analyze_temporal(const Evaluator& ev, const TemporalEffect& effect, const Scenario& scenario) {
  Equivalence eq = check_equivalence(ev, effect, scenario);
  CauseVerdict v = eq.direct;
  v.agreement = eq.agree();
  return v;
}

}  // namespace hycause
