#include "hycause/report.hpp"

namespace hycause {

Json to_json(const ActionTerm& a) {
  return Json{{"action", to_string(a)}, {"name", a.name}, {"args", a.args}, {"time", to_string(a.time)}};
}

Json to_json(const std::optional<CausePair>& c) {
  if (!c) return nullptr;
  Json j = to_json(c->action);
  j["timestamp"] = c->ts.index;
  return j;
}

Json to_json(const Scenario& s) {
  Json actions = Json::array();
  for (const auto& a : s.actions()) actions.push_back(to_string(a));
  return actions;
}

Json to_json(const std::vector<Diagnostic>& diagnostics) {
  Json out = Json::array();
  for (const auto& d : diagnostics) {
    out.push_back({{"line", d.span.line},
                   {"column", d.span.column},
                   {"kind", d.kind == Diagnostic::Kind::Syntax ? "syntax" : "semantic"},
                   {"message", d.message}});
  }
  return out;
}

Json to_json(const Replacement& r) {
  return Json{{"timestamp", r.ts.index}, {"old", to_string(r.old_action)}, {"new", to_string(r.new_action)}};
}

Json timeline_json(const Timeline& tl) {
  const Evaluator& ev = tl.evaluator();
  Json situations = Json::array();
  for (std::size_t k = 0; k < tl.size(); ++k) {
    const SituationState& st = tl.state(k);
    Json discrete = Json::object();
    for (std::size_t i = 0; i < ev.atoms().size(); ++i) discrete[to_string(ev.atoms()[i])] = static_cast<bool>(st.discrete[i]);
    Json contexts = Json::object();
    Json values = Json::object();
    for (std::size_t f = 0; f < ev.temporals().size(); ++f) {
      const auto& gt = ev.temporals()[f];
      std::string name = to_string(gt.atom);
      contexts[name] = st.active[f] ? Json(gt.labels[*st.active[f]]) : Json(nullptr);
      values[name] = {{"start", to_string(ev.value(f, st, tl.start(k)))}, {"end", to_string(ev.value(f, st, tl.end(k)))}};
    }
    situations.push_back({{"timestamp", k},
                          {"action", k == 0 ? Json(nullptr) : Json(to_string(tl.scenario().action_at(k - 1)))},
                          {"start", to_string(tl.start(k))},
                          {"end", to_string(tl.end(k))},
                          {"discrete", discrete},
                          {"contexts", contexts},
                          {"values", values}});
  }
  return situations;
}

Json verdict_json(const CauseVerdict& v, const Timeline& tl) {
  Json achievement = nullptr;
  if (v.achievement) {
    std::size_t k = *v.achievement;
    achievement = {{"index", k}, {"start", to_string(tl.start(k))}, {"end", to_string(tl.end(k))}};
  }
  return Json{{"status", to_string(v.status)},
              {"cause", to_json(v.cause)},
              {"achievementSituation", achievement},
              {"context", v.context ? Json(*v.context) : Json(nullptr)},
              {"via", to_string(v.via)},
              {"agreement", v.agreement}};
}

Json butfor_json(const ButForReport& r) {
  Json replacements = Json::array();
  for (const auto& rep : r.replacements) replacements.push_back(to_json(rep));
  return Json{{"original", to_json(r.original)},
              {"cause", to_json(r.cause)},
              {"singleRemoval", r.single_removal},
              {"replacements", replacements},
              {"defused", to_json(r.defused)},
              {"noOpCount", noop_count(r.defused)},
              {"defusedExecutable", r.defused_executable},
              {"effectInDefused", r.effect_in_defused},
              {"effectPersists", r.effect_persists()},
              {"contextsInitiallyFalse", r.contexts_initially_false},
              {"verdict", to_string(r.verdict)}};
}

}  // namespace hycause
