#include "hycause/commands.hpp"

#include "hycause/cause_discrete.hpp"
#include "hycause/cause_temporal.hpp"
#include "hycause/counterfactual.hpp"
#include "hycause/dsl.hpp"
#include "hycause/generator.hpp"
#include "hycause/report.hpp"

#include <fstream>
#include <memory>
#include <sstream>

namespace hycause {

namespace {

struct Failure {
  int code;
  std::string kind;
  std::string message;
  std::vector<Diagnostic> diagnostics;
};

std::string read_file(const std::string& path, const char* what) {
  if (path.empty()) throw Failure{kExitIo, "io", std::string("no ") + what + " file given", {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{kExitIo, "io", std::string("cannot read ") + what + " file '" + path + "'", {}};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

template <class T>
T take(Parsed<T>&& p, const std::string& what) {
  if (p.ok()) return std::move(*p.value);
  bool syntax = p.has_syntax_error() || p.diagnostics.empty();
  throw Failure{syntax ? kExitParse : kExitSemantic, syntax ? "parse" : "semantic",
                what + (syntax ? " has syntax errors" : " is ill formed"), std::move(p.diagnostics)};
}

struct Session {
  std::unique_ptr<HybridTheory> theory;
  std::unique_ptr<Evaluator> ev;
  Scenario scenario;
  std::optional<Effect> effect;
};

Session load(const CommandOptions& o, bool want_scenario, bool want_effect) {
  Session s;
  s.theory = std::make_unique<HybridTheory>(take(parse_theory(read_file(o.theory_path, "theory")), "theory"));
  s.ev = std::make_unique<Evaluator>(*s.theory);
  if (want_scenario) s.scenario = take(parse_scenario(read_file(o.scenario_path, "scenario"), *s.theory), "scenario");
  if (want_effect) {
    if (o.effect.empty()) throw Failure{kExitParse, "parse", "no effect given", {}};
    s.effect = take(parse_effect(o.effect, *s.theory), "effect");
  }
  return s;
}

// The effect is judged at start(σ); a later query time needs a trailing noOp.
Scenario with_query_time(const Scenario& s, const CommandOptions& o) {
  if (!o.at) return s;
  TimePoint t(*o.at);
  TimePoint start = start_of(s);
  if (t == start) return s;
  if (t < start) {
    throw Failure{kExitInvalidSetting, "invalid-setting",
                  "query time " + to_string(t) + " precedes the scenario's start " + to_string(start), {}};
  }
  if (!o.at_start) {
    throw Failure{kExitInvalidSetting, "invalid-setting",
                  "query time " + to_string(t) + " is inside the last situation; pass --at-start to append noOp(" +
                      to_string(t) + ")",
                  {}};
  }
  return s.after(make_noop(t));
}

Json header(const std::string& command) { return Json{{"schema", kSchema}, {"command", command}}; }

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string cause_text(const Json& c) {
  if (c.is_null()) return "none";
  return c["action"].get<std::string>() + " at timestamp " + std::to_string(c["timestamp"].get<std::size_t>());
}

std::string render_timeline(const Json& situations) {
  std::ostringstream os;
  for (const auto& s : situations) {
    os << "S" << s["timestamp"].get<std::size_t>();
    if (!s["action"].is_null()) os << " after " << s["action"].get<std::string>();
    os << "  [" << s["start"].get<std::string>() << ", " << s["end"].get<std::string>() << "]\n";
    for (const auto& [name, v] : s["values"].items()) {
      const Json& ctx = s["contexts"][name];
      os << "  " << name << ": " << v["start"].get<std::string>() << " -> " << v["end"].get<std::string>() << "  ("
         << (ctx.is_null() ? std::string("no context") : "context " + ctx.get<std::string>()) << ")\n";
    }
    std::string facts;
    for (const auto& [name, b] : s["discrete"].items()) facts += (facts.empty() ? "" : ", ") + name + "=" + (b.get<bool>() ? "true" : "false");
    if (!facts.empty()) os << "  " << facts << "\n";
  }
  return os.str();
}

std::string render_butfor(const Json& r) {
  std::ostringstream os;
  os << "primary cause: " << cause_text(r["cause"]) << "\n";
  os << "replacements:\n";
  for (const auto& rep : r["replacements"]) {
    os << "  " << rep["timestamp"].get<std::size_t>() << ": " << rep["old"].get<std::string>() << " -> "
       << rep["new"].get<std::string>() << "\n";
  }
  std::string defused;
  for (const auto& a : r["defused"]) defused += (defused.empty() ? "" : "; ") + a.get<std::string>();
  os << "defused scenario: " << defused << "\n";
  os << "defused executable: " << yes_no(r["defusedExecutable"].get<bool>()) << "\n";
  os << "effect in defused: " << yes_no(r["effectInDefused"].get<bool>()) << "\n";
  if (r["singleRemoval"].get<bool>()) {
    os << (r["effectPersists"].get<bool>() ? "effect persists" : "effect disappears") << " after removing the cause\n";
  }
  os << "contexts initially false: " << yes_no(r["contextsInitiallyFalse"].get<bool>()) << "\n";
  os << "verdict: " << r["verdict"].get<std::string>() << "\n";
  return os.str();
}

std::string render_verdict(const Json& v) {
  std::ostringstream os;
  const Json& a = v["achievementSituation"];
  if (a.is_null()) {
    os << "achievement situation: none\n";
  } else {
    os << "achievement situation: S" << a["index"].get<std::size_t>() << " [" << a["start"].get<std::string>() << ", "
       << a["end"].get<std::string>() << "]\n";
  }
  os << "active context: " << (v["context"].is_null() ? std::string("none") : v["context"].get<std::string>()) << "\n";
  os << "primary cause: " << cause_text(v["cause"]) << "\n";
  os << "status: " << v["status"].get<std::string>() << "\n";
  return os.str();
}

std::string render_text(const Json& r) {
  std::ostringstream os;
  std::string command = r["command"];
  if (r.contains("effect")) os << "effect: " << r["effect"].get<std::string>() << "\n";
  if (command == "validate") {
    os << "theory " << r["theory"].get<std::string>() << " is valid (" << r["actions"].get<std::size_t>()
       << " actions, " << r["fluents"].get<std::size_t>() << " fluents, " << r["temporalFluents"].get<std::size_t>()
       << " temporal fluents)\n";
  } else if (command == "run") {
    os << render_timeline(r["situations"]);
  } else if (command == "eval") {
    for (const auto& p : r["prefixes"]) {
      os << "S" << p["timestamp"].get<std::size_t>() << "  [" << p["start"].get<std::string>() << ", "
         << p["end"].get<std::string>() << "]";
      if (p.contains("holds")) {
        os << "  holds: " << yes_no(p["holds"].get<bool>()) << "\n";
      } else {
        os << "  value " << p["valueStart"].get<std::string>() << " -> " << p["valueEnd"].get<std::string>()
           << "  at end: " << yes_no(p["atEnd"].get<bool>()) << "  whole interval: " << yes_no(p["onInterval"].get<bool>())
           << "\n";
      }
    }
  } else if (command == "cause") {
    if (r["kind"] == "temporal") {
      os << render_verdict(r);
      os << "definitions agree: " << yes_no(r["agreement"].get<bool>()) << "\n";
    } else {
      os << "direct cause: " << cause_text(r["direct"]) << "\n";
      os << "causes:\n";
      for (const auto& c : r["causes"]) os << "  " << cause_text(c) << "\n";
    }
  } else if (command == "defuse" || command == "butfor") {
    os << render_butfor(r);
    if (r.contains("timeline")) os << "defused timeline:\n" << render_timeline(r["timeline"]);
  } else if (command == "check") {
    os << r["cases"].get<std::size_t>() << " settings from seed " << r["seed"].get<std::uint64_t>() << ": "
       << r["failures"].size() << " failures\n";
    for (const auto& f : r["failures"]) os << "  " << f.get<std::string>() << "\n";
  }
  return os.str();
}

template <class Body>
CommandResult guarded(const std::string& command, const CommandOptions& o, Body body) {
  CommandResult result;
  Json record = header(command);
  auto fail = [&](int code, const std::string& kind, const std::string& message, const std::vector<Diagnostic>& diags) {
    result.exit_code = code;
    record["error"] = {{"code", code}, {"kind", kind}, {"message", message}};
    if (!diags.empty()) record["error"]["diagnostics"] = to_json(diags);
    std::string err = "hycause: " + kind + ": " + message + "\n";
    for (const auto& d : diags) err += "  " + to_string(d) + "\n";
    result.err = err;
  };
  bool completed = false;
  try {
    result.exit_code = body(record);
    completed = true;
  } catch (const Failure& f) {
    fail(f.code, f.kind, f.message, f.diagnostics);
  } catch (const SettingViolation& e) {
    fail(kExitInvalidSetting, "invalid-setting", e.what(), {});
    record["error"]["conjunct"] = e.conjunct;
  } catch (const NotExecutable& e) {
    fail(kExitNotExecutable, "not-executable", e.what(), {});
    record["error"]["index"] = e.failure.index;
    record["error"]["action"] = to_string(e.failure.action);
  } catch (const NoPrimaryCause& e) {
    fail(kExitNoCause, "no-cause", e.what(), {});
  } catch (const MutexViolation& e) {
    fail(kExitSemantic, "mutex-violation", e.what(), {});
  } catch (const TriggerConflict& e) {
    fail(kExitSemantic, "trigger-conflict", e.what(), {});
  } catch (const std::exception& e) {
    fail(kExitInternal, "internal", e.what(), {});
  }
  if (o.format == Format::Json) {
    result.out = record.dump(2) + "\n";
  } else if (completed && !record.contains("error")) {
    result.out = render_text(record);
  } else if (completed) {
    // The disagreement record carries both verdicts alongside its error.
    Json copy = record;
    copy.erase("error");
    result.out = render_text(copy);
    result.err = "hycause: internal: " + record["error"]["message"].get<std::string>() + "\n";
  }
  return result;
}

}  // namespace

CommandResult cmd_validate(const CommandOptions& o) {
  return guarded("validate", o, [&](Json& r) {
    Session s = load(o, false, false);
    r["ok"] = true;
    r["theory"] = s.theory->name;
    r["actions"] = s.theory->actions.size();
    r["fluents"] = s.theory->fluents.size();
    r["temporalFluents"] = s.theory->temporals.size();
    return kExitOk;
  });
}

CommandResult cmd_run(const CommandOptions& o) {
  return guarded("run", o, [&](Json& r) {
    Session s = load(o, true, false);
    Scenario sc = with_query_time(s.scenario, o);
    Timeline tl = progress(*s.ev, sc);
    r["scenario"] = to_json(sc);
    r["situations"] = timeline_json(tl);
    return kExitOk;
  });
}

CommandResult cmd_eval(const CommandOptions& o) {
  return guarded("eval", o, [&](Json& r) {
    Session s = load(o, true, true);
    Scenario sc = with_query_time(s.scenario, o);
    Timeline tl = progress(*s.ev, sc);
    r["effect"] = to_string(*s.effect);
    Json prefixes = Json::array();
    for (std::size_t k = 0; k < tl.size(); ++k) {
      Json p{{"timestamp", k}, {"start", to_string(tl.start(k))}, {"end", to_string(tl.end(k))}};
      if (const auto* t = std::get_if<TemporalEffect>(&*s.effect)) {
        p["valueStart"] = to_string(tl.value(t->fluent, k, tl.start(k)));
        p["valueEnd"] = to_string(tl.value(t->fluent, k, tl.end(k)));
        p["atStart"] = holds_effect(tl, *t, tl.start(k), k);
        p["atEnd"] = holds_effect(tl, *t, tl.end(k), k);
        p["onInterval"] = holds_on_interval(tl, *t, k);
      } else {
        p["holds"] = s.ev->holds(std::get<Formula>(*s.effect), tl.state(k));
      }
      prefixes.push_back(std::move(p));
    }
    r["prefixes"] = std::move(prefixes);
    return kExitOk;
  });
}

CommandResult cmd_cause(const CommandOptions& o) {
  return guarded("cause", o, [&](Json& r) {
    Session s = load(o, true, true);
    Scenario sc = with_query_time(s.scenario, o);
    r["effect"] = to_string(*s.effect);
    r["scenario"] = to_json(sc);
    if (const auto* t = std::get_if<TemporalEffect>(&*s.effect)) {
      Equivalence eq = check_equivalence(*s.ev, *t, sc);
      Timeline tl = progress(*s.ev, sc);
      r["kind"] = "temporal";
      CauseVerdict v = eq.direct;
      v.agreement = eq.agree();
      r.update(verdict_json(v, tl));
      r["direct"] = verdict_json(eq.direct, tl);
      r["contribution"] = verdict_json(eq.contribution, tl);
      if (!v.agreement) {
        r["error"] = {{"code", kExitInternal},
                      {"kind", "internal"},
                      {"message", "the direct and contribution definitions disagree"}};
        return static_cast<int>(kExitInternal);
      }
      return static_cast<int>(v.cause ? kExitOk : kExitNoCause);
    }
    const Formula& phi = std::get<Formula>(*s.effect);
    check_discrete_setting(*s.ev, phi, sc);
    r["kind"] = "discrete";
    auto direct = find_direct_cause(*s.ev, phi, sc);
    r["status"] = direct ? "cause" : "no-cause";
    r["direct"] = to_json(direct);
    Json all = Json::array();
    for (const auto& c : causes(*s.ev, phi, sc)) all.push_back(to_json(std::optional<CausePair>(c)));
    r["causes"] = std::move(all);
    return static_cast<int>(direct ? kExitOk : kExitNoCause);
  });
}

namespace {

CommandResult butfor_command(const std::string& name, const CommandOptions& o, bool with_timeline) {
  return guarded(name, o, [&](Json& r) {
    Session s = load(o, true, true);
    Scenario sc = with_query_time(s.scenario, o);
    r["effect"] = to_string(*s.effect);
    if (const auto* t = std::get_if<TemporalEffect>(&*s.effect)) check_hybrid_setting(*s.ev, *t, sc);
    ButForReport report = butfor_report(*s.ev, *s.effect, sc, o.single_removal);
    r.update(butfor_json(report));
    if (with_timeline) r["timeline"] = timeline_json(progress_unchecked(*s.ev, report.defused));
    return static_cast<int>(kExitOk);
  });
}

}  // namespace

CommandResult cmd_defuse(const CommandOptions& o) { return butfor_command("defuse", o, true); }

CommandResult cmd_butfor(const CommandOptions& o) { return butfor_command("butfor", o, false); }

CommandResult cmd_check(const CommandOptions& o) {
  return guarded("check", o, [&](Json& r) {
    SettingGenerator gen(o.seed);
    Json failures = Json::array();
    for (std::size_t i = 0; i < o.cases; ++i) {
      RandomSetting rs = gen.next();
      const Evaluator& ev = *rs.evaluator;
      std::string where = "case " + std::to_string(i) + " (" + to_string(rs.effect) + " on " +
                          serialize_scenario(rs.scenario) + ")";
      Equivalence eq = check_equivalence(ev, rs.effect, rs.scenario);
      if (!eq.agree()) failures.push_back(where + ": definitions disagree");
      if (!eq.direct.cause) continue;
      ButForReport report = butfor_report(ev, rs.effect, rs.scenario);
      if (report.contexts_initially_false && report.verdict != ButForReport::Verdict::DependenceConfirmed) {
        failures.push_back(where + ": but-for dependence not confirmed");
      }
      try {
        if (prim_cause(ev, rs.effect, report.defused).cause) failures.push_back(where + ": cause left after defusing");
      } catch (const SettingViolation&) {
      }
    }
    r["seed"] = o.seed;
    r["cases"] = o.cases;
    r["failures"] = failures;
    return static_cast<int>(failures.empty() ? kExitOk : kExitInternal);
  });
}

CommandResult run_command(const std::string& command, const CommandOptions& o) {
  if (command == "validate") return cmd_validate(o);
  if (command == "run") return cmd_run(o);
  if (command == "eval") return cmd_eval(o);
  if (command == "cause") return cmd_cause(o);
  if (command == "defuse") return cmd_defuse(o);
  if (command == "butfor") return cmd_butfor(o);
  if (command == "check") return cmd_check(o);
  return CommandResult{kExitParse, "", "hycause: unknown command '" + command + "'\n"};
}

}  // namespace hycause
