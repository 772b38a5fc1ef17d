#include "hycause/generator.hpp"

#include "hycause/dsl.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace hycause {

SettingGenerator::SettingGenerator(std::uint64_t seed, GeneratorLimits limits) : rng_(seed), limits_(limits) {}

int SettingGenerator::uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

namespace {

std::string literal(int fluent, bool positive) { return (positive ? "F" : "!F") + std::to_string(fluent); }

}  // namespace

std::string SettingGenerator::theory_text() {
  int nd = uniform(1, limits_.max_discrete);
  int nt = uniform(1, limits_.max_temporal);
  int na = uniform(2, limits_.max_actions);
  auto random_literal = [&] { return literal(uniform(0, nd - 1), uniform(0, 1) == 1); };

  std::ostringstream os;
  os << "theory random\n";
  for (int a = 0; a < na; ++a) {
    os << "action a" << a << " poss: " << (uniform(0, 1) ? std::string("true") : random_literal()) << "\n";
  }
  for (int f = 0; f < nd; ++f) {
    std::vector<std::string> pos, neg;
    for (int a = 0; a < na; ++a) {
      int roll = uniform(0, 9);
      if (roll >= 4) continue;
      std::string trig = "a" + std::to_string(a);
      if (uniform(0, 2) == 0) trig += " when " + random_literal();
      (roll < 2 ? pos : neg).push_back(trig);
    }
    os << "fluent F" << f << "\n";
    auto list = [&](const char* kw, const std::vector<std::string>& ts) {
      if (ts.empty()) return;
      os << "  " << kw << ":";
      for (std::size_t i = 0; i < ts.size(); ++i) os << (i ? ", " : " ") << ts[i];
      os << "\n";
    };
    list("caused-by", pos);
    list("canceled-by", neg);
  }
  std::map<int, bool> forced;
  for (int t = 0; t < nt; ++t) {
    os << "temporal T" << t << "\n";
    std::vector<int> fluents(nd);
    for (int i = 0; i < nd; ++i) fluents[i] = i;
    std::shuffle(fluents.begin(), fluents.end(), rng_);
    int m = std::min(nd, uniform(1, 2));
    std::vector<int> assignments(1 << m);
    for (int i = 0; i < (1 << m); ++i) assignments[i] = i;
    std::shuffle(assignments.begin(), assignments.end(), rng_);
    int nc = std::min<int>(uniform(1, limits_.max_contexts), static_cast<int>(assignments.size()));
    if (limits_.inactive_start && t == 0) {
      // Leave one assignment without a context and start in it.
      nc = std::min(nc, (1 << m) - 1);
      for (int i = 0; i < m; ++i) forced[fluents[i]] = (assignments[nc] >> i) & 1;
    }
    for (int c = 0; c < nc; ++c) {
      os << "  context c" << c << ":";
      for (int i = 0; i < m; ++i) os << (i ? " & " : " ") << literal(fluents[i], (assignments[c] >> i) & 1);
      int rate = uniform(-6, 12);
      int den = uniform(0, 4) == 0 ? uniform(2, 3) : 1;
      os << " rate " << rate;
      if (den != 1) os << "/" << den;
      os << "\n";
    }
  }
  os << "init:";
  for (int f = 0; f < nd; ++f) {
    bool value = forced.count(f) ? forced[f] : uniform(0, 1) == 1;
    os << (f ? ", " : " ") << "F" << f << " = " << (value ? "true" : "false");
  }
  for (int t = 0; t < nt; ++t) os << ", T" << t << " = " << uniform(-10, 10);
  os << "\n";
  return os.str();
}

Scenario SettingGenerator::executable_scenario(const Evaluator& ev, std::size_t length) {
  SituationState state = ev.initial_state();
  std::vector<ActionTerm> actions;
  TimePoint now = state.start;
  for (std::size_t i = 0; i < length; ++i) {
    now = now.plus(Rational(uniform(0, 4)));
    std::vector<ActionTerm> possible;
    for (const auto& a : ev.theory().actions) {
      ActionTerm t{a.name, {}, now};
      if (ev.poss(t, state)) possible.push_back(t);
    }
    ActionTerm chosen = make_noop(now);
    if (!possible.empty() && uniform(0, 9) != 0) {
      chosen = possible[static_cast<std::size_t>(uniform(0, static_cast<int>(possible.size()) - 1))];
    }
    state = ev.successor(state, chosen);
    actions.push_back(chosen);
  }
  return Scenario(ev.theory().initial_start, std::move(actions));
}

std::optional<TemporalEffect> SettingGenerator::valid_effect(const Evaluator& ev, const Scenario& scenario) {
  if (scenario.is_initial() || ev.temporals().empty()) return std::nullopt;
  Timeline tl = progress(ev, scenario);
  std::vector<std::size_t> eligible;
  SituationState s0 = ev.initial_state();
  for (std::size_t f = 0; f < ev.temporals().size(); ++f) {
    bool active = false;
    for (std::size_t c = 0; c < ev.temporals()[f].conditions.size(); ++c) active = active || ev.holds_context(f, c, s0);
    if (!limits_.inactive_start || !active) eligible.push_back(f);
  }
  if (eligible.empty()) return std::nullopt;
  const auto& gt = ev.temporals()[eligible[static_cast<std::size_t>(uniform(0, static_cast<int>(eligible.size()) - 1))]];
  std::size_t n = scenario.length();
  const Rational at_s0 = tl.value(gt.atom, 0, tl.start(0));
  const Rational at_first = tl.value(gt.atom, 0, scenario.action_at(0).time);
  const Rational at_query = tl.value(gt.atom, n, tl.start(n));
  // Any relation true at the query point would also hold initially.
  if (at_query == at_s0 || at_query == at_first) return std::nullopt;
  std::vector<Rational> candidates;
  candidates.reserve(10 * tl.size());
  for (std::size_t k = 0; k < tl.size(); ++k) {
    for (const auto& t : {tl.start(k), tl.end(k)}) {
      Rational v = tl.value(gt.atom, k, t);
      for (const Rational& d : {Rational(0), Rational(1), Rational(-1), Rational(1, 2), Rational(-1, 2)}) {
        candidates.push_back(Rational(v + d));
      }
    }
  }
  std::shuffle(candidates.begin(), candidates.end(), rng_);
  static const Relation relations[] = {Relation::Less, Relation::LessEq, Relation::Equal, Relation::GreaterEq,
                                       Relation::Greater};
  for (int attempt = 0; attempt < 5; ++attempt) {
    Relation rel = relations[uniform(0, 4)];
    for (const auto& c : candidates) {
      if (compare(at_s0, rel, c) || compare(at_first, rel, c)) continue;
      if (compare(at_query, rel, c)) return TemporalEffect{gt.atom, rel, c};
    }
  }
  return std::nullopt;
}

RandomSetting SettingGenerator::next() {
  for (;;) {
    std::string text = theory_text();
    auto parsed = parse_theory(text);
    if (!parsed.ok()) {
      std::string msg;
      for (const auto& d : parsed.diagnostics) msg += to_string(d) + "\n";
      throw Error("generated theory is invalid:\n" + msg + text);
    }
    auto theory = std::make_shared<const HybridTheory>(std::move(*parsed.value));
    auto ev = std::make_shared<const Evaluator>(*theory);
    for (int attempt = 0; attempt < 4; ++attempt) {
      Scenario s = executable_scenario(*ev, static_cast<std::size_t>(uniform(1, static_cast<int>(limits_.max_length))));
      if (auto e = valid_effect(*ev, s)) return RandomSetting{text, theory, ev, std::move(s), std::move(*e)};
    }
  }
}

}  // namespace hycause
