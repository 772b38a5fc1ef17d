#include "hycause/evaluator.hpp"

namespace hycause {

MutexViolation::MutexViolation(std::size_t ts, std::string f, std::string a, std::string b)
    : Error("mutex violation at timestamp " + std::to_string(ts) + ": contexts " + a + " and " + b + " of " + f +
            " hold simultaneously"),
      timestamp(ts),
      fluent(std::move(f)),
      first_label(std::move(a)),
      second_label(std::move(b)) {}

TemporalParadox::TemporalParadox(const ActionTerm& action, const TimePoint& start)
    : Error("action " + to_string(action) + " happens before the situation starts at " + to_string(start)) {}

std::string to_string(const ExecFailure& f) {
  return "action " + std::to_string(f.index) + " " + to_string(f.action) + ": " + f.reason;
}

NotExecutable::NotExecutable(ExecFailure f) : Error("not executable: " + to_string(f)), failure(std::move(f)) {}

Evaluator::Evaluator(const HybridTheory& theory) : theory_(&theory) {
  for (const auto& f : theory.fluents) {
    for (auto& g : ground_instances(f.name, f.params, theory)) {
      atom_ids_.emplace(g, atoms_.size());
      atoms_.push_back(std::move(g));
    }
  }
  std::map<GroundAtom, Rational> initial;
  for (const auto& i : theory.initial_temporal) initial[i.atom] = i.value;
  for (const auto& t : theory.temporals) {
    for (auto& g : ground_instances(t.name, t.params, theory)) {
      Bindings b;
      for (std::size_t i = 0; i < t.params.size(); ++i) b[t.params[i].name] = g.args[i];
      GroundTemporal gt;
      for (const auto& c : t.sea.contexts) {
        gt.labels.push_back(c.label);
        gt.conditions.push_back(instantiate(c.condition, b, theory));
        gt.rates.push_back(c.rate);
      }
      auto it = initial.find(g);
      if (it == initial.end()) throw Error("missing initial value for " + to_string(g));
      gt.initial = it->second;
      gt.atom = g;
      temporal_ids_.emplace(g, temporals_.size());
      temporals_.push_back(std::move(gt));
    }
  }
}

std::optional<std::size_t> Evaluator::atom_index(const GroundAtom& atom) const {
  auto it = atom_ids_.find(atom);
  if (it == atom_ids_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> Evaluator::temporal_index(const GroundAtom& atom) const {
  auto it = temporal_ids_.find(atom);
  if (it == temporal_ids_.end()) return std::nullopt;
  return it->second;
}

SituationState Evaluator::initial_state() const {
  SituationState s;
  s.start = theory_->initial_start;
  s.discrete.assign(atoms_.size(), false);
  for (const auto& i : theory_->initial_discrete) {
    if (auto id = atom_index(i.atom)) s.discrete[*id] = i.value;
  }
  for (const auto& t : temporals_) s.base.push_back(t.initial);
  assign_contexts(s);
  return s;
}

void Evaluator::assign_contexts(SituationState& state) const {
  state.active.assign(temporals_.size(), std::nullopt);
  for (std::size_t f = 0; f < temporals_.size(); ++f) {
    const auto& gt = temporals_[f];
    for (std::size_t c = 0; c < gt.conditions.size(); ++c) {
      if (!holds(gt.conditions[c], state)) continue;
      if (state.active[f]) {
        throw MutexViolation(state.timestamp, to_string(gt.atom), gt.labels[*state.active[f]], gt.labels[c]);
      }
      state.active[f] = c;
    }
  }
}

bool Evaluator::poss(const ActionTerm& action, const SituationState& state) const {
  if (action.is_noop()) return true;
  const ActionDecl* decl = theory_->find_action(action.name);
  if (!decl) throw Error("undeclared action '" + action.name + "'");
  if (decl->params.size() != action.args.size()) throw Error("arity mismatch for " + to_string(action));
  Bindings b;
  for (std::size_t i = 0; i < decl->params.size(); ++i) b[decl->params[i].name] = action.args[i];
  return holds(instantiate(decl->precondition, b, *theory_), state);
}

namespace {

// Binds pattern variables against the action's arguments; false on mismatch.
bool match(const ActionPattern& p, const ActionTerm& a, Bindings& b) {
  if (p.action != a.name || p.args.size() != a.args.size()) return false;
  for (std::size_t i = 0; i < p.args.size(); ++i) {
    const Term& t = p.args[i];
    if (!t.is_variable()) {
      if (t.name != a.args[i]) return false;
      continue;
    }
    auto [it, fresh] = b.emplace(t.name, a.args[i]);
    if (!fresh && it->second != a.args[i]) return false;
  }
  return true;
}

// All completions of `partial` over the fluent parameters it leaves unbound.
std::vector<Bindings> complete(const Bindings& partial, const std::vector<Parameter>& params, const HybridTheory& th) {
  std::vector<Bindings> out{partial};
  for (const auto& p : params) {
    if (partial.count(p.name)) continue;
    std::vector<Bindings> next;
    for (const auto& b : out) {
      for (const auto& obj : th.domain(p.sort)) {
        Bindings e = b;
        e[p.name] = obj;
        next.push_back(std::move(e));
      }
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace

void Evaluator::apply_triggers(const SituationState& state, const ActionTerm& action, std::vector<bool>& next) const {
  for (const auto& f : theory_->fluents) {
    std::map<std::size_t, bool> fired_pos;
    std::map<std::size_t, bool> fired_neg;
    auto scan = [&](const std::vector<Trigger>& triggers, std::map<std::size_t, bool>& fired) {
      for (const auto& trig : triggers) {
        Bindings b;
        if (!match(trig.pattern, action, b)) continue;
        for (const auto& full : complete(b, f.params, *theory_)) {
          GroundAtom g{f.name, {}};
          for (const auto& p : f.params) g.args.push_back(full.at(p.name));
          auto id = atom_index(g);
          if (!id || fired.count(*id)) continue;
          if (holds(instantiate(trig.guard, full, *theory_), state)) fired[*id] = true;
        }
      }
    };
    scan(f.ssa.positive, fired_pos);
    scan(f.ssa.negative, fired_neg);
    for (const auto& [id, _] : fired_pos) {
      if (fired_neg.count(id)) {
        throw TriggerConflict("action " + to_string(action) + " both causes and cancels " + to_string(atoms_[id]));
      }
      next[id] = true;
    }
    for (const auto& [id, _] : fired_neg) next[id] = false;
  }
}

SituationState Evaluator::successor(const SituationState& state, const ActionTerm& action, bool check_time) const {
  if (check_time && action.time < state.start) throw TemporalParadox(action, state.start);
  SituationState next;
  next.timestamp = state.timestamp + 1;
  next.start = action.time;
  next.discrete = state.discrete;
  if (!action.is_noop()) apply_triggers(state, action, next.discrete);
  next.base.reserve(temporals_.size());
  for (std::size_t f = 0; f < temporals_.size(); ++f) next.base.push_back(value(f, state, action.time));
  assign_contexts(next);
  return next;
}

bool Evaluator::holds(const Formula& f, const SituationState& state) const {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::True: return true;
    case K::Atom: {
      GroundAtom g{f.symbol(), {}};
      for (const auto& t : f.args()) {
        if (t.is_variable()) throw Error("free variable '" + t.name + "' in " + to_string(f));
        g.args.push_back(t.name);
      }
      auto id = atom_index(g);
      if (!id) throw Error("unknown ground atom " + to_string(g));
      return state.discrete[*id];
    }
    case K::Poss:
    case K::After: {
      ActionTerm a{f.action().name, {}, f.action().time};
      for (const auto& t : f.action().args) {
        if (t.is_variable()) throw Error("free variable '" + t.name + "' in " + to_string(f));
        a.args.push_back(t.name);
      }
      if (f.kind() == K::Poss) return poss(a, state);
      return holds(f.lhs(), successor(state, a));
    }
    case K::Not: return !holds(f.lhs(), state);
    case K::And: return holds(f.lhs(), state) && holds(f.rhs(), state);
    case K::Exists: return holds(instantiate(f, {}, *theory_), state);
  }
  return false;
}

bool Evaluator::holds_context(std::size_t temporal, std::size_t context, const SituationState& state) const {
  return holds(temporals_.at(temporal).conditions.at(context), state);
}

Rational Evaluator::value(std::size_t f, const SituationState& state, const TimePoint& t) const {
  const auto& active = state.active.at(f);
  if (!active) return state.base[f];
  return Rational(state.base[f] + t.since(state.start) * temporals_[f].rates[*active]);
}

Rational Evaluator::value(const GroundAtom& fluent, const SituationState& state, const TimePoint& t) const {
  auto id = temporal_index(fluent);
  if (!id) throw Error("unknown temporal fluent " + to_string(fluent));
  return value(*id, state, t);
}

Timeline::Timeline(const Evaluator& ev, Scenario scenario, std::vector<SituationState> states)
    : evaluator_(&ev), scenario_(std::move(scenario)), states_(std::move(states)) {}

Rational Timeline::value(const GroundAtom& fluent, std::size_t k, const TimePoint& t) const {
  return evaluator_->value(fluent, state(k), t);
}

namespace {

std::vector<SituationState> run(const Evaluator& ev, const Situation& s, bool check) {
  std::vector<SituationState> states{ev.initial_state()};
  for (std::size_t i = 0; i < s.length(); ++i) {
    const ActionTerm& a = s.action_at(i);
    const SituationState& cur = states.back();
    if (check && a.time < cur.start) {
      throw NotExecutable({i, a, "time " + to_string(a.time) + " precedes situation start " + to_string(cur.start)});
    }
    if (check && !ev.poss(a, cur)) throw NotExecutable({i, a, "precondition does not hold"});
    states.push_back(ev.successor(cur, a, check));
  }
  return states;
}

}  // namespace

std::optional<ExecFailure> check_executable(const Evaluator& ev, const Situation& s) {
  try {
    run(ev, s, true);
  } catch (const NotExecutable& e) {
    return e.failure;
  }
  return std::nullopt;
}

bool is_executable(const Evaluator& ev, const Situation& s) { return !check_executable(ev, s); }

Timeline progress(const Evaluator& ev, const Scenario& s) { return Timeline(ev, s, run(ev, s, true)); }

Timeline progress_unchecked(const Evaluator& ev, const Scenario& s) { return Timeline(ev, s, run(ev, s, false)); }

bool poss(const Evaluator& ev, const ActionTerm& action, const Situation& s) {
  return ev.poss(action, progress_unchecked(ev, s).state(s.length()));
}

bool eval_dynamic(const Evaluator& ev, const Formula& ground, const Situation& s) {
  return ev.holds(ground, progress_unchecked(ev, s).state(s.length()));
}

Rational eval_temporal(const Evaluator& ev, const GroundAtom& fluent, const TimePoint& t, const Situation& s) {
  return ev.value(fluent, progress_unchecked(ev, s).state(s.length()), t);
}

bool holds_effect(const Timeline& tl, const TemporalEffect& effect, const TimePoint& t, std::size_t k) {
  return effect.satisfied_by(tl.value(effect.fluent, k, t));
}

bool holds_on_interval(const Timeline& tl, const TemporalEffect& effect, std::size_t k) {
  return holds_effect(tl, effect, tl.start(k), k) && holds_effect(tl, effect, tl.end(k), k);
}

bool holds_effect(const Evaluator& ev, const TemporalEffect& effect, const TimePoint& t, const Situation& s) {
  return effect.satisfied_by(eval_temporal(ev, effect.fluent, t, s));
}

bool holds_on_interval(const Evaluator& ev, const TemporalEffect& effect, const Situation& prefix,
                       const Scenario& scenario) {
  if (!prefix.is_prefix_of(scenario)) throw Error("situation is not a prefix of the scenario");
  return holds_on_interval(progress_unchecked(ev, scenario), effect, prefix.length());
}

std::optional<std::string> active_context(const Timeline& tl, const GroundAtom& fluent, std::size_t k) {
  auto id = tl.evaluator().temporal_index(fluent);
  if (!id) throw Error("unknown temporal fluent " + to_string(fluent));
  const auto& active = tl.state(k).active[*id];
  if (!active) return std::nullopt;
  return tl.evaluator().temporals()[*id].labels[*active];
}

}  // namespace hycause
