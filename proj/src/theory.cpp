#include "hycause/theory.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace hycause {

std::string to_string(const Diagnostic& d) {
  std::string out = std::to_string(d.span.line) + ":" + std::to_string(d.span.column) + ": ";
  out += d.kind == Diagnostic::Kind::Syntax ? "syntax error: " : "error: ";
  return out + d.message;
}

std::string to_string(const GroundAtom& a) {
  std::string out = a.symbol + "(";
  for (std::size_t i = 0; i < a.args.size(); ++i) {
    if (i) out += ", ";
    out += a.args[i];
  }
  return out + ")";
}

const ActionDecl* HybridTheory::find_action(std::string_view n) const {
  auto it = std::find_if(actions.begin(), actions.end(), [&](const auto& a) { return a.name == n; });
  return it == actions.end() ? nullptr : &*it;
}

const FluentDecl* HybridTheory::find_fluent(std::string_view n) const {
  auto it = std::find_if(fluents.begin(), fluents.end(), [&](const auto& f) { return f.name == n; });
  return it == fluents.end() ? nullptr : &*it;
}

const TemporalDecl* HybridTheory::find_temporal(std::string_view n) const {
  auto it = std::find_if(temporals.begin(), temporals.end(), [&](const auto& f) { return f.name == n; });
  return it == temporals.end() ? nullptr : &*it;
}

std::optional<std::string> HybridTheory::sort_of(std::string_view object) const {
  for (const auto& o : objects) {
    if (o.name == object) return o.sort;
  }
  return std::nullopt;
}

std::vector<std::string> HybridTheory::domain(std::string_view sort) const {
  std::vector<std::string> out;
  for (const auto& o : objects) {
    if (o.sort == sort) out.push_back(o.name);
  }
  return out;
}

bool HybridTheory::has_sort(std::string_view sort) const {
  return std::any_of(objects.begin(), objects.end(), [&](const auto& o) { return o.sort == sort; });
}

std::string to_string(Relation r) {
  switch (r) {
    case Relation::Less: return "<";
    case Relation::LessEq: return "<=";
    case Relation::Equal: return "=";
    case Relation::GreaterEq: return ">=";
    case Relation::Greater: return ">";
  }
  return "?";
}

bool compare(const Rational& value, Relation r, const Rational& threshold) {
  int c = cmp(value, threshold);
  switch (r) {
    case Relation::Less: return c < 0;
    case Relation::LessEq: return c <= 0;
    case Relation::Equal: return c == 0;
    case Relation::GreaterEq: return c >= 0;
    case Relation::Greater: return c > 0;
  }
  return false;
}

std::string to_string(const TemporalEffect& e) {
  return to_string(e.fluent) + " " + to_string(e.relation) + " " + to_string(e.threshold);
}

std::vector<GroundAtom> ground_instances(const std::string& symbol, const std::vector<Parameter>& params,
                                         const HybridTheory& theory) {
  std::vector<GroundAtom> out{GroundAtom{symbol, {}}};
  for (const auto& p : params) {
    std::vector<GroundAtom> next;
    auto dom = theory.domain(p.sort);
    for (const auto& partial : out) {
      for (const auto& obj : dom) {
        GroundAtom g = partial;
        g.args.push_back(obj);
        next.push_back(std::move(g));
      }
    }
    out = std::move(next);
  }
  return out;
}

namespace {

using Scope = std::map<std::string, std::string>;  // variable -> sort

class Validator {
 public:
  explicit Validator(const HybridTheory& th) : th_(th) {}

  std::vector<Diagnostic> formula_only(const Formula& f, bool allow_dynamic, SourceSpan span) {
    check_formula(f, {}, allow_dynamic, span, "formula");
    return std::move(diags_);
  }

  std::vector<Diagnostic> run() {
    check_declarations();
    for (const auto& a : th_.actions) {
      Scope scope = params_scope(a.params);
      check_formula(a.precondition, scope, true, a.span, "precondition of " + a.name);
    }
    for (const auto& f : th_.fluents) check_ssa(f);
    for (const auto& t : th_.temporals) check_sea(t);
    check_initial_state();
    return std::move(diags_);
  }

 private:
  void error(SourceSpan span, std::string msg) {
    diags_.push_back(Diagnostic{Diagnostic::Kind::Semantic, span, std::move(msg)});
  }

  Scope params_scope(const std::vector<Parameter>& params) {
    Scope scope;
    for (const auto& p : params) scope[p.name] = p.sort;
    return scope;
  }

  void check_params(const std::vector<Parameter>& params, SourceSpan span, const std::string& owner) {
    std::set<std::string> seen;
    for (const auto& p : params) {
      if (!seen.insert(p.name).second) error(span, "duplicate parameter '" + p.name + "' in " + owner);
      if (!th_.has_sort(p.sort)) error(span, "unknown sort '" + p.sort + "' in " + owner);
    }
  }

  void check_declarations() {
    std::map<std::string, std::string> symbols;  // name -> kind
    auto declare = [&](const std::string& name, const std::string& kind, SourceSpan span) {
      if (name == kNoOpSymbol) {
        error(span, "'noOp' is a reserved symbol and cannot be declared");
        return;
      }
      auto [it, fresh] = symbols.emplace(name, kind);
      if (!fresh) error(span, "'" + name + "' already declared as " + it->second);
    };
    for (const auto& o : th_.objects) declare(o.name, "object", o.span);
    for (const auto& a : th_.actions) {
      declare(a.name, "action", a.span);
      check_params(a.params, a.span, "action " + a.name);
    }
    for (const auto& f : th_.fluents) {
      declare(f.name, "fluent", f.span);
      check_params(f.params, f.span, "fluent " + f.name);
    }
    for (const auto& t : th_.temporals) {
      declare(t.name, "temporal fluent", t.span);
      check_params(t.params, t.span, "temporal fluent " + t.name);
    }
  }

  void check_term(const Term& t, const std::string& expected_sort, const Scope& scope, SourceSpan span,
                  const std::string& where) {
    if (t.is_variable()) {
      auto it = scope.find(t.name);
      if (it == scope.end()) {
        error(span, "unbound variable '" + t.name + "' in " + where);
      } else if (it->second != expected_sort) {
        error(span, "variable '" + t.name + "' has sort " + it->second + ", expected " + expected_sort + " in " +
                        where);
      }
      return;
    }
    auto sort = th_.sort_of(t.name);
    if (!sort) {
      error(span, "unknown object '" + t.name + "' in " + where);
    } else if (*sort != expected_sort) {
      error(span, "object '" + t.name + "' has sort " + *sort + ", expected " + expected_sort + " in " + where);
    }
  }

  void check_action_ref(const ActionRef& a, const Scope& scope, SourceSpan span, const std::string& where) {
    if (a.name == kNoOpSymbol) {
      if (!a.args.empty()) error(span, "noOp takes only a time argument in " + where);
      return;
    }
    const ActionDecl* decl = th_.find_action(a.name);
    if (!decl) {
      error(span, "unknown action '" + a.name + "' in " + where);
      return;
    }
    if (decl->params.size() != a.args.size()) {
      error(span, "action '" + a.name + "' expects " + std::to_string(decl->params.size()) +
                      " object argument(s) plus a time in " + where);
      return;
    }
    for (std::size_t i = 0; i < a.args.size(); ++i) check_term(a.args[i], decl->params[i].sort, scope, span, where);
  }

  void check_formula(const Formula& f, Scope scope, bool allow_dynamic, SourceSpan span, const std::string& where) {
    using K = Formula::Kind;
    switch (f.kind()) {
      case K::True: return;
      case K::Atom: {
        const FluentDecl* decl = th_.find_fluent(f.symbol());
        if (!decl) {
          if (th_.find_temporal(f.symbol())) {
            error(span, "temporal fluent '" + f.symbol() + "' cannot appear in a discrete formula (" + where + ")");
          } else {
            error(span, "unknown fluent '" + f.symbol() + "' in " + where);
          }
          return;
        }
        if (decl->params.size() != f.args().size()) {
          error(span, "fluent '" + f.symbol() + "' expects " + std::to_string(decl->params.size()) +
                          " argument(s) in " + where);
          return;
        }
        for (std::size_t i = 0; i < f.args().size(); ++i) check_term(f.args()[i], decl->params[i].sort, scope, span, where);
        return;
      }
      case K::Poss:
      case K::After:
        if (!allow_dynamic) {
          error(span, "Poss/After are not allowed in " + where);
          return;
        }
        check_action_ref(f.action(), scope, span, where);
        if (f.kind() == K::After) check_formula(f.lhs(), scope, allow_dynamic, span, where);
        return;
      case K::Not: check_formula(f.lhs(), scope, allow_dynamic, span, where); return;
      case K::And:
        check_formula(f.lhs(), scope, allow_dynamic, span, where);
        check_formula(f.rhs(), scope, allow_dynamic, span, where);
        return;
      case K::Exists:
        if (!th_.has_sort(f.sort())) error(span, "unknown sort '" + f.sort() + "' in " + where);
        scope[f.symbol()] = f.sort();
        check_formula(f.lhs(), scope, allow_dynamic, span, where);
        return;
    }
  }

  void check_trigger(const FluentDecl& fluent, const Trigger& trig, const std::string& where) {
    if (trig.pattern.action == kNoOpSymbol) {
      error(trig.span, "noOp cannot trigger a fluent change (" + where + ")");
      return;
    }
    const ActionDecl* decl = th_.find_action(trig.pattern.action);
    if (!decl) {
      error(trig.span, "unknown action '" + trig.pattern.action + "' in " + where);
      return;
    }
    if (decl->params.size() != trig.pattern.args.size()) {
      error(trig.span, "action '" + decl->name + "' expects " + std::to_string(decl->params.size()) +
                           " object argument(s) in " + where);
      return;
    }
    Scope scope = params_scope(fluent.params);
    Scope pattern_vars;
    for (std::size_t i = 0; i < trig.pattern.args.size(); ++i) {
      const Term& t = trig.pattern.args[i];
      const std::string& sort = decl->params[i].sort;
      if (!t.is_variable()) {
        check_term(t, sort, scope, trig.span, where);
        continue;
      }
      if (auto it = scope.find(t.name); it != scope.end()) {
        if (it->second != sort) {
          error(trig.span, "variable '" + t.name + "' has sort " + it->second + ", expected " + sort + " in " + where);
        }
      } else {
        pattern_vars.emplace(t.name, sort);
      }
    }
    for (const auto& [v, s] : pattern_vars) scope.emplace(v, s);
    check_formula(trig.guard, scope, false, trig.span, "guard of " + where);
  }

  void check_ssa(const FluentDecl& f) {
    for (const auto& t : f.ssa.positive) check_trigger(f, t, "caused-by trigger of " + f.name);
    for (const auto& t : f.ssa.negative) check_trigger(f, t, "canceled-by trigger of " + f.name);
  }

  // Conjunction of (possibly negated) atoms, or nullopt when the formula has another shape.
  using Literal = std::pair<std::string, bool>;  // rendered atom, polarity
  static bool collect_literals(const Formula& f, std::vector<Literal>& out) {
    using K = Formula::Kind;
    switch (f.kind()) {
      case K::True: return true;
      case K::Atom: out.emplace_back(to_string(f), true); return true;
      case K::Not:
        if (f.lhs().kind() != K::Atom) return false;
        out.emplace_back(to_string(f.lhs()), false);
        return true;
      case K::And: return collect_literals(f.lhs(), out) && collect_literals(f.rhs(), out);
      default: return false;
    }
  }

  static bool literally_exclusive(const std::vector<Literal>& a, const std::vector<Literal>& b) {
    auto contradictory = [](const std::vector<Literal>& lits) {
      for (const auto& [atom, pol] : lits) {
        for (const auto& [atom2, pol2] : lits) {
          if (atom == atom2 && pol != pol2) return true;
        }
      }
      return false;
    };
    std::vector<Literal> joined = a;
    joined.insert(joined.end(), b.begin(), b.end());
    return contradictory(joined);
  }

  void check_sea(const TemporalDecl& t) {
    Scope scope = params_scope(t.params);
    std::set<std::string> labels;
    for (const auto& c : t.sea.contexts) {
      if (!labels.insert(c.label).second) error(c.span, "duplicate context label '" + c.label + "' in " + t.name);
      check_formula(c.condition, scope, false, c.span, "context " + c.label + " of " + t.name);
    }
    const auto& ctx = t.sea.contexts;
    for (std::size_t i = 0; i < ctx.size(); ++i) {
      for (std::size_t j = i + 1; j < ctx.size(); ++j) {
        std::vector<Literal> li, lj;
        if (!collect_literals(ctx[i].condition, li) || !collect_literals(ctx[j].condition, lj)) continue;
        if (!literally_exclusive(li, lj)) {
          error(ctx[j].span, "mutex violation: contexts " + ctx[i].label + " and " + ctx[j].label + " of " + t.name +
                                 " can hold simultaneously");
        }
      }
    }
  }

  bool check_ground_args(const GroundAtom& atom, const std::vector<Parameter>& params, SourceSpan span) {
    if (atom.args.size() != params.size()) {
      error(span, "'" + atom.symbol + "' expects " + std::to_string(params.size()) + " argument(s)");
      return false;
    }
    bool ok = true;
    for (std::size_t i = 0; i < params.size(); ++i) {
      auto sort = th_.sort_of(atom.args[i]);
      if (!sort) {
        error(span, "unknown object '" + atom.args[i] + "' in initial state");
        ok = false;
      } else if (*sort != params[i].sort) {
        error(span, "object '" + atom.args[i] + "' has sort " + *sort + ", expected " + params[i].sort);
        ok = false;
      }
    }
    return ok;
  }

  void check_initial_state() {
    std::set<GroundAtom> seen;
    for (const auto& init : th_.initial_discrete) {
      const FluentDecl* decl = th_.find_fluent(init.atom.symbol);
      if (!decl) {
        error(init.span, "unknown fluent '" + init.atom.symbol + "' in initial state");
        continue;
      }
      check_ground_args(init.atom, decl->params, init.span);
      if (!seen.insert(init.atom).second) error(init.span, "duplicate initial value for " + to_string(init.atom));
    }
    std::set<GroundAtom> temporal_seen;
    for (const auto& init : th_.initial_temporal) {
      const TemporalDecl* decl = th_.find_temporal(init.atom.symbol);
      if (!decl) {
        error(init.span, "unknown temporal fluent '" + init.atom.symbol + "' in initial state");
        continue;
      }
      check_ground_args(init.atom, decl->params, init.span);
      if (!temporal_seen.insert(init.atom).second) {
        error(init.span, "duplicate initial value for " + to_string(init.atom));
      }
    }
    for (const auto& t : th_.temporals) {
      for (const auto& g : ground_instances(t.name, t.params, th_)) {
        if (!temporal_seen.count(g)) error(t.span, "missing initial value for " + to_string(g));
      }
    }
  }

  const HybridTheory& th_;
  std::vector<Diagnostic> diags_;
};

std::vector<Term> substitute(const std::vector<Term>& terms, const Bindings& b, const HybridTheory& th) {
  std::vector<Term> out;
  out.reserve(terms.size());
  for (const auto& t : terms) {
    if (t.is_variable()) {
      auto it = b.find(t.name);
      if (it == b.end()) throw Error("unbound variable '" + t.name + "'");
      out.push_back(Term::constant(it->second));
    } else {
      if (!th.sort_of(t.name)) throw Error("unknown constant '" + t.name + "'");
      out.push_back(t);
    }
  }
  return out;
}

}  // namespace

std::vector<Diagnostic> validate_theory(const HybridTheory& theory) { return Validator(theory).run(); }

std::vector<Diagnostic> validate_formula(const Formula& formula, const HybridTheory& theory, bool allow_dynamic,
                                         SourceSpan span) {
  return Validator(theory).formula_only(formula, allow_dynamic, span);
}

Formula instantiate(const Formula& f, const Bindings& bindings, const HybridTheory& th) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::True: return f;
    case K::Atom: return Formula::atom(f.symbol(), substitute(f.args(), bindings, th));
    case K::Poss: {
      ActionRef a = f.action();
      a.args = substitute(a.args, bindings, th);
      return Formula::poss(std::move(a));
    }
    case K::After: {
      ActionRef a = f.action();
      a.args = substitute(a.args, bindings, th);
      return Formula::after(std::move(a), instantiate(f.lhs(), bindings, th));
    }
    case K::Not: return Formula::negation(instantiate(f.lhs(), bindings, th));
    case K::And: return Formula::conjunction(instantiate(f.lhs(), bindings, th), instantiate(f.rhs(), bindings, th));
    case K::Exists: {
      std::optional<Formula> result;
      Bindings inner = bindings;
      for (const auto& obj : th.domain(f.sort())) {
        inner[f.symbol()] = obj;
        Formula disjunct = instantiate(f.lhs(), inner, th);
        result = result ? Formula::disjunction(*result, disjunct) : disjunct;
      }
      // Empty domain: ∃ is false.
      return result ? *result : Formula::negation(Formula::truth());
    }
  }
  throw Error("unreachable formula kind");
}

}  // namespace hycause
