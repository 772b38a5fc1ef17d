#pragma once

#include "hycause/formula.hpp"
#include "hycause/model.hpp"
#include "hycause/rational.hpp"

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace hycause {

/// Line/column of a declaration in its source file (1-based; 0 when synthetic).
struct SourceSpan {
  int line = 0;
  int column = 0;
};

struct Diagnostic {
  enum class Kind { Syntax, Semantic };
  Kind kind = Kind::Semantic;
  SourceSpan span;
  std::string message;
};

std::string to_string(const Diagnostic& d);

struct Parameter {
  std::string name;
  std::string sort;

  friend bool operator==(const Parameter&, const Parameter&) = default;
};

/// A fluent applied to object constants, e.g. Ruptured(P1) or coreTemp(P1).
struct GroundAtom {
  std::string symbol;
  std::vector<std::string> args;

  friend bool operator==(const GroundAtom&, const GroundAtom&) = default;
  friend auto operator<=>(const GroundAtom&, const GroundAtom&) = default;
};

std::string to_string(const GroundAtom& a);

struct ObjectDecl {
  std::string name;
  std::string sort;
  SourceSpan span;
};

/// Action symbol with its object parameters; the time argument is implicit.
struct ActionDecl {
  std::string name;
  std::vector<Parameter> params;
  Formula precondition;
  SourceSpan span;
};

/// Action name applied to terms. Variables that are not fluent parameters
/// match any argument (they are implicitly existential).
struct ActionPattern {
  std::string action;
  std::vector<Term> args;
};

struct Trigger {
  ActionPattern pattern;
  Formula guard;  // evaluated in the situation the action is performed in
  SourceSpan span;
};

/// Trigger normal form of F(do(a,s)) ≡ γ⁺(a,s) ∨ (F(s) ∧ ¬γ⁻(a,s)).
struct SuccessorStateAxiom {
  std::vector<Trigger> positive;
  std::vector<Trigger> negative;
};

struct FluentDecl {
  std::string name;
  std::vector<Parameter> params;
  SuccessorStateAxiom ssa;
  SourceSpan span;
};

/// One context γ_i of a temporal fluent with its constant rate Δ_i:
/// f(t, s) = f(start(s), s) + (t - start(s)) * Δ_i while γ_i holds.
struct Context {
  std::string label;
  Formula condition;
  Rational rate;
  SourceSpan span;
};

struct StateEvolutionAxiom {
  std::vector<Context> contexts;
};

struct TemporalDecl {
  std::string name;
  std::vector<Parameter> params;
  StateEvolutionAxiom sea;
  SourceSpan span;
};

struct InitialDiscrete {
  GroundAtom atom;
  bool value = false;
  SourceSpan span;
};

struct InitialTemporal {
  GroundAtom atom;
  Rational value;
  SourceSpan span;
};

/// Declarative hybrid basic action theory. Ground discrete atoms missing
/// from the initial state are false (closed world).
struct HybridTheory {
  std::string name;
  std::vector<ObjectDecl> objects;
  std::vector<ActionDecl> actions;
  std::vector<FluentDecl> fluents;
  std::vector<TemporalDecl> temporals;
  std::vector<InitialDiscrete> initial_discrete;
  std::vector<InitialTemporal> initial_temporal;
  TimePoint initial_start{0L};

  const ActionDecl* find_action(std::string_view name) const;
  const FluentDecl* find_fluent(std::string_view name) const;
  const TemporalDecl* find_temporal(std::string_view name) const;
  std::optional<std::string> sort_of(std::string_view object) const;
  /// Objects of `sort` in declaration order.
  std::vector<std::string> domain(std::string_view sort) const;
  bool has_sort(std::string_view sort) const;
};

enum class Relation { Less, LessEq, Equal, GreaterEq, Greater };

std::string to_string(Relation r);
bool compare(const Rational& value, Relation r, const Rational& threshold);

/// Comparison constraint on one primitive temporal fluent, e.g. coreTemp(P1) >= 1000.
struct TemporalEffect {
  GroundAtom fluent;
  Relation relation = Relation::GreaterEq;
  Rational threshold;

  bool satisfied_by(const Rational& value) const { return compare(value, relation, threshold); }

  friend bool operator==(const TemporalEffect&, const TemporalEffect&) = default;
};

std::string to_string(const TemporalEffect& e);

/// Empty iff the theory is well formed: declarations unique, arities and
/// sorts consistent, noOp not redefined, initial temporal values complete,
/// and no two contexts of one fluent are trivially compatible conjunctions
/// of literals (static mutex pre-check; other cases are checked at runtime).
std::vector<Diagnostic> validate_theory(const HybridTheory& theory);

/// Well-formedness of a formula over the theory's symbols (no free variables
/// allowed). Poss/After are permitted only when `allow_dynamic` is set.
std::vector<Diagnostic> validate_formula(const Formula& formula, const HybridTheory& theory, bool allow_dynamic,
                                         SourceSpan span = {});

/// Substitutes bindings and expands every ∃ over its finite sort domain.
/// Throws Error on an unbound variable or an undeclared constant.
Formula instantiate(const Formula& formula, const Bindings& bindings, const HybridTheory& theory);

/// All ground atoms of a declared fluent or temporal fluent.
std::vector<GroundAtom> ground_instances(const std::string& symbol, const std::vector<Parameter>& params,
                                         const HybridTheory& theory);

}  // namespace hycause
