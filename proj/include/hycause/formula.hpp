#pragma once

#include "hycause/model.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace hycause {

/// An object term inside a formula: a variable or an object constant.
struct Term {
  enum class Kind { Variable, Constant };
  Kind kind = Kind::Constant;
  std::string name;

  static Term variable(std::string n) { return Term{Kind::Variable, std::move(n)}; }
  static Term constant(std::string n) { return Term{Kind::Constant, std::move(n)}; }
  bool is_variable() const { return kind == Kind::Variable; }

  friend bool operator==(const Term&, const Term&) = default;
};

/// An action term mentioned by Poss/After. The time argument is always a
/// ground rational.
struct ActionRef {
  std::string name;
  std::vector<Term> args;
  TimePoint time;

  friend bool operator==(const ActionRef&, const ActionRef&) = default;
};

/// Variable-to-constant substitution.
using Bindings = std::map<std::string, std::string>;

/// Situation-suppressed dynamic formula:
///   true | F(x) | Poss(a) | After(a, φ) | ¬φ | φ ∧ ψ | ∃v:Sort. φ
/// Immutable; copies share structure.
class Formula {
 public:
  enum class Kind { True, Atom, Poss, After, Not, And, Exists };

  static Formula truth();
  static Formula atom(std::string fluent, std::vector<Term> args);
  static Formula poss(ActionRef action);
  static Formula after(ActionRef action, Formula body);
  static Formula negation(Formula body);
  static Formula conjunction(Formula lhs, Formula rhs);
  static Formula exists(std::string variable, std::string sort, Formula body);
  /// ¬(¬a ∧ ¬b); used for quantifier expansion.
  static Formula disjunction(Formula lhs, Formula rhs);

  Formula() : Formula(truth()) {}

  Kind kind() const;
  /// Fluent symbol (Atom) or bound variable name (Exists).
  const std::string& symbol() const;
  const std::vector<Term>& args() const;
  const ActionRef& action() const;
  const std::string& sort() const;
  /// Body of After/Not/Exists, left operand of And.
  const Formula& lhs() const;
  const Formula& rhs() const;

  /// Mentions no Poss/After (pure discrete-fluent condition).
  bool is_situation_local() const;
  /// No variables and no quantifiers.
  bool is_ground() const;

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Canonical text in the theory-file formula syntax.
std::string to_string(const Formula& f);
std::string to_string(const Term& t);
std::string to_string(const ActionRef& a);

}  // namespace hycause
