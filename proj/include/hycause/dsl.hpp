#pragma once

#include "hycause/formula.hpp"
#include "hycause/model.hpp"
#include "hycause/theory.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace hycause {

/// Parse outcome: a value when there was no syntax error, plus every
/// diagnostic found (syntax errors, then semantic errors).
template <class T>
struct Parsed {
  std::optional<T> value;
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return value.has_value() && diagnostics.empty(); }
  bool has_syntax_error() const {
    for (const auto& d : diagnostics) {
      if (d.kind == Diagnostic::Kind::Syntax) return true;
    }
    return false;
  }
};

/// Theory file (.hct). Grammar, whitespace and newline insensitive, `#`
/// starts a comment:
///
///   theory    := "theory" NAME section*
///   section   := objects | action | fluent | temporal | init | start
///   objects   := "objects" ":" NAME ":" SORT ("," NAME ":" SORT)* ","?
///   action    := "action" NAME "(" params? ")" "poss" ":" formula
///   fluent    := "fluent" NAME ("(" params? ")")?
///                ("caused-by" ":" trigger ("," trigger)*)?
///                ("canceled-by" ":" trigger ("," trigger)*)?
///   trigger   := NAME "(" terms? ")" ("when" formula)?
///   temporal  := "temporal" NAME "(" params? ")" context*
///   context   := "context" LABEL ":" formula "rate" RATIONAL
///   init      := "init" ":" atom "=" value ("," atom "=" value)* ","?
///   start     := "start" ":" RATIONAL
///   formula   := conj;  conj := unary ("&" unary)*
///   unary     := "!" unary | "(" formula ")" | "true" | "false"
///              | "exists" VAR ":" SORT "." formula
///              | "Poss" "(" action ")" | "After" "(" action "," formula ")"
///              | NAME ("(" terms? ")")?
///   action    := NAME "(" (term ",")* RATIONAL ")"
///
/// Rationals are integers, decimals (converted exactly) or n/d.
Parsed<HybridTheory> parse_theory(std::string_view text);

/// Scenario file (.hcs): semicolon-separated ground timed actions, e.g.
/// "rup(P1, 5); csFailure(P1, 15)". The time is the last argument.
Parsed<Scenario> parse_scenario(std::string_view text, const HybridTheory& theory);

/// An effect query: either a temporal comparison or a ground discrete formula.
using Effect = std::variant<TemporalEffect, Formula>;

/// "coreTemp(P1) >= 1000" or a discrete formula such as "CSFailed(P1)".
/// Quantifiers in discrete formulas are expanded over their domains.
Parsed<Effect> parse_effect(std::string_view text, const HybridTheory& theory);

/// Canonical theory text; parse(serialize_theory(th)) reproduces th.
std::string serialize_theory(const HybridTheory& theory);
std::string serialize_scenario(const Scenario& scenario);
std::string to_string(const Effect& effect);

}  // namespace hycause
