#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace hycause {

/// Exact rational number. All times, rates and temporal fluent values use it.
using Rational = mpq_class;

/// Parses an integer ("-50"), a decimal ("2.75", converted exactly) or a
/// fraction ("7/3"). Returns nullopt on malformed input or a zero denominator.
std::optional<Rational> parse_rational(std::string_view text);

/// Canonical text form: "n" for integers, "n/d" otherwise.
std::string to_string(const Rational& value);

}  // namespace hycause
