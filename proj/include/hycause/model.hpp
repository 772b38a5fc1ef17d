#pragma once

#include "hycause/rational.hpp"

#include <compare>
#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hycause {

/// Base class of every error the engine raises.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A point on the continuous time line, in seconds.
struct TimePoint {
  Rational value;

  TimePoint() = default;
  explicit TimePoint(Rational v) : value(std::move(v)) {}
  explicit TimePoint(long v) : value(v) {}

  friend bool operator==(const TimePoint& a, const TimePoint& b) { return a.value == b.value; }
  friend std::strong_ordering operator<=>(const TimePoint& a, const TimePoint& b) {
    int c = cmp(a.value, b.value);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// Elapsed time from `earlier` to this point (may be negative).
  Rational since(const TimePoint& earlier) const { return Rational(value - earlier.value); }
  TimePoint plus(const Rational& delta) const { return TimePoint(Rational(value + delta)); }
};

std::string to_string(const TimePoint& t);

/// Index of a situation within a scenario: S_0 has 0, each action adds 1.
struct Timestamp {
  std::size_t index = 0;

  friend bool operator==(Timestamp, Timestamp) = default;
  friend auto operator<=>(Timestamp, Timestamp) = default;
};

inline constexpr std::string_view kNoOpSymbol = "noOp";

/// A ground timed action. The time is kept apart from the object arguments.
struct ActionTerm {
  std::string name;
  std::vector<std::string> args;
  TimePoint time;

  bool is_noop() const { return name == kNoOpSymbol; }

  friend bool operator==(const ActionTerm&, const ActionTerm&) = default;
};

ActionTerm make_noop(TimePoint t);

std::string to_string(const ActionTerm& a);
std::ostream& operator<<(std::ostream& os, const ActionTerm& a);

/// A situation represented by its action history from S_0.
class Situation {
 public:
  Situation() = default;
  explicit Situation(TimePoint initial_start, std::vector<ActionTerm> actions = {})
      : initial_start_(std::move(initial_start)), actions_(std::move(actions)) {}

  const std::vector<ActionTerm>& actions() const { return actions_; }
  const TimePoint& initial_start() const { return initial_start_; }
  std::size_t length() const { return actions_.size(); }
  bool is_initial() const { return actions_.empty(); }
  const ActionTerm& action_at(std::size_t i) const { return actions_.at(i); }

  /// do(a, s)
  Situation after(ActionTerm a) const;
  /// The prefix with `n` actions (n <= length()).
  Situation prefix(std::size_t n) const;

  /// s ⊑ other
  bool is_prefix_of(const Situation& other) const;
  /// s ⊏ other
  bool is_proper_prefix_of(const Situation& other) const {
    return length() < other.length() && is_prefix_of(other);
  }

  friend bool operator==(const Situation&, const Situation&) = default;

 private:
  TimePoint initial_start_{0L};
  std::vector<ActionTerm> actions_;
};

/// A scenario is a ground situation term under analysis; its prefixes are situations.
using Scenario = Situation;

Timestamp timestamp_of(const Situation& s);
TimePoint start_of(const Situation& s);

/// End time of `prefix` within `scenario`: the time of the next action, or
/// start(prefix) when prefix is the whole scenario. Throws if not a prefix.
TimePoint end_time(const Situation& prefix, const Situation& scenario);
/// Same, by prefix length.
TimePoint end_time(std::size_t prefix_length, const Situation& scenario);

std::string to_string(const Situation& s);

}  // namespace hycause
