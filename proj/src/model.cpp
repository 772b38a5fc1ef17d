#include "hycause/model.hpp"

#include <sstream>

namespace hycause {

std::string to_string(const TimePoint& t) { return to_string(t.value); }

ActionTerm make_noop(TimePoint t) {
  return ActionTerm{std::string(kNoOpSymbol), {}, std::move(t)};
}

std::string to_string(const ActionTerm& a) {
  std::string out = a.name + "(";
  for (const auto& arg : a.args) out += arg + ", ";
  out += to_string(a.time) + ")";
  return out;
}

std::ostream& operator<<(std::ostream& os, const ActionTerm& a) { return os << to_string(a); }

Situation Situation::after(ActionTerm a) const {
  Situation next = *this;
  next.actions_.push_back(std::move(a));
  return next;
}

Situation Situation::prefix(std::size_t n) const {
  if (n > actions_.size()) throw Error("prefix length " + std::to_string(n) + " exceeds situation length");
  return Situation(initial_start_, std::vector<ActionTerm>(actions_.begin(), actions_.begin() + n));
}

bool Situation::is_prefix_of(const Situation& other) const {
  if (initial_start_ != other.initial_start_ || actions_.size() > other.actions_.size()) return false;
  for (std::size_t i = 0; i < actions_.size(); ++i) {
    if (!(actions_[i] == other.actions_[i])) return false;
  }
  return true;
}

Timestamp timestamp_of(const Situation& s) { return Timestamp{s.length()}; }

TimePoint start_of(const Situation& s) {
  return s.is_initial() ? s.initial_start() : s.actions().back().time;
}

TimePoint end_time(std::size_t prefix_length, const Situation& scenario) {
  if (prefix_length > scenario.length()) throw Error("situation is not a prefix of the scenario");
  if (prefix_length == scenario.length()) return start_of(scenario);
  return scenario.action_at(prefix_length).time;
}

TimePoint end_time(const Situation& prefix, const Situation& scenario) {
  if (!prefix.is_prefix_of(scenario)) throw Error("situation is not a prefix of the scenario");
  return end_time(prefix.length(), scenario);
}

std::string to_string(const Situation& s) {
  std::ostringstream os;
  os << "do([";
  for (std::size_t i = 0; i < s.length(); ++i) {
    if (i) os << ", ";
    os << s.action_at(i);
  }
  os << "], S0)";
  return os.str();
}

}  // namespace hycause
