#pragma once

#include "hycause/formula.hpp"
#include "hycause/model.hpp"
#include "hycause/theory.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hycause {

/// Two contexts of one ground temporal fluent hold in the same situation.
class MutexViolation : public Error {
 public:
  MutexViolation(std::size_t timestamp, std::string fluent, std::string first, std::string second);
  std::size_t timestamp;
  std::string fluent;
  std::string first_label;
  std::string second_label;
};

/// An action is scheduled before the start of the situation it is performed in.
class TemporalParadox : public Error {
 public:
  TemporalParadox(const ActionTerm& action, const TimePoint& start);
};

/// A ground action fires both a caused-by and a canceled-by trigger of one atom.
class TriggerConflict : public Error {
 public:
  using Error::Error;
};

/// The first action of a scenario that cannot be executed.
struct ExecFailure {
  std::size_t index = 0;
  ActionTerm action;
  std::string reason;
};

std::string to_string(const ExecFailure& f);

class NotExecutable : public Error {
 public:
  explicit NotExecutable(ExecFailure failure);
  ExecFailure failure;
};

/// One ground instance of a temporal fluent with its instantiated contexts.
struct GroundTemporal {
  GroundAtom atom;
  std::vector<std::string> labels;
  std::vector<Formula> conditions;
  std::vector<Rational> rates;
  Rational initial;
};

/// Discrete state and temporal bookkeeping of one situation.
struct SituationState {
  std::size_t timestamp = 0;
  TimePoint start{0L};
  std::vector<bool> discrete;                 // indexed by Evaluator::atom_index
  std::vector<std::optional<std::size_t>> active;  // context per ground temporal fluent
  std::vector<Rational> base;                 // value at start
};

/// Progression-based interpreter of a validated hybrid theory.
class Evaluator {
 public:
  explicit Evaluator(const HybridTheory& theory);

  const HybridTheory& theory() const { return *theory_; }
  const std::vector<GroundAtom>& atoms() const { return atoms_; }
  std::optional<std::size_t> atom_index(const GroundAtom& atom) const;
  const std::vector<GroundTemporal>& temporals() const { return temporals_; }
  std::optional<std::size_t> temporal_index(const GroundAtom& atom) const;

  SituationState initial_state() const;
  bool poss(const ActionTerm& action, const SituationState& state) const;
  /// State of do(a, s). Does not check Poss. With `check_time`, an action
  /// earlier than start(s) raises TemporalParadox.
  SituationState successor(const SituationState& state, const ActionTerm& action, bool check_time = true) const;

  /// Truth of a ground formula; After progresses from `state`.
  bool holds(const Formula& ground, const SituationState& state) const;
  bool holds_context(std::size_t temporal, std::size_t context, const SituationState& state) const;

  /// Linear evolution under the active context from the situation's start.
  Rational value(std::size_t temporal, const SituationState& state, const TimePoint& t) const;
  Rational value(const GroundAtom& fluent, const SituationState& state, const TimePoint& t) const;

 private:
  void apply_triggers(const SituationState& state, const ActionTerm& action, std::vector<bool>& next) const;
  void assign_contexts(SituationState& state) const;

  const HybridTheory* theory_;
  std::vector<GroundAtom> atoms_;
  std::map<GroundAtom, std::size_t> atom_ids_;
  std::vector<GroundTemporal> temporals_;
  std::map<GroundAtom, std::size_t> temporal_ids_;
};

/// Every prefix state of a scenario: entry k is the situation with k actions.
class Timeline {
 public:
  Timeline(const Evaluator& evaluator, Scenario scenario, std::vector<SituationState> states);

  const Evaluator& evaluator() const { return *evaluator_; }
  const Scenario& scenario() const { return scenario_; }
  std::size_t size() const { return states_.size(); }
  const SituationState& state(std::size_t k) const { return states_.at(k); }
  TimePoint start(std::size_t k) const { return states_.at(k).start; }
  TimePoint end(std::size_t k) const { return end_time(k, scenario_); }
  Rational value(const GroundAtom& fluent, std::size_t k, const TimePoint& t) const;

 private:
  const Evaluator* evaluator_;
  Scenario scenario_;
  std::vector<SituationState> states_;
};

/// First failing action, or nullopt when every action is possible where it
/// is performed and no action precedes the start of its situation.
std::optional<ExecFailure> check_executable(const Evaluator& ev, const Situation& s);
bool is_executable(const Evaluator& ev, const Situation& s);

/// Throws NotExecutable, or MutexViolation on overlapping contexts.
Timeline progress(const Evaluator& ev, const Scenario& s);
/// Progression ignoring preconditions and time order.
Timeline progress_unchecked(const Evaluator& ev, const Scenario& s);

bool poss(const Evaluator& ev, const ActionTerm& action, const Situation& s);
bool eval_dynamic(const Evaluator& ev, const Formula& ground, const Situation& s);
Rational eval_temporal(const Evaluator& ev, const GroundAtom& fluent, const TimePoint& t, const Situation& s);

bool holds_effect(const Timeline& tl, const TemporalEffect& effect, const TimePoint& t, std::size_t k);
/// φ at every t in [start(k), end(k)]. Linear evolution makes the endpoints decisive.
bool holds_on_interval(const Timeline& tl, const TemporalEffect& effect, std::size_t k);
bool holds_effect(const Evaluator& ev, const TemporalEffect& effect, const TimePoint& t, const Situation& s);
bool holds_on_interval(const Evaluator& ev, const TemporalEffect& effect, const Situation& prefix,
                       const Scenario& scenario);

/// Label of the active context of `fluent` at prefix k, if any.
std::optional<std::string> active_context(const Timeline& tl, const GroundAtom& fluent, std::size_t k);

}  // namespace hycause
