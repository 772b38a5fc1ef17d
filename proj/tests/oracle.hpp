#pragma once

// Independent reference implementations used only by the tests. They follow
// the definitions literally: fluents are recomputed by recursion on the
// situation term, intervals are sampled, and fixpoints are iterated naively.

#include "hycause/cause_discrete.hpp"
#include "hycause/dsl.hpp"
#include "hycause/theory.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using hycause::ActionTerm;
using hycause::CausePair;
using hycause::Formula;
using hycause::GroundAtom;
using hycause::HybridTheory;
using hycause::Rational;
using hycause::Scenario;
using hycause::Situation;
using hycause::TemporalEffect;
using hycause::TimePoint;

/// Regression-style interpreter: F(do(a,s)) = γ⁺(a,s) ∨ (F(s) ∧ ¬γ⁻(a,s)).
class Replay {
 public:
  explicit Replay(const HybridTheory& theory) : th_(&theory) {}

  bool fluent(const GroundAtom& atom, const Situation& s);
  bool holds(const Formula& f, const Situation& s);
  bool poss(const ActionTerm& a, const Situation& s);
  bool executable(const Situation& s);

  /// Labels of the contexts of `fluent` that hold in s.
  std::vector<std::string> active(const GroundAtom& fluent, const Situation& s);
  bool context_holds(const GroundAtom& fluent, std::size_t context, const Situation& s);
  std::size_t context_count(const GroundAtom& fluent) const;
  Formula context_formula(const GroundAtom& fluent, std::size_t context) const;
  /// Value at t in s: base value at start(s) carried over from the parent
  /// at time(a), plus the active rate times elapsed time.
  Rational value(const GroundAtom& fluent, const TimePoint& t, const Situation& s);
  /// Rate of the context active in s, zero when none is.
  Rational rate(const GroundAtom& fluent, const Situation& s);

  bool effect_at(const TemporalEffect& e, const TimePoint& t, const Situation& s);
  /// Dense check on [start(s), end]: `samples` evenly spaced points, endpoints included.
  bool effect_sampled(const TemporalEffect& e, const Situation& s, const TimePoint& end, int samples);

  const HybridTheory& theory() const { return *th_; }

 private:
  struct KeyLess {
    bool operator()(const std::pair<GroundAtom, Situation>& a, const std::pair<GroundAtom, Situation>& b) const;
  };

  bool trigger_fires(const hycause::Trigger& trig, const hycause::FluentDecl& decl, const GroundAtom& atom,
                     const ActionTerm& a, const Situation& s);
  const std::vector<Formula>& ground_contexts(const GroundAtom& fluent) const;

  const HybridTheory* th_;
  std::map<std::pair<GroundAtom, Situation>, bool, KeyLess> fluent_memo_;
  mutable std::map<GroundAtom, std::vector<Formula>> contexts_;
};

TimePoint end_in(const Scenario& scenario, std::size_t k);

/// Every (a, ts) satisfying the direct-cause definition, scanned exhaustively.
std::vector<CausePair> direct_causes(Replay& r, const Formula& effect, const Scenario& s);

/// Least fixpoint of the Causes relation by Kleene iteration over every
/// (effect, prefix) query reachable from (effect, s).
std::set<std::size_t> kleene_causes(Replay& r, const Formula& effect, const Scenario& s);

struct HybridOracle {
  explicit HybridOracle(const HybridTheory& th, int samples = 3) : replay(th), samples(samples) {}

  bool valid_setting(const TemporalEffect& e, const Scenario& s);
  /// Every prefix satisfying the achievement definition including the
  /// "no earlier qualifying prefix" clause.
  std::vector<std::size_t> achievement_situations(const TemporalEffect& e, const Scenario& s);
  /// Every action that directly caused a context active at the achievement situation.
  std::vector<CausePair> primary_causes(const TemporalEffect& e, const Scenario& s);
  /// Some context of the fluent holds at every prefix from S0 through the achievement situation.
  bool context_persists_from_start(const TemporalEffect& e, const Scenario& s);
  bool contexts_initially_false(const TemporalEffect& e);
  /// φ at every point of [start(s′), end(s′, ext)] for s ⊑ s′ ⊑ ext.
  bool effect_preserved(const TemporalEffect& e, const Scenario& s, const Scenario& ext);

  Replay replay;
  int samples;
};

/// Unique primary cause of a valid setting, none otherwise.
std::optional<CausePair> primary_cause(HybridOracle& o, const TemporalEffect& e, const Scenario& s);

struct SubsetSearch {
  /// Replacement sets (bit i = action i replaced by noOp) reachable from σ by
  /// replacing, one at a time, the primary cause of the current scenario.
  std::vector<unsigned> reachable;
  unsigned best = 0;
  bool best_unique = true;
};

Scenario apply_noops(const Scenario& s, unsigned mask);

/// Enumerates all 2^n subsets in order of size; a subset is reachable when
/// removing one of its members leaves a reachable subset whose scenario is a
/// valid setting with exactly that member as primary cause.
SubsetSearch defused_by_subsets(HybridOracle& o, const TemporalEffect& e, const Scenario& s);

}  // namespace oracle
