#pragma once

#include "hycause/evaluator.hpp"
#include "hycause/theory.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>

namespace hycause {

struct GeneratorLimits {
  int max_discrete = 3;
  int max_temporal = 2;
  int max_contexts = 3;
  int max_actions = 5;
  std::size_t max_length = 6;
  /// Effects concern only temporal fluents with no context holding in S0.
  bool inactive_start = false;
};

/// A random theory with an executable scenario and a temporal effect that
/// together form a valid setting. The theory is owned so the evaluator can
/// refer to it.
struct RandomSetting {
  std::string theory_text;
  std::shared_ptr<const HybridTheory> theory;
  std::shared_ptr<const Evaluator> evaluator;
  Scenario scenario;
  TemporalEffect effect;
};

/// Deterministic generator of small hybrid theories over zero-arity fluents.
/// Contexts of a temporal fluent are distinct truth assignments to the same
/// fluents, so they are mutually exclusive by construction.
class SettingGenerator {
 public:
  explicit SettingGenerator(std::uint64_t seed, GeneratorLimits limits = {});

  std::string theory_text();
  /// Actions appended one at a time, each possible where it is performed.
  Scenario executable_scenario(const Evaluator& ev, std::size_t length);
  /// A threshold effect making (scenario, effect) a valid setting, if one exists.
  std::optional<TemporalEffect> valid_effect(const Evaluator& ev, const Scenario& scenario);
  /// Retries until a valid setting appears.
  RandomSetting next();

  std::mt19937_64& rng() { return rng_; }
  int uniform(int lo, int hi);

 private:
  std::mt19937_64 rng_;
  GeneratorLimits limits_;
};

}  // namespace hycause
