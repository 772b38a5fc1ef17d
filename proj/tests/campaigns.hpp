#pragma once

#include <cstdint>
#include <cstddef>
#include <string>

namespace campaigns {

/// Outcome of one randomized property campaign.
struct Outcome {
  std::size_t cases = 0;
  std::size_t required = 0;
  std::size_t failures = 0;
  /// Cases where a conditional property's antecedent held.
  std::size_t antecedent = 0;
  std::string first_failure;
  double seconds = 0;
  bool ok() const { return failures == 0 && cases >= required; }
  std::string summary() const;
};

inline constexpr std::size_t kSettings = 10000;
inline constexpr std::uint64_t kSeed = 20240601;

Outcome unique_primary_cause(std::uint64_t seed, std::size_t n);
Outcome unique_achievement_situation(std::uint64_t seed, std::size_t n);
Outcome initial_context_has_no_cause(std::uint64_t seed, std::size_t n);
Outcome persistence_under_extension(std::uint64_t seed, std::size_t n);
Outcome definitions_agree(std::uint64_t seed, std::size_t n);
Outcome defused_breaks_dependence(std::uint64_t seed, std::size_t n);
Outcome defused_is_maximal(std::uint64_t seed, std::size_t n);
Outcome interval_matches_sampling(std::uint64_t seed, std::size_t n);

}  // namespace campaigns
