#include "campaigns.hpp"

#include <gtest/gtest.h>

#include <iostream>

using namespace campaigns;

namespace {

void expect_ok(const char* name, const Outcome& o) {
  std::cout << name << ": " << o.summary() << "\n";
  EXPECT_GE(o.cases, o.required);
  EXPECT_EQ(o.failures, 0u) << o.first_failure;
}

}  // namespace

TEST(Properties, PrimaryCauseIsUnique) { expect_ok("unique cause", unique_primary_cause(kSeed, kSettings)); }

TEST(Properties, AchievementSituationIsUnique) {
  expect_ok("unique achievement", unique_achievement_situation(kSeed + 1, kSettings));
}

TEST(Properties, InitiallyActiveContextMeansNoCause) {
  Outcome o = initial_context_has_no_cause(kSeed + 2, kSettings);
  expect_ok("initial context", o);
  EXPECT_GT(o.antecedent, 100u);
}

TEST(Properties, CausePersistsUnderEffectPreservingExtensions) {
  expect_ok("persistence", persistence_under_extension(kSeed + 3, kSettings));
}

TEST(Properties, DirectAndContributionDefinitionsAgree) {
  expect_ok("equivalence", definitions_agree(kSeed + 4, kSettings));
}

TEST(Properties, DefusingBreaksDependence) {
  expect_ok("but-for", defused_breaks_dependence(kSeed + 5, kSettings));
}

TEST(Properties, DefusedScenarioIsMaximal) { expect_ok("maximality", defused_is_maximal(kSeed + 6, kSettings)); }

TEST(Properties, IntervalCheckMatchesDenseSampling) {
  expect_ok("sampling", interval_matches_sampling(kSeed + 7, 1000));
}
