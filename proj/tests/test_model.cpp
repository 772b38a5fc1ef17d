#include "hycause/model.hpp"
#include "hycause/rational.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace hycause;

namespace {

Scenario sigma2() { return support::world("npp.hct").scenario_file("s2.hcs"); }

}  // namespace

TEST(Rational, ParsesIntegersDecimalsAndFractions) {
  EXPECT_EQ(*parse_rational("-50"), Rational(-50));
  EXPECT_EQ(*parse_rational("2.75"), Rational(11, 4));
  EXPECT_EQ(*parse_rational("7/3"), Rational(7, 3));
  EXPECT_EQ(*parse_rational("-0.5"), Rational(-1, 2));
  EXPECT_FALSE(parse_rational("1/0"));
  EXPECT_FALSE(parse_rational("abc"));
  EXPECT_FALSE(parse_rational(""));
  EXPECT_FALSE(parse_rational("1.2.3"));
}

TEST(Rational, CanonicalText) {
  EXPECT_EQ(to_string(Rational(6, 4)), "3/2");
  EXPECT_EQ(to_string(Rational(-50)), "-50");
  EXPECT_EQ(to_string(*parse_rational("0.10")), "1/10");
}

TEST(Timestamp, CountsActions) {
  Situation s0(TimePoint(0L));
  EXPECT_EQ(timestamp_of(s0).index, 0u);
  EXPECT_EQ(timestamp_of(s0.after(ActionTerm{"rup", {"P1"}, TimePoint(5L)})).index, 1u);
  EXPECT_EQ(timestamp_of(sigma2()).index, 4u);
}

TEST(Start, InitialAndLastActionTime) {
  Situation s0(TimePoint(0L));
  EXPECT_EQ(start_of(s0), TimePoint(0L));
  EXPECT_EQ(start_of(s0.after(ActionTerm{"rup", {"P1"}, TimePoint(5L)})), TimePoint(5L));
  EXPECT_EQ(start_of(sigma2()), TimePoint(26L));
  EXPECT_EQ(start_of(Situation(TimePoint(Rational(7, 2)))), TimePoint(Rational(7, 2)));
}

TEST(NoOp, BuildsTimedDummyAction) {
  EXPECT_EQ(to_string(make_noop(TimePoint(15L))), "noOp(15)");
  EXPECT_EQ(to_string(make_noop(TimePoint(0L))), "noOp(0)");
  EXPECT_EQ(make_noop(TimePoint(15L)), make_noop(TimePoint(15L)));
  EXPECT_NE(make_noop(TimePoint(15L)), make_noop(TimePoint(16L)));
  EXPECT_TRUE(make_noop(TimePoint(1L)).is_noop());
}

TEST(EndTime, NextActionOrOwnStart) {
  Scenario s = sigma2();
  EXPECT_EQ(end_time(s, s), TimePoint(26L));
  EXPECT_EQ(end_time(s.prefix(0), s), TimePoint(5L));
  EXPECT_EQ(end_time(s.prefix(2), s), TimePoint(20L));
  EXPECT_EQ(end_time(2, s), TimePoint(20L));
  Scenario other(TimePoint(0L), {ActionTerm{"mRad", {"P1"}, TimePoint(1L)}});
  EXPECT_THROW(end_time(other, s), Error);
}

TEST(Prefix, OrderIsTotalOnOneScenarioAndMonotone) {
  Scenario s = sigma2();
  for (std::size_t i = 0; i <= s.length(); ++i) {
    for (std::size_t j = 0; j <= s.length(); ++j) {
      Situation a = s.prefix(i);
      Situation b = s.prefix(j);
      EXPECT_EQ(a.is_prefix_of(b), i <= j);
      EXPECT_EQ(a.is_proper_prefix_of(b), i < j);
      EXPECT_TRUE(a.is_prefix_of(b) || b.is_prefix_of(a));
      if (a.is_proper_prefix_of(b)) {
        EXPECT_LT(timestamp_of(a), timestamp_of(b));
        EXPECT_LE(start_of(a), start_of(b));
      }
    }
  }
}

TEST(Prefix, PartialOrderOnRandomSituations) {
  std::mt19937_64 rng(11);
  auto random_situation = [&] {
    std::vector<ActionTerm> actions;
    int n = std::uniform_int_distribution<int>(0, 4)(rng);
    for (int i = 0; i < n; ++i) {
      actions.push_back(ActionTerm{std::uniform_int_distribution<int>(0, 1)(rng) ? "a" : "b", {}, TimePoint(1L)});
    }
    return Situation(TimePoint(0L), actions);
  };
  for (int iter = 0; iter < 2000; ++iter) {
    Situation x = random_situation(), y = random_situation(), z = random_situation();
    EXPECT_TRUE(x.is_prefix_of(x));
    if (x.is_prefix_of(y) && y.is_prefix_of(x)) EXPECT_EQ(x, y);
    if (x.is_prefix_of(y) && y.is_prefix_of(z)) EXPECT_TRUE(x.is_prefix_of(z));
  }
}
