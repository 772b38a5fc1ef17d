#include "hycause/evaluator.hpp"
#include "hycause/generator.hpp"

#include "oracle.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace hycause;

namespace {

struct Npp : ::testing::Test {
  support::World w = support::world("npp.hct");
  GroundAtom core{"coreTemp", {"P1"}};
  Scenario s2 = w.scenario_file("s2.hcs");
  Scenario s2p = w.scenario_file("s2p.hcs");
  TemporalEffect phi2 = w.temporal("coreTemp(P1) >= 1000");
  Situation s0{TimePoint(0L)};
};

}  // namespace

TEST_F(Npp, Preconditions) {
  EXPECT_TRUE(poss(*w.ev, w.action("rup(P1, 5)"), s0));
  EXPECT_FALSE(poss(*w.ev, w.action("fixP(P1, 3)"), s0));
  EXPECT_TRUE(poss(*w.ev, w.action("csFailure(P1, 15)"), s2.prefix(1)));
  EXPECT_TRUE(poss(*w.ev, make_noop(TimePoint(3L)), s0));
}

TEST_F(Npp, Executability) {
  EXPECT_TRUE(is_executable(*w.ev, s2));
  EXPECT_TRUE(is_executable(*w.ev, s2p));
  EXPECT_TRUE(is_executable(*w.ev, s0));
  auto backwards = check_executable(*w.ev, w.scenario("rup(P1, 5); rup(P1, 3)"));
  ASSERT_TRUE(backwards);
  EXPECT_EQ(backwards->index, 1u);
  auto impossible = check_executable(*w.ev, w.scenario("fixP(P1, 3)"));
  ASSERT_TRUE(impossible);
  EXPECT_EQ(impossible->index, 0u);
  EXPECT_THROW(progress(*w.ev, w.scenario("rup(P1, 5); rup(P1, 3)")), NotExecutable);
}

TEST_F(Npp, ContextsAlongSigma2) {
  Timeline tl = progress(*w.ev, s2);
  EXPECT_FALSE(active_context(tl, core, 0));
  EXPECT_EQ(active_context(tl, core, 1), "g2");
  EXPECT_TRUE(eval_dynamic(*w.ev, w.formula("Ruptured(P1) & !CSFailed(P1)"), s2.prefix(1)));
  EXPECT_EQ(active_context(tl, core, 2), "g1");
  EXPECT_EQ(active_context(tl, core, 3), "g1");
  EXPECT_EQ(active_context(tl, core, 4), "g3");
}

TEST_F(Npp, EndTimes) {
  EXPECT_EQ(end_time(s2, s2), TimePoint(26L));
  EXPECT_EQ(end_time(s0, s2), TimePoint(5L));
  EXPECT_EQ(end_time(s2.prefix(2), s2), TimePoint(20L));
}

TEST_F(Npp, CoreTemperatureValues) {
  EXPECT_EQ(eval_temporal(*w.ev, core, TimePoint(5L), s2.prefix(0)), Rational(-50));
  EXPECT_EQ(eval_temporal(*w.ev, core, TimePoint(15L), s2.prefix(1)), Rational(300));
  EXPECT_EQ(eval_temporal(*w.ev, core, TimePoint(20L), s2.prefix(2)), Rational(800));
  EXPECT_EQ(eval_temporal(*w.ev, core, TimePoint(26L), s2.prefix(3)), Rational(1400));
  EXPECT_EQ(eval_temporal(*w.ev, core, TimePoint(20L), s2p.prefix(2)), Rational(475));
  EXPECT_EQ(eval_temporal(*w.ev, core, TimePoint(26L), s2p.prefix(3)), Rational(685));
  EXPECT_EQ(eval_temporal(*w.ev, core, TimePoint(Rational(41, 2)), s2.prefix(3)), Rational(850));
}

TEST_F(Npp, EffectAtTimePoints) {
  EXPECT_TRUE(holds_effect(*w.ev, phi2, TimePoint(22L), s2.prefix(3)));
  EXPECT_FALSE(holds_effect(*w.ev, phi2, TimePoint(20L), s2.prefix(3)));
  EXPECT_FALSE(holds_effect(*w.ev, phi2, TimePoint(0L), s0));
  EXPECT_FALSE(holds_on_interval(*w.ev, phi2, s2.prefix(3), s2));
  EXPECT_TRUE(holds_on_interval(*w.ev, phi2, s2, s2));
}

TEST_F(Npp, IntervalTrueWhenBothEndpointsHold) {
  TemporalEffect above{core, Relation::Greater, Rational(200)};
  EXPECT_TRUE(holds_on_interval(*w.ev, above, s2.prefix(2), s2));
  TemporalEffect below{core, Relation::Less, Rational(1500)};
  EXPECT_TRUE(holds_on_interval(*w.ev, below, s2.prefix(2), s2));
}

TEST_F(Npp, DynamicFormulas) {
  EXPECT_FALSE(eval_dynamic(*w.ev, w.formula("CSFailed(P1)"), s0));
  EXPECT_FALSE(eval_dynamic(*w.ev, w.formula("Poss(fixCS(P1, 3))"), s0));
  EXPECT_TRUE(eval_dynamic(*w.ev, w.formula("After(csFailure(P1, 1), CSFailed(P1))"), s0));
}

TEST(Evaluator, RuntimeMutexViolation) {
  auto w = support::world_from_text(
      "theory m\naction a() poss: true\naction b() poss: true\nfluent P caused-by: a\nfluent Q caused-by: b\n"
      "temporal x()\n  context one: !(!P & !P) rate 1\n  context two: !(!Q & !Q) rate 2\ninit: x() = 0\n");
  EXPECT_NO_THROW(progress(*w.ev, w.scenario("a(1)")));
  EXPECT_THROW(progress(*w.ev, w.scenario("a(1); b(2)")), MutexViolation);
}

TEST(Evaluator, TriggerConflict) {
  auto w = support::world_from_text("theory c\naction a() poss: true\nfluent P caused-by: a canceled-by: a\n");
  EXPECT_THROW(progress(*w.ev, w.scenario("a(1)")), TriggerConflict);
}

TEST(Evaluator, ExistentialTriggerArgument) {
  auto w = support::world("heaters.hct");
  Scenario s = w.scenario_file("heaters.hcs");
  Timeline tl = progress(*w.ev, s);
  EXPECT_EQ(tl.value(GroundAtom{"furnace", {}}, 3, TimePoint(10L)), Rational(90));
  EXPECT_TRUE(eval_dynamic(*w.ev, w.formula("On"), s.prefix(1)));
}

TEST(EvaluatorProperties, ContinuityNoContextFramesAndMutex) {
  SettingGenerator gen(3);
  int checked = 0;
  for (int i = 0; i < 1500; ++i) {
    RandomSetting rs = gen.next();
    const Evaluator& ev = *rs.evaluator;
    Timeline tl = progress(ev, rs.scenario);
    for (std::size_t f = 0; f < ev.temporals().size(); ++f) {
      const GroundAtom& atom = ev.temporals()[f].atom;
      for (std::size_t k = 1; k < tl.size(); ++k) {
        const ActionTerm& a = rs.scenario.action_at(k - 1);
        EXPECT_EQ(tl.value(atom, k - 1, a.time), tl.state(k).base[f]);
        ++checked;
      }
      for (std::size_t k = 0; k < tl.size(); ++k) {
        int active = 0;
        for (std::size_t c = 0; c < ev.temporals()[f].conditions.size(); ++c) active += ev.holds_context(f, c, tl.state(k));
        EXPECT_LE(active, 1);
        if (!tl.state(k).active[f]) EXPECT_EQ(tl.value(atom, k, tl.start(k)), tl.value(atom, k, tl.end(k)));
      }
    }
  }
  EXPECT_GT(checked, 1000);
}

TEST(EvaluatorProperties, AgreesWithReplayInterpreter) {
  SettingGenerator gen(4);
  for (int i = 0; i < 1500; ++i) {
    RandomSetting rs = gen.next();
    const Evaluator& ev = *rs.evaluator;
    oracle::Replay replay(*rs.theory);
    Timeline tl = progress(ev, rs.scenario);
    EXPECT_TRUE(replay.executable(rs.scenario));
    for (std::size_t k = 0; k < tl.size(); ++k) {
      Situation p = rs.scenario.prefix(k);
      for (std::size_t a = 0; a < ev.atoms().size(); ++a) {
        EXPECT_EQ(static_cast<bool>(tl.state(k).discrete[a]), replay.fluent(ev.atoms()[a], p));
      }
      for (const auto& gt : ev.temporals()) {
        EXPECT_EQ(tl.value(gt.atom, k, tl.start(k)), replay.value(gt.atom, tl.start(k), p));
        EXPECT_EQ(tl.value(gt.atom, k, tl.end(k)), replay.value(gt.atom, tl.end(k), p));
        auto label = active_context(tl, gt.atom, k);
        auto labels = replay.active(gt.atom, p);
        EXPECT_EQ(label.has_value(), !labels.empty());
        if (label && !labels.empty()) EXPECT_EQ(*label, labels[0]);
      }
    }
  }
}
