#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "support.hpp"
#include "symphmc/catalog.hpp"
#include "symphmc/errors.hpp"
#include "symphmc/splitting.hpp"
#include "symphmc/targets.hpp"

using namespace symphmc;

namespace {

PhaseState random_state(std::size_t d, std::uint64_t seed, double scale = 1.0) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> n(0.0, scale);
  std::vector<double> q(d), p(d);
  for (auto& x : q) x = n(rng);
  for (auto& x : p) x = n(rng);
  return PhaseState(q, p);
}

}  // namespace

TEST(ApplyFlow, DriftShiftsPosition) {
  auto t = gaussian_model(2);
  const auto out = apply_flow(PhaseState({0.0, 0.0}, {2.0, 0.0}), ElementaryFlow::drift(1.0), 0.1, *t);
  EXPECT_NEAR(out.q()[0], 0.2, 1e-15);
  EXPECT_EQ(out.q()[1], 0.0);
}

TEST(ApplyFlow, ZeroKickIsFree) {
  auto t = gaussian_model(2);
  const PhaseState s({1.0, 2.0}, {3.0, 4.0});
  EXPECT_EQ(apply_flow(s, ElementaryFlow::kick(0.0), 0.1, *t), s);
  EXPECT_EQ(t->gradient_evaluations(), 0);
}

TEST(ApplyFlow, ModifiedKickWithoutCurvatureIsScaledKick) {
  auto t = anharmonic_model(2);
  const PhaseState s({0.3, -1.1}, {0.2, 0.4});
  const auto a = apply_flow(s, ElementaryFlow::modified_kick(1.0, 0.4, 0.0), 0.1, *t);
  const auto b = apply_flow(s, ElementaryFlow::kick(0.4), 0.1, *t);
  EXPECT_LE(max_abs_difference(a, b), 1e-15);
}

TEST(ApplyFlow, NonFiniteResultThrows) {
  auto t = gaussian_model(1);
  EXPECT_THROW(apply_flow(PhaseState({1e308}, {0.0}), ElementaryFlow::kick(1e10), 1.0, *t),
               NonFiniteState);
}

TEST(ProcessedIntegrator, RejectsInconsistentKernel) {
  const FlowSchedule bad({ElementaryFlow::kick(0.5), ElementaryFlow::drift(0.9),
                          ElementaryFlow::kick(0.5)});
  EXPECT_THROW(ProcessedIntegrator::unprocessed(bad), InvalidArgument);
  const FlowSchedule bad_pre({ElementaryFlow::kick(0.1)});
  EXPECT_THROW(ProcessedIntegrator(velocity_verlet_kernel(), bad_pre), InvalidArgument);
}

TEST(ProcessedIntegrator, PostIsAdjointOfPre) {
  const auto integ = ProcessedIntegrator::from_parameters(0.348674, -0.075640, 0.069720);
  EXPECT_EQ(integ.post(), adjoint_schedule(integ.pre()));
}

TEST(IntegrateLeg, GradientCountsMatchAccounting) {
  auto t = gaussian_model(8);
  const auto s0 = random_state(8, 1, 0.1);
  struct Case {
    const char* name;
    std::int64_t expected;
  };
  for (const auto& c : {Case{"proc-3.0", 35}, Case{"blcasa", 31}, Case{"leapfrog", 11}}) {
    for (bool blocked : {true, false}) {
      t->reset_counters();
      const auto r = integrate_leg(s0, 0.01, 10, named_integrator(c.name), *t, {true, blocked});
      EXPECT_EQ(r.grad_count, c.expected) << c.name << " blocked=" << blocked;
      EXPECT_EQ(t->gradient_evaluations(), c.expected);
      EXPECT_EQ(named_integrator(c.name).gradients_per_leg(10), c.expected);
    }
  }
}

TEST(IntegrateLeg, GenericPathCountsMatch) {
  test_support::OpaqueGaussian t(test_support::squares(8));
  const auto s0 = random_state(8, 2, 0.1);
  EXPECT_EQ(integrate_leg(s0, 0.01, 10, named_integrator("proc-4.5"), t).grad_count, 35);
  EXPECT_EQ(integrate_leg(s0, 0.01, 10, named_integrator("blcasa"), t).grad_count, 31);
  EXPECT_EQ(integrate_leg(s0, 0.01, 10, named_integrator("leapfrog"), t).grad_count, 11);
}

TEST(IntegrateLeg, FusionNeverChangesTrajectories) {
  auto t = gaussian_model(37);
  test_support::OpaqueGaussian opaque(test_support::squares(37));
  auto anh = anharmonic_model(5);
  const auto s0 = random_state(37, 3, 0.05);
  const auto s5 = random_state(5, 4, 0.5);
  for (const auto& name : {"leapfrog", "blcasa", "proc-3.0", "proc-4.5"}) {
    const auto integ = named_integrator(name);
    const auto ref = integrate_leg(s0, 0.02, 40, integ, *t, {true, true}).state;
    EXPECT_EQ(integrate_leg(s0, 0.02, 40, integ, *t, {false, true}).state, ref) << name;
    EXPECT_EQ(integrate_leg(s0, 0.02, 40, integ, *t, {true, false}).state, ref) << name;
    EXPECT_EQ(integrate_leg(s0, 0.02, 40, integ, *t, {false, false}).state, ref) << name;
    EXPECT_EQ(integrate_leg(s0, 0.02, 40, integ, opaque, {true, true}).state, ref) << name;

    const auto a = integrate_leg(s5, 0.1, 20, integ, *anh, {true, true}).state;
    EXPECT_EQ(integrate_leg(s5, 0.1, 20, integ, *anh, {false, true}).state, a) << name;
  }
}

TEST(IntegrateLeg, UnfusedCountsEveryNonzeroKick) {
  auto t = gaussian_model(4);
  const auto s0 = random_state(4, 5, 0.1);
  // Verlet has two kicks per step, the two-stage kernel three plus two
  // per processor.
  EXPECT_EQ(integrate_leg(s0, 0.01, 10, named_integrator("leapfrog"), *t, {false, true}).grad_count, 20);
  EXPECT_EQ(integrate_leg(s0, 0.01, 10, named_integrator("proc-3.0"), *t, {false, false}).grad_count,
            44);
}

TEST(IntegrateLeg, ReversibleUnderMomentumFlip) {
  auto anh = anharmonic_model(3);
  auto gauss = gaussian_model(16);
  for (const auto& name : {"leapfrog", "blcasa", "proc-3.0", "proc-4.5"}) {
    const auto integ = named_integrator(name);
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const auto s = random_state(3, seed);
      const auto fwd = integrate_leg(s, 0.05, 40, integ, *anh).state;
      const auto back = momentum_flip(integrate_leg(momentum_flip(fwd), 0.05, 40, integ, *anh).state);
      EXPECT_LE(max_abs_difference(back, s), 1e-10 * (1 + max_abs(s))) << name;

      const auto g = random_state(16, seed + 100, 0.1);
      const auto gf = integrate_leg(g, 0.05, 100, integ, *gauss).state;
      const auto gb = momentum_flip(integrate_leg(momentum_flip(gf), 0.05, 100, integ, *gauss).state);
      EXPECT_LE(max_abs_difference(gb, g), 1e-10 * (1 + max_abs(g))) << name;
    }
  }
}

TEST(IntegrateLeg, PreservesVolume) {
  auto anh = anharmonic_model(3);
  for (const auto& name : {"leapfrog", "blcasa", "proc-3.0"}) {
    const auto integ = named_integrator(name);
    for (std::size_t d : {1u, 2u, 3u}) {
      auto t = anharmonic_model(d);
      const auto s = random_state(d, 7 + d, 0.7);
      const double det = test_support::jacobian_determinant(
          [&](const PhaseState& x) { return integrate_leg(x, 0.1, 10, integ, *t).state; }, s);
      EXPECT_NEAR(det, 1.0, 1e-6) << name << " d=" << d;
    }
  }
}

TEST(IntegrateLeg, NonFiniteStateIsReported) {
  auto t = gaussian_model(4);
  const auto s0 = random_state(4, 9);
  // Far above the stability limit the state overflows.
  EXPECT_THROW(integrate_leg(s0, 10.0, 2000, named_integrator("leapfrog"), *t), NonFiniteState);
}

TEST(GradientTally, MatchesIntegratorAccounting) {
  GradientTally tally;
  tally.add(velocity_verlet_kernel());
  tally.add(velocity_verlet_kernel());
  EXPECT_EQ(tally.count(), 3);
}
