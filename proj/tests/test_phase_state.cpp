#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "symphmc/errors.hpp"
#include "symphmc/phase_state.hpp"

using symphmc::PhaseState;

TEST(PhaseState, RejectsMismatchedOrEmptyVectors) {
  EXPECT_THROW(PhaseState({1.0, 2.0}, {1.0}), symphmc::DimensionMismatch);
  EXPECT_THROW(PhaseState({}, {}), symphmc::DimensionMismatch);
}

TEST(PhaseState, ZerosHasRequestedDimension) {
  const auto s = PhaseState::zeros(4);
  EXPECT_EQ(s.dim(), 4u);
  EXPECT_EQ(symphmc::max_abs(s), 0.0);
}

TEST(PhaseState, FiniteDetectsNanAndInf) {
  EXPECT_TRUE(PhaseState({1.0}, {2.0}).finite());
  EXPECT_FALSE(PhaseState({std::numeric_limits<double>::quiet_NaN()}, {0.0}).finite());
  EXPECT_FALSE(PhaseState({0.0}, {std::numeric_limits<double>::infinity()}).finite());
}

TEST(PhaseState, MomentumFlipNegatesOnlyMomentum) {
  const PhaseState s({1.0, -2.0}, {3.0, -4.0});
  const auto f = symphmc::momentum_flip(s);
  EXPECT_EQ(f, PhaseState({1.0, -2.0}, {-3.0, 4.0}));
}

TEST(PhaseState, MomentumFlipIsAnInvolution) {
  const PhaseState s({0.25, 7.0}, {-1.5, 0.0});
  EXPECT_EQ(symphmc::momentum_flip(symphmc::momentum_flip(s)), s);
}

TEST(PhaseState, MaxAbsDifference) {
  const PhaseState a({1.0, 2.0}, {3.0, 4.0});
  const PhaseState b({1.5, 2.0}, {3.0, 1.0});
  EXPECT_DOUBLE_EQ(symphmc::max_abs_difference(a, b), 3.0);
  EXPECT_THROW(symphmc::max_abs_difference(a, PhaseState({1.0}, {1.0})), symphmc::DimensionMismatch);
}
