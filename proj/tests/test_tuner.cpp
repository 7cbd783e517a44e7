#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "symphmc/catalog.hpp"
#include "symphmc/errors.hpp"
#include "symphmc/harmonic.hpp"
#include "symphmc/tuner.hpp"

using namespace symphmc;

namespace {

FamilyParams row(const char* name) {
  const auto& r = table_row(name);
  return {r.b, r.c, r.d};
}

}  // namespace

TEST(Evaluate, AgreesWithRhoNorm) {
  const auto p = row("proc-3.5");
  EXPECT_EQ(evaluate(p.b, p.c, p.d, 3.5),
            rho_norm(ProcessedIntegrator::from_parameters(p.b, p.c, p.d), 3.5));
}

TEST(Evaluate, TabulatedRowTwo) { EXPECT_LE(evaluate(0.348674, -0.075640, 0.069720, 3.0), 6e-8); }

TEST(Evaluate, TrivialProcessorRegression) {
  // Above the rounded table bound 7e-5; see the baseline note in the README.
  EXPECT_NEAR(evaluate(0.381120, 0.0, 0.0, 3.0), 7.4200e-5, 5e-9);
}

TEST(Evaluate, SignFlippedProcessorGivesSameObjective) {
  // Negating (c, d) conjugates the processor by the momentum flip, which
  // leaves rho unchanged.
  EXPECT_NEAR(evaluate(0.348674, 0.075640, -0.069720, 3.0), evaluate(0.348674, -0.075640, 0.069720, 3.0),
              1e-20);
  EXPECT_NEAR(evaluate(0.348674, 0.075640, -0.069720, 3.0), 5.6188e-8, 1e-11);
}

TEST(Evaluate, DegenerateKernel) {
  EXPECT_THROW(evaluate(1.0 / 6.0, 0.0, 0.0, 3.0), DegenerateParameter);
}

TEST(Tune, DoesNotWorsenTabulatedRowTwo) {
  const auto init = row("proc-3.0");
  const auto r = tune(3.0, init);
  EXPECT_LE(r.rho_norm, 6e-8);
  EXPECT_LE(r.rho_norm, evaluate(init.b, init.c, init.d, 3.0));
  EXPECT_EQ(r.rho_norm, evaluate(r.b, r.c, r.d, 3.0));
  EXPECT_EQ(r.hbar, 3.0);
}

TEST(Tune, RowFiveBudget) {
  const auto r = tune(4.5, row("proc-4.5"));
  EXPECT_LE(r.rho_norm, 5e-5);
}

TEST(Tune, FromUnprocessedGuessBeatsBaseline) {
  const auto r = tune(3.0, {0.35, 0.0, 0.0});
  EXPECT_LE(r.rho_norm, 7e-5);
  EXPECT_LE(r.rho_norm, 6e-8);
  EXPECT_FALSE(r.trace.empty());
  EXPECT_GT(r.evaluations, 0);
}

TEST(Tune, Deterministic) {
  const auto a = tune(3.0, {0.35, 0.0, 0.0});
  const auto b = tune(3.0, {0.35, 0.0, 0.0});
  EXPECT_EQ(a.b, b.b);
  EXPECT_EQ(a.c, b.c);
  EXPECT_EQ(a.d, b.d);
  EXPECT_EQ(a.rho_norm, b.rho_norm);
  EXPECT_EQ(a.evaluations, b.evaluations);
  ASSERT_EQ(a.trace.size(), b.trace.size());
  for (std::size_t i = 0; i < a.trace.size(); ++i) EXPECT_EQ(a.trace[i].objective, b.trace[i].objective);
}

TEST(Tune, TraceIsNonIncreasing) {
  const auto r = tune(3.0, {0.35, 0.0, 0.0});
  for (std::size_t i = 1; i < r.trace.size(); ++i)
    EXPECT_LE(r.trace[i].objective, r.trace[i - 1].objective);
}

TEST(Tune, InfiniteStartIsNoDescent) {
  EXPECT_THROW(tune(3.0, {1.0 / 6.0, 0.0, 0.0}), NoDescent);
  EXPECT_THROW(tune(6.0, row("proc-3.0")), NoDescent);
}

TEST(ContinuationSweep, ReachesTabulatedValues) {
  const std::vector<double> hbars{3.0, 3.5, 4.0, 4.5};
  const auto results = continuation_sweep(hbars, row("proc-3.0"));
  ASSERT_EQ(results.size(), 4u);
  const double bounds[] = {6e-8, 5e-7, 5e-6, 5e-5};
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(results[i].hbar, hbars[i]);
    EXPECT_LE(results[i].rho_norm, bounds[i]) << hbars[i];
  }
}

TEST(ContinuationSweep, SingleBudgetIsPlainTune) {
  const std::vector<double> hbars{3.0};
  const auto sweep = continuation_sweep(hbars, {0.35, 0.0, 0.0});
  const auto direct = tune(3.0, {0.35, 0.0, 0.0});
  ASSERT_EQ(sweep.size(), 1u);
  EXPECT_EQ(sweep[0].rho_norm, direct.rho_norm);
  EXPECT_EQ(sweep[0].b, direct.b);
}

TEST(ContinuationSweep, EmptyAndUnsorted) {
  EXPECT_TRUE(continuation_sweep({}, {0.35, 0.0, 0.0}).empty());
  const std::vector<double> bad{3.5, 3.0};
  EXPECT_THROW(continuation_sweep(bad, {0.35, 0.0, 0.0}), InvalidArgument);
}
