#include <gtest/gtest.h>

#include <cmath>

#include "symphmc/catalog.hpp"
#include "symphmc/errors.hpp"
#include "symphmc/fourth_order.hpp"
#include "symphmc/harmonic.hpp"
#include "symphmc/targets.hpp"

using namespace symphmc;

TEST(Catalog, Names) {
  const auto names = integrator_names();
  EXPECT_EQ(names, (std::vector<std::string>{"leapfrog", "blcasa", "proc-3.0", "proc-3.5", "proc-4.0",
                                             "proc-4.5", "rowlands"}));
  for (const auto& n : names) EXPECT_TRUE(is_known_integrator(n));
  EXPECT_TRUE(is_known_integrator("verlet"));
  EXPECT_FALSE(is_known_integrator("proc-5.0"));
}

TEST(Catalog, NamedIntegratorsCarryTableCoefficients) {
  const auto p = named_integrator("proc-4.0");
  EXPECT_EQ(p.params().b, 0.343684);
  EXPECT_EQ(p.params().c, -0.084690);
  EXPECT_EQ(p.params().d, 0.071880);
  EXPECT_EQ(p.kernel(), build_kernel(0.343684));
  EXPECT_EQ(p.pre(), build_processor(-0.084690, 0.071880));
  EXPECT_TRUE(named_integrator("blcasa").pre().empty());
  EXPECT_EQ(named_integrator("verlet").kernel(), velocity_verlet_kernel());
}

TEST(Catalog, UnknownAndRowlands) {
  EXPECT_THROW(named_integrator("nope"), InvalidArgument);
  EXPECT_THROW(named_integrator("rowlands"), InvalidArgument);
  EXPECT_THROW(table_row("leapfrog"), InvalidArgument);
}

TEST(Catalog, StabilityLengths) {
  EXPECT_NEAR(named_stability_length("leapfrog"), 2.0, 1e-6);
  EXPECT_NEAR(named_stability_length("rowlands"), std::sqrt(12.0), 1e-6);
  for (const auto& row : kParameterTable)
    EXPECT_NEAR(named_stability_length(row.name), row.stability_length, 5e-3);
}

TEST(Catalog, GradientsPerStep) {
  EXPECT_EQ(gradients_per_step("leapfrog"), 1);
  EXPECT_EQ(gradients_per_step("proc-3.0"), 3);
  EXPECT_EQ(gradients_per_step("rowlands"), 1);
}

TEST(Catalog, RowlandsLegFactoryRunsOnGaussian) {
  auto t = gaussian_model(4);
  const auto leg = named_leg_factory("rowlands")(0.05, 20);
  const auto res = leg(PhaseState({0.1, 0.1, 0.1, 0.1}, {0.0, 0.0, 0.0, 0.0}), *t);
  EXPECT_TRUE(res.state.finite());
  EXPECT_GT(res.hessian_vec_count, 0);
}
