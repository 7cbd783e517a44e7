#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "symphmc/phase_state.hpp"
#include "symphmc/splitting.hpp"
#include "symphmc/targets.hpp"

namespace symphmc {

/// Advances (q, p) over one integration leg on the given target.
using LegPropagator = std::function<LegResult(PhaseState, TargetModel&)>;

/// Builds the propagator for step size h and n_steps steps.
using LegFactory = std::function<LegPropagator(double h, std::int64_t n_steps)>;

LegFactory processed_leg_factory(ProcessedIntegrator integrator, LegOptions options = {});

/// N = max(1, round(leg_time / h)).
std::int64_t steps_per_leg(double h, double leg_time);

struct HmcConfig {
  double h = 0.0;
  double leg_time = 5.0;
  std::int64_t n_samples = 0;
  std::uint64_t seed = 0;
  ProcessedIntegrator integrator = ProcessedIntegrator::unprocessed(velocity_verlet_kernel());
  bool store_samples = true;
  /// Starting position; drawn from the target's exact sampler when empty.
  std::optional<std::vector<double>> initial_q;

  std::int64_t steps() const { return steps_per_leg(h, leg_time); }
};

struct ChainStats {
  std::int64_t accepted = 0;
  std::int64_t proposed = 0;
  std::int64_t grad_evals = 0;
  std::int64_t hessian_vec_evals = 0;
  std::vector<double> energy_errors;
  double acceptance_rate = 0.0;
  /// Acceptance percentage divided by gradient evaluations per leg.
  double accept_per_grad = 0.0;
  std::uint64_t seed = 0;

  double grad_per_leg() const noexcept;
};

struct HmcRun {
  /// Chain positions q^(1..n) row-major (n_samples x d); empty when not stored.
  std::vector<double> samples;
  ChainStats stats;
};

/// H = p^T M^{-1} p / 2 + V(q).
double energy(const TargetModel& target, const PhaseState& s);

/// Basic HMC: full momentum refreshment, one leg, Metropolis test on
/// log u < -Delta H. Iteration m draws its momentum and uniform from the
/// stream (seed, Iteration, m); the initial position comes from
/// (seed, Initialization, 0). A leg that produces NaN/Inf is rejected.
HmcRun hmc_run(TargetModel& target, const HmcConfig& config);

struct ChainSpec {
  std::int64_t n_samples = 0;
  std::uint64_t seed = 0;
  bool store_samples = true;
  std::optional<std::vector<double>> initial_q;
};

HmcRun hmc_run(TargetModel& target, const LegPropagator& leg, const ChainSpec& spec);

struct EfficiencyConfig {
  double leg_time = 5.0;
  std::int64_t n_samples = 0;
  std::uint64_t seed = 0;
  std::size_t threads = 1;
};

struct EfficiencyRow {
  double h = 0.0;
  std::int64_t n_steps = 0;
  double grad_per_leg = 0.0;
  std::int64_t accepted = 0;
  std::int64_t proposed = 0;
  double acceptance_pct = 0.0;
  double accept_per_grad = 0.0;
  std::uint64_t seed = 0;
  double mean_energy_error = 0.0;
  std::int64_t hessian_vec_evals = 0;
  bool best = false;
};

/// One chain per step size (seed ^ index), each on its own clone of the
/// target. Rows come back in input order; the row with the largest
/// accept_per_grad is flagged `best`.
std::vector<EfficiencyRow> efficiency_curve(const TargetModel& target, const LegFactory& legs,
                                            const std::vector<double>& h_list,
                                            const EfficiencyConfig& config);

}  // namespace symphmc
