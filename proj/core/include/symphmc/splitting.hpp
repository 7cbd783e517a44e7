#pragma once

#include <cstdint>
#include <limits>

#include "symphmc/flow.hpp"
#include "symphmc/phase_state.hpp"
#include "symphmc/targets.hpp"

namespace symphmc {

/// Coefficients the integrator was built from; NaN where not applicable.
struct IntegratorParams {
  double b = std::numeric_limits<double>::quiet_NaN();
  double a = std::numeric_limits<double>::quiet_NaN();
  double c = std::numeric_limits<double>::quiet_NaN();
  double d = std::numeric_limits<double>::quiet_NaN();
};

/// Symmetrically processed integrator: one integration leg of N steps is
/// post o kernel^N o pre, with post = adjoint(pre).
///
/// Construction checks that the kernel is consistent (drift and kick
/// weights each sum to 1) and that the preprocessor's drift and kick weights
/// each sum to 0, both to within 1e-14.
class ProcessedIntegrator {
 public:
  ProcessedIntegrator(FlowSchedule kernel, FlowSchedule pre, IntegratorParams params = {});

  /// Three-parameter family: kernel build_kernel(b), preprocessor
  /// build_processor(c, d).
  static ProcessedIntegrator from_parameters(double b, double c, double d);

  /// Kernel with empty processors.
  static ProcessedIntegrator unprocessed(FlowSchedule kernel, IntegratorParams params = {});

  const FlowSchedule& kernel() const noexcept { return kernel_; }
  const FlowSchedule& pre() const noexcept { return pre_; }
  const FlowSchedule& post() const noexcept { return post_; }
  const IntegratorParams& params() const noexcept { return params_; }

  /// Gradient evaluations of one fused leg of n_steps steps, counted without
  /// running it (3N+5 for the processed family, 3N+1 unprocessed, N+1 for
  /// velocity Verlet).
  std::int64_t gradients_per_leg(std::int64_t n_steps) const;

 private:
  FlowSchedule kernel_;
  FlowSchedule pre_;
  FlowSchedule post_;
  IntegratorParams params_;
};

struct LegOptions {
  /// Reuse grad V across consecutive kicks with no drift in between.
  bool fuse_gradients = true;
  /// Allow the blocked whole-leg path on diagonal quadratic targets. Results
  /// are bit-identical either way.
  bool blocked_diagonal = true;
};

struct LegResult {
  PhaseState state;
  std::int64_t grad_count = 0;
  std::int64_t hessian_vec_count = 0;
};

/// Applies one flow to a copy of `s`. Throws NonFiniteState if the result is
/// not finite. Kicks with coefficient exactly 0 are skipped and cost nothing.
PhaseState apply_flow(const PhaseState& s, const ElementaryFlow& f, double h,
                      TargetModel& target);

/// One processed integration leg: pre once, kernel n_steps times, post once.
/// The reported counts are the target's counter increments during the leg.
LegResult integrate_leg(PhaseState s0, double h, std::int64_t n_steps,
                        const ProcessedIntegrator& integrator, TargetModel& target,
                        LegOptions options = {});

/// Counts the gradient evaluations a fused execution of the given schedules
/// in sequence performs, without touching any state.
class GradientTally {
 public:
  void add(const FlowSchedule& s);
  std::int64_t count() const noexcept { return count_; }

 private:
  std::int64_t count_ = 0;
  bool cached_ = false;
};

}  // namespace symphmc
