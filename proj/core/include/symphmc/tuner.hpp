#pragma once

#include <span>
#include <vector>

namespace symphmc {

/// Parameters (b, c, d) of the processed two-stage family.
struct FamilyParams {
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;
};

struct TraceEntry {
  int iteration = 0;
  FamilyParams params;
  double objective = 0.0;
};

struct TuneResult {
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;
  double rho_norm = 0.0;
  double hbar = 0.0;
  /// rho at hbar and the largest interior local maximum for the result, so a
  /// caller can check that the maximum sits at the end of the interval.
  double rho_endpoint = 0.0;
  double rho_interior_max = 0.0;
  int evaluations = 0;
  /// Best point after every simplex iteration.
  std::vector<TraceEntry> trace;

  FamilyParams params() const noexcept { return {b, c, d}; }
};

struct TuneOptions {
  double initial_step = 1e-2;
  double objective_tol = 1e-12;
  double diameter_tol = 1e-10;
  int max_iterations = 4000;
  /// Fresh simplices started from the incumbent after convergence; stops
  /// early when a restart brings no improvement.
  int max_restarts = 6;
};

/// rho_norm of the processed family member (b, c, d) over (0, hbar].
/// Throws DegenerateParameter when |6b - 1| < 1e-12.
double evaluate(double b, double c, double d, double hbar);

/// Nelder-Mead minimization of evaluate(., hbar) from `init`. Never returns an
/// objective worse than evaluate(init). Deterministic. Throws NoDescent when
/// the initial objective is infinite.
TuneResult tune(double hbar, FamilyParams init, const TuneOptions& options = {});

/// Chained tune calls over strictly increasing hbars, each seeded from the
/// previous optimum.
std::vector<TuneResult> continuation_sweep(std::span<const double> hbars, FamilyParams init,
                                           const TuneOptions& options = {});

}  // namespace symphmc
