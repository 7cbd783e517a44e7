#pragma once

#include <cstdint>
#include <optional>

#include "symphmc/flow.hpp"
#include "symphmc/splitting.hpp"

namespace symphmc {

/// Linear map (q, p) -> (m11 q + m12 p, m21 q + m22 p) that a schedule
/// induces on the unit harmonic oscillator H = (p^2 + q^2)/2.
struct TransferMatrix {
  double m11 = 1.0;
  double m12 = 0.0;
  double m21 = 0.0;
  double m22 = 1.0;

  static TransferMatrix identity() noexcept { return {}; }

  double determinant() const noexcept { return m11 * m22 - m12 * m21; }

  /// this * rhs (rhs acts first).
  TransferMatrix operator*(const TransferMatrix& rhs) const noexcept;

  bool operator==(const TransferMatrix&) const = default;
};

/// Power by repeated squaring.
TransferMatrix power(TransferMatrix m, std::int64_t n);

/// Spectral data of a palindromic kernel matrix [[cos t, chi sin t],
/// [-sin t / chi, cos t]]. chi and theta are set only when stable.
///
/// chi is always positive. theta is taken with the sign of m12, so it lies in
/// (0, pi) whenever m12 > 0, which covers every kernel near h = 0.
struct KernelSpectrum {
  bool stable = false;
  double chi = 0.0;
  double theta = 0.0;
};

/// alpha, beta, gamma, delta of a processor matrix [[alpha, beta],
/// [gamma, delta]].
struct ProcessorPolys {
  double alpha = 1.0;
  double beta = 0.0;
  double gamma = 0.0;
  double delta = 1.0;
};

/// Drift a -> [[1, a h], [0, 1]]; kick b -> [[1, 0], [-b h, 1]]. A modified
/// kick acts on the oscillator as a kick of weight coefficient (b - 2 h^2 c).
TransferMatrix flow_matrix(const ElementaryFlow& f, double h) noexcept;

/// Product of the flow matrices in action order.
TransferMatrix schedule_matrix(const FlowSchedule& s, double h) noexcept;

/// stable <=> |(m11 + m22)/2| < 1 and m12 m21 < 0 (the boundary counts as
/// unstable).
KernelSpectrum spectrum(const TransferMatrix& m) noexcept;

ProcessorPolys processor_polys(const FlowSchedule& pre, double h) noexcept;

/// Supremum of h such that the kernel is stable on all of (0, h). Scans in
/// steps of 1e-3 up to `h_max`, then bisects the first crossing to 1e-6.
/// Returns 0 if the kernel is unstable at arbitrarily small h and h_max if no
/// instability is found.
double stability_length(const FlowSchedule& kernel, double h_max = 100.0);

/// post * kernel^N * pre via the closed-form entries
///   A = C(ad + bg) + S(gd chi - ab / chi)
///   B = C(2 b d)   + S(d^2 chi - b^2 / chi)
///   C = C(2 a g)   + S(g^2 chi - a^2 / chi)
/// with C = cos(N theta), S = sin(N theta). Throws UnstableStep.
TransferMatrix leg_matrix(const ProcessedIntegrator& integrator, double h, std::int64_t n_steps);

/// Same product, evaluated by direct matrix multiplication.
TransferMatrix leg_matrix_direct(const ProcessedIntegrator& integrator, double h,
                                 std::int64_t n_steps) noexcept;

/// E(Delta) = (m12 + m21)^2 / 2 for (q0, p0) standard normal.
double expected_energy_error(const TransferMatrix& m) noexcept;

/// N-independent bound rho_h on the expected energy error; +infinity when the
/// kernel is unstable at h.
double rho(const ProcessedIntegrator& integrator, double h) noexcept;

struct RhoNormReport {
  double value = 0.0;           ///< max of rho over (0, hbar]
  double argmax = 0.0;
  double endpoint = 0.0;        ///< rho at hbar
  double interior_max = 0.0;    ///< largest refined local maximum strictly inside (0, hbar)
  int local_maxima = 0;
};

/// max of rho over a uniform grid of `grid_points` points in (0, hbar],
/// refined by golden-section search (tolerance 1e-8 in h) around every grid
/// local maximum. +infinity if any grid point is unstable.
RhoNormReport rho_norm_report(const ProcessedIntegrator& integrator, double hbar,
                              int grid_points = 10000);

double rho_norm(const ProcessedIntegrator& integrator, double hbar, int grid_points = 10000);

}  // namespace symphmc
