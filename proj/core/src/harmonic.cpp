#include "symphmc/harmonic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "symphmc/errors.hpp"

namespace symphmc {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Maximizes f on [lo, hi] by golden-section search until the bracket is
// shorter than tol. Returns (argmax, max) over all evaluated points.
template <typename F>
std::pair<double, double> golden_section_max(F&& f, double lo, double hi, double tol) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = f(x1);
  double f2 = f(x2);
  double best_x = f1 >= f2 ? x1 : x2;
  double best_f = std::max(f1, f2);
  while (hi - lo > tol) {
    if (f1 >= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = f(x1);
      if (f1 > best_f) best_f = f1, best_x = x1;
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = f(x2);
      if (f2 > best_f) best_f = f2, best_x = x2;
    }
  }
  return {best_x, best_f};
}

}  // namespace

TransferMatrix TransferMatrix::operator*(const TransferMatrix& r) const noexcept {
  return {m11 * r.m11 + m12 * r.m21, m11 * r.m12 + m12 * r.m22,
          m21 * r.m11 + m22 * r.m21, m21 * r.m12 + m22 * r.m22};
}

TransferMatrix power(TransferMatrix m, std::int64_t n) {
  if (n < 0) throw InvalidArgument("matrix power: negative exponent");
  TransferMatrix result = TransferMatrix::identity();
  while (n > 0) {
    if (n & 1) result = m * result;
    m = m * m;
    n >>= 1;
  }
  return result;
}

TransferMatrix flow_matrix(const ElementaryFlow& f, double h) noexcept {
  switch (f.kind) {
    case FlowKind::Drift:
      return {1.0, f.coefficient * h, 0.0, 1.0};
    case FlowKind::Kick:
      return {1.0, 0.0, -f.coefficient * h, 1.0};
    case FlowKind::ModifiedKick:
      return {1.0, 0.0, -f.coefficient * h * (f.b_mod - 2.0 * h * h * f.c_mod), 1.0};
  }
  return TransferMatrix::identity();
}

TransferMatrix schedule_matrix(const FlowSchedule& s, double h) noexcept {
  TransferMatrix m = TransferMatrix::identity();
  for (const auto& f : s.flows()) m = flow_matrix(f, h) * m;
  return m;
}

KernelSpectrum spectrum(const TransferMatrix& m) noexcept {
  const double half_trace = 0.5 * (m.m11 + m.m22);
  KernelSpectrum out;
  out.stable = std::abs(half_trace) < 1.0 && m.m12 * m.m21 < 0.0;
  if (!out.stable) return out;
  out.chi = std::sqrt(m.m12 / -m.m21);
  const double angle = std::acos(half_trace);
  out.theta = m.m12 > 0.0 ? angle : -angle;
  return out;
}

ProcessorPolys processor_polys(const FlowSchedule& pre, double h) noexcept {
  const TransferMatrix m = schedule_matrix(pre, h);
  return {m.m11, m.m12, m.m21, m.m22};
}

double stability_length(const FlowSchedule& kernel, double h_max) {
  constexpr double kScanStep = 1e-3;
  constexpr double kTol = 1e-7;
  auto stable = [&](double h) { return spectrum(schedule_matrix(kernel, h)).stable; };

  double lo = 0.0;
  double hi = 0.0;
  bool crossed = false;
  for (std::int64_t k = 1; static_cast<double>(k) * kScanStep <= h_max; ++k) {
    const double h = static_cast<double>(k) * kScanStep;
    if (!stable(h)) {
      hi = h;
      crossed = true;
      break;
    }
    lo = h;
  }
  if (!crossed) return h_max;

  const double first_stable = lo;
  while (hi - lo > kTol) {
    const double mid = 0.5 * (lo + hi);
    (stable(mid) ? lo : hi) = mid;
  }
  if (first_stable == 0.0 && lo == 0.0) return 0.0;
  return 0.5 * (lo + hi);
}

TransferMatrix leg_matrix(const ProcessedIntegrator& integrator, double h,
                          std::int64_t n_steps) {
  const KernelSpectrum sp = spectrum(schedule_matrix(integrator.kernel(), h));
  if (!sp.stable) throw UnstableStep("kernel is unstable at the requested step size");
  const ProcessorPolys pp = processor_polys(integrator.pre(), h);
  const double al = pp.alpha;
  const double be = pp.beta;
  const double ga = pp.gamma;
  const double de = pp.delta;
  const double chi = sp.chi;
  const double angle = static_cast<double>(n_steps) * sp.theta;
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  const double a = c * (al * de + be * ga) + s * (ga * de * chi - al * be / chi);
  const double b = c * (2.0 * be * de) + s * (de * de * chi - be * be / chi);
  const double cc = c * (2.0 * al * ga) + s * (ga * ga * chi - al * al / chi);
  return {a, b, cc, a};
}

TransferMatrix leg_matrix_direct(const ProcessedIntegrator& integrator, double h,
                                 std::int64_t n_steps) noexcept {
  const TransferMatrix pre = schedule_matrix(integrator.pre(), h);
  const TransferMatrix kernel = schedule_matrix(integrator.kernel(), h);
  const TransferMatrix post = schedule_matrix(integrator.post(), h);
  TransferMatrix m = pre;
  for (std::int64_t i = 0; i < n_steps; ++i) m = kernel * m;
  return post * m;
}

double expected_energy_error(const TransferMatrix& m) noexcept {
  const double s = m.m12 + m.m21;
  return 0.5 * s * s;
}

double rho(const ProcessedIntegrator& integrator, double h) noexcept {
  const KernelSpectrum sp = spectrum(schedule_matrix(integrator.kernel(), h));
  if (!sp.stable) return kInf;
  const ProcessorPolys pp = processor_polys(integrator.pre(), h);
  const double cross = pp.alpha * pp.gamma + pp.beta * pp.delta;
  const double ecc = (pp.delta * pp.delta + pp.gamma * pp.gamma) * sp.chi -
                     (pp.alpha * pp.alpha + pp.beta * pp.beta) / sp.chi;
  return 2.0 * cross * cross + 0.5 * ecc * ecc;
}

RhoNormReport rho_norm_report(const ProcessedIntegrator& integrator, double hbar,
                              int grid_points) {
  if (!(hbar > 0.0) || !std::isfinite(hbar)) throw InvalidArgument("rho_norm: hbar must be positive");
  if (grid_points < 2) throw InvalidArgument("rho_norm: need at least two grid points");

  const auto n = static_cast<std::size_t>(grid_points);
  const double spacing = hbar / static_cast<double>(n);
  auto grid_h = [&](std::size_t i) {
    return i + 1 == n ? hbar : static_cast<double>(i + 1) * spacing;
  };

  RhoNormReport report;
  std::vector<double> values(n);
  for (std::size_t i = 0; i < n; ++i) {
    values[i] = rho(integrator, grid_h(i));
    if (!std::isfinite(values[i])) {
      report.value = report.endpoint = report.interior_max = kInf;
      report.argmax = grid_h(i);
      return report;
    }
  }
  report.endpoint = values[n - 1];
  report.value = report.endpoint;
  report.argmax = hbar;

  auto f = [&](double h) { return rho(integrator, h); };
  for (std::size_t i = 0; i < n; ++i) {
    // rho vanishes as h -> 0, so the left neighbour of the first point is 0.
    const double left = i == 0 ? 0.0 : values[i - 1];
    const bool is_last = i + 1 == n;
    if (!(values[i] > left) || (!is_last && values[i] < values[i + 1])) continue;
    ++report.local_maxima;

    const double lo = i == 0 ? 0.5 * spacing : grid_h(i - 1);
    const double hi = is_last ? hbar : grid_h(i + 1);
    auto [x, fx] = golden_section_max(f, lo, hi, 1e-8);
    if (values[i] >= fx) {
      x = grid_h(i);
      fx = values[i];
    }
    if (x < hbar - 1e-7) report.interior_max = std::max(report.interior_max, fx);
    if (fx > report.value) {
      report.value = fx;
      report.argmax = x;
    }
  }
  return report;
}

double rho_norm(const ProcessedIntegrator& integrator, double hbar, int grid_points) {
  return rho_norm_report(integrator, hbar, grid_points).value;
}

}  // namespace symphmc
