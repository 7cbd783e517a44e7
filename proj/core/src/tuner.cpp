#include "symphmc/tuner.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numeric>

#include "symphmc/errors.hpp"
#include "symphmc/harmonic.hpp"
#include "symphmc/splitting.hpp"

namespace symphmc {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr std::size_t kDim = 3;

using Point = std::array<double, kDim>;

Point to_point(const FamilyParams& p) { return {p.b, p.c, p.d}; }
FamilyParams to_params(const Point& x) { return {x[0], x[1], x[2]}; }

class Objective {
 public:
  explicit Objective(double hbar) : hbar_(hbar) {}

  double operator()(const Point& x) {
    ++evaluations_;
    try {
      const double v = evaluate(x[0], x[1], x[2], hbar_);
      return std::isnan(v) ? kInf : v;
    } catch (const DegenerateParameter&) {
      return kInf;
    }
  }

  int evaluations() const noexcept { return evaluations_; }

 private:
  double hbar_;
  int evaluations_ = 0;
};

struct Simplex {
  std::array<Point, kDim + 1> x;
  std::array<double, kDim + 1> f;

  void sort() {
    std::array<std::size_t, kDim + 1> idx;
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](auto a, auto b) { return f[a] < f[b]; });
    Simplex sorted = *this;
    for (std::size_t k = 0; k <= kDim; ++k) {
      sorted.x[k] = x[idx[k]];
      sorted.f[k] = f[idx[k]];
    }
    *this = sorted;
  }

  double diameter() const {
    double d = 0.0;
    for (std::size_t k = 1; k <= kDim; ++k) {
      for (std::size_t i = 0; i < kDim; ++i) d = std::max(d, std::abs(x[k][i] - x[0][i]));
    }
    return d;
  }
};

Point affine(const Point& base, const Point& toward, double t) {
  Point out;
  for (std::size_t i = 0; i < kDim; ++i) out[i] = base[i] + t * (toward[i] - base[i]);
  return out;
}

// One Nelder-Mead run with standard coefficients (1, 2, 1/2, 1/2).
void nelder_mead(Objective& objective, Point& best, double& best_f, const TuneOptions& opt,
                 int& iteration, std::vector<TraceEntry>& trace) {
  Simplex s;
  s.x[0] = best;
  s.f[0] = best_f;
  for (std::size_t k = 0; k < kDim; ++k) {
    s.x[k + 1] = best;
    s.x[k + 1][k] += opt.initial_step;
    s.f[k + 1] = objective(s.x[k + 1]);
  }

  for (int it = 0; it < opt.max_iterations; ++it) {
    s.sort();
    const double spread = s.f[kDim] - s.f[0];
    if ((std::isfinite(spread) && spread < opt.objective_tol) || s.diameter() < opt.diameter_tol) {
      break;
    }

    Point centroid{};
    for (std::size_t k = 0; k < kDim; ++k) {
      for (std::size_t i = 0; i < kDim; ++i) centroid[i] += s.x[k][i] / kDim;
    }
    const Point& worst = s.x[kDim];

    const Point reflected = affine(centroid, worst, -1.0);
    const double f_reflected = objective(reflected);
    if (f_reflected < s.f[0]) {
      const Point expanded = affine(centroid, worst, -2.0);
      const double f_expanded = objective(expanded);
      if (f_expanded < f_reflected) {
        s.x[kDim] = expanded;
        s.f[kDim] = f_expanded;
      } else {
        s.x[kDim] = reflected;
        s.f[kDim] = f_reflected;
      }
    } else if (f_reflected < s.f[kDim - 1]) {
      s.x[kDim] = reflected;
      s.f[kDim] = f_reflected;
    } else {
      const bool outside = f_reflected < s.f[kDim];
      const Point contracted = outside ? affine(centroid, reflected, 0.5)
                                       : affine(centroid, worst, 0.5);
      const double f_contracted = objective(contracted);
      if (f_contracted < std::min(f_reflected, s.f[kDim])) {
        s.x[kDim] = contracted;
        s.f[kDim] = f_contracted;
      } else {
        for (std::size_t k = 1; k <= kDim; ++k) {
          s.x[k] = affine(s.x[0], s.x[k], 0.5);
          s.f[k] = objective(s.x[k]);
        }
      }
    }

    const auto lowest = std::min_element(s.f.begin(), s.f.end()) - s.f.begin();
    if (s.f[lowest] < best_f) {
      best_f = s.f[lowest];
      best = s.x[lowest];
    }
    trace.push_back({++iteration, to_params(best), best_f});
  }
}

}  // namespace

double evaluate(double b, double c, double d, double hbar) {
  return rho_norm(ProcessedIntegrator::from_parameters(b, c, d), hbar);
}

TuneResult tune(double hbar, FamilyParams init, const TuneOptions& options) {
  if (!(hbar > 0.0)) throw InvalidArgument("tune: hbar must be positive");
  Objective objective(hbar);
  Point best = to_point(init);
  double best_f = objective(best);
  if (!std::isfinite(best_f)) {
    throw NoDescent("tune: objective is infinite at the initial point");
  }

  TuneResult result;
  result.hbar = hbar;
  int iteration = 0;
  result.trace.push_back({0, init, best_f});
  for (int restart = 0; restart <= options.max_restarts; ++restart) {
    const double before = best_f;
    nelder_mead(objective, best, best_f, options, iteration, result.trace);
    if (restart > 0 && !(best_f < before)) break;
  }

  const auto report =
      rho_norm_report(ProcessedIntegrator::from_parameters(best[0], best[1], best[2]), hbar);
  result.b = best[0];
  result.c = best[1];
  result.d = best[2];
  result.rho_norm = report.value;
  result.rho_endpoint = report.endpoint;
  result.rho_interior_max = report.interior_max;
  result.evaluations = objective.evaluations();
  return result;
}

std::vector<TuneResult> continuation_sweep(std::span<const double> hbars, FamilyParams init,
                                           const TuneOptions& options) {
  for (std::size_t i = 1; i < hbars.size(); ++i) {
    if (!(hbars[i] > hbars[i - 1])) {
      throw InvalidArgument("continuation_sweep: hbars must be strictly increasing");
    }
  }
  std::vector<TuneResult> results;
  results.reserve(hbars.size());
  FamilyParams seed = init;
  for (double hbar : hbars) {
    results.push_back(tune(hbar, seed, options));
    seed = results.back().params();
  }
  return results;
}

}  // namespace symphmc
