#pragma once

#include <cmath>
#include <functional>
#include <memory>
#include <utility>
#include <vector>

#include "symphmc/phase_state.hpp"
#include "symphmc/targets.hpp"

namespace symphmc::test_support {

// Gaussian target that forwards to GaussianModel but hides its diagonal
// structure, so integrators take the generic flow-by-flow path.
class OpaqueGaussian final : public TargetModel {
 public:
  explicit OpaqueGaussian(std::vector<double> w) : TargetModel(w.size()), inner_(std::move(w)) {}

  double potential(std::span<const double> q) const override { return inner_.potential(q); }
  bool has_hessian_vec() const noexcept override { return true; }
  bool has_exact_sampler() const noexcept override { return true; }
  void exact_sample(Rng& rng, std::span<double> q) const override { inner_.exact_sample(rng, q); }
  std::unique_ptr<TargetModel> clone() const override {
    return std::make_unique<OpaqueGaussian>(std::vector<double>(inner_.precisions().begin(),
                                                                inner_.precisions().end()));
  }

 protected:
  void gradient_impl(std::span<const double> q, std::span<double> out) const override {
    const auto w = inner_.precisions();
    for (std::size_t i = 0; i < q.size(); ++i) out[i] = w[i] * q[i];
  }
  void hessian_vec_impl(std::span<const double>, std::span<const double> v,
                        std::span<double> out) const override {
    const auto w = inner_.precisions();
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = w[i] * v[i];
  }

 private:
  GaussianModel inner_;
};

inline std::vector<double> squares(std::size_t d) {
  std::vector<double> w(d);
  for (std::size_t j = 0; j < d; ++j) w[j] = static_cast<double>((j + 1) * (j + 1));
  return w;
}

// Determinant of a small dense matrix by Gaussian elimination with partial
// pivoting.
inline double determinant(std::vector<std::vector<double>> a) {
  const std::size_t n = a.size();
  double det = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::abs(a[i][k]) > std::abs(a[piv][k])) piv = i;
    if (a[piv][k] == 0.0) return 0.0;
    if (piv != k) {
      std::swap(a[piv], a[k]);
      det = -det;
    }
    det *= a[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      const double f = a[i][k] / a[k][k];
      for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
    }
  }
  return det;
}

// Central-difference Jacobian determinant of a map on phase space, taken
// over the concatenated coordinates (q, p).
inline double jacobian_determinant(const std::function<PhaseState(const PhaseState&)>& map,
                                   const PhaseState& at, double step = 1e-6) {
  const std::size_t d = at.dim();
  const std::size_t n = 2 * d;
  auto flat = [d](const PhaseState& s) {
    std::vector<double> x(2 * d);
    for (std::size_t i = 0; i < d; ++i) {
      x[i] = s.q()[i];
      x[d + i] = s.p()[i];
    }
    return x;
  };
  std::vector<std::vector<double>> jac(n, std::vector<double>(n));
  for (std::size_t k = 0; k < n; ++k) {
    PhaseState plus = at;
    PhaseState minus = at;
    auto& cp = k < d ? plus.q()[k] : plus.p()[k - d];
    auto& cm = k < d ? minus.q()[k] : minus.p()[k - d];
    cp += step;
    cm -= step;
    const auto fp = flat(map(plus));
    const auto fm = flat(map(minus));
    for (std::size_t i = 0; i < n; ++i) jac[i][k] = (fp[i] - fm[i]) / (2.0 * step);
  }
  return determinant(jac);
}

}  // namespace symphmc::test_support
