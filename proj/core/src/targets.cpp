#include "symphmc/targets.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "symphmc/errors.hpp"

namespace symphmc {

namespace {

void check_dim(std::size_t expected, std::size_t actual, const char* what) {
  if (expected != actual) {
    throw DimensionMismatch(std::string(what) + ": dimension mismatch");
  }
}

}  // namespace

TargetModel::TargetModel(std::size_t dim) : dim_(dim) {
  if (dim == 0) throw InvalidArgument("target dimension must be at least 1");
}

void TargetModel::gradient(std::span<const double> q, std::span<double> out) {
  check_dim(dim_, q.size(), "gradient");
  check_dim(dim_, out.size(), "gradient");
  ++gradient_count_;
  gradient_impl(q, out);
}

std::vector<double> TargetModel::gradient(std::span<const double> q) {
  std::vector<double> out(dim_);
  gradient(q, out);
  return out;
}

void TargetModel::hessian_vec(std::span<const double> q, std::span<const double> v,
                              std::span<double> out) {
  check_dim(dim_, q.size(), "hessian_vec");
  check_dim(dim_, v.size(), "hessian_vec");
  check_dim(dim_, out.size(), "hessian_vec");
  ++hessian_vec_count_;
  hessian_vec_impl(q, v, out);
}

void TargetModel::hessian_vec_impl(std::span<const double> q, std::span<const double> v,
                                   std::span<double> out) const {
  double q_norm = 0.0;
  double v_norm = 0.0;
  for (double x : q) q_norm = std::max(q_norm, std::abs(x));
  for (double x : v) v_norm = std::max(v_norm, std::abs(x));
  if (v_norm == 0.0) {
    std::fill(out.begin(), out.end(), 0.0);
    return;
  }
  // Perturbation of size sqrt(eps)(1 + |q|_inf) along v.
  const double step = std::sqrt(std::numeric_limits<double>::epsilon()) * (1.0 + q_norm);
  const double t = step / v_norm;
  std::vector<double> plus(q.begin(), q.end());
  std::vector<double> minus(q.begin(), q.end());
  for (std::size_t i = 0; i < q.size(); ++i) {
    plus[i] += t * v[i];
    minus[i] -= t * v[i];
  }
  std::vector<double> g_minus(q.size());
  gradient_impl(plus, out);
  gradient_impl(minus, g_minus);
  for (std::size_t i = 0; i < q.size(); ++i) {
    out[i] = (out[i] - g_minus[i]) / (2.0 * t);
  }
}

void TargetModel::inv_mass_apply(std::span<const double> p, std::span<double> out) const {
  std::copy(p.begin(), p.end(), out.begin());
}

void TargetModel::draw_momentum(Rng& rng, std::span<double> out) const {
  if (!identity_mass()) {
    throw InvalidArgument("draw_momentum must be overridden for a non-identity mass");
  }
  std::normal_distribution<double> normal;
  for (double& x : out) x = normal(rng);
}

void TargetModel::exact_sample(Rng&, std::span<double>) const {
  throw InvalidArgument("target has no exact sampler");
}

std::optional<PhaseState> TargetModel::exact_flow(const PhaseState&, double) const {
  return std::nullopt;
}

void TargetModel::reset_counters() noexcept {
  gradient_count_ = 0;
  hessian_vec_count_ = 0;
}

double kinetic_energy(const TargetModel& target, std::span<const double> p) {
  check_dim(target.dim(), p.size(), "kinetic_energy");
  double sum = 0.0;
  if (target.identity_mass()) {
    for (double x : p) sum += x * x;
  } else {
    std::vector<double> v(p.size());
    target.inv_mass_apply(p, v);
    for (std::size_t i = 0; i < p.size(); ++i) sum += p[i] * v[i];
  }
  return 0.5 * sum;
}

// ---------------------------------------------------------------------------

GaussianModel::GaussianModel(std::vector<double> precisions)
    : TargetModel(precisions.size()), precisions_(std::move(precisions)) {
  frequencies_.reserve(precisions_.size());
  for (double w : precisions_) {
    if (!(w > 0.0) || !std::isfinite(w)) {
      throw InvalidArgument("Gaussian precisions must be positive and finite");
    }
    frequencies_.push_back(std::sqrt(w));
  }
}

double GaussianModel::potential(std::span<const double> q) const {
  check_dim(dim(), q.size(), "potential");
  double sum = 0.0;
  for (std::size_t j = 0; j < q.size(); ++j) sum += precisions_[j] * q[j] * q[j];
  return 0.5 * sum;
}

void GaussianModel::gradient_impl(std::span<const double> q, std::span<double> out) const {
  const double* w = precisions_.data();
  const std::size_t n = q.size();
  for (std::size_t j = 0; j < n; ++j) out[j] = w[j] * q[j];
}

void GaussianModel::hessian_vec_impl(std::span<const double>, std::span<const double> v,
                                     std::span<double> out) const {
  for (std::size_t j = 0; j < v.size(); ++j) out[j] = precisions_[j] * v[j];
}

void GaussianModel::exact_sample(Rng& rng, std::span<double> q) const {
  check_dim(dim(), q.size(), "exact_sample");
  std::normal_distribution<double> normal;
  for (std::size_t j = 0; j < q.size(); ++j) q[j] = normal(rng) / frequencies_[j];
}

std::optional<PhaseState> GaussianModel::exact_flow(const PhaseState& s, double t) const {
  check_dim(dim(), s.dim(), "exact_flow");
  PhaseState out = s;
  for (std::size_t j = 0; j < dim(); ++j) {
    const double w = frequencies_[j];
    const double c = std::cos(w * t);
    const double sn = std::sin(w * t);
    const double q = s.q()[j];
    const double p = s.p()[j];
    out.q()[j] = c * q + sn * p / w;
    out.p()[j] = -w * sn * q + c * p;
  }
  return out;
}

std::unique_ptr<TargetModel> GaussianModel::clone() const {
  return std::make_unique<GaussianModel>(precisions_);
}

// ---------------------------------------------------------------------------

AnharmonicModel::AnharmonicModel(std::size_t dim) : TargetModel(dim) {}

double AnharmonicModel::potential(std::span<const double> q) const {
  check_dim(dim(), q.size(), "potential");
  double sum = 0.0;
  for (double x : q) {
    const double x2 = x * x;
    sum += 0.5 * x2 + 0.25 * x2 * x2;
  }
  return sum;
}

void AnharmonicModel::gradient_impl(std::span<const double> q, std::span<double> out) const {
  for (std::size_t j = 0; j < q.size(); ++j) out[j] = q[j] + q[j] * q[j] * q[j];
}

void AnharmonicModel::hessian_vec_impl(std::span<const double> q, std::span<const double> v,
                                       std::span<double> out) const {
  for (std::size_t j = 0; j < q.size(); ++j) out[j] = (1.0 + 3.0 * q[j] * q[j]) * v[j];
}

std::unique_ptr<TargetModel> AnharmonicModel::clone() const {
  return std::make_unique<AnharmonicModel>(dim());
}

// ---------------------------------------------------------------------------

std::unique_ptr<GaussianModel> gaussian_model(std::size_t d) {
  if (d == 0) throw InvalidArgument("gaussian_model: d must be at least 1");
  std::vector<double> precisions(d);
  for (std::size_t j = 0; j < d; ++j) {
    const double k = static_cast<double>(j + 1);
    precisions[j] = k * k;
  }
  return std::make_unique<GaussianModel>(std::move(precisions));
}

std::unique_ptr<GaussianModel> oscillator_1d() { return gaussian_model(1); }

std::unique_ptr<AnharmonicModel> anharmonic_model(std::size_t d) {
  return std::make_unique<AnharmonicModel>(d);
}

}  // namespace symphmc
