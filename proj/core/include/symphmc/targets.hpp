#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "symphmc/phase_state.hpp"
#include "symphmc/rng.hpp"

namespace symphmc {

namespace detail {
class FlowExecutor;
struct DiagonalLeg;
}

/// A target density proportional to exp(-V(q)) together with the kinetic
/// metric M used by the Hamiltonian H = p^T M^{-1} p / 2 + V(q).
///
/// Every call to `gradient` increments an evaluation counter owned by the
/// instance, and every call to `hessian_vec` increments a separate one.
/// Potential-only calls are not counted. Instances are not shared between
/// chains; use `clone()` to give each chain its own counters.
class TargetModel {
 public:
  explicit TargetModel(std::size_t dim);
  virtual ~TargetModel() = default;

  std::size_t dim() const noexcept { return dim_; }

  virtual double potential(std::span<const double> q) const = 0;

  void gradient(std::span<const double> q, std::span<double> out);
  std::vector<double> gradient(std::span<const double> q);

  /// Hess V(q) v. Falls back to a central difference of the gradient with
  /// step sqrt(eps)(1 + |q|_inf) when the model provides no analytic product.
  void hessian_vec(std::span<const double> q, std::span<const double> v, std::span<double> out);

  virtual bool has_hessian_vec() const noexcept { return false; }

  /// Weights w when grad V(q) = w o q exactly (diagonal quadratic V), else
  /// empty. Lets integrators update p without materializing the gradient.
  virtual std::span<const double> diagonal_precision() const noexcept { return {}; }

  virtual bool identity_mass() const noexcept { return true; }
  virtual void inv_mass_apply(std::span<const double> p, std::span<double> out) const;

  /// p ~ N(0, M). The default draws from N(0, I) and requires identity mass.
  virtual void draw_momentum(Rng& rng, std::span<double> out) const;

  virtual bool has_exact_sampler() const noexcept { return false; }
  virtual void exact_sample(Rng& rng, std::span<double> q) const;

  /// Exact Hamiltonian flow over time t, when known in closed form.
  virtual std::optional<PhaseState> exact_flow(const PhaseState& s, double t) const;

  /// Copy of the model with fresh evaluation counters.
  virtual std::unique_ptr<TargetModel> clone() const = 0;

  std::int64_t gradient_evaluations() const noexcept { return gradient_count_; }
  std::int64_t hessian_vec_evaluations() const noexcept { return hessian_vec_count_; }
  void reset_counters() noexcept;

 protected:
  TargetModel(const TargetModel&) = default;
  TargetModel& operator=(const TargetModel&) = default;

  virtual void gradient_impl(std::span<const double> q, std::span<double> out) const = 0;
  virtual void hessian_vec_impl(std::span<const double> q, std::span<const double> v,
                                std::span<double> out) const;

 private:
  friend class detail::FlowExecutor;
  friend struct detail::DiagonalLeg;

  std::size_t dim_;
  std::int64_t gradient_count_ = 0;
  std::int64_t hessian_vec_count_ = 0;
};

/// p^T M^{-1} p / 2.
double kinetic_energy(const TargetModel& target, std::span<const double> p);

/// Gaussian target exp(-sum_j w_j q_j^2 / 2) with diagonal precisions w_j.
class GaussianModel final : public TargetModel {
 public:
  explicit GaussianModel(std::vector<double> precisions);

  std::span<const double> precisions() const noexcept { return precisions_; }
  std::span<const double> diagonal_precision() const noexcept override { return precisions_; }

  double potential(std::span<const double> q) const override;
  bool has_hessian_vec() const noexcept override { return true; }
  bool has_exact_sampler() const noexcept override { return true; }
  void exact_sample(Rng& rng, std::span<double> q) const override;
  std::optional<PhaseState> exact_flow(const PhaseState& s, double t) const override;
  std::unique_ptr<TargetModel> clone() const override;

 protected:
  void gradient_impl(std::span<const double> q, std::span<double> out) const override;
  void hessian_vec_impl(std::span<const double> q, std::span<const double> v,
                        std::span<double> out) const override;

 private:
  std::vector<double> precisions_;
  std::vector<double> frequencies_;
};

/// V(q) = sum_j (q_j^2/2 + q_j^4/4).
class AnharmonicModel final : public TargetModel {
 public:
  explicit AnharmonicModel(std::size_t dim);

  double potential(std::span<const double> q) const override;
  bool has_hessian_vec() const noexcept override { return true; }
  std::unique_ptr<TargetModel> clone() const override;

 protected:
  void gradient_impl(std::span<const double> q, std::span<double> out) const override;
  void hessian_vec_impl(std::span<const double> q, std::span<const double> v,
                        std::span<double> out) const override;
};

/// The benchmark Gaussian: precisions j^2 for j = 1..d, so the stiffest
/// mode has frequency d.
std::unique_ptr<GaussianModel> gaussian_model(std::size_t d);

/// Unit harmonic oscillator V(q) = q^2/2.
std::unique_ptr<GaussianModel> oscillator_1d();

std::unique_ptr<AnharmonicModel> anharmonic_model(std::size_t d);

}  // namespace symphmc
