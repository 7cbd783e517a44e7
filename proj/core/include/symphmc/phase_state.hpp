#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace symphmc {

/// Position/momentum pair advanced by every integrator.
///
/// Both vectors always have the same length d >= 1. Finiteness is not
/// enforced on construction; use `finite()` to detect a blown-up state.
class PhaseState {
 public:
  PhaseState(std::vector<double> q, std::vector<double> p);

  static PhaseState zeros(std::size_t dim);

  std::size_t dim() const noexcept { return q_.size(); }

  std::span<double> q() noexcept { return q_; }
  std::span<double> p() noexcept { return p_; }
  std::span<const double> q() const noexcept { return q_; }
  std::span<const double> p() const noexcept { return p_; }

  bool finite() const noexcept;

  bool operator==(const PhaseState&) const = default;

 private:
  std::vector<double> q_;
  std::vector<double> p_;
};

/// Returns (q, -p).
PhaseState momentum_flip(PhaseState s);

/// Max-norm of the difference of two states of equal dimension.
double max_abs_difference(const PhaseState& a, const PhaseState& b);

/// Max-norm of (q, p).
double max_abs(const PhaseState& s) noexcept;

}  // namespace symphmc
