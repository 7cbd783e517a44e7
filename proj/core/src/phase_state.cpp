#include "symphmc/phase_state.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "symphmc/errors.hpp"

namespace symphmc {

PhaseState::PhaseState(std::vector<double> q, std::vector<double> p)
    : q_(std::move(q)), p_(std::move(p)) {
  if (q_.empty()) {
    throw DimensionMismatch("PhaseState: dimension must be at least 1");
  }
  if (q_.size() != p_.size()) {
    throw DimensionMismatch("PhaseState: q and p have different lengths");
  }
}

PhaseState PhaseState::zeros(std::size_t dim) {
  return PhaseState(std::vector<double>(dim, 0.0), std::vector<double>(dim, 0.0));
}

bool PhaseState::finite() const noexcept {
  auto is_finite = [](double x) { return std::isfinite(x); };
  return std::all_of(q_.begin(), q_.end(), is_finite) &&
         std::all_of(p_.begin(), p_.end(), is_finite);
}

PhaseState momentum_flip(PhaseState s) {
  for (double& x : s.p()) x = -x;
  return s;
}

double max_abs_difference(const PhaseState& a, const PhaseState& b) {
  if (a.dim() != b.dim()) {
    throw DimensionMismatch("max_abs_difference: dimensions differ");
  }
  double m = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    m = std::max({m, std::abs(a.q()[i] - b.q()[i]), std::abs(a.p()[i] - b.p()[i])});
  }
  return m;
}

double max_abs(const PhaseState& s) noexcept {
  double m = 0.0;
  for (double x : s.q()) m = std::max(m, std::abs(x));
  for (double x : s.p()) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace symphmc
