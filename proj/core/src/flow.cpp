#include "symphmc/flow.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "symphmc/errors.hpp"

namespace symphmc {

namespace {

void require_finite(double x, const char* what) {
  if (!std::isfinite(x)) {
    throw InvalidArgument(std::string("non-finite ") + what);
  }
}

}  // namespace

ElementaryFlow ElementaryFlow::drift(double coefficient) {
  require_finite(coefficient, "drift coefficient");
  return {FlowKind::Drift, coefficient, 1.0, 0.0};
}

ElementaryFlow ElementaryFlow::kick(double coefficient) {
  require_finite(coefficient, "kick coefficient");
  return {FlowKind::Kick, coefficient, 1.0, 0.0};
}

ElementaryFlow ElementaryFlow::modified_kick(double coefficient, double b_mod,
                                             double c_mod) {
  require_finite(coefficient, "modified kick coefficient");
  require_finite(b_mod, "modified kick b");
  require_finite(c_mod, "modified kick c");
  return {FlowKind::ModifiedKick, coefficient, b_mod, c_mod};
}

double ElementaryFlow::kick_weight() const noexcept {
  switch (kind) {
    case FlowKind::Drift:
      return 0.0;
    case FlowKind::Kick:
      return coefficient;
    case FlowKind::ModifiedKick:
      return coefficient * b_mod;
  }
  return 0.0;
}

FlowSchedule::FlowSchedule(std::vector<ElementaryFlow> flows) : flows_(std::move(flows)) {
  for (const auto& f : flows_) {
    require_finite(f.coefficient, "flow coefficient");
    require_finite(f.b_mod, "flow b_mod");
    require_finite(f.c_mod, "flow c_mod");
  }
}

bool FlowSchedule::is_palindromic() const noexcept {
  return std::equal(flows_.begin(), flows_.begin() + flows_.size() / 2, flows_.rbegin());
}

double FlowSchedule::drift_sum() const noexcept {
  double s = 0.0;
  for (const auto& f : flows_) {
    if (f.kind == FlowKind::Drift) s += f.coefficient;
  }
  return s;
}

double FlowSchedule::kick_sum() const noexcept {
  double s = 0.0;
  for (const auto& f : flows_) s += f.kick_weight();
  return s;
}

FlowSchedule adjoint_schedule(const FlowSchedule& s) {
  std::vector<ElementaryFlow> reversed(s.flows().rbegin(), s.flows().rend());
  return FlowSchedule(std::move(reversed));
}

double kernel_drift_weight(double b) {
  const double denom = 6.0 * b - 1.0;
  if (!std::isfinite(b) || std::abs(denom) < 1e-12) {
    throw DegenerateParameter("kernel parameter b makes 6b - 1 vanish");
  }
  const double a = b / denom;
  if (!std::isfinite(a)) {
    throw DegenerateParameter("kernel drift weight is not finite");
  }
  return a;
}

FlowSchedule build_kernel(double b) {
  const double a = kernel_drift_weight(b);
  using F = ElementaryFlow;
  return FlowSchedule({F::kick(0.5 - b), F::drift(a), F::kick(b), F::drift(1.0 - 2.0 * a),
                       F::kick(b), F::drift(a), F::kick(0.5 - b)});
}

FlowSchedule build_processor(double c, double d) {
  using F = ElementaryFlow;
  return FlowSchedule({F::kick(d), F::drift(c), F::kick(-d), F::drift(-c)});
}

FlowSchedule velocity_verlet_kernel() {
  using F = ElementaryFlow;
  return FlowSchedule({F::kick(0.5), F::drift(1.0), F::kick(0.5)});
}

}  // namespace symphmc
