#include "symphmc/fourth_order.hpp"

#include <cmath>
#include <utility>

#include "symphmc/detail/flow_executor.hpp"
#include "symphmc/errors.hpp"

namespace symphmc {

RowlandsScheme RowlandsScheme::standard() {
  using F = ElementaryFlow;
  using namespace rowlands;
  const auto kernel_kick =
      F::modified_kick(1.0, kKernelKick.value(), kKernelCurvature.value());
  FlowSchedule kernel({kernel_kick, F::drift(1.0), kernel_kick});
  FlowSchedule kappa({F::modified_kick(1.0, kKappaKick1.value(), kKappaCurvature1.value()),
                      F::drift(kKappaDrift1.value()), F::kick(kKappaKick2.value()),
                      F::drift(kKappaDrift2.value())});
  FlowSchedule kappa_star = adjoint_schedule(kappa);
  return {std::move(kernel), std::move(kappa), std::move(kappa_star)};
}

std::vector<Rational> RowlandsScheme::coefficients() {
  using namespace rowlands;
  return {kKernelKick, kKernelCurvature, Rational{1, 1}, kKappaKick1,
          kKappaCurvature1, kKappaDrift1, kKappaKick2,   kKappaDrift2};
}

namespace {

void check_leg_inputs(const PhaseState& s0, double h, const TargetModel& target) {
  if (!(h > 0.0) || !std::isfinite(h)) throw InvalidArgument("step size must be positive");
  if (s0.dim() != target.dim()) {
    throw DimensionMismatch("state dimension does not match target");
  }
}

}  // namespace

LegResult rowlands_leg(PhaseState s0, double h, std::int64_t n_steps,
                       const RowlandsScheme& scheme, TargetModel& target, LegOptions options) {
  if (n_steps < 2) throw InsufficientSteps("processed Rowlands leg needs N >= 2");
  check_leg_inputs(s0, h, target);
  const auto grads_before = target.gradient_evaluations();
  const auto hvps_before = target.hessian_vec_evaluations();

  detail::FlowExecutor exec(target, h, options.fuse_gradients);
  exec.apply(s0, scheme.kappa);
  for (std::int64_t i = 0; i < n_steps - 2; ++i) exec.apply(s0, scheme.kernel);
  exec.apply(s0, scheme.kappa_star);

  if (!s0.finite()) throw NonFiniteState("Rowlands leg produced a non-finite state");
  return {std::move(s0), target.gradient_evaluations() - grads_before,
          target.hessian_vec_evaluations() - hvps_before};
}

LegResult rowlands_kernel_leg(PhaseState s0, double h, std::int64_t n_steps,
                              const RowlandsScheme& scheme, TargetModel& target) {
  if (n_steps < 1) throw InvalidArgument("N must be at least 1");
  check_leg_inputs(s0, h, target);
  const auto grads_before = target.gradient_evaluations();
  const auto hvps_before = target.hessian_vec_evaluations();
  detail::FlowExecutor exec(target, h, true);
  for (std::int64_t i = 0; i < n_steps; ++i) exec.apply(s0, scheme.kernel);
  if (!s0.finite()) throw NonFiniteState("Rowlands kernel produced a non-finite state");
  return {std::move(s0), target.gradient_evaluations() - grads_before,
          target.hessian_vec_evaluations() - hvps_before};
}

std::vector<double> modified_force(std::span<const double> q, double b_mod, double c_mod,
                                   double h, TargetModel& target) {
  if (q.size() != target.dim()) throw DimensionMismatch("modified_force: dimension");
  std::vector<double> grad = target.gradient(q);
  std::vector<double> out(q.size());
  if (c_mod == 0.0) {
    for (std::size_t i = 0; i < q.size(); ++i) out[i] = b_mod * grad[i];
    return out;
  }
  std::vector<double> direction = grad;
  if (!target.identity_mass()) target.inv_mass_apply(grad, direction);
  std::vector<double> hv(q.size());
  target.hessian_vec(q, direction, hv);
  for (std::size_t i = 0; i < q.size(); ++i) {
    out[i] = b_mod * grad[i] - 2.0 * h * h * c_mod * hv[i];
  }
  return out;
}

LegFactory rowlands_leg_factory(RowlandsScheme scheme) {
  return [scheme = std::move(scheme)](double h, std::int64_t n_steps) {
    const std::int64_t n = std::max<std::int64_t>(2, n_steps);
    return LegPropagator([scheme, h, n](PhaseState s, TargetModel& target) {
      return rowlands_leg(std::move(s), h, n, scheme, target);
    });
  };
}

OrderReport order_estimate(TargetModel& target, const RowlandsScheme& rowlands,
                           OrderScheme scheme, const PhaseState& s0, double T, double h0,
                           int levels) {
  if (levels < 2) throw InvalidArgument("order_estimate: need at least two levels");
  if (!(T > 0.0) || !(h0 > 0.0)) throw InvalidArgument("order_estimate: T and h0 must be positive");

  auto step_count = [&](double h) {
    const double n = T / h;
    const auto rounded = std::llround(n);
    if (std::abs(n - static_cast<double>(rounded)) > 1e-9 * n || rounded < 4 || rounded % 2 != 0) {
      throw InvalidArgument("order_estimate: T/h must be an even integer >= 4");
    }
    return static_cast<std::int64_t>(rounded);
  };

  const ProcessedIntegrator verlet = ProcessedIntegrator::unprocessed(velocity_verlet_kernel());
  auto run = [&](OrderScheme which, double h) {
    const std::int64_t n = step_count(h);
    switch (which) {
      case OrderScheme::ProcessedRowlands:
        return rowlands_leg(s0, h, n, rowlands, target).state;
      case OrderScheme::RowlandsKernel:
        return rowlands_kernel_leg(s0, h, n, rowlands, target).state;
      case OrderScheme::VelocityVerlet:
        return integrate_leg(s0, h, n, verlet, target).state;
    }
    throw InvalidArgument("unknown scheme");
  };

  PhaseState reference = [&] {
    if (auto exact = target.exact_flow(s0, T)) return std::move(*exact);
    return run(OrderScheme::ProcessedRowlands, h0 / 64.0);
  }();

  OrderReport report;
  double h = h0;
  for (int level = 0; level < levels; ++level, h /= 2.0) {
    report.step_sizes.push_back(h);
    report.errors.push_back(max_abs_difference(run(scheme, h), reference));
  }
  for (std::size_t i = 1; i < report.errors.size(); ++i) {
    report.orders.push_back(std::log2(report.errors[i - 1] / report.errors[i]));
  }
  return report;
}

}  // namespace symphmc
