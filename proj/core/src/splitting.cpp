#include "symphmc/splitting.hpp"

#include <algorithm>
#include <cmath>
#include <type_traits>
#include <string>
#include <utility>

#include "symphmc/detail/flow_executor.hpp"
#include "symphmc/errors.hpp"

namespace symphmc {

namespace detail {

FlowExecutor::FlowExecutor(TargetModel& target, double h, bool fuse_gradients)
    : target_(target),
      h_(h),
      fuse_(fuse_gradients),
      diagonal_(target.diagonal_precision()),
      identity_mass_(target.identity_mass()),
      grad_(target.dim()),
      work_(target.dim()),
      curvature_(target.dim()) {}

void FlowExecutor::moved() {
  paid_ = false;
  grad_valid_ = false;
  curvature_valid_ = false;
}

void FlowExecutor::pay_for_gradient() {
  if (fuse_ && paid_) return;
  ++target_.gradient_count_;
  paid_ = true;
}

void FlowExecutor::ensure_gradient(const PhaseState& s) {
  if (fuse_ && grad_valid_) return;
  if (fuse_ && paid_) {
    // Already counted through the diagonal path; materialize without recounting.
    target_.gradient_impl(s.q(), grad_);
  } else {
    target_.gradient(s.q(), grad_);
    paid_ = true;
  }
  grad_valid_ = true;
  curvature_valid_ = false;
}

void FlowExecutor::ensure_curvature(const PhaseState& s) {
  ensure_gradient(s);
  if (fuse_ && curvature_valid_) return;
  if (identity_mass_) {
    target_.hessian_vec(s.q(), grad_, curvature_);
  } else {
    target_.inv_mass_apply(grad_, work_);
    target_.hessian_vec(s.q(), work_, curvature_);
  }
  curvature_valid_ = true;
}

void FlowExecutor::drift(PhaseState& s, double tau) {
  const std::size_t n = s.dim();
  double* q = s.q().data();
  if (identity_mass_) {
    const double* p = s.p().data();
    for (std::size_t i = 0; i < n; ++i) q[i] += tau * p[i];
  } else {
    target_.inv_mass_apply(s.p(), work_);
    for (std::size_t i = 0; i < n; ++i) q[i] += tau * work_[i];
  }
  moved();
}

void FlowExecutor::kick(PhaseState& s, double tau) {
  const std::size_t n = s.dim();
  double* p = s.p().data();
  if (!diagonal_.empty()) {
    pay_for_gradient();
    const double* q = s.q().data();
    const double* w = diagonal_.data();
    for (std::size_t i = 0; i < n; ++i) p[i] -= tau * (w[i] * q[i]);
    return;
  }
  ensure_gradient(s);
  const double* g = grad_.data();
  for (std::size_t i = 0; i < n; ++i) p[i] -= tau * g[i];
}

void FlowExecutor::kick_drift(PhaseState& s, double kick_tau, double drift_tau) {
  pay_for_gradient();
  const std::size_t n = s.dim();
  double* q = s.q().data();
  double* p = s.p().data();
  const double* w = diagonal_.data();
  for (std::size_t i = 0; i < n; ++i) {
    p[i] -= kick_tau * (w[i] * q[i]);
    q[i] += drift_tau * p[i];
  }
  moved();
}

void FlowExecutor::modified_kick(PhaseState& s, const ElementaryFlow& f) {
  const double tau = f.coefficient * h_;
  const std::size_t n = s.dim();
  double* p = s.p().data();
  ensure_gradient(s);
  const double* g = grad_.data();
  if (f.c_mod == 0.0) {
    const double scale = tau * f.b_mod;
    for (std::size_t i = 0; i < n; ++i) p[i] -= scale * g[i];
    return;
  }
  ensure_curvature(s);
  const double* hv = curvature_.data();
  const double curv_scale = 2.0 * h_ * h_ * f.c_mod;
  for (std::size_t i = 0; i < n; ++i) p[i] -= tau * (f.b_mod * g[i] - curv_scale * hv[i]);
}

void FlowExecutor::apply(PhaseState& s, const ElementaryFlow& f) {
  if (s.dim() != target_.dim()) {
    throw DimensionMismatch("state dimension does not match target dimension");
  }
  if (f.coefficient == 0.0) return;
  switch (f.kind) {
    case FlowKind::Drift:
      drift(s, f.coefficient * h_);
      return;
    case FlowKind::Kick:
      kick(s, f.coefficient * h_);
      return;
    case FlowKind::ModifiedKick:
      modified_kick(s, f);
      return;
  }
}

void FlowExecutor::apply(PhaseState& s, const FlowSchedule& schedule) {
  if (s.dim() != target_.dim()) {
    throw DimensionMismatch("state dimension does not match target dimension");
  }
  const auto flows = schedule.flows();
  const bool can_pair = !diagonal_.empty() && identity_mass_;
  for (std::size_t i = 0; i < flows.size(); ++i) {
    const ElementaryFlow& f = flows[i];
    if (can_pair && f.kind == FlowKind::Kick && f.coefficient != 0.0 && i + 1 < flows.size() &&
        flows[i + 1].kind == FlowKind::Drift && flows[i + 1].coefficient != 0.0) {
      kick_drift(s, f.coefficient * h_, flows[i + 1].coefficient * h_);
      ++i;
      continue;
    }
    apply(s, f);
  }
}

namespace {

struct CompiledFlow {
  bool is_kick;
  double tau;
};

void compile(const FlowSchedule& s, double h, std::vector<CompiledFlow>& out) {
  out.clear();
  for (const auto& f : s.flows()) {
    if (f.coefficient != 0.0) out.push_back({f.kind == FlowKind::Kick, f.coefficient * h});
  }
}

template <std::size_t Block>
void run_block(double* __restrict q, double* __restrict p, const double* __restrict w,
               std::span<const CompiledFlow> flows) {
  for (const CompiledFlow& f : flows) {
    const double tau = f.tau;
    if (f.is_kick) {
      for (std::size_t k = 0; k < Block; ++k) p[k] -= tau * (w[k] * q[k]);
    } else {
      for (std::size_t k = 0; k < Block; ++k) q[k] += tau * p[k];
    }
  }
}

}  // namespace

bool DiagonalLeg::applicable(const TargetModel& target, const FlowSchedule& pre,
                             const FlowSchedule& kernel, const FlowSchedule& post) {
  if (target.diagonal_precision().empty() || !target.identity_mass()) return false;
  for (const FlowSchedule* s : {&pre, &kernel, &post}) {
    for (const auto& f : s->flows()) {
      if (f.kind == FlowKind::ModifiedKick) return false;
    }
  }
  return true;
}

void DiagonalLeg::run(PhaseState& s, TargetModel& target, double h, std::int64_t n_steps,
                      const FlowSchedule& pre, const FlowSchedule& kernel,
                      const FlowSchedule& post, bool fuse_gradients) {
  std::vector<CompiledFlow> pre_c, kernel_c, post_c;
  compile(pre, h, pre_c);
  compile(kernel, h, kernel_c);
  compile(post, h, post_c);

  constexpr std::size_t kBlock = 64;
  const std::size_t n = s.dim();
  const double* w = target.diagonal_precision().data();
  double* q = s.q().data();
  double* p = s.p().data();

  auto run_range = [&](std::size_t begin, auto block_size) {
    constexpr std::size_t B = decltype(block_size)::value;
    run_block<B>(q + begin, p + begin, w + begin, pre_c);
    for (std::int64_t step = 0; step < n_steps; ++step) {
      run_block<B>(q + begin, p + begin, w + begin, kernel_c);
    }
    run_block<B>(q + begin, p + begin, w + begin, post_c);
  };
  std::size_t begin = 0;
  for (; begin + kBlock <= n; begin += kBlock) {
    run_range(begin, std::integral_constant<std::size_t, kBlock>{});
  }
  for (; begin < n; ++begin) run_range(begin, std::integral_constant<std::size_t, 1>{});

  // Same accounting as the generic executor.
  std::int64_t count = 0;
  if (fuse_gradients) {
    GradientTally tally;
    tally.add(pre);
    for (std::int64_t step = 0; step < n_steps; ++step) tally.add(kernel);
    tally.add(post);
    count = tally.count();
  } else {
    auto kicks = [](const std::vector<CompiledFlow>& c) {
      return static_cast<std::int64_t>(
          std::count_if(c.begin(), c.end(), [](const CompiledFlow& f) { return f.is_kick; }));
    };
    count = kicks(pre_c) + n_steps * kicks(kernel_c) + kicks(post_c);
  }
  target.gradient_count_ += count;
}

}  // namespace detail

namespace {

constexpr double kConsistencyTol = 1e-14;

void check_close(double value, double expected, const char* what) {
  if (!(std::abs(value - expected) <= kConsistencyTol)) {
    throw InvalidArgument(std::string(what) + " = " + std::to_string(value) +
                          ", expected " + std::to_string(expected));
  }
}

}  // namespace

ProcessedIntegrator::ProcessedIntegrator(FlowSchedule kernel, FlowSchedule pre,
                                         IntegratorParams params)
    : kernel_(std::move(kernel)),
      pre_(std::move(pre)),
      post_(adjoint_schedule(pre_)),
      params_(params) {
  if (kernel_.empty()) throw InvalidArgument("kernel schedule is empty");
  check_close(kernel_.drift_sum(), 1.0, "kernel drift weight sum");
  check_close(kernel_.kick_sum(), 1.0, "kernel kick weight sum");
  check_close(pre_.drift_sum(), 0.0, "preprocessor drift weight sum");
  check_close(pre_.kick_sum(), 0.0, "preprocessor kick weight sum");
}

ProcessedIntegrator ProcessedIntegrator::from_parameters(double b, double c, double d) {
  const double a = kernel_drift_weight(b);
  return ProcessedIntegrator(build_kernel(b), build_processor(c, d), {b, a, c, d});
}

ProcessedIntegrator ProcessedIntegrator::unprocessed(FlowSchedule kernel,
                                                     IntegratorParams params) {
  return ProcessedIntegrator(std::move(kernel), FlowSchedule{}, params);
}

std::int64_t ProcessedIntegrator::gradients_per_leg(std::int64_t n_steps) const {
  GradientTally tally;
  tally.add(pre_);
  for (std::int64_t i = 0; i < n_steps; ++i) tally.add(kernel_);
  tally.add(post_);
  return tally.count();
}

void GradientTally::add(const FlowSchedule& s) {
  for (const auto& f : s.flows()) {
    if (f.coefficient == 0.0) continue;
    if (f.kind == FlowKind::Drift) {
      cached_ = false;
    } else if (!cached_) {
      ++count_;
      cached_ = true;
    }
  }
}

PhaseState apply_flow(const PhaseState& s, const ElementaryFlow& f, double h,
                      TargetModel& target) {
  PhaseState out = s;
  detail::FlowExecutor exec(target, h, false);
  exec.apply(out, f);
  if (!out.finite()) throw NonFiniteState("apply_flow produced a non-finite state");
  return out;
}

LegResult integrate_leg(PhaseState s0, double h, std::int64_t n_steps,
                        const ProcessedIntegrator& integrator, TargetModel& target,
                        LegOptions options) {
  if (n_steps < 1) throw InvalidArgument("integrate_leg: N must be at least 1");
  if (!(h > 0.0) || !std::isfinite(h)) throw InvalidArgument("integrate_leg: h must be positive");
  if (s0.dim() != target.dim()) {
    throw DimensionMismatch("integrate_leg: state dimension does not match target");
  }
  const auto grads_before = target.gradient_evaluations();
  const auto hvps_before = target.hessian_vec_evaluations();

  if (options.blocked_diagonal &&
      detail::DiagonalLeg::applicable(target, integrator.pre(), integrator.kernel(),
                                      integrator.post())) {
    detail::DiagonalLeg::run(s0, target, h, n_steps, integrator.pre(), integrator.kernel(),
                             integrator.post(), options.fuse_gradients);
  } else {
    detail::FlowExecutor exec(target, h, options.fuse_gradients);
    exec.apply(s0, integrator.pre());
    for (std::int64_t i = 0; i < n_steps; ++i) exec.apply(s0, integrator.kernel());
    exec.apply(s0, integrator.post());
  }

  // NaN and Inf are absorbing under the flows, so one check at the end suffices.
  if (!s0.finite()) throw NonFiniteState("integration leg produced a non-finite state");
  return {std::move(s0), target.gradient_evaluations() - grads_before,
          target.hessian_vec_evaluations() - hvps_before};
}

}  // namespace symphmc
