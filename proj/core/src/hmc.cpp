#include "symphmc/hmc.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "symphmc/errors.hpp"
#include "symphmc/parallel.hpp"
#include "symphmc/rng.hpp"

namespace symphmc {

LegFactory processed_leg_factory(ProcessedIntegrator integrator, LegOptions options) {
  return [integrator = std::move(integrator), options](double h, std::int64_t n_steps) {
    return LegPropagator([integrator, options, h, n_steps](PhaseState s, TargetModel& target) {
      return integrate_leg(std::move(s), h, n_steps, integrator, target, options);
    });
  };
}

std::int64_t steps_per_leg(double h, double leg_time) {
  if (!(h > 0.0) || !std::isfinite(h)) throw InvalidArgument("step size must be positive");
  if (!(leg_time > 0.0)) throw InvalidArgument("leg time must be positive");
  return std::max<std::int64_t>(1, std::llround(leg_time / h));
}

double ChainStats::grad_per_leg() const noexcept {
  return proposed == 0 ? 0.0 : static_cast<double>(grad_evals) / static_cast<double>(proposed);
}

double energy(const TargetModel& target, const PhaseState& s) {
  return kinetic_energy(target, s.p()) + target.potential(s.q());
}

HmcRun hmc_run(TargetModel& target, const HmcConfig& config) {
  const std::int64_t n_steps = config.steps();
  const auto leg = processed_leg_factory(config.integrator)(config.h, n_steps);
  return hmc_run(target, leg,
                 {config.n_samples, config.seed, config.store_samples, config.initial_q});
}

HmcRun hmc_run(TargetModel& target, const LegPropagator& leg, const ChainSpec& spec) {
  if (spec.n_samples < 0) throw InvalidArgument("hmc_run: negative sample count");
  const std::size_t d = target.dim();

  std::vector<double> q(d);
  if (spec.initial_q) {
    if (spec.initial_q->size() != d) throw DimensionMismatch("hmc_run: initial position");
    q = *spec.initial_q;
  } else {
    Rng init = make_stream(spec.seed, StreamPurpose::Initialization, 0);
    target.exact_sample(init, q);
  }

  HmcRun run;
  ChainStats& stats = run.stats;
  stats.seed = spec.seed;
  stats.energy_errors.reserve(static_cast<std::size_t>(spec.n_samples));
  if (spec.store_samples) run.samples.reserve(static_cast<std::size_t>(spec.n_samples) * d);

  PhaseState current(q, std::vector<double>(d));
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  for (std::int64_t m = 0; m < spec.n_samples; ++m) {
    Rng rng = make_stream(spec.seed, StreamPurpose::Iteration, static_cast<std::uint64_t>(m));
    target.draw_momentum(rng, current.p());
    const double h0 = energy(target, current);

    const auto grads_before = target.gradient_evaluations();
    const auto hvps_before = target.hessian_vec_evaluations();
    double delta_h = std::numeric_limits<double>::infinity();
    std::optional<PhaseState> proposal;
    try {
      LegResult result = leg(current, target);
      const double h1 = energy(target, result.state);
      if (std::isfinite(h1)) {
        delta_h = h1 - h0;
        proposal = std::move(result.state);
      }
    } catch (const NonFiniteState&) {
      // rejected below with Delta H = +inf
    }
    stats.grad_evals += target.gradient_evaluations() - grads_before;
    stats.hessian_vec_evals += target.hessian_vec_evaluations() - hvps_before;
    stats.energy_errors.push_back(delta_h);
    ++stats.proposed;

    const double u = uniform(rng);
    if (proposal && std::log(u) < -delta_h) {
      current = std::move(*proposal);
      ++stats.accepted;
    }
    if (spec.store_samples) {
      run.samples.insert(run.samples.end(), current.q().begin(), current.q().end());
    }
  }

  if (stats.proposed > 0) {
    stats.acceptance_rate =
        static_cast<double>(stats.accepted) / static_cast<double>(stats.proposed);
    const double per_leg = stats.grad_per_leg();
    stats.accept_per_grad = per_leg > 0.0 ? 100.0 * stats.acceptance_rate / per_leg : 0.0;
  }
  return run;
}

std::vector<EfficiencyRow> efficiency_curve(const TargetModel& target, const LegFactory& legs,
                                            const std::vector<double>& h_list,
                                            const EfficiencyConfig& config) {
  std::vector<EfficiencyRow> rows(h_list.size());
  parallel_for(
      h_list.size(),
      [&](std::size_t i) {
        const double h = h_list[i];
        const std::int64_t n_steps = steps_per_leg(h, config.leg_time);
        const std::uint64_t seed = config.seed ^ static_cast<std::uint64_t>(i);
        auto chain_target = target.clone();
        const HmcRun run = hmc_run(*chain_target, legs(h, n_steps),
                                   {config.n_samples, seed, false, std::nullopt});
        const ChainStats& s = run.stats;
        EfficiencyRow& row = rows[i];
        row.h = h;
        row.n_steps = n_steps;
        row.grad_per_leg = s.grad_per_leg();
        row.accepted = s.accepted;
        row.proposed = s.proposed;
        row.acceptance_pct = 100.0 * s.acceptance_rate;
        row.accept_per_grad = s.accept_per_grad;
        row.seed = seed;
        row.hessian_vec_evals = s.hessian_vec_evals;
        double sum = 0.0;
        for (double e : s.energy_errors) sum += e;
        row.mean_energy_error = s.energy_errors.empty()
                                    ? 0.0
                                    : sum / static_cast<double>(s.energy_errors.size());
      },
      config.threads);

  if (!rows.empty()) {
    auto best = std::max_element(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
      return a.accept_per_grad < b.accept_per_grad;
    });
    best->best = true;
  }
  return rows;
}

}  // namespace symphmc
