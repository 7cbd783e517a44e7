#include "commands.hpp"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstring>
#include <fstream>
#include <ostream>
#include <sstream>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "symphmc/catalog.hpp"
#include "symphmc/errors.hpp"
#include "symphmc/fourth_order.hpp"
#include "symphmc/harmonic.hpp"
#include "symphmc/parallel.hpp"
#include "symphmc/targets.hpp"

namespace symphmc::cli {
namespace {

void require_integrator(const std::string& name) {
  if (!is_known_integrator(name)) {
    std::string known;
    for (const auto& n : integrator_names()) known += (known.empty() ? "" : ", ") + n;
    throw UsageError(fmt::format("unknown integrator '{}' (known: {})", name, known));
  }
}

std::vector<double> geometric(double lo, double hi, int n) {
  std::vector<double> out;
  if (n <= 0) return out;
  if (n == 1) return {lo};
  const double ratio = std::log(hi / lo) / (n - 1);
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out.push_back(lo * std::exp(ratio * i));
  out.back() = hi;
  return out;
}

// Writes to cfg.out when set, otherwise to `fallback`.
template <typename Fn>
void with_output(const std::string& path, std::ostream& fallback, Fn&& write) {
  if (path.empty()) {
    write(fallback);
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error(
        fmt::format("cannot open '{}' for writing: {}", path, std::strerror(errno)));
  write(file);
  file.flush();
  if (!file) throw std::runtime_error(fmt::format("write to '{}' failed: {}", path, std::strerror(errno)));
}

std::string format_list(const std::vector<double>& v) {
  std::string s;
  for (double x : v) s += fmt::format("{}{:.3f}", s.empty() ? "" : " ", x);
  return s;
}

}  // namespace

std::vector<double> default_h_grid(const std::string& integrator, std::size_t dim, int points) {
  require_integrator(integrator);
  const double hs = named_stability_length(integrator) / static_cast<double>(dim);
  return geometric(0.3 * hs, 0.98 * hs, points);
}

std::vector<double> parse_h_grid(const std::string& spec, const std::string& integrator,
                                 std::size_t dim) {
  if (spec.empty() || spec == "default") return default_h_grid(integrator, dim);
  std::vector<std::string> fields;
  std::stringstream ss(spec);
  for (std::string f; std::getline(ss, f, ':');) fields.push_back(f);
  if (fields.size() != 3) throw UsageError(fmt::format("--h-grid expects lo:hi:n, got '{}'", spec));
  try {
    const double lo = std::stod(fields[0]);
    const double hi = std::stod(fields[1]);
    const int n = std::stoi(fields[2]);
    if (!(lo > 0.0) || !(hi >= lo) || n < 0)
      throw UsageError(fmt::format("--h-grid needs 0 < lo <= hi and n >= 0, got '{}'", spec));
    return geometric(lo, hi, n);
  } catch (const std::logic_error&) {
    throw UsageError(fmt::format("--h-grid expects numbers, got '{}'", spec));
  }
}

std::int64_t default_samples(std::size_t dim, bool full) {
  return (dim > 1024 && !full) ? 1000 : 5000;
}

std::vector<double> resolve_h_list(const ExperimentConfig& cfg, const std::string& integrator) {
  if (cfg.h) return *cfg.h;
  return parse_h_grid(cfg.h_grid, integrator, cfg.dim);
}

// ---------------------------------------------------------------------------

bool Table2Report::all_pass() const {
  return std::all_of(lines.begin(), lines.end(),
                     [](const Table2Line& l) { return l.rho_pass && l.stability_pass; });
}

Table2Report compute_table2() {
  Table2Report report;
  for (const auto& row : kParameterTable) {
    const auto integ = named_integrator(row.name);
    Table2Line line;
    line.name = std::string(row.name);
    line.hbar = row.hbar;
    line.rho_norm = rho_norm(integ, row.hbar);
    line.rho_bound = row.rho_bound;
    line.stability_length = stability_length(integ.kernel());
    line.stability_expected = row.stability_length;
    line.stability_tol = 5e-3;
    line.rho_pass = line.rho_norm <= row.rho_bound && line.rho_norm >= row.rho_bound / 10.0;
    line.stability_pass = std::abs(line.stability_length - row.stability_length) <= 5e-3;
    report.lines.push_back(line);
  }
  Table2Line verlet;
  verlet.name = "leapfrog";
  verlet.stability_length = stability_length(velocity_verlet_kernel());
  verlet.stability_expected = 2.0;
  verlet.stability_tol = 1e-6;
  verlet.stability_pass = std::abs(verlet.stability_length - 2.0) <= 1e-6;
  verlet.rho_norm = std::nan("");
  verlet.rho_bound = std::nan("");
  report.lines.push_back(verlet);

  report.wrong_budget_rho = rho_norm(named_integrator("proc-3.0"), 4.5);
  return report;
}

int cmd_table2(std::ostream& out) {
  const auto report = compute_table2();
  fmt::print(out, "{:<10} {:>5} {:>13} {:>9} {:>10} {:>9} {:>6}\n", "integrator", "hbar", "rho_norm",
             "printed", "h_s", "printed", "status");
  for (const auto& l : report.lines) {
    const bool ok = l.rho_pass && l.stability_pass;
    if (std::isnan(l.rho_bound)) {
      fmt::print(out, "{:<10} {:>5} {:>13} {:>9} {:>10.6f} {:>9.3f} {:>6}\n", l.name, "-", "-", "-",
                 l.stability_length, l.stability_expected, ok ? "PASS" : "FAIL");
    } else {
      fmt::print(out, "{:<10} {:>5.1f} {:>13.6e} {:>9.0e} {:>10.6f} {:>9.3f} {:>6}\n", l.name,
                 l.hbar, l.rho_norm, l.rho_bound, l.stability_length, l.stability_expected,
                 ok ? "PASS" : "FAIL");
      if (!l.rho_pass)
        fmt::print(out, "  {}: rho_norm {:.6e} outside [{:.0e}, {:.0e}]\n", l.name, l.rho_norm,
                   l.rho_bound / 10.0, l.rho_bound);
    }
  }
  fmt::print(out, "diagnostic: proc-3.0 evaluated with hbar 4.5 gives rho_norm {:.6e}\n",
             report.wrong_budget_rho);
  return report.all_pass() ? kExitOk : kExitFail;
}

// ---------------------------------------------------------------------------

std::vector<SweepResult> run_sweep(const ExperimentConfig& cfg) {
  for (const auto& name : cfg.integrators) require_integrator(name);
  if (cfg.dim == 0) throw UsageError("--dim must be positive");
  if (!(cfg.leg_time > 0.0)) throw UsageError("--leg-time must be positive");

  const auto target = gaussian_model(cfg.dim);
  std::vector<SweepResult> results;
  for (const auto& name : cfg.integrators) {
    const auto h_list = resolve_h_list(cfg, name);
    for (double h : h_list)
      if (!(h > 0.0)) throw UsageError(fmt::format("step sizes must be positive, got {}", h));
    EfficiencyConfig ec;
    ec.leg_time = cfg.leg_time;
    ec.n_samples = cfg.samples.value_or(default_samples(cfg.dim, cfg.full));
    ec.seed = cfg.seed;
    ec.threads = cfg.threads == 0 ? worker_count() : cfg.threads;
    results.push_back({name, cfg.dim, efficiency_curve(*target, named_leg_factory(name), h_list, ec)});
  }
  return results;
}

void write_sweep_csv(std::ostream& os, const std::vector<SweepResult>& results) {
  os << "integrator,d,h,N,grad_per_leg,accepted,proposed,acceptance_pct,accept_per_grad,seed\n";
  for (const auto& r : results)
    for (const auto& row : r.rows)
      fmt::print(os, "{},{},{:.17g},{},{:.17g},{},{},{:.17g},{:.17g},{}\n", r.integrator, r.dim,
                 row.h, row.n_steps, row.grad_per_leg, row.accepted, row.proposed,
                 row.acceptance_pct, row.accept_per_grad, row.seed);
}

int cmd_sweep(const ExperimentConfig& cfg, std::ostream& out) {
  const auto results = run_sweep(cfg);
  with_output(cfg.out, out, [&](std::ostream& os) { write_sweep_csv(os, results); });
  for (const auto& r : results) {
    const auto best = std::find_if(r.rows.begin(), r.rows.end(),
                                   [](const EfficiencyRow& row) { return row.best; });
    if (best == r.rows.end()) continue;
    fmt::print(out, "best {} d={} h={:.6g} N={} acceptance={:.2f}% accept_per_grad={:.6g}", r.integrator,
               r.dim, best->h, best->n_steps, best->acceptance_pct, best->accept_per_grad);
    if (best->hessian_vec_evals > 0) fmt::print(out, " hessian_vec={}", best->hessian_vec_evals);
    fmt::print(out, "\n");
  }
  return kExitOk;
}

int cmd_tune(const ExperimentConfig& cfg, std::ostream& out) {
  try {
    const auto r = tune(cfg.hbar, cfg.init);
    fmt::print(out, "hbar={} init=({}, {}, {})\n", cfg.hbar, cfg.init.b, cfg.init.c, cfg.init.d);
    fmt::print(out, "b={:.9f} c={:.9f} d={:.9f}\n", r.b, r.c, r.d);
    fmt::print(out, "rho_norm={:.6e} endpoint={:.6e} interior_max={:.6e} evaluations={}\n",
               r.rho_norm, r.rho_endpoint, r.rho_interior_max, r.evaluations);
    fmt::print(out, "stability_length={:.6f}\n",
               stability_length(ProcessedIntegrator::from_parameters(r.b, r.c, r.d).kernel()));
    if (!cfg.out.empty()) {
      with_output(cfg.out, out, [&](std::ostream& os) {
        os << "iteration,b,c,d,objective\n";
        for (const auto& t : r.trace)
          fmt::print(os, "{},{:.17g},{:.17g},{:.17g},{:.17g}\n", t.iteration, t.params.b,
                     t.params.c, t.params.d, t.objective);
      });
    }
    return kExitOk;
  } catch (const NoDescent& e) {
    fmt::print(out, "no descent: {}\n", e.what());
    return kExitFail;
  }
}

int cmd_stability(const ExperimentConfig& cfg, std::ostream& out) {
  std::vector<std::string> names = cfg.integrators;
  if (names.empty()) names = integrator_names();
  for (const auto& name : names) {
    require_integrator(name);
    fmt::print(out, "{} h_s={:.7f}\n", name, named_stability_length(name));
  }
  return kExitOk;
}

int cmd_rho_scan(const ExperimentConfig& cfg, std::ostream& out) {
  if (cfg.points < 1) throw UsageError("--points must be at least 1");
  if (!(cfg.hbar > 0.0)) throw UsageError("--hbar must be positive");
  std::vector<std::pair<std::string, ProcessedIntegrator>> integs;
  for (const auto& name : cfg.integrators) {
    require_integrator(name);
    if (name == "rowlands") throw UsageError("rho-scan is defined for the two-stage family and leapfrog");
    integs.emplace_back(name, named_integrator(name));
  }
  with_output(cfg.out, out, [&](std::ostream& os) {
    os << "integrator,h,rho\n";
    for (const auto& [name, integ] : integs)
      for (int i = 1; i <= cfg.points; ++i) {
        const double h = cfg.hbar * i / cfg.points;
        fmt::print(os, "{},{:.17g},{:.17g}\n", name, h, rho(integ, h));
      }
  });
  return kExitOk;
}

// ---------------------------------------------------------------------------

bool RowlandsOrderReport::pass() const {
  const auto within = [](const std::vector<double>& v, double lo, double hi) {
    return !v.empty() && std::all_of(v.begin(), v.end(), [&](double x) { return x >= lo && x <= hi; });
  };
  return coefficients_positive && within(processed_orders, 3.5, 4.5) &&
         within(kernel_orders, 1.7, 2.3);
}

RowlandsOrderReport compute_rowlands_order(double h0, double T, int levels) {
  const auto scheme = RowlandsScheme::standard();
  const PhaseState s0({1.0}, {0.5});
  RowlandsOrderReport r;
  auto anh = anharmonic_model(1);
  r.processed_orders =
      order_estimate(*anh, scheme, OrderScheme::ProcessedRowlands, s0, T, h0, levels).orders;
  r.kernel_orders = order_estimate(*anh, scheme, OrderScheme::RowlandsKernel, s0, T, h0, levels).orders;
  r.verlet_orders = order_estimate(*anh, scheme, OrderScheme::VelocityVerlet, s0, T, h0, levels).orders;
  auto osc = oscillator_1d();
  r.harmonic_orders =
      order_estimate(*osc, scheme, OrderScheme::ProcessedRowlands, s0, T, h0, levels).orders;
  const auto coeffs = scheme.coefficients();
  r.coefficients_positive =
      std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& q) { return q.positive(); });
  return r;
}

int cmd_rowlands_order(const ExperimentConfig& cfg, std::ostream& out) {
  const double h0 = (cfg.h && !cfg.h->empty()) ? cfg.h->front() : 0.2;
  const auto r = compute_rowlands_order(h0);
  fmt::print(out, "processed rowlands (anharmonic): {}\n", format_list(r.processed_orders));
  fmt::print(out, "rowlands kernel (anharmonic):    {}\n", format_list(r.kernel_orders));
  fmt::print(out, "velocity verlet (anharmonic):    {}\n", format_list(r.verlet_orders));
  fmt::print(out, "processed rowlands (oscillator): {}\n", format_list(r.harmonic_orders));
  fmt::print(out, "coefficients positive: {}\n", r.coefficients_positive ? "yes" : "no");
  fmt::print(out, "{}\n", r.pass() ? "PASS" : "FAIL");
  return r.pass() ? kExitOk : kExitFail;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');) {
    const auto b = item.find_first_not_of(" \t");
    if (b == std::string::npos) continue;
    const auto e = item.find_last_not_of(" \t");
    out.push_back(item.substr(b, e - b + 1));
  }
  return out;
}

std::vector<double> parse_double_list(const std::string& s) {
  std::vector<double> out;
  for (const auto& item : split_list(s)) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::logic_error&) {
      used = 0;
    }
    if (used != item.size()) throw UsageError(fmt::format("'{}' is not a number", item));
    out.push_back(v);
  }
  return out;
}

}  // namespace symphmc::cli
