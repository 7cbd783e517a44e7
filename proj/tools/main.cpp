#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "symphmc/errors.hpp"

namespace cli = symphmc::cli;

namespace {

struct Flags {
  std::string integrator;
  std::size_t dim = 0;
  std::string h;
  std::string h_grid;
  double leg_time = 0.0;
  std::int64_t samples = 0;
  std::uint64_t seed = 0;
  std::string config;
  std::string out;
  bool full = false;
  double hbar = 0.0;
  std::string init;
  int points = 0;
};

void add_common(CLI::App* sub, Flags& f) {
  sub->add_option("--config", f.config, "JSON config file; flags override its values");
  sub->add_option("--out", f.out, "output path (stdout when omitted)");
}

void add_sampling(CLI::App* sub, Flags& f) {
  sub->add_option("--integrator", f.integrator, "integrator name or comma-separated list");
  sub->add_option("--dim", f.dim, "dimension of the Gaussian target");
  sub->add_option("--h", f.h, "comma-separated step sizes");
  sub->add_option("--h-grid", f.h_grid, "lo:hi:n geometric grid, or 'default'");
  sub->add_option("--leg-time", f.leg_time, "length of each integration leg (default 5)");
  sub->add_option("--samples", f.samples, "chain length per step size");
  sub->add_option("--seed", f.seed, "master seed");
  sub->add_flag("--full", f.full, "5000-sample chains for d > 1024");
}

// Builds the config from the JSON file first, then the flags that were given.
cli::ExperimentConfig resolve(const CLI::App* sub, const Flags& f) {
  const auto given = [&](const char* name) {
    try {
      return sub->count(name) > 0;
    } catch (const CLI::OptionNotFound&) {
      return false;
    }
  };
  cli::ExperimentConfig cfg;
  if (given("--config")) cli::apply_json_config(f.config, cfg);
  if (given("--integrator")) cfg.integrators = cli::split_list(f.integrator);
  if (given("--dim")) cfg.dim = f.dim;
  if (given("--h")) cfg.h = cli::parse_double_list(f.h);
  if (given("--h-grid")) {
    cfg.h_grid = f.h_grid;
    if (!given("--h")) cfg.h.reset();
  }
  if (given("--leg-time")) cfg.leg_time = f.leg_time;
  if (given("--samples")) cfg.samples = f.samples;
  if (given("--seed")) cfg.seed = f.seed;
  if (given("--out")) cfg.out = f.out;
  if (given("--full")) cfg.full = f.full;
  if (given("--hbar")) cfg.hbar = f.hbar;
  if (given("--points")) cfg.points = f.points;
  if (given("--init")) {
    const auto x = cli::parse_double_list(f.init);
    if (x.size() != 3) throw cli::UsageError("--init needs three numbers b,c,d");
    cfg.init = {x[0], x[1], x[2]};
  }
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Processed splitting integrators for Hamiltonian Monte Carlo"};
  app.set_help_flag("--help", "print this help message and exit");
  app.require_subcommand(1);
  Flags f;

  auto* table2 = app.add_subcommand("table2", "recompute rho norms and stability lengths of the parameter table");

  auto* sweep = app.add_subcommand("sweep", "acceptance-per-gradient sweep on the Gaussian target (CSV)");
  add_sampling(sweep, f);
  add_common(sweep, f);

  auto* tune = app.add_subcommand("tune", "minimize the rho norm of the processed family");
  tune->add_option("--hbar", f.hbar, "step-size budget (default 3)");
  tune->add_option("--init", f.init, "starting point b,c,d (default 0.35,0,0)");
  add_common(tune, f);

  auto* stab = app.add_subcommand("stability", "linear stability length of each kernel");
  stab->add_option("--integrator", f.integrator, "integrator name or comma-separated list");
  stab->add_option("--config", f.config, "JSON config file");

  auto* scan = app.add_subcommand("rho-scan", "rho_h on a uniform grid of (0, hbar] (CSV)");
  scan->add_option("--integrator", f.integrator, "integrator name or comma-separated list");
  scan->add_option("--hbar", f.hbar, "upper end of the scan (default 3)");
  scan->add_option("--points", f.points, "grid points (default 1000)");
  add_common(scan, f);

  auto* order = app.add_subcommand("rowlands-order", "empirical convergence orders of the Rowlands scheme");
  order->add_option("--h", f.h, "coarsest step size (default 0.2)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? cli::kExitOk : cli::kExitUsage;
  }

  try {
    if (table2->parsed()) return cli::cmd_table2(std::cout);
    if (sweep->parsed()) return cli::cmd_sweep(resolve(sweep, f), std::cout);
    if (tune->parsed()) return cli::cmd_tune(resolve(tune, f), std::cout);
    if (stab->parsed()) {
      auto cfg = resolve(stab, f);
      if (!stab->count("--integrator") && !stab->count("--config")) cfg.integrators.clear();
      return cli::cmd_stability(cfg, std::cout);
    }
    if (scan->parsed()) return cli::cmd_rho_scan(resolve(scan, f), std::cout);
    if (order->parsed()) return cli::cmd_rowlands_order(resolve(order, f), std::cout);
  } catch (const cli::UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kExitUsage;
  } catch (const symphmc::InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kExitFail;
  }
  return cli::kExitUsage;
}
