#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "symphmc/hmc.hpp"
#include "symphmc/tuner.hpp"

namespace symphmc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

/// Thrown for bad flags, bad config files and unknown integrator names.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parameters shared by the subcommands. Fields a command does not use are
/// ignored.
struct ExperimentConfig {
  std::vector<std::string> integrators{"proc-3.0"};
  std::size_t dim = 256;
  /// Explicit step sizes; when unset the h_grid (or the default grid) is used.
  std::optional<std::vector<double>> h;
  /// "lo:hi:n" (geometric) or "default".
  std::string h_grid = "default";
  double leg_time = 5.0;
  std::optional<std::int64_t> samples;
  std::uint64_t seed = 20220301;
  std::string out;
  bool full = false;
  double hbar = 3.0;
  FamilyParams init{0.35, 0.0, 0.0};
  int points = 1000;
  std::size_t threads = 0;  ///< 0: worker_count()
};

/// Geometric grid of `points` step sizes from 0.3 h_s/d to 0.98 h_s/d.
std::vector<double> default_h_grid(const std::string& integrator, std::size_t dim,
                                   int points = 12);

/// Parses "lo:hi:n" into n geometric points; "default" defers to default_h_grid.
std::vector<double> parse_h_grid(const std::string& spec, const std::string& integrator,
                                 std::size_t dim);

/// 5000 samples, except 1000 for d > 1024 unless `full`.
std::int64_t default_samples(std::size_t dim, bool full);

std::vector<double> resolve_h_list(const ExperimentConfig& cfg, const std::string& integrator);

// ---------------------------------------------------------------------------

struct Table2Line {
  std::string name;
  double hbar = 0.0;
  double rho_norm = 0.0;
  double rho_bound = 0.0;
  double stability_length = 0.0;
  double stability_expected = 0.0;
  double stability_tol = 0.0;
  bool rho_pass = true;
  bool stability_pass = true;
};

struct Table2Report {
  std::vector<Table2Line> lines;
  /// proc-3.0 evaluated with hbar = 4.5; informational only.
  double wrong_budget_rho = 0.0;
  bool all_pass() const;
};

Table2Report compute_table2();
int cmd_table2(std::ostream& out);

struct SweepResult {
  std::string integrator;
  std::size_t dim = 0;
  std::vector<EfficiencyRow> rows;
};

std::vector<SweepResult> run_sweep(const ExperimentConfig& cfg);

/// Header plus one row per sweep point, 17 significant digits.
void write_sweep_csv(std::ostream& os, const std::vector<SweepResult>& results);

int cmd_sweep(const ExperimentConfig& cfg, std::ostream& out);
int cmd_tune(const ExperimentConfig& cfg, std::ostream& out);
int cmd_stability(const ExperimentConfig& cfg, std::ostream& out);
int cmd_rho_scan(const ExperimentConfig& cfg, std::ostream& out);

struct RowlandsOrderReport {
  std::vector<double> processed_orders;
  std::vector<double> kernel_orders;
  std::vector<double> verlet_orders;
  std::vector<double> harmonic_orders;
  bool coefficients_positive = false;
  bool pass() const;
};

RowlandsOrderReport compute_rowlands_order(double h0 = 0.2, double T = 2.0, int levels = 4);
int cmd_rowlands_order(const ExperimentConfig& cfg, std::ostream& out);

// ---------------------------------------------------------------------------

/// Overwrites fields of `cfg` from a JSON object. Keys: integrator (string or
/// list), dim, h (list), h_grid, leg_time, samples, seed, out, full, hbar,
/// init ([b, c, d]), points, threads.
void apply_json_config(const std::string& path, ExperimentConfig& cfg);

std::vector<std::string> split_list(const std::string& s);
std::vector<double> parse_double_list(const std::string& s);

}  // namespace symphmc::cli
