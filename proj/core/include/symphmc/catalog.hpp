#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "symphmc/hmc.hpp"
#include "symphmc/splitting.hpp"

namespace symphmc {

/// Tabulated parameters of the unprocessed baseline and the four processed
/// integrators, with their rho-norm bounds and kernel stability lengths.
struct TableRow {
  std::string_view name;
  double hbar;
  double b;
  double c;
  double d;
  double rho_bound;
  double stability_length;
  bool processed;
};

inline constexpr std::array<TableRow, 5> kParameterTable{{
    {"blcasa", 3.0, 0.381120, 0.0, 0.0, 7e-5, 4.662, false},
    {"proc-3.0", 3.0, 0.348674, -0.075640, 0.069720, 6e-8, 4.985, true},
    {"proc-3.5", 3.5, 0.346660, -0.079510, 0.070171, 5e-7, 5.010, true},
    {"proc-4.0", 4.0, 0.343684, -0.084690, 0.071880, 5e-6, 5.048, true},
    {"proc-4.5", 4.5, 0.340200, -0.093500, 0.072800, 5e-5, 5.095, true},
}};

/// leapfrog, blcasa, proc-3.0, proc-3.5, proc-4.0, proc-4.5, rowlands.
std::vector<std::string> integrator_names();

bool is_known_integrator(std::string_view name);

/// ProcessedIntegrator for every name except "rowlands" ("verlet" is accepted
/// as an alias of "leapfrog"). Throws InvalidArgument for unknown names.
ProcessedIntegrator named_integrator(std::string_view name);

const TableRow& table_row(std::string_view name);

/// Leg factory for any catalog name, including "rowlands".
LegFactory named_leg_factory(std::string_view name);

/// Linear stability length of the named integrator's kernel (unit frequency).
double named_stability_length(std::string_view name);

/// Kernel gradient evaluations per step after fusion (1 for leapfrog and
/// rowlands, 3 for the two-stage family).
int gradients_per_step(std::string_view name);

}  // namespace symphmc
