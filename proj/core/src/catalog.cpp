#include "symphmc/catalog.hpp"

#include <algorithm>

#include "symphmc/errors.hpp"
#include "symphmc/fourth_order.hpp"
#include "symphmc/harmonic.hpp"

namespace symphmc {

namespace {

std::string_view canonical(std::string_view name) {
  return name == "verlet" ? std::string_view("leapfrog") : name;
}

}  // namespace

std::vector<std::string> integrator_names() {
  std::vector<std::string> names{"leapfrog"};
  for (const auto& row : kParameterTable) names.emplace_back(row.name);
  names.emplace_back("rowlands");
  return names;
}

bool is_known_integrator(std::string_view name) {
  const auto names = integrator_names();
  return std::find(names.begin(), names.end(), canonical(name)) != names.end();
}

const TableRow& table_row(std::string_view name) {
  for (const auto& row : kParameterTable) {
    if (row.name == name) return row;
  }
  throw InvalidArgument("no parameter-table row named '" + std::string(name) + "'");
}

ProcessedIntegrator named_integrator(std::string_view name) {
  name = canonical(name);
  if (name == "leapfrog") return ProcessedIntegrator::unprocessed(velocity_verlet_kernel());
  if (name == "rowlands") {
    throw InvalidArgument("rowlands is not a symmetrically processed two-stage integrator");
  }
  const TableRow& row = table_row(name);
  if (!row.processed) {
    return ProcessedIntegrator::unprocessed(build_kernel(row.b),
                                            {row.b, kernel_drift_weight(row.b), 0.0, 0.0});
  }
  return ProcessedIntegrator::from_parameters(row.b, row.c, row.d);
}

LegFactory named_leg_factory(std::string_view name) {
  name = canonical(name);
  if (name == "rowlands") return rowlands_leg_factory(RowlandsScheme::standard());
  return processed_leg_factory(named_integrator(name));
}

double named_stability_length(std::string_view name) {
  name = canonical(name);
  if (name == "rowlands") return stability_length(RowlandsScheme::standard().kernel);
  return stability_length(named_integrator(name).kernel());
}

int gradients_per_step(std::string_view name) {
  name = canonical(name);
  if (name == "leapfrog" || name == "rowlands") return 1;
  table_row(name);
  return 3;
}

}  // namespace symphmc
