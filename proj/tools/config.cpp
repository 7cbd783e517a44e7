#include <fstream>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "commands.hpp"

namespace symphmc::cli {

void apply_json_config(const std::string& path, ExperimentConfig& cfg) {
  std::ifstream in(path);
  if (!in) throw UsageError(fmt::format("cannot read config '{}'", path));
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(fmt::format("config '{}': {}", path, e.what()));
  }
  if (!j.is_object()) throw UsageError(fmt::format("config '{}' must hold a JSON object", path));

  try {
    for (const auto& [key, v] : j.items()) {
      if (key == "integrator") {
        cfg.integrators = v.is_array() ? v.get<std::vector<std::string>>()
                                       : split_list(v.get<std::string>());
      } else if (key == "dim") {
        cfg.dim = v.get<std::size_t>();
      } else if (key == "h") {
        cfg.h = v.get<std::vector<double>>();
      } else if (key == "h_grid") {
        cfg.h_grid = v.get<std::string>();
      } else if (key == "leg_time") {
        cfg.leg_time = v.get<double>();
      } else if (key == "samples") {
        cfg.samples = v.get<std::int64_t>();
      } else if (key == "seed") {
        cfg.seed = v.get<std::uint64_t>();
      } else if (key == "out") {
        cfg.out = v.get<std::string>();
      } else if (key == "full") {
        cfg.full = v.get<bool>();
      } else if (key == "hbar") {
        cfg.hbar = v.get<double>();
      } else if (key == "init") {
        const auto x = v.get<std::vector<double>>();
        if (x.size() != 3) throw UsageError("config 'init' needs three numbers [b, c, d]");
        cfg.init = {x[0], x[1], x[2]};
      } else if (key == "points") {
        cfg.points = v.get<int>();
      } else if (key == "threads") {
        cfg.threads = v.get<std::size_t>();
      } else {
        throw UsageError(fmt::format("config '{}': unknown key '{}'", path, key));
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(fmt::format("config '{}': {}", path, e.what()));
  }
}

}  // namespace symphmc::cli
