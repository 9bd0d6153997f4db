#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "brauerbox/cli/scenario_config.hpp"

namespace brauerbox::cli {

struct ScenarioCheck {
  std::string name;
  nlohmann::json expected;
  nlohmann::json observed;
  bool pass = false;
};

struct ScenarioResult {
  std::string name;
  std::uint64_t seed = 0;
  bool pass = false;
  std::vector<ScenarioCheck> checks; // sorted by name
  nlohmann::json details;
  double seconds = 0;

  nlohmann::json to_json(bool with_timings) const;
};

/// Names accepted by run_scenario.
const std::vector<std::string>& scenario_names();

/// Runs the computation named by s.name and compares every observed
/// quantity against the built-in expectations, overridden or extended by
/// s.expect. An expectation key the scenario does not observe is an
/// InputError, as is a missing data file.
ScenarioResult run_scenario(const Scenario& s, const std::string& data_dir);

/// data_dir/scenarios/<name>.toml, optionally with a different seed.
Scenario named_scenario(const std::string& name, const std::string& data_dir,
                        std::optional<std::uint64_t> seed = std::nullopt);

} // namespace brauerbox::cli
