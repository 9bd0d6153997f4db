#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "json.hpp"

namespace brauerbox::cli {

/// Scenario description. Read from a small TOML subset: `# comments`,
/// `[table]` headers, and `key = value` with integers, booleans, quoted
/// strings or single-line arrays of those.
struct Scenario {
  std::string name;
  std::uint64_t seed = 0;
  std::map<std::string, std::string> inputs; // file names, relative to the data directory
  nlohmann::json expect = nlohmann::json::object();
};

/// Flat key -> value map; keys inside `[t]` become `t.key`. Throws
/// InputError naming the source and line.
nlohmann::json parse_toml_subset(const std::string& text, const std::string& source = "<string>");
Scenario scenario_from_text(const std::string& text, const std::string& source = "<string>");
Scenario load_scenario(const std::string& path);

} // namespace brauerbox::cli
