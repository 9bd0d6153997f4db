#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "brauerbox/brauer/brauer.hpp"
#include "brauerbox/modrep/meataxe.hpp"
#include "brauerbox/permgrp/group.hpp"
#include "brauerbox/permgrp/search.hpp"

namespace brauerbox::cli {

/// Bumped whenever a report field changes meaning or disappears.
inline constexpr int kReportFormatVersion = 1;

// Group elements are always serialized in 1-based cycle notation.
nlohmann::json group_json(const permgrp::PermGroup& g);
nlohmann::json fingerprint_json(const permgrp::Fingerprint& f);
nlohmann::json constituents_json(const modrep::Constituents& c);
nlohmann::json series_json(const modrep::SeriesReport& s);
nlohmann::json fixed_points_json(const brauer::FixedPointReport& r);
nlohmann::json dims_json(const std::vector<modrep::MatRep>& reps);

} // namespace brauerbox::cli
