#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "brauerbox/blocks/blocks.hpp"
#include "brauerbox/modrep/rep.hpp"
#include "brauerbox/permgrp/group.hpp"

namespace brauerbox::cli {

/// BRAUERBOX_DATA if set, otherwise the data directory of the source tree.
std::string data_directory();

/// `name` itself if it names an existing file, otherwise data_dir/name.
std::string resolve_path(const std::string& name, const std::string& data_dir);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

/// All loaders throw InputError naming the file (and line, for parse errors).
permgrp::GroupPtr load_group(const std::string& path, std::uint64_t seed = 0);
/// Group file whose generators must lie in `parent`.
permgrp::GroupPtr load_subgroup(const permgrp::GroupPtr& parent, const std::string& path, std::uint64_t seed = 0);
modrep::MatRep load_rep(const std::string& path, const permgrp::GroupPtr& group);
blocks::GroupAlgebraElement load_idempotent(const std::string& path, const permgrp::GroupPtr& group);

std::string group_text(const permgrp::PermGroup& g);

/// Action on the k-subsets of the points, in lexicographic order.
permgrp::PermAction subset_action(const permgrp::GroupPtr& g, unsigned k);

/// Writes the generated data files (group, module and idempotent files)
/// into `dir` and returns their names. Deterministic for a fixed seed.
std::vector<std::string> bootstrap_data(const std::string& dir, std::uint64_t seed = 0);

} // namespace brauerbox::cli
