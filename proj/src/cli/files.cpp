#include "brauerbox/cli/files.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "brauerbox/cli/local_data.hpp"
#include "brauerbox/error.hpp"
#include "brauerbox/modrep/rep_io.hpp"
#include "brauerbox/permgrp/construct.hpp"
#include "brauerbox/permgrp/search.hpp"

namespace brauerbox::cli {

namespace fs = std::filesystem;
using permgrp::GroupPtr;
using permgrp::Perm;

std::string data_directory() {
  if (const char* env = std::getenv("BRAUERBOX_DATA"); env && *env)
    return env;
  return std::string(BRAUERBOX_SOURCE_DIR) + "/data";
}

std::string resolve_path(const std::string& name, const std::string& data_dir) {
  if (fs::exists(name) || fs::path(name).is_absolute())
    return name;
  return (fs::path(data_dir) / name).string();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw InputError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw InputError("cannot write " + path);
  out << contents;
  if (!out)
    throw InputError("write failed for " + path);
}

GroupPtr load_group(const std::string& path, std::uint64_t seed) {
  auto spec = permgrp::group_from_text(read_file(path), path);
  return permgrp::PermGroup::make(spec.degree, std::move(spec.generators), seed);
}

GroupPtr load_subgroup(const GroupPtr& parent, const std::string& path, std::uint64_t seed) {
  auto spec = permgrp::group_from_text(read_file(path), path);
  if (spec.degree != parent->degree())
    throw InputError(path + ": degree " + std::to_string(spec.degree) + " differs from the parent's degree " +
                     std::to_string(parent->degree()));
  for (const auto& g : spec.generators)
    if (!parent->contains(g))
      throw InputError(path + ": generator " + g.to_string() + " is not in the parent group");
  return permgrp::PermGroup::make(spec.degree, std::move(spec.generators), seed);
}

modrep::MatRep load_rep(const std::string& path, const GroupPtr& group) {
  return modrep::rep_from_text(read_file(path), group, path);
}

blocks::GroupAlgebraElement load_idempotent(const std::string& path, const GroupPtr& group) {
  return blocks::idempotent_from_text(read_file(path), group, path);
}

std::string group_text(const permgrp::PermGroup& g) {
  std::ostringstream os;
  permgrp::write_group(os, g.degree(), g.generators());
  return os.str();
}

permgrp::PermAction subset_action(const GroupPtr& g, unsigned k) {
  const auto n = g->degree();
  if (k == 0 || k > n)
    throw std::invalid_argument("subset size out of range");
  std::vector<std::vector<permgrp::Point>> subsets;
  std::vector<permgrp::Point> cur(k);
  for (unsigned i = 0; i < k; ++i)
    cur[i] = i;
  while (true) {
    subsets.push_back(cur);
    int i = static_cast<int>(k) - 1;
    while (i >= 0 && cur[i] == n - k + i)
      --i;
    if (i < 0)
      break;
    ++cur[i];
    for (unsigned j = i + 1; j < k; ++j)
      cur[j] = cur[j - 1] + 1;
  }
  std::map<std::vector<permgrp::Point>, permgrp::Point> index;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    index[subsets[i]] = static_cast<permgrp::Point>(i);
    std::string label = "{";
    for (std::size_t j = 0; j < k; ++j)
      label += (j ? "," : "") + std::to_string(subsets[i][j] + 1);
    labels.push_back(label + "}");
  }
  std::vector<Perm> images;
  for (const auto& gen : g->generators()) {
    std::vector<permgrp::Point> img(subsets.size());
    for (std::size_t i = 0; i < subsets.size(); ++i) {
      auto s = subsets[i];
      for (auto& x : s)
        x = gen[x];
      std::sort(s.begin(), s.end());
      img[i] = index.at(s);
    }
    images.emplace_back(std::move(img));
  }
  return permgrp::PermAction(g, std::move(images), std::move(labels));
}

std::vector<std::string> bootstrap_data(const std::string& dir, std::uint64_t seed) {
  fs::create_directories(dir);
  std::vector<std::string> written;
  auto put = [&](const std::string& name, const std::string& text) {
    write_file((fs::path(dir) / name).string(), text);
    written.push_back(name);
  };
  auto make = [&](std::size_t degree, const std::vector<std::string>& gens) {
    std::vector<Perm> ps;
    for (const auto& s : gens)
      ps.push_back(Perm::parse(s, degree));
    return permgrp::PermGroup::make(degree, std::move(ps), seed);
  };

  // alternating group of degree 8 and its local subgroups at p = 3
  auto a8 = make(8, {"(1,2,3)", "(2,3,4,5,6,7,8)"});
  auto a7 = make(8, {"(1,2,3)", "(1,2,3,4,5,6,7)"});
  auto p = make(8, {"(1,2,3)", "(4,5,6)"});
  auto hprime = permgrp::normalizer(*a8, *p);
  put("a8.grp", group_text(*a8));
  put("a7.grp", group_text(*a7));
  put("p.grp", group_text(*p));
  put("hprime.grp", group_text(*hprime));
  put("omega8.rep", modrep::to_text(modrep::perm_rep(permgrp::natural_action(a8), 3)));
  // F3 on the cosets of P:C4 in H'
  Perm four;
  for (const auto& x : hprime->elements())
    if (x.order() == 4) {
      four = x;
      break;
    }
  auto pc4 = permgrp::subgroup(*hprime, {p->generators()[0], p->generators()[1], four}, seed);
  put("d8modc4.rep", modrep::to_text(modrep::perm_rep(permgrp::coset_action(hprime, pc4), 3)));

  auto local = build_local_groups(seed);
  put("n.grp", group_text(*local.n));
  put("ntilde.grp", group_text(*local.ntilde));
  put("n-p.grp", group_text(*local.p));
  put("n-e.grp", group_text(*local.e));
  put("n-h.grp", group_text(*local.h));
  put("n-hprime.grp", group_text(*local.hprime));
  const auto lambdas = block_characters(local);
  if (lambdas.size() != 2)
    throw std::logic_error("expected two D8-fixed characters of E outside the N-fixed ones");
  for (std::size_t i = 0; i < 2; ++i) {
    std::ostringstream os;
    blocks::write_idempotent(os, blocks::idempotent_from_character(lambdas[i]));
    put("e" + std::to_string(i + 1) + ".idem", os.str());
  }
  return written;
}

} // namespace brauerbox::cli
