#include "brauerbox/cli/scenarios.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <functional>
#include <map>

#include "brauerbox/blocks/blocks.hpp"
#include "brauerbox/brauer/brauer.hpp"
#include "brauerbox/cli/files.hpp"
#include "brauerbox/cli/local_data.hpp"
#include "brauerbox/cli/report.hpp"
#include "brauerbox/error.hpp"
#include "brauerbox/modrep/meataxe.hpp"
#include "brauerbox/modrep/module.hpp"
#include "brauerbox/modrep/projective.hpp"
#include "brauerbox/permgrp/action.hpp"
#include "brauerbox/permgrp/search.hpp"

namespace brauerbox::cli {

using nlohmann::json;
using modrep::MatRep;
using permgrp::GroupPtr;

namespace {

const char* kLabelNote =
    "1a is trivial and 1b has an element of order 4 in its kernel; 1c and 1d are ordered "
    "lexicographically by their values on the stored generators of H', so a twist by an outer "
    "automorphism of H' swaps them";

struct Context {
  const Scenario& scenario;
  std::string data_dir;

  std::string input(const std::string& key, const std::string& fallback) const {
    auto it = scenario.inputs.find(key);
    const auto name = it == scenario.inputs.end() ? fallback : it->second;
    const auto path = resolve_path(name, data_dir);
    if (!std::filesystem::exists(path))
      throw InputError("scenario " + scenario.name + " is data-gated: missing data file " + path +
                       " (run `brauerbox bootstrap` to generate it)");
    return path;
  }
};

struct Observation {
  json observed = json::object();
  json expected = json::object();
  json details = json::object();
};

std::string labels_of(const std::vector<MatRep>& summands,
                      const std::vector<std::pair<std::string, modrep::LinearCharacter>>& labels) {
  std::vector<std::string> names;
  for (const auto& s : summands) {
    auto l = s.dim() == 1 ? blocks::label_of(s, labels) : std::string();
    names.push_back(l.empty() ? "?" + std::to_string(s.dim()) : l);
  }
  std::sort(names.begin(), names.end());
  std::string out;
  for (const auto& n : names)
    out += (out.empty() ? "" : "+") + n;
  return out;
}

json label_table(const std::vector<std::pair<std::string, modrep::LinearCharacter>>& labels) {
  json out = json::object();
  for (const auto& [name, lambda] : labels)
    out[name] = lambda.values;
  return out;
}

MatRep sum_of(const std::vector<MatRep>& reps, const GroupPtr& g, std::uint32_t p) {
  if (reps.empty())
    return MatRep(g, p, 0, std::vector<ffla::FpMatrix>(g->generators().size(), ffla::FpMatrix(p, 0, 0)));
  MatRep out = reps[0];
  for (std::size_t i = 1; i < reps.size(); ++i)
    out = modrep::direct_sum(out, reps[i]);
  return out;
}

Observation a8_green(const Context& ctx) {
  const auto seed = ctx.scenario.seed;
  Observation o;
  auto a8 = load_group(ctx.input("group", "a8.grp"), seed);
  auto p = permgrp::sylow(a8, 3, seed);
  auto h = permgrp::normalizer(*a8, *p);
  const auto omega = modrep::perm_rep(permgrp::natural_action(a8), 3);
  const auto labels = blocks::label_linear_characters(h, 3);

  const auto bq = brauer::brauer_quotient(omega, p, h);
  const auto quotient_chop = modrep::chop(bq.quotient_rep, seed);
  std::vector<MatRep> factors;
  for (const auto& f : quotient_chop.factors)
    for (unsigned m = 0; m < f.multiplicity; ++m)
      factors.push_back(f.simple);
  json quotient_labels = json::array();
  {
    std::vector<std::string> ls;
    for (const auto& f : factors)
      ls.push_back(f.dim() == 1 ? blocks::label_of(f, labels) : "?" + std::to_string(f.dim()));
    std::sort(ls.begin(), ls.end());
    for (const auto& l : ls)
      quotient_labels.push_back(l);
  }
  bool distinct = quotient_chop.factors.size() == factors.size();

  // three routes to V(P)
  const auto fast = brauer::green_trivial_source(omega, p, h);
  const auto strip = sum_of(brauer::split_by_vertex(omega, p, h, seed).kept, h, 3);
  const bool agree = fast.dim() == bq.quotient_rep.dim() && strip.dim() == fast.dim() &&
                     modrep::is_isomorphic(fast, bq.quotient_rep, seed) &&
                     modrep::is_isomorphic(fast, strip, seed) &&
                     modrep::is_isomorphic(bq.quotient_rep, strip, seed);

  // Green correspondents of the two constituents of the natural module
  const auto omega_chop = modrep::chop(omega, seed);
  json green = json::object();
  for (const auto& f : omega_chop.factors) {
    const auto gr = brauer::green_correspondent(f.simple, p, h, seed);
    const auto key = "green_of_" + std::to_string(f.simple.dim());
    green[key] = gr.correspondent.dim() == 1 ? blocks::label_of(gr.correspondent, labels)
                                             : "?" + std::to_string(gr.correspondent.dim());
    o.details[key] = {{"correspondent_dim", gr.correspondent.dim()}, {"discarded_dims", dims_json(gr.discarded)}};
  }

  o.observed = {{"p_order", p->order()},
                {"hprime_order", h->order()},
                {"quotient_dim", bq.quotient_rep.dim()},
                {"quotient_labels", quotient_labels},
                {"quotient_constituents_distinct", distinct},
                {"methods_agree", agree},
                {"natural_constituent_dims", omega_chop.dims_with_multiplicity()}};
  for (const auto& [k, v] : green.items())
    o.observed[k] = v;
  o.expected = {{"p_order", 9},
                {"hprime_order", 72},
                {"quotient_dim", 2},
                {"quotient_labels", {"1a", "1b"}},
                {"quotient_constituents_distinct", true},
                {"methods_agree", true},
                {"green_of_1", "1a"},
                {"green_of_7", "1b"}};
  o.details["p"] = group_json(*p);
  o.details["hprime"] = group_json(*h);
  o.details["fixed_dim"] = bq.fixed_basis.rows();
  o.details["traced_dim"] = ffla::rank(bq.traced_subspace);
  o.details["quotient_constituents"] = constituents_json(quotient_chop);
  o.details["fast_path"] = brauer::trivial_source_fast_path(omega, h);
  o.details["labels"] = label_table(labels);
  o.details["label_note"] = kLabelNote;
  return o;
}

Observation a8_f13(const Context& ctx) {
  const auto seed = ctx.scenario.seed;
  Observation o;
  auto a8 = load_group(ctx.input("group", "a8.grp"), seed);
  const auto omega = modrep::perm_rep(subset_action(a8, 2), 3);
  const auto c = modrep::chop(omega, seed);
  std::size_t thirteen = 0;
  const MatRep* s13 = nullptr;
  for (const auto& f : c.factors)
    if (f.simple.dim() == 13) {
      thirteen += f.multiplicity;
      s13 = &f.simple;
    }
  o.observed["module_dim"] = omega.dim();
  o.observed["thirteen_dim_constituents"] = thirteen;
  o.details["constituents"] = constituents_json(c);
  o.expected = {{"module_dim", 28},
                {"thirteen_dim_constituents", 1},
                {"correspondent_dim", 4},
                {"radical_layers", {1, 2, 1}},
                {"uniserial", true},
                {"head_is_socle", true},
                {"discarded_projective", true},
                {"correspondent_vertex_order", 9}};
  if (!s13)
    return o;

  auto p = permgrp::sylow(a8, 3, seed);
  auto h = permgrp::normalizer(*a8, *p);
  const auto labels = blocks::label_linear_characters(h, 3);
  const auto gr = brauer::green_correspondent(*s13, p, h, seed);
  const auto& f = gr.correspondent;
  const auto rad = modrep::radical_series(f, seed);
  const auto soc = modrep::socle_series(f, seed);
  bool uniserial = true;
  for (const auto& layer : rad.layers)
    uniserial = uniserial && layer.factors.size() == 1 && layer.factors[0].multiplicity == 1;
  const auto& head = rad.layers.front().factors.front().simple;
  const auto& socle = soc.layers.front().factors.front().simple;
  const bool head_socle = soc.layers.front().factors.size() == 1 && modrep::simple_isomorphic(head, socle);
  bool projective = true;
  for (const auto& d : gr.discarded)
    projective = projective && modrep::is_projective(d, seed);

  o.observed["correspondent_dim"] = f.dim();
  o.observed["radical_layers"] = rad.layer_dims();
  o.observed["uniserial"] = uniserial;
  o.observed["head_is_socle"] = head_socle;
  o.observed["discarded_projective"] = projective;
  o.observed["correspondent_vertex_order"] = modrep::vertex(f, seed)->order();
  o.details["radical_series"] = series_json(rad);
  o.details["socle_series"] = series_json(soc);
  o.details["discarded_dims"] = dims_json(gr.discarded);
  o.details["head_label"] = head.dim() == 1 ? blocks::label_of(head, labels) : "";
  o.details["labels"] = label_table(labels);
  o.details["label_note"] = kLabelNote;
  return o;
}

Observation j4_local(const Context& ctx) {
  const auto seed = ctx.scenario.seed;
  Observation o;
  auto n = load_group(ctx.input("n", "n.grp"), seed);
  auto ntilde = load_subgroup(n, ctx.input("ntilde", "ntilde.grp"), seed);
  auto e = load_subgroup(n, ctx.input("e", "n-e.grp"), seed);
  auto h = load_subgroup(n, ctx.input("h", "n-h.grp"), seed);
  auto hprime = load_subgroup(n, ctx.input("hprime", "n-hprime.grp"), seed);
  auto e1 = load_idempotent(ctx.input("e1", "e1.idem"), e);
  auto e2 = load_idempotent(ctx.input("e2", "e2.idem"), e);

  const auto fp = permgrp::fingerprint(*ntilde);
  const auto ref = permgrp::fingerprint(*reference_ntilde(seed));

  // the idempotents must belong to the D8-fixed characters outside the N-fixed pair
  std::vector<blocks::GroupAlgebraElement> expected_idems;
  {
    const auto global = invariant_characters(e, n);
    for (const auto& lambda : invariant_characters(e, hprime)) {
      bool fixed = false;
      for (const auto& mu : global)
        fixed = fixed || mu.values == lambda.values;
      if (!fixed)
        expected_idems.push_back(blocks::idempotent_from_character(lambda));
    }
  }
  const bool idems_match = expected_idems.size() == 2 &&
                           ((expected_idems[0] == e1 && expected_idems[1] == e2) ||
                            (expected_idems[0] == e2 && expected_idems[1] == e1));
  const bool orthogonal = e1 * e1 == e1 && e2 * e2 == e2 && (e1 * e2).coeffs.empty();

  const auto domain = permgrp::coset_action(n, ntilde);
  const auto module = modrep::perm_rep(domain, 3);
  const auto c = modrep::chop(module, seed);
  std::vector<unsigned> six_mult;
  std::vector<const MatRep*> sixes;
  for (const auto& f : c.factors)
    if (f.simple.dim() == 6) {
      six_mult.push_back(f.multiplicity);
      sixes.push_back(&f.simple);
    }

  const auto labels = blocks::label_linear_characters(hprime, 3);
  const auto idem = e1 + e2;
  std::vector<std::string> projections;
  json projection_details = json::array();
  for (std::size_t i = 0; i < sixes.size(); ++i) {
    const auto pr = blocks::project(modrep::restrict(*sixes[i], h), idem, h);
    const auto res = modrep::restrict(pr.rep, hprime);
    const auto dec = modrep::indecomposable_summands(res, seed);
    projections.push_back(labels_of(dec.summands, labels));
    projection_details.push_back({{"constituent", i}, {"projected_dim", pr.rep.dim()}, {"summands", projections.back()}});
  }
  std::sort(projections.begin(), projections.end());

  o.observed = {{"n_order", n->order()},
                {"ntilde_order", ntilde->order()},
                {"ntilde_fingerprint_matches", fp == ref},
                {"character_orbits", character_orbit_lengths(e, n)},
                {"hprime_character_orbits", character_orbit_lengths(e, hprime)},
                {"idempotents_match_characters", idems_match},
                {"idempotents_orthogonal", orthogonal},
                {"h_order", h->order()},
                {"hprime_order", hprime->order()},
                {"domain_size", domain.size()},
                {"six_dim_constituents", sixes.size()},
                {"six_dim_multiplicities", six_mult},
                {"projections", projections}};
  o.expected = {{"n_order", 3456},
                {"ntilde_order", 216},
                {"ntilde_fingerprint_matches", true},
                {"character_orbits", {1, 1, 6}},
                {"hprime_character_orbits", {1, 1, 1, 1, 4}},
                {"idempotents_match_characters", true},
                {"idempotents_orthogonal", true},
                {"h_order", 576},
                {"hprime_order", 72},
                {"domain_size", 16},
                {"six_dim_constituents", 2},
                {"six_dim_multiplicities", {1, 1}},
                {"projections", {"1a+1a", "1c+1d"}}};
  o.details["constituents"] = constituents_json(c);
  o.details["constituent_dims"] = c.dims_with_multiplicity();
  o.details["ntilde"] = group_json(*ntilde);
  o.details["ntilde_fingerprint"] = fingerprint_json(fp);
  o.details["projections"] = projection_details;
  o.details["labels"] = label_table(labels);
  o.details["label_note"] = std::string(kLabelNote) + "; labels refer to the shipped H' copy and P:D8 supplement";
  return o;
}

const std::map<std::string, std::function<Observation(const Context&)>>& runners() {
  static const std::map<std::string, std::function<Observation(const Context&)>> r = {
      {"a8-green", a8_green}, {"a8-f13", a8_f13}, {"j4-local", j4_local}};
  return r;
}

} // namespace

const std::vector<std::string>& scenario_names() {
  static const std::vector<std::string> names = {"a8-green", "a8-f13", "j4-local"};
  return names;
}

json ScenarioResult::to_json(bool with_timings) const {
  json cs = json::array();
  for (const auto& c : checks)
    cs.push_back({{"name", c.name}, {"expected", c.expected}, {"observed", c.observed}, {"pass", c.pass}});
  json out = {{"scenario", name}, {"seed", seed}, {"pass", pass}, {"checks", cs}, {"details", details}};
  if (with_timings)
    out["seconds"] = seconds;
  return out;
}

ScenarioResult run_scenario(const Scenario& s, const std::string& data_dir) {
  auto it = runners().find(s.name);
  if (it == runners().end())
    throw InputError("unknown scenario '" + s.name + "'");
  const auto start = std::chrono::steady_clock::now();
  Observation o = it->second(Context{s, data_dir});
  ScenarioResult r;
  r.name = s.name;
  r.seed = s.seed;
  json expected = o.expected;
  for (const auto& [k, v] : s.expect.items())
    expected[k] = v;
  for (const auto& [k, v] : expected.items()) {
    if (!o.observed.contains(k) && !o.expected.contains(k))
      throw InputError("scenario " + s.name + " has no observable named '" + k + "'");
    ScenarioCheck c;
    c.name = k;
    c.expected = v;
    c.observed = o.observed.contains(k) ? o.observed[k] : json();
    c.pass = c.observed == c.expected;
    r.checks.push_back(std::move(c));
  }
  r.pass = !r.checks.empty() &&
           std::all_of(r.checks.begin(), r.checks.end(), [](const ScenarioCheck& c) { return c.pass; });
  r.details = std::move(o.details);
  r.details["observed"] = o.observed;
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

Scenario named_scenario(const std::string& name, const std::string& data_dir, std::optional<std::uint64_t> seed) {
  const auto path = (std::filesystem::path(data_dir) / "scenarios" / (name + ".toml")).string();
  Scenario s;
  if (std::filesystem::exists(path)) {
    s = load_scenario(path);
    if (s.name != name)
      throw InputError(path + ": scenario file names '" + s.name + "'");
  } else if (runners().count(name)) {
    s.name = name;
  } else {
    throw InputError("unknown scenario '" + name + "'");
  }
  if (seed)
    s.seed = *seed;
  return s;
}

} // namespace brauerbox::cli
