// brauerbox command-line interface.
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "brauerbox/blocks/blocks.hpp"
#include "brauerbox/brauer/brauer.hpp"
#include "brauerbox/cli/files.hpp"
#include "brauerbox/cli/report.hpp"
#include "brauerbox/cli/scenarios.hpp"
#include "brauerbox/error.hpp"
#include "brauerbox/modrep/meataxe.hpp"
#include "brauerbox/modrep/module.hpp"
#include "brauerbox/modrep/projective.hpp"
#include "brauerbox/modrep/rep_io.hpp"
#include "brauerbox/permgrp/action.hpp"
#include "brauerbox/permgrp/search.hpp"

namespace {

using namespace brauerbox;
using nlohmann::json;
using modrep::MatRep;
using permgrp::GroupPtr;

constexpr int kExitInput = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitScenarioFail = 3;

struct Options {
  std::uint32_t p = 3;
  std::uint64_t seed = 0;
  std::string json_path;
  std::uint64_t bound = 10'000'000;
  bool no_timings = false;
  std::string data_dir;

  std::string group, sub, k, rep, rep2, out, normalizer, idem, idem_group, chars, dir, file;
  std::string scenario;
};

struct Outcome {
  json result;
  int exit_code = 0;
};

std::string path_of(const Options& o, const std::string& name, const char* flag) {
  if (name.empty())
    throw InputError(std::string("missing required option ") + flag);
  return cli::resolve_path(name, o.data_dir);
}

GroupPtr group_arg(const Options& o) { return cli::load_group(path_of(o, o.group, "--group"), o.seed); }
GroupPtr sub_arg(const Options& o, const GroupPtr& g, const std::string& name, const char* flag) {
  return cli::load_subgroup(g, path_of(o, name, flag), o.seed);
}
MatRep rep_arg(const Options& o, const GroupPtr& g, const std::string& name = "", const char* flag = "--rep") {
  auto r = cli::load_rep(path_of(o, name.empty() ? o.rep : name, flag), g);
  if (r.p() != o.p)
    throw InputError("module is over F_" + std::to_string(r.p()) + " but --p is " + std::to_string(o.p));
  return r;
}
permgrp::SearchBounds bounds_of(const Options& o) { return {o.bound, 10'000}; }

void maybe_write_rep(const Options& o, const MatRep& r, json& result) {
  if (o.out.empty())
    return;
  cli::write_file(o.out, modrep::to_text(r));
  result["written"] = o.out;
}

void maybe_write_group(const Options& o, const permgrp::PermGroup& g, json& result) {
  if (o.out.empty())
    return;
  cli::write_file(o.out, cli::group_text(g));
  result["written"] = o.out;
}

std::string dims_text(const std::vector<std::size_t>& dims) {
  std::string s = "[";
  for (std::size_t i = 0; i < dims.size(); ++i)
    s += (i ? "," : "") + std::to_string(dims[i]);
  return s + "]";
}

std::string constituents_text(const modrep::Constituents& c) {
  std::string s;
  for (const auto& f : c.factors)
    s += (s.empty() ? "" : " + ") + std::to_string(f.multiplicity) + " x " + std::to_string(f.simple.dim());
  return s.empty() ? "0" : s;
}

// ---- group ----

Outcome group_info(const Options& o) {
  auto g = group_arg(o);
  json r = cli::group_json(*g);
  const auto ids = permgrp::orbit_ids(g->generators(), g->degree());
  std::map<std::uint32_t, std::size_t> sizes;
  for (auto id : ids)
    ++sizes[id];
  std::vector<std::size_t> orbits;
  for (const auto& [id, n] : sizes)
    orbits.push_back(n);
  r["orbit_lengths"] = orbits;
  if (g->order() <= 100'000)
    r["fingerprint"] = cli::fingerprint_json(permgrp::fingerprint(*g));
  std::cout << "degree " << g->degree() << ", order " << g->order() << ", orbits " << dims_text(orbits) << "\n";
  return {r};
}

Outcome group_sylow(const Options& o) {
  auto g = group_arg(o);
  auto s = permgrp::sylow(g, o.p, o.seed, bounds_of(o));
  json r = {{"p", o.p}, {"sylow", cli::group_json(*s)}};
  maybe_write_group(o, *s, r);
  std::cout << "Sylow " << o.p << "-subgroup of order " << s->order() << "\n";
  for (const auto& x : s->generators())
    std::cout << "  " << x.to_string() << "\n";
  return {r};
}

Outcome group_normalizer(const Options& o) {
  auto g = group_arg(o);
  auto k = sub_arg(o, g, o.sub, "--sub");
  auto n = permgrp::normalizer(*g, *k, bounds_of(o));
  json r = {{"normalizer", cli::group_json(*n)}};
  maybe_write_group(o, *n, r);
  std::cout << "normalizer of order " << n->order() << "\n";
  for (const auto& x : n->generators())
    std::cout << "  " << x.to_string() << "\n";
  return {r};
}

Outcome group_cosets(const Options& o) {
  auto g = group_arg(o);
  auto h = sub_arg(o, g, o.sub, "--sub");
  permgrp::CosetTable table(g, h, o.bound);
  json images = json::array();
  for (const auto& x : table.action().generator_images())
    images.push_back(x.to_string());
  json reps = json::array();
  for (const auto& x : table.representatives())
    reps.push_back(x.to_string());
  json r = {{"index", table.size()}, {"representatives", reps}, {"generator_images", images}};
  if (!o.out.empty()) {
    cli::write_file(o.out, modrep::to_text(modrep::perm_rep(table.action(), o.p)));
    r["written"] = o.out;
  }
  std::cout << "index " << table.size() << "\n";
  for (const auto& x : table.action().generator_images())
    std::cout << "  " << x.to_string() << "\n";
  return {r};
}

// ---- mod ----

Outcome mod_chop(const Options& o) {
  auto g = group_arg(o);
  auto v = rep_arg(o, g);
  auto c = modrep::chop(v, o.seed);
  std::cout << "dim " << v.dim() << " = " << constituents_text(c) << "\n";
  return {{{"dim", v.dim()}, {"constituents", cli::constituents_json(c)}}};
}

Outcome mod_series(const Options& o, bool radical) {
  auto g = group_arg(o);
  auto v = rep_arg(o, g);
  auto s = radical ? modrep::radical_series(v, o.seed) : modrep::socle_series(v, o.seed);
  std::cout << (radical ? "radical" : "socle") << " layers " << dims_text(s.layer_dims()) << "\n";
  for (std::size_t i = 0; i < s.layers.size(); ++i)
    std::cout << "  layer " << i + 1 << ": " << constituents_text(s.layers[i]) << "\n";
  return {{{"kind", radical ? "radical" : "socle"}, {"series", cli::series_json(s)}}};
}

Outcome mod_decompose(const Options& o) {
  auto g = group_arg(o);
  auto v = rep_arg(o, g);
  auto d = modrep::indecomposable_summands(v, o.seed);
  json summands = json::array();
  std::vector<std::size_t> dims;
  for (const auto& s : d.summands) {
    dims.push_back(s.dim());
    summands.push_back({{"dim", s.dim()}, {"projective", modrep::is_projective(s, o.seed)}});
  }
  std::cout << "indecomposable summands " << dims_text(dims) << "\n";
  return {{{"dim", v.dim()}, {"summands", summands}}};
}

Outcome mod_hom(const Options& o) {
  auto g = group_arg(o);
  auto a = rep_arg(o, g);
  auto b = rep_arg(o, g, o.rep2, "--rep2");
  const auto homs = modrep::hom_space(a, b);
  const bool iso = modrep::is_isomorphic(a, b, o.seed).has_value();
  std::cout << "dim Hom = " << homs.size() << (iso ? ", isomorphic" : ", not isomorphic") << "\n";
  return {{{"hom_dim", homs.size()}, {"isomorphic", iso}}};
}

Outcome mod_induce(const Options& o) {
  auto g = group_arg(o);
  auto h = sub_arg(o, g, o.sub, "--sub");
  auto v = rep_arg(o, h);
  auto w = modrep::induce(v, g);
  json r = {{"dim", w.dim()}};
  maybe_write_rep(o, w, r);
  std::cout << "induced module of dim " << w.dim() << "\n";
  return {r};
}

Outcome mod_restrict(const Options& o) {
  auto g = group_arg(o);
  auto h = sub_arg(o, g, o.sub, "--sub");
  auto v = rep_arg(o, g);
  auto w = modrep::restrict(v, h);
  json r = {{"dim", w.dim()}, {"subgroup_order", h->order()}};
  maybe_write_rep(o, w, r);
  std::cout << "restricted module of dim " << w.dim() << "\n";
  return {r};
}

Outcome mod_dual(const Options& o) {
  auto g = group_arg(o);
  auto w = modrep::dual(rep_arg(o, g));
  json r = {{"dim", w.dim()}};
  maybe_write_rep(o, w, r);
  std::cout << "dual module of dim " << w.dim() << "\n";
  return {r};
}

std::vector<std::uint32_t> parse_values(const std::string& text) {
  std::vector<std::uint32_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const auto v = std::stoul(item, &used);
      if (used != item.size())
        throw std::invalid_argument(item);
      out.push_back(static_cast<std::uint32_t>(v));
    } catch (const std::exception&) {
      throw InputError("bad character value '" + item + "' in --char");
    }
  }
  return out;
}

Outcome mod_tensor(const Options& o) {
  auto g = group_arg(o);
  auto a = rep_arg(o, g);
  MatRep w;
  if (!o.chars.empty()) {
    modrep::LinearCharacter lambda{g, o.p, parse_values(o.chars)};
    blocks::check_linear_character(lambda);
    w = modrep::tensor_linear(a, lambda);
  } else {
    w = modrep::tensor(a, rep_arg(o, g, o.rep2, "--rep2"));
  }
  json r = {{"dim", w.dim()}};
  maybe_write_rep(o, w, r);
  std::cout << "tensor product of dim " << w.dim() << "\n";
  return {r};
}

// ---- brauer ----

Outcome brauer_fixed(const Options& o) {
  auto g = group_arg(o);
  auto h = sub_arg(o, g, o.sub, "--sub");
  auto k = sub_arg(o, g, o.k, "--k");
  auto rep = brauer::perm_fixed_points(g, h, k, bounds_of(o));
  std::cout << rep.size() << " fixed cosets in " << rep.parts.size() << " part(s) under N_G(K) of order "
            << rep.normalizer->order() << "\n";
  for (const auto& part : rep.parts)
    std::cout << "  part of size " << part.points.size() << ", stabilizer order " << part.stabilizer->order() << "\n";
  return {cli::fixed_points_json(rep)};
}

Outcome brauer_quotient(const Options& o) {
  auto g = group_arg(o);
  auto p = sub_arg(o, g, o.sub, "--sub");
  auto v = rep_arg(o, g);
  GroupPtr n = o.normalizer.empty() ? nullptr : sub_arg(o, g, o.normalizer, "--normalizer");
  auto q = brauer::brauer_quotient(v, p, n, bounds_of(o));
  auto c = modrep::chop(q.quotient_rep, o.seed);
  json r = {{"fixed_dim", q.fixed_basis.rows()},
            {"traced_dim", ffla::rank(q.traced_subspace)},
            {"quotient_dim", q.quotient_rep.dim()},
            {"normalizer", cli::group_json(*q.normalizer)},
            {"constituents", cli::constituents_json(c)}};
  maybe_write_rep(o, q.quotient_rep, r);
  std::cout << "V^P dim " << q.fixed_basis.rows() << ", traces dim " << ffla::rank(q.traced_subspace)
            << ", quotient dim " << q.quotient_rep.dim() << " = " << constituents_text(c) << "\n";
  return {r};
}

Outcome brauer_marks(const Options& o) {
  auto g = group_arg(o);
  auto h = sub_arg(o, g, o.sub, "--sub");
  auto k = sub_arg(o, g, o.k, "--k");
  const auto m = brauer::marks_count(g, h, k, bounds_of(o));
  std::cout << m << "\n";
  return {{{"marks", m}}};
}

Outcome brauer_green(const Options& o) {
  auto g = group_arg(o);
  auto p = sub_arg(o, g, o.sub, "--sub");
  auto v = rep_arg(o, g);
  GroupPtr n = o.normalizer.empty() ? permgrp::normalizer(*g, *p, bounds_of(o))
                                    : sub_arg(o, g, o.normalizer, "--normalizer");
  auto gr = brauer::green_correspondent(v, p, n, o.seed);
  const auto rad = modrep::radical_series(gr.correspondent, o.seed);
  json r = {{"correspondent_dim", gr.correspondent.dim()},
            {"discarded_dims", cli::dims_json(gr.discarded)},
            {"radical_series", cli::series_json(rad)},
            {"normalizer", cli::group_json(*n)}};
  maybe_write_rep(o, gr.correspondent, r);
  std::cout << "Green correspondent of dim " << gr.correspondent.dim() << ", radical layers "
            << dims_text(rad.layer_dims()) << "\n";
  return {r};
}

// ---- blocks ----

Outcome blocks_chars(const Options& o) {
  auto g = group_arg(o);
  auto chars = blocks::linear_characters(g, o.p);
  json list = json::array();
  for (const auto& c : chars)
    list.push_back(c.values);
  json r = {{"p", o.p}, {"count", chars.size()}, {"values", list}};
  std::cout << chars.size() << " linear characters over F_" << o.p << "\n";
  for (const auto& c : chars) {
    std::cout << " ";
    for (auto v : c.values)
      std::cout << " " << v;
    std::cout << "\n";
  }
  if (chars.size() == 4) {
    try {
      json labels = json::object();
      for (const auto& [name, lambda] : blocks::label_linear_characters(g, o.p))
        labels[name] = lambda.values;
      r["labels"] = labels;
    } catch (const InputError&) {
      // no element of order 4 singles out 1b
    }
  }
  return {r};
}

Outcome blocks_idem(const Options& o) {
  auto g = group_arg(o);
  if (o.chars.empty())
    throw InputError("missing required option --char");
  modrep::LinearCharacter lambda{g, o.p, parse_values(o.chars)};
  auto e = blocks::idempotent_from_character(lambda);
  std::ostringstream os;
  blocks::write_idempotent(os, e);
  json r = {{"support", e.coeffs.size()}, {"text", os.str()}};
  if (!o.out.empty()) {
    cli::write_file(o.out, os.str());
    r["written"] = o.out;
  } else {
    std::cout << os.str();
  }
  return {r};
}

Outcome blocks_project(const Options& o) {
  auto g = group_arg(o);
  auto v = rep_arg(o, g);
  auto e_group = sub_arg(o, g, o.idem_group, "--idem-group");
  auto s = sub_arg(o, g, o.sub, "--sub");
  auto e = cli::load_idempotent(path_of(o, o.idem, "--idem"), e_group);
  auto pr = blocks::project(v, e, s);
  json r = {{"dim", pr.rep.dim()}};
  maybe_write_rep(o, pr.rep, r);
  std::cout << "projection of dim " << pr.rep.dim() << "\n";
  return {r};
}

// ---- scenario / bootstrap ----

Outcome scenario_run(const Options& o, bool seed_given) {
  auto s = o.file.empty() ? cli::named_scenario(o.scenario, o.data_dir,
                                                seed_given ? std::optional<std::uint64_t>(o.seed) : std::nullopt)
                          : cli::load_scenario(o.file);
  if (!o.file.empty() && seed_given)
    s.seed = o.seed;
  auto res = cli::run_scenario(s, o.data_dir);
  std::cout << "scenario " << res.name << " (seed " << res.seed << "): " << (res.pass ? "PASS" : "FAIL") << "\n";
  for (const auto& c : res.checks)
    std::cout << "  [" << (c.pass ? "ok" : "FAIL") << "] " << c.name << " = " << c.observed.dump()
              << (c.pass ? "" : " (expected " + c.expected.dump() + ")") << "\n";
  return {res.to_json(!o.no_timings), res.pass ? 0 : kExitScenarioFail};
}

Outcome scenario_list(const Options&) {
  for (const auto& n : cli::scenario_names())
    std::cout << n << "\n";
  return {{{"scenarios", cli::scenario_names()}}};
}

Outcome bootstrap(const Options& o) {
  const auto dir = o.dir.empty() ? o.data_dir : o.dir;
  auto files = cli::bootstrap_data(dir, o.seed);
  std::cout << "wrote " << files.size() << " files to " << dir << "\n";
  return {{{"directory", dir}, {"files", files}}};
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"brauerbox: modular representations, Brauer quotients and Green correspondents"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  o.data_dir = cli::data_directory();
  bool seed_given = false;
  app.add_option("--p", o.p, "characteristic (default 3)");
  app.add_option_function<std::uint64_t>(
      "--seed", [&](const std::uint64_t& s) { o.seed = s; seed_given = true; }, "random seed (default 0)");
  app.add_option("--json", o.json_path, "write the full report to this file");
  app.add_option("--bound", o.bound, "bound for searches and enumerations");
  app.add_flag("--no-timings", o.no_timings, "omit timings from the JSON report");
  app.add_option("--data", o.data_dir, "data directory (default: BRAUERBOX_DATA or the shipped data)");

  std::function<Outcome()> action;
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help,
                  std::function<Outcome()> fn) {
    auto* c = parent->add_subcommand(name, help);
    c->callback([&action, fn] { action = fn; });
    return c;
  };
  auto add_group = [&](CLI::App* c) { c->add_option("--group", o.group, "group file"); };
  auto add_sub = [&](CLI::App* c, const std::string& help) { c->add_option("--sub", o.sub, help); };
  auto add_rep = [&](CLI::App* c) { c->add_option("--rep", o.rep, "module file"); };
  auto add_out = [&](CLI::App* c) { c->add_option("--out", o.out, "output file"); };

  auto* grp = app.add_subcommand("group", "permutation groups");
  grp->require_subcommand(1);
  add_group(leaf(grp, "info", "order, orbits and fingerprint", [&] { return group_info(o); }));
  {
    auto* c = leaf(grp, "sylow", "a Sylow p-subgroup", [&] { return group_sylow(o); });
    add_group(c);
    add_out(c);
  }
  {
    auto* c = leaf(grp, "normalizer", "N_G(K)", [&] { return group_normalizer(o); });
    add_group(c);
    add_sub(c, "subgroup K");
    add_out(c);
  }
  {
    auto* c = leaf(grp, "cosets", "right cosets of H and the action on them", [&] { return group_cosets(o); });
    add_group(c);
    add_sub(c, "subgroup H");
    c->add_option("--out", o.out, "write the permutation module over F_p");
  }

  auto* mod = app.add_subcommand("mod", "modules");
  mod->require_subcommand(1);
  for (auto [name, help, fn] : std::vector<std::tuple<std::string, std::string, std::function<Outcome()>>>{
           {"chop", "composition factors", [&] { return mod_chop(o); }},
           {"radseries", "radical series", [&] { return mod_series(o, true); }},
           {"socseries", "socle series", [&] { return mod_series(o, false); }},
           {"decompose", "indecomposable summands", [&] { return mod_decompose(o); }},
           {"dual", "contragredient module", [&] { return mod_dual(o); }}}) {
    auto* c = leaf(mod, name, help, fn);
    add_group(c);
    add_rep(c);
    if (name == "dual")
      add_out(c);
  }
  {
    auto* c = leaf(mod, "hom", "dimension of Hom(rep, rep2)", [&] { return mod_hom(o); });
    add_group(c);
    add_rep(c);
    c->add_option("--rep2", o.rep2, "second module file");
  }
  {
    auto* c = leaf(mod, "induce", "induce an H-module to G", [&] { return mod_induce(o); });
    add_group(c);
    add_sub(c, "subgroup H (the module's group)");
    add_rep(c);
    add_out(c);
  }
  {
    auto* c = leaf(mod, "restrict", "restrict a G-module to H", [&] { return mod_restrict(o); });
    add_group(c);
    add_sub(c, "subgroup H");
    add_rep(c);
    add_out(c);
  }
  {
    auto* c = leaf(mod, "tensor", "tensor with a module or a linear character", [&] { return mod_tensor(o); });
    add_group(c);
    add_rep(c);
    c->add_option("--rep2", o.rep2, "second module file");
    c->add_option("--char", o.chars, "linear character values at the generators, comma separated");
    add_out(c);
  }

  auto* br = app.add_subcommand("brauer", "Brauer construction and Green correspondence");
  br->require_subcommand(1);
  {
    auto* c = leaf(br, "fixed", "K-fixed cosets of H in G, by N_G(K)-orbits", [&] { return brauer_fixed(o); });
    add_group(c);
    add_sub(c, "subgroup H");
    c->add_option("--k", o.k, "subgroup K");
  }
  {
    auto* c = leaf(br, "quotient", "Brauer quotient V(P)", [&] { return brauer_quotient(o); });
    add_group(c);
    add_sub(c, "p-subgroup P");
    add_rep(c);
    c->add_option("--normalizer", o.normalizer, "subgroup normalizing P (default N_G(P))");
    add_out(c);
  }
  {
    auto* c = leaf(br, "marks", "number of K-fixed cosets of H in G", [&] { return brauer_marks(o); });
    add_group(c);
    add_sub(c, "subgroup H");
    c->add_option("--k", o.k, "subgroup K");
  }
  {
    auto* c = leaf(br, "green", "Green correspondent of an indecomposable module", [&] { return brauer_green(o); });
    add_group(c);
    add_sub(c, "vertex P");
    add_rep(c);
    c->add_option("--normalizer", o.normalizer, "subgroup containing N_G(P) (default N_G(P))");
    add_out(c);
  }

  auto* bl = app.add_subcommand("blocks", "linear characters and idempotents");
  bl->require_subcommand(1);
  add_group(leaf(bl, "chars", "linear characters over F_p", [&] { return blocks_chars(o); }));
  {
    auto* c = leaf(bl, "idem", "idempotent of a linear character", [&] { return blocks_idem(o); });
    add_group(c);
    c->add_option("--char", o.chars, "values at the generators, comma separated");
    add_out(c);
  }
  {
    auto* c = leaf(bl, "project", "V e as a module for a subgroup", [&] { return blocks_project(o); });
    add_group(c);
    add_rep(c);
    c->add_option("--idem", o.idem, "idempotent file");
    c->add_option("--idem-group", o.idem_group, "group file for the idempotent's support");
    add_sub(c, "subgroup fixing the idempotent");
    add_out(c);
  }

  auto* sc = app.add_subcommand("scenario", "shipped computations with expected outputs");
  sc->require_subcommand(1);
  {
    auto* c = leaf(sc, "run", "run a scenario", [&] { return scenario_run(o, seed_given); });
    c->add_option("name", o.scenario, "a8-green, a8-f13 or j4-local");
    c->add_option("--file", o.file, "scenario file instead of a shipped name");
  }
  leaf(sc, "list", "list scenarios", [&] { return scenario_list(o); });
  {
    auto* c = leaf(&app, "bootstrap", "regenerate the data files", [&] { return bootstrap(o); });
    c->add_option("--dir", o.dir, "output directory (default: the data directory)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  // the report destination is left out so that reports of identical runs are identical
  std::string command;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--json") {
      ++i;
      continue;
    }
    if (arg.rfind("--json=", 0) == 0)
      continue;
    command += (command.empty() ? "" : " ") + arg;
  }

  int code = 0;
  json report = {{"format_version", cli::kReportFormatVersion}, {"command", command}, {"seed", o.seed}, {"p", o.p}};
  const auto start = std::chrono::steady_clock::now();
  try {
    if (!action)
      throw InputError("no command given");
    auto outcome = action();
    code = outcome.exit_code;
    report["status"] = code == 0 ? "ok" : "fail";
    report["result"] = std::move(outcome.result);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    code = kExitInput;
    report["status"] = "input_error";
    report["error"] = e.what();
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    code = kExitInput;
    report["status"] = "input_error";
    report["error"] = e.what();
  } catch (const Inconclusive& e) {
    std::cerr << "inconclusive: " << e.what() << "\n";
    code = kExitInconclusive;
    report["status"] = "inconclusive";
    report["error"] = e.what();
  } catch (const BoundExceeded& e) {
    std::cerr << "bound exceeded: " << e.what() << "\n";
    code = kExitInconclusive;
    report["status"] = "bound_exceeded";
    report["error"] = e.what();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    code = kExitInput;
    report["status"] = "error";
    report["error"] = e.what();
  }
  if (!o.no_timings)
    report["timings"] = {{"seconds", std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()}};
  if (!o.json_path.empty()) {
    std::ofstream out(o.json_path);
    out << report.dump(2) << "\n";
    if (!out) {
      std::cerr << "cannot write " << o.json_path << "\n";
      return kExitInput;
    }
  }
  return code;
}
