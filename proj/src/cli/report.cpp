#include "brauerbox/cli/report.hpp"

namespace brauerbox::cli {

using nlohmann::json;

json group_json(const permgrp::PermGroup& g) {
  json gens = json::array();
  for (const auto& x : g.generators())
    gens.push_back(x.to_string());
  return {{"degree", g.degree()}, {"order", g.order()}, {"generators", gens}};
}

json fingerprint_json(const permgrp::Fingerprint& f) {
  json hist = json::object();
  for (const auto& [ord, count] : f.order_histogram)
    hist[std::to_string(ord)] = count;
  return {{"order", f.order},
          {"abelianization_order", f.abelianization_order},
          {"centre_order", f.centre_order},
          {"element_orders", hist}};
}

json constituents_json(const modrep::Constituents& c) {
  json out = json::array();
  for (const auto& f : c.factors)
    out.push_back({{"dim", f.simple.dim()}, {"multiplicity", f.multiplicity}});
  return out;
}

json series_json(const modrep::SeriesReport& s) {
  json layers = json::array();
  for (const auto& layer : s.layers)
    layers.push_back(constituents_json(layer));
  return {{"layer_dims", s.layer_dims()}, {"layers", layers}};
}

json fixed_points_json(const brauer::FixedPointReport& r) {
  json parts = json::array();
  for (const auto& part : r.parts) {
    json p = {{"size", part.points.size()},
              {"g_i", part.g_i.degree() ? part.g_i.to_string() : std::string("()")},
              {"stabilizer", group_json(*part.stabilizer)}};
    if (part.k_i)
      p["k_i"] = group_json(*part.k_i);
    json pts = json::array();
    for (auto i : part.points)
      pts.push_back(r.points[i]);
    p["points"] = pts;
    parts.push_back(p);
  }
  return {{"normalizer", group_json(*r.normalizer)}, {"count", r.size()}, {"points", r.points}, {"parts", parts}};
}

json dims_json(const std::vector<modrep::MatRep>& reps) {
  json out = json::array();
  for (const auto& r : reps)
    out.push_back(r.dim());
  return out;
}

} // namespace brauerbox::cli
