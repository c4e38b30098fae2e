#pragma once

// JSON views of the library's result types. Rationals are written as exact
// strings ("3/13"); everything else maps onto plain JSON values.

#include "knotproj/exactnum.hpp"
#include "knotproj/genus.hpp"
#include "knotproj/metric.hpp"
#include "knotproj/projective.hpp"
#include "knotproj/rips.hpp"

#include <json.hpp>

#include <string>

namespace knotproj {

using Json = nlohmann::ordered_json;

inline Json to_json(const Rational& r) { return to_string(r); }

inline Json to_json(const StepFunction& f) {
  Json bps = Json::array();
  for (const auto& b : f.breakpoints()) bps.push_back(to_string(b));
  return {{"breakpoints", bps}, {"values", f.values()}};
}

inline Json to_json(const SurgerySchema& s) {
  Json runs = Json::array();
  for (const auto& r : s.runs)
    runs.push_back({{"top_block", r.top_block},
                    {"top_offset", r.top_offset},
                    {"bottom_block", r.bottom_block},
                    {"bottom_offset", r.bottom_offset},
                    {"length", r.length}});
  return {{"top_blocks", s.top_blocks}, {"bottom_blocks", s.bottom_blocks}, {"runs", runs}, {"curves", s.curve_count()}};
}

inline Json to_json(const GenusInterval& g) {
  Json upper = {{"kind", to_string(g.upper_kind)}, {"note", g.upper_note}};
  if (g.upper_kind == UpperKind::Schema) upper["schema"] = to_json(g.schema);
  return {{"lower", g.lower},
          {"upper", g.upper},
          {"certified", g.exact()},
          {"witnesses", {{"lower", {{"kind", "signature"}, {"t", to_string(g.lower_witness)}}}, {"upper", upper}}}};
}

inline Json to_json(const DistInterval& d) {
  Json j = {{"lower", d.lower}, {"upper", d.upper ? Json(*d.upper) : Json(nullptr)}, {"certified", d.exact()}};
  if (d.exact()) j["value"] = d.lower;
  Json argmins = Json::array();
  for (auto [a, b] : d.argmins) argmins.push_back({a, b});
  j["argmins"] = argmins;
  Json w = {{"lower", d.lower_certificate}, {"upper", d.upper_certificate}};
  if (!d.chain.empty()) {
    Json chain = Json::array();
    for (const auto& c : d.chain) chain.push_back(c.to_string());
    w["chain"] = chain;
  }
  j["witnesses"] = w;
  return j;
}

inline Json to_json(const RipsComplex& rc) {
  Json edges = Json::array();
  for (const auto& e : rc.edges) edges.push_back({{"u", rc.vertices[e.u]}, {"v", rc.vertices[e.v]}, {"certificate", e.certificate}});
  Json simplices = Json::array();
  for (const auto& s : rc.maximal_simplices) {
    Json names = Json::array();
    for (auto i : s) names.push_back(rc.vertices[i]);
    simplices.push_back(names);
  }
  Json unc = Json::array();
  for (auto [u, v] : rc.uncertified) unc.push_back({rc.vertices[u], rc.vertices[v]});
  return {{"vertices", rc.vertices},
          {"edges", edges},
          {"maximal_simplices", simplices},
          {"dimension", rc.dimension()},
          {"uncertified", unc}};
}

inline Json to_json(const ProjClass& c) {
  Json j = {{"label", c.to_string()}};
  switch (c.kind) {
    case ProjClass::Kind::Star: j["kind"] = "star"; break;
    case ProjClass::Kind::Free: j["kind"] = "free"; break;
    case ProjClass::Kind::TorsionLine: j["kind"] = "torsion-line"; j["prime"] = c.prime; break;
    case ProjClass::Kind::Mixed: j["kind"] = "mixed-torsion"; break;
  }
  if (!c.vector.empty()) j["vector"] = c.vector;
  return j;
}

}  // namespace knotproj
