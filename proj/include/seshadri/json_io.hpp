#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "seshadri/bonded_poset.hpp"
#include "seshadri/demazure.hpp"
#include "seshadri/invariants.hpp"
#include "seshadri/lspath.hpp"
#include "seshadri/smt.hpp"

namespace seshadri::io {

using Json = nlohmann::ordered_json;

inline Json weight_json(const Weight& w) { return Json(w.coords); }

inline Json rational_weight_json(const RationalWeight& w) {
  Json out = Json::array();
  for (const auto& c : w) out.push_back(c.str());
  return out;
}

/// {"entries": {label: "p/q", ...}, "degree": "p/q", "weight": ["p/q", ...]},
/// entries listed from the top of the support down.
inline Json path_json(const BondedPoset& p, const PathVector& a) {
  Json entries = Json::object();
  for (auto it = a.entries().rbegin(); it != a.entries().rend(); ++it) entries[p.node(it->first).label] = it->second.str();
  Json out;
  out["entries"] = std::move(entries);
  out["degree"] = degree(a).str();
  out["weight"] = rational_weight_json(weight(p, a));
  return out;
}

/// Accepts the object produced by path_json or a bare {label: value} map;
/// values may be "p/q" strings or integers.
inline PathVector parse_path(const BondedPoset& p, const nlohmann::json& j) {
  if (!j.is_object()) throw Error(ErrorCode::bad_input, "path must be a JSON object");
  const nlohmann::json& entries = j.contains("entries") ? j.at("entries") : j;
  if (!entries.is_object()) throw Error(ErrorCode::bad_input, "path entries must be a JSON object");
  PathVector a;
  for (const auto& [label, value] : entries.items()) {
    Rational r;
    if (value.is_string())
      r = Rational::parse(value.get<std::string>());
    else if (value.is_number_integer())
      r = Rational(value.get<std::int64_t>());
    else
      throw Error(ErrorCode::bad_input, "path coefficient for '" + label + "' must be a string or integer");
    const NodeId id = p.find_label(label);
    a.set(id, a[id] + r);
  }
  return a;
}

inline PathVector parse_path(const BondedPoset& p, const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::bad_input, std::string("malformed path JSON: ") + e.what());
  }
  return parse_path(p, j);
}

/// Array of {weight, mult}, lexicographic in the weight.
inline Json character_json(const Character& ch) {
  Json out = Json::array();
  for (const auto& [w, m] : ch.terms()) out.push_back(Json{{"weight", weight_json(w)}, {"mult", m}});
  return out;
}

inline Json monomial_json(const BondedPoset& p, const Monomial& m, bool standard, bool guaranteed) {
  Json factors = Json::array();
  for (const auto& f : m.factors()) factors.push_back(path_json(p, f));
  return Json{{"factors", std::move(factors)}, {"standard", standard}, {"guaranteed", guaranteed}};
}

inline Json poset_json(const BondedPoset& p) {
  Json out;
  out["type"] = p.root_system().kind().name();
  out["lambda"] = weight_json(p.lambda());
  out["tau"] = p.node(p.tau()).label;
  out["N"] = p.lcm_bonds();
  Json nodes = Json::array();
  for (NodeId i = 0; i < p.size(); ++i) {
    const auto& n = p.node(i);
    nodes.push_back(Json{{"id", i}, {"label", n.label}, {"length", n.length()}, {"weight", weight_json(n.image)}});
  }
  out["nodes"] = std::move(nodes);
  Json covers = Json::array();
  for (const auto& c : p.covers())
    covers.push_back(Json{{"upper", p.node(c.upper).label},
                          {"lower", p.node(c.lower).label},
                          {"bond", c.bond},
                          {"root", p.root_system().positive_roots()[c.root].root_coords}});
  out["covers"] = std::move(covers);
  return out;
}

inline Json chains_json(const BondedPoset& p, const std::vector<Chain>& chains) {
  Json list = Json::array();
  for (const auto& c : chains) {
    Json labels = Json::array();
    for (NodeId id : c.nodes) labels.push_back(p.node(id).label);
    list.push_back(Json{{"nodes", std::move(labels)}, {"bonds", c.bonds}});
  }
  return Json{{"count", chains.size()}, {"chains", std::move(list)}};
}

inline Json report_json(const CaseReport& r) {
  Json out;
  out["case"] = Json{{"type", r.type}, {"lambda", weight_json(r.lambda)}, {"tau", r.tau}};
  out["d_max"] = r.d_max;
  Json rows = Json::array();
  for (const auto& row : r.rows)
    rows.push_back(Json{{"d", row.d},
                        {"ls_paths", row.ls_paths},
                        {"demazure_dim", row.demazure_dim},
                        {"cardinality_equal", row.cardinality_equal},
                        {"characters_equal", row.characters_equal}});
  out["degrees"] = std::move(rows);
  out["chain_count"] = r.chain_count;
  out["degree_by_bonds"] = r.degree_by_bonds ? Json(*r.degree_by_bonds) : Json(nullptr);
  out["degree_by_hilbert"] = r.degree_by_hilbert ? Json(*r.degree_by_hilbert) : Json(nullptr);
  out["cardinality_ok"] = r.cardinality_ok;
  out["characters_ok"] = r.characters_ok;
  out["degree_ok"] = r.degree_ok;
  out["gcd_ok"] = r.gcd_ok;
  out["multiplicity_one_ok"] = r.multiplicity_one_ok;
  out["failures"] = r.failures;
  out["all_ok"] = r.all_ok();
  return out;
}

}  // namespace seshadri::io
