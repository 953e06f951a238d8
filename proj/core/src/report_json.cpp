#include "geodetic/report_json.hpp"

#include "geodetic/builders.hpp"
#include "geodetic/diophantine.hpp"
#include "geodetic/error.hpp"

namespace geodetic {
namespace {

nlohmann::json PathJson(const SegmentPath& p) {
  return {{"vertices", p.vertices}, {"edges", p.edges}};
}

nlohmann::json CycleJson(const SegmentCycle& c) {
  return {{"vertices", c.vertices}, {"edges", c.edges}};
}

}  // namespace

nlohmann::json ToJson(const ConditionReport& report) {
  nlohmann::json c1_violations = nlohmann::json::array();
  for (const auto& v : report.c1.violations) {
    c1_violations.push_back({{"path", PathJson(v.path)},
                             {"realized_length", v.realized_length},
                             {"distance", v.distance}});
  }
  nlohmann::json c2_violations = nlohmann::json::array();
  for (const auto& v : report.c2.violations) {
    c2_violations.push_back({{"cycle", CycleJson(v.cycle)}, {"sum", v.sum}});
  }
  nlohmann::json c3_sums = nlohmann::json::array();
  for (const auto& [sum, cycle] : report.c3.sums) {
    c3_sums.push_back({{"sum", sum}, {"representative", CycleJson(cycle)}});
  }
  nlohmann::json geodetic = {{"geodetic", report.geodetic.geodetic}};
  if (report.geodetic.witness) {
    geodetic["witness"] = {report.geodetic.witness->u, report.geodetic.witness->v};
    geodetic["multiplicity"] = report.geodetic.multiplicity;
  }
  return {{"c1", {{"passed", report.c1.passed}, {"violations", c1_violations}}},
          {"c2", {{"passed", report.c2.passed}, {"violations", c2_violations}}},
          {"c3", {{"passed", report.c3.passed}, {"sums", c3_sums}}},
          {"all_conditions", report.all_conditions()},
          {"realized_diameter", report.realized_diameter},
          {"realization", geodetic}};
}

nlohmann::json LengthVectorToJson(const Graph& base, const LengthVector& lv,
                                  const std::string& base_name) {
  ValidateLengths(base, lv);
  nlohmann::json doc;
  if (base_name.empty()) {
    nlohmann::json edges = nlohmann::json::array();
    for (const Edge& e : base.edges()) edges.push_back({e.u, e.v});
    doc["base"] = std::move(edges);
  } else {
    doc["base"] = base_name;
  }
  doc["lengths"] = lv.lengths;
  return doc;
}

std::pair<Graph, LengthVector> LengthVectorFromJson(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("base") || !doc.contains("lengths")) {
    throw Error(ErrorCode::kParse,
                "length vector JSON needs 'base' and 'lengths' fields");
  }
  Graph base;
  const auto& b = doc.at("base");
  if (b.is_string()) {
    base = BuiltinGraph(b.get<std::string>());
  } else if (b.is_array()) {
    std::vector<Edge> edges;
    Vertex n = 0;
    for (const auto& e : b) {
      if (!e.is_array() || e.size() != 2) {
        throw Error(ErrorCode::kParse, "base edges must be [u, v] pairs");
      }
      edges.push_back({e[0].get<Vertex>(), e[1].get<Vertex>()});
      n = std::max({n, edges.back().u + 1, edges.back().v + 1});
    }
    base = Graph::FromEdges(std::span<const Edge>(edges), n);
  } else {
    throw Error(ErrorCode::kParse, "'base' must be a name or an edge list");
  }
  LengthVector lv{doc.at("lengths").get<std::vector<int>>()};
  ValidateLengths(base, lv);
  return {std::move(base), std::move(lv)};
}

nlohmann::json DumpSystem(const GeodeticSystem& system) {
  const Graph& base = system.skeleton.base;
  nlohmann::json vars = nlohmann::json::array();
  nlohmann::json bounds = nlohmann::json::array();
  for (EdgeId e = 0; e < static_cast<EdgeId>(system.num_vars()); ++e) {
    vars.push_back({{"id", e}, {"edge", {base.edge(e).u, base.edge(e).v}}});
    bounds.push_back({system.bounds[e].lo, system.bounds[e].hi});
  }
  std::vector<int> parity_count(system.num_vars(), 0);
  std::vector<int> equal_count(system.num_vars(), 0);
  nlohmann::json constraints = nlohmann::json::array();
  for (const Constraint& c : system.parity) {
    constraints.push_back({{"type", "parity"}, {"edges", c.edges}});
    for (EdgeId e : c.edges) ++parity_count[e];
  }
  for (const Constraint& c : system.equal_sum) {
    constraints.push_back({{"type", "equal_sum"}, {"edges", c.edges}});
    for (EdgeId e : c.edges) ++equal_count[e];
  }
  nlohmann::json membership = nlohmann::json::array();
  for (std::size_t e = 0; e < system.num_vars(); ++e) {
    membership.push_back({{"parity", parity_count[e]},
                          {"equal_sum", equal_count[e]}});
  }
  return {{"base", system.skeleton.name},
          {"d0", system.d0()},
          {"target_d", system.target_d},
          {"vars", std::move(vars)},
          {"bounds", std::move(bounds)},
          {"sum_range", {system.sum_lo, system.sum_hi}},
          {"constraints", std::move(constraints)},
          {"membership_counts", std::move(membership)}};
}

nlohmann::json ToJson(const EnumerationReport& report, bool include_timing) {
  nlohmann::json witnesses = nlohmann::json::array();
  for (const ClassWitness& w : report.witnesses) {
    witnesses.push_back(
        {{"lengths", w.canonical.lengths}, {"orbit_size", w.orbit_size}});
  }
  nlohmann::json out;
  out["base"] = report.base;
  out["target_d"] = report.target_d;
  out["mode"] = EngineModeName(report.mode);
  out["bound"] = report.bound;
  out["raw_solution_count"] = report.raw_solution_count;
  out["class_count"] = report.class_count;
  out["formula_value"] = report.formula_value
                             ? nlohmann::json(*report.formula_value)
                             : nlohmann::json(nullptr);
  out["formula_match"] = report.formula_match
                             ? nlohmann::json(*report.formula_match)
                             : nlohmann::json(nullptr);
  out["witnesses"] = std::move(witnesses);
  out["witnesses_truncated"] = report.witnesses_truncated;
  out["all_realizations_geodetic"] = report.all_realizations_geodetic;
  out["caveat"] = report.caveat ? nlohmann::json(*report.caveat)
                                : nlohmann::json(nullptr);
  if (include_timing) out["elapsed_ms"] = report.elapsed.count();
  return out;
}

}  // namespace geodetic
