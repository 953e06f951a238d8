#include "geodetic/conjectures.hpp"

#include <algorithm>
#include <istream>
#include <thread>

#include "geodetic/cycles.hpp"
#include "geodetic/error.hpp"
#include "geodetic/graph_io.hpp"

namespace geodetic {
namespace {

std::uint32_t HostDiameterOf(std::span<const Vertex> cycle,
                             const DistanceData& distances) {
  std::uint32_t best = 0;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    for (std::size_t j = i + 1; j < cycle.size(); ++j) {
      best = std::max(best, distances.distance(cycle[i], cycle[j]));
    }
  }
  return best;
}

std::vector<std::uint32_t> ArcDistances(const CycleInstance& cycle, int t,
                                        const DistanceData& distances) {
  std::vector<std::uint32_t> table;
  const auto len = cycle.vertices.size();
  for (std::size_t i = 0; i < len; ++i) {
    table.push_back(distances.distance(cycle.vertices[i],
                                       cycle.vertices[(i + t + 1) % len]));
  }
  return table;
}

}  // namespace

std::string_view VerdictStatusName(VerdictStatus status) {
  switch (status) {
    case VerdictStatus::kPass: return "pass";
    case VerdictStatus::kFail: return "fail";
    case VerdictStatus::kVacuous: return "vacuous";
  }
  return "unknown";
}

void ForEachCycleInstance(
    const Graph& g, const DistanceData& distances, int max_len,
    std::uint64_t max_cycles,
    const std::function<bool(const CycleInstance&)>& visit) {
  if (max_len < 3) {
    throw Error(ErrorCode::kInvalidArgument, "max_len must be >= 3");
  }
  std::uint64_t seen = 0;
  for (int len = 3; len <= std::min(max_len, g.num_vertices()); ++len) {
    bool keep_going = true;
    ForEachSimpleCycle(g, len, [&](std::span<const Vertex> vertices) {
      if (++seen > max_cycles) {
        throw BudgetExceededError("more than " + std::to_string(max_cycles) +
                                      " cycles of length <= " +
                                      std::to_string(max_len),
                                  0, 0, "");
      }
      CycleInstance cycle{std::vector<Vertex>(vertices.begin(), vertices.end()),
                          len, HostDiameterOf(vertices, distances)};
      keep_going = visit(cycle);
      return keep_going;
    });
    if (!keep_going) return;
  }
}

std::vector<CycleInstance> EnumerateCycles(const Graph& g, int max_len,
                                           std::uint64_t max_cycles) {
  const DistanceData distances = DistanceData::Compute(g);
  std::vector<CycleInstance> cycles;
  ForEachCycleInstance(g, distances, max_len, max_cycles,
                       [&](const CycleInstance& c) {
                         cycles.push_back(c);
                         return true;
                       });
  return cycles;
}

ConjectureVerdict CheckCycleConjecture(const Graph& g, int t, int max_len,
                                       std::uint64_t max_cycles) {
  if (t < 1) throw Error(ErrorCode::kInvalidArgument, "t must be >= 1");
  const GeodeticVerdict geodetic = IsGeodetic(g);  // throws if disconnected
  if (!geodetic.geodetic) {
    throw Error(ErrorCode::kNotGeodetic,
                "host graph is not geodetic: vertices " +
                    std::to_string(geodetic.witness->u) + " and " +
                    std::to_string(geodetic.witness->v) +
                    " have several geodesics");
  }
  const DistanceData distances = DistanceData::Compute(g);

  ConjectureVerdict verdict;
  verdict.t = t;
  verdict.max_len = max_len;
  verdict.host_diameter = distances.max_finite_distance();
  verdict.conclusion_unsatisfiable =
      static_cast<std::uint32_t>(t) + 1 > verdict.host_diameter;
  if (verdict.conclusion_unsatisfiable) return verdict;

  int minimal = 0;
  ForEachCycleInstance(
      g, distances, max_len, max_cycles, [&](const CycleInstance& cycle) {
        ++verdict.cycles_examined;
        if (minimal != 0 && cycle.length > minimal) return false;
        if (cycle.g_diameter <= static_cast<std::uint32_t>(t)) return true;
        minimal = cycle.length;
        ++verdict.qualifying_cycles;
        auto table = ArcDistances(cycle, t, distances);
        const bool has_geodesic_arc =
            std::find(table.begin(), table.end(),
                      static_cast<std::uint32_t>(t + 1)) != table.end();
        if (!has_geodesic_arc) verdict.witnesses.push_back({cycle, std::move(table)});
        return true;
      });

  if (minimal == 0) return verdict;
  verdict.minimal_cycle_length = minimal;
  verdict.status =
      verdict.witnesses.empty() ? VerdictStatus::kPass : VerdictStatus::kFail;
  return verdict;
}

nlohmann::json ToJson(const ConjectureVerdict& verdict) {
  nlohmann::json out;
  out["status"] = VerdictStatusName(verdict.status);
  out["t"] = verdict.t;
  out["max_len"] = verdict.max_len;
  out["minimal_cycle_length"] =
      verdict.minimal_cycle_length ? nlohmann::json(*verdict.minimal_cycle_length)
                                   : nlohmann::json(nullptr);
  out["host_diameter"] = verdict.host_diameter;
  out["conclusion_unsatisfiable"] = verdict.conclusion_unsatisfiable;
  out["cycles_examined"] = verdict.cycles_examined;
  out["qualifying_cycles"] = verdict.qualifying_cycles;
  out["readings"] = {{"cycle_diameter", "host-distance"},
                     {"minimal_among", "cycles"}};
  nlohmann::json witnesses = nlohmann::json::array();
  for (const CycleWitness& w : verdict.witnesses) {
    witnesses.push_back({{"cycle", w.cycle.vertices},
                         {"length", w.cycle.length},
                         {"g_diameter", w.cycle.g_diameter},
                         {"arc_distances", w.arc_distances}});
  }
  out["witnesses"] = std::move(witnesses);
  return out;
}

nlohmann::json CounterexampleArtifact(const Graph& g,
                                      const ConjectureVerdict& verdict) {
  nlohmann::json out;
  out["host_graph6"] = EncodeGraph6(g);
  out["t"] = verdict.t;
  out["minimal_cycle_length"] =
      verdict.minimal_cycle_length ? nlohmann::json(*verdict.minimal_cycle_length)
                                   : nlohmann::json(nullptr);
  nlohmann::json cycles = nlohmann::json::array();
  for (const CycleWitness& w : verdict.witnesses) {
    nlohmann::json arcs = nlohmann::json::array();
    const auto len = w.cycle.vertices.size();
    for (std::size_t i = 0; i < len; ++i) {
      arcs.push_back({{"from", w.cycle.vertices[i]},
                      {"to", w.cycle.vertices[(i + verdict.t + 1) % len]},
                      {"arc_length", verdict.t + 1},
                      {"host_distance", w.arc_distances[i]}});
    }
    cycles.push_back({{"cycle", w.cycle.vertices}, {"arcs", std::move(arcs)}});
  }
  out["cycles"] = std::move(cycles);
  return out;
}

Classification Classify(const Graph& g) {
  Classification c;
  c.connected = g.is_connected();
  c.srg = StronglyRegularParams(g);
  if (c.connected && g.num_vertices() > 0) {
    c.geodetic = IsGeodetic(g).geodetic;
    c.moore = MooreParamsOf(g);
  }
  c.block = IsBlock(g);
  return c;
}

GraphPredicate GraphPredicate::Parse(std::string_view text) {
  GraphPredicate predicate;
  predicate.text_ = std::string(text);
  std::string current;
  auto flush = [&] {
    if (current.empty()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "empty term in predicate '" + predicate.text_ + "'");
    }
    Atom atom;
    atom.negated = current.front() == '!';
    atom.name = atom.negated ? current.substr(1) : current;
    if (atom.name != "geodetic" && atom.name != "srg" &&
        atom.name != "moore" && atom.name != "block" && atom.name != "all") {
      throw Error(ErrorCode::kInvalidArgument,
                  "unknown predicate term '" + atom.name +
                      "' (expected geodetic, srg, moore, block or all)");
    }
    predicate.atoms_.push_back(std::move(atom));
    current.clear();
  };
  for (char ch : text) {
    if (ch == '&' || ch == ',') {
      flush();
    } else if (ch != ' ') {
      current.push_back(ch);
    }
  }
  flush();
  return predicate;
}

bool GraphPredicate::Matches(const Classification& c) const {
  for (const Atom& atom : atoms_) {
    bool value = true;
    if (atom.name == "geodetic") value = c.geodetic;
    else if (atom.name == "srg") value = c.srg.has_value();
    else if (atom.name == "moore") value = c.moore.has_value();
    else if (atom.name == "block") value = c.block;
    if (value == atom.negated) return false;
  }
  return true;
}

FilterStats ClassifyStream(
    const std::function<std::optional<GraphRecord>()>& next_record,
    const GraphPredicate& predicate, const ClassifyOptions& options,
    const std::function<void(const Survivor&)>& emit,
    const std::function<void(const std::string&)>& warn) {
  struct Slot {
    GraphRecord record;
    std::optional<Graph> graph;
    Classification classification;
    std::string error;
  };
  FilterStats stats;
  const std::size_t chunk_size = std::max<std::size_t>(1, options.chunk_size);
  std::vector<Slot> chunk;
  bool exhausted = false;
  while (!exhausted) {
    chunk.clear();
    while (chunk.size() < chunk_size) {
      auto record = next_record();
      if (!record) {
        exhausted = true;
        break;
      }
      chunk.push_back({std::move(*record), std::nullopt, {}, {}});
    }

    auto process = [&](std::size_t stripe, std::size_t stride) {
      for (std::size_t i = stripe; i < chunk.size(); i += stride) {
        Slot& slot = chunk[i];
        try {
          slot.graph = slot.record.is_edge_list
                           ? ParseEdgeList(slot.record.payload)
                           : DecodeGraph6(slot.record.payload);
          slot.classification = Classify(*slot.graph);
        } catch (const Error& e) {
          slot.graph.reset();
          slot.error = e.what();
        }
      }
    };
    const auto workers = static_cast<std::size_t>(std::max(1, options.workers));
    if (workers == 1 || chunk.size() < 2) {
      process(0, 1);
    } else {
      std::vector<std::jthread> pool;
      for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(process, w, workers);
    }

    for (Slot& slot : chunk) {
      ++stats.scanned;
      if (!slot.graph) {
        ++stats.malformed;
        warn(slot.record.id + ": " + slot.error);
        continue;
      }
      const Classification& c = slot.classification;
      stats.geodetic += c.geodetic;
      stats.strongly_regular += c.srg.has_value();
      const bool both = c.geodetic && c.srg.has_value();
      stats.both += both;
      stats.both_non_moore += both && !c.moore.has_value();
      if (predicate.Matches(c)) {
        stats.survivors.push_back(slot.record.id);
        emit(Survivor{slot.record.id, std::move(*slot.graph), c});
      }
    }
  }
  return stats;
}

std::function<std::optional<GraphRecord>()> Graph6LineSource(std::istream& in) {
  return [&in, line_no = std::size_t{0}]() mutable -> std::optional<GraphRecord> {
    std::string line;
    while (std::getline(in, line)) {
      ++line_no;
      const auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos) continue;
      return GraphRecord{"line:" + std::to_string(line_no), line, false};
    }
    return std::nullopt;
  };
}

nlohmann::json ToJson(const FilterStats& stats) {
  return {{"scanned", stats.scanned},
          {"malformed", stats.malformed},
          {"geodetic", stats.geodetic},
          {"strongly_regular", stats.strongly_regular},
          {"both", stats.both},
          {"both_non_moore", stats.both_non_moore},
          {"survivors", stats.survivors}};
}

nlohmann::json ToJson(const Classification& c) {
  nlohmann::json out;
  out["connected"] = c.connected;
  out["geodetic"] = c.geodetic;
  out["srg"] = c.srg ? nlohmann::json({c.srg->n, c.srg->k, c.srg->lambda, c.srg->mu})
                     : nlohmann::json(nullptr);
  out["moore"] = c.moore ? nlohmann::json({c.moore->k, c.moore->d})
                         : nlohmann::json(nullptr);
  out["block"] = c.block;
  return out;
}

}  // namespace geodetic
