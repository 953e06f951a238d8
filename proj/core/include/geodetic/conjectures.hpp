#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "geodetic/distance.hpp"
#include "geodetic/graph.hpp"
#include "geodetic/predicates.hpp"

namespace geodetic {

// A simple cycle of a host graph. g_diameter is the largest HOST distance
// between two cycle vertices, not the distance inside the cycle.
struct CycleInstance {
  std::vector<Vertex> vertices;
  int length = 0;
  std::uint32_t g_diameter = 0;
};

inline constexpr std::uint64_t kDefaultMaxCycles = 50'000'000;

// Cycles of length 3..max_len in increasing length order, each once up to
// rotation and reflection. Stops early when visit returns false. Throws
// BudgetExceededError after max_cycles cycles.
void ForEachCycleInstance(const Graph& g, const DistanceData& distances,
                          int max_len, std::uint64_t max_cycles,
                          const std::function<bool(const CycleInstance&)>& visit);

std::vector<CycleInstance> EnumerateCycles(
    const Graph& g, int max_len, std::uint64_t max_cycles = kDefaultMaxCycles);

enum class VerdictStatus { kPass, kFail, kVacuous };
std::string_view VerdictStatusName(VerdictStatus status);

struct CycleWitness {
  CycleInstance cycle;
  // arc_distances[i]: host distance between cycle[i] and cycle[i + t + 1],
  // the endpoints of the arc of t + 1 edges starting at position i.
  std::vector<std::uint32_t> arc_distances;
};

struct ConjectureVerdict {
  VerdictStatus status = VerdictStatus::kVacuous;
  int t = 0;
  int max_len = 0;
  std::optional<int> minimal_cycle_length;
  std::vector<CycleWitness> witnesses;
  std::uint32_t host_diameter = 0;
  // t + 1 exceeds the host diameter: no geodesic of length t + 1 exists, and
  // no cycle can have diameter above t either.
  bool conclusion_unsatisfiable = false;
  std::uint64_t cycles_examined = 0;
  std::uint64_t qualifying_cycles = 0;
};

// Finite check of the embedded-cycle conjecture for geodetic graphs: among
// cycles of host diameter > t, every one of minimal length must contain an
// arc of t + 1 consecutive edges whose endpoints lie at host distance t + 1.
// Cycles longer than max_len are not examined; if none qualifies within
// max_len the verdict is vacuous. Throws Error{kDisconnected, kNotGeodetic,
// kInvalidArgument} and BudgetExceededError.
ConjectureVerdict CheckCycleConjecture(
    const Graph& g, int t, int max_len,
    std::uint64_t max_cycles = kDefaultMaxCycles);

nlohmann::json ToJson(const ConjectureVerdict& verdict);

// Machine-readable record of a failing verdict: host graph (graph6), t, and
// for every witness cycle its vertex sequence and per-arc distance table.
nlohmann::json CounterexampleArtifact(const Graph& g,
                                      const ConjectureVerdict& verdict);

struct Classification {
  bool connected = false;
  bool geodetic = false;
  std::optional<SrgParams> srg;
  std::optional<MooreParams> moore;
  bool block = false;
};

Classification Classify(const Graph& g);

// Conjunction of (possibly negated) properties, written like
// "geodetic&srg&!moore". Accepted atoms: geodetic, srg, moore, block, all.
class GraphPredicate {
 public:
  static GraphPredicate Parse(std::string_view text);
  bool Matches(const Classification& c) const;
  const std::string& text() const { return text_; }

 private:
  struct Atom {
    std::string name;
    bool negated = false;
  };
  std::vector<Atom> atoms_;
  std::string text_;
};

struct FilterStats {
  // Every record read, malformed ones included.
  std::uint64_t scanned = 0;
  std::uint64_t malformed = 0;
  std::uint64_t geodetic = 0;
  std::uint64_t strongly_regular = 0;
  std::uint64_t both = 0;
  std::uint64_t both_non_moore = 0;
  std::vector<std::string> survivors;
};

struct GraphRecord {
  std::string id;
  // graph6 text, or edge-list text when is_edge_list is set.
  std::string payload;
  bool is_edge_list = false;
};

struct Survivor {
  std::string id;
  Graph graph;
  Classification classification;
};

struct ClassifyOptions {
  int workers = 1;
  std::size_t chunk_size = 1024;
};

// Classifies records chunk by chunk (in parallel within a chunk) and emits
// matching graphs in input order. Malformed records are counted, reported
// through warn, and skipped.
FilterStats ClassifyStream(
    const std::function<std::optional<GraphRecord>()>& next_record,
    const GraphPredicate& predicate, const ClassifyOptions& options,
    const std::function<void(const Survivor&)>& emit,
    const std::function<void(const std::string&)>& warn);

// Record source over graph6 lines; blank lines are skipped, ids are
// "line:<n>".
std::function<std::optional<GraphRecord>()> Graph6LineSource(std::istream& in);

nlohmann::json ToJson(const FilterStats& stats);
nlohmann::json ToJson(const Classification& c);

}  // namespace geodetic
