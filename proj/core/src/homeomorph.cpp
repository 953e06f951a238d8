#include "geodetic/homeomorph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "geodetic/builders.hpp"
#include "geodetic/cycles.hpp"
#include "geodetic/error.hpp"
#include "geodetic/predicates.hpp"

namespace geodetic {
namespace {

std::vector<EdgeId> EdgesAlong(const Graph& base,
                               std::span<const Vertex> vertices, bool closed) {
  std::vector<EdgeId> edges;
  const std::size_t steps = closed ? vertices.size() : vertices.size() - 1;
  edges.reserve(steps);
  for (std::size_t i = 0; i < steps; ++i) {
    edges.push_back(
        base.edge_id(vertices[i], vertices[(i + 1) % vertices.size()]));
  }
  return edges;
}

}  // namespace

Skeleton Skeleton::FromMooreBase(Graph base, std::string name) {
  if (!base.is_connected()) {
    throw Error(ErrorCode::kNotMooreBase, "base graph is disconnected");
  }
  const auto moore = MooreParamsOf(base);
  if (!moore) {
    throw Error(ErrorCode::kNotMooreBase,
                "base graph '" + name + "' is not a Moore graph");
  }
  if (moore->k < 3) {
    throw Error(ErrorCode::kNotMooreBase,
                "base graph '" + name + "' has degree " +
                    std::to_string(moore->k) +
                    "; every base vertex must be a node (degree >= 3)");
  }
  return Skeleton{std::move(base), moore->d, std::move(name)};
}

Skeleton Skeleton::Named(std::string_view name) {
  return FromMooreBase(BuiltinGraph(name), std::string(name));
}

void ValidateLengths(const Graph& base, const LengthVector& lv) {
  if (lv.size() != base.num_edges()) {
    throw Error(ErrorCode::kDomainMismatch,
                "length vector has " + std::to_string(lv.size()) +
                    " entries but the base has " +
                    std::to_string(base.num_edges()) + " edges");
  }
  for (std::size_t e = 0; e < lv.size(); ++e) {
    if (lv.lengths[e] < 1) {
      throw Error(ErrorCode::kDomainMismatch,
                  "segment length of edge " + std::to_string(e) +
                      " must be >= 1, got " + std::to_string(lv.lengths[e]));
    }
  }
}

Graph Realize(const Graph& base, const LengthVector& lv) {
  ValidateLengths(base, lv);
  Vertex next = base.num_vertices();
  std::vector<Edge> edges;
  for (EdgeId id = 0; id < static_cast<EdgeId>(base.num_edges()); ++id) {
    const Edge& e = base.edge(id);
    Vertex prev = e.u;
    for (int step = 1; step < lv[id]; ++step) {
      edges.push_back({prev, next});
      prev = next++;
    }
    edges.push_back({prev, e.v});
  }
  return Graph::FromEdges(std::span<const Edge>(edges), next);
}

void SubdivisionBuilder::Build(std::span<const int> lengths) {
  const Vertex nb = base_.num_vertices();
  Vertex n = nb;
  for (int len : lengths) n += len - 1;

  offsets_.resize(static_cast<std::size_t>(n) + 1);
  for (Vertex v = 0; v < nb; ++v) offsets_[v + 1] = offsets_[v] + base_.degree(v);
  for (Vertex v = nb; v < n; ++v) offsets_[v + 1] = offsets_[v] + 2;
  neighbors_.resize(offsets_[n]);
  fill_.assign(offsets_.begin(), offsets_.begin() + nb);

  Vertex next = nb;
  const auto edges = base_.edges();
  for (std::size_t id = 0; id < edges.size(); ++id) {
    const Edge& e = edges[id];
    const int len = lengths[id];
    if (len == 1) {
      neighbors_[fill_[e.u]++] = e.v;
      neighbors_[fill_[e.v]++] = e.u;
      continue;
    }
    // Interior vertices next .. next+len-2, in order from e.u to e.v.
    const Vertex first = next;
    const Vertex last = next + len - 2;
    neighbors_[fill_[e.u]++] = first;
    neighbors_[fill_[e.v]++] = last;
    for (Vertex x = first; x <= last; ++x) {
      neighbors_[offsets_[x]] = x == first ? e.u : x - 1;
      neighbors_[offsets_[x] + 1] = x == last ? e.v : x + 1;
    }
    next = last + 1;
  }
}

SkeletonizeResult Skeletonize(const Graph& g) {
  const Vertex n = g.num_vertices();
  if (!g.is_connected()) {
    throw Error(ErrorCode::kDisconnected, "cannot skeletonize a disconnected graph");
  }
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) == 1) {
      throw Error(ErrorCode::kPendantVertex,
                  "vertex " + std::to_string(v) + " has degree 1");
    }
  }
  if (g.max_degree() <= 2) {
    throw Error(ErrorCode::kNoNodes, "graph has no vertex of degree >= 3");
  }

  std::vector<Vertex> relabel(n, -1);
  Vertex nodes = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) >= 3) relabel[v] = nodes++;
  }

  std::map<Edge, int> segments;
  for (Vertex a = 0; a < n; ++a) {
    if (relabel[a] < 0) continue;
    for (Vertex first : g.neighbors(a)) {
      Vertex prev = a;
      Vertex cur = first;
      int length = 1;
      while (relabel[cur] < 0) {
        const auto nbrs = g.neighbors(cur);
        const Vertex step = nbrs[0] == prev ? nbrs[1] : nbrs[0];
        prev = cur;
        cur = step;
        ++length;
      }
      if (cur == a) {
        throw Error(ErrorCode::kLoopSegment,
                    "segment from node " + std::to_string(a) +
                        " returns to itself");
      }
      if (a > cur) continue;  // Recorded from the other end.
      const Edge key{relabel[a], relabel[cur]};
      if (!segments.emplace(key, length).second) {
        throw Error(ErrorCode::kMultiEdgeCollapse,
                    "nodes " + std::to_string(a) + " and " +
                        std::to_string(cur) +
                        " are joined by parallel segments");
      }
    }
  }

  std::vector<Edge> base_edges;
  std::vector<int> lengths;
  for (const auto& [edge, length] : segments) {
    base_edges.push_back(edge);
    lengths.push_back(length);
  }
  // std::map iterates in canonical (u, v) order, matching Graph's edge ids.
  return {Graph::FromEdges(std::span<const Edge>(base_edges), nodes),
          LengthVector{std::move(lengths)}};
}

std::vector<SegmentCycle> SegmentCycles(const Graph& base, int m) {
  std::vector<SegmentCycle> cycles;
  ForEachSimpleCycle(base, m, [&](std::span<const Vertex> vertices) {
    cycles.push_back({EdgesAlong(base, vertices, true),
                      std::vector<Vertex>(vertices.begin(), vertices.end())});
    return true;
  });
  return cycles;
}

std::vector<SegmentPath> SegmentPaths(const Graph& base, int d0) {
  std::vector<SegmentPath> paths;
  for (auto& vertices : SimplePaths(base, d0)) {
    auto edges = EdgesAlong(base, vertices, false);
    paths.push_back({std::move(edges), std::move(vertices)});
  }
  return paths;
}

std::int64_t SegmentSum(std::span<const EdgeId> edges, const LengthVector& lv) {
  std::int64_t sum = 0;
  for (EdgeId e : edges) sum += lv[e];
  return sum;
}

ConditionChecker::ConditionChecker(const Skeleton& skeleton)
    : skeleton_(skeleton),
      paths_(SegmentPaths(skeleton.base, skeleton.d0)),
      odd_cycles_(SegmentCycles(skeleton.base, 2 * skeleton.d0 + 1)),
      even_cycles_(SegmentCycles(skeleton.base, 2 * skeleton.d0 + 2)) {}

C1Verdict ConditionChecker::CheckC1(const LengthVector& lv) const {
  ValidateLengths(skeleton_.base, lv);
  const Graph realized = Realize(skeleton_.base, lv);
  C1Verdict verdict;
  std::vector<BfsRow> rows(skeleton_.base.num_vertices());
  for (const SegmentPath& path : paths_) {
    BfsRow& row = rows[path.from()];
    if (row.dist.empty()) row = BfsCounts(realized, path.from());
    const std::int64_t length = SegmentSum(path.edges, lv);
    const std::uint32_t distance = row.dist[path.to()];
    if (length != static_cast<std::int64_t>(distance)) {
      verdict.passed = false;
      verdict.violations.push_back({path, length, distance});
    }
  }
  return verdict;
}

C2Verdict ConditionChecker::CheckC2(const LengthVector& lv) const {
  ValidateLengths(skeleton_.base, lv);
  C2Verdict verdict;
  for (const SegmentCycle& cycle : odd_cycles_) {
    const std::int64_t sum = SegmentSum(cycle.edges, lv);
    if (sum % 2 == 0) {
      verdict.passed = false;
      verdict.violations.push_back({cycle, sum});
    }
  }
  return verdict;
}

C3Verdict ConditionChecker::CheckC3(const LengthVector& lv) const {
  ValidateLengths(skeleton_.base, lv);
  C3Verdict verdict;
  for (const SegmentCycle& cycle : even_cycles_) {
    verdict.sums.try_emplace(SegmentSum(cycle.edges, lv), cycle);
  }
  verdict.passed = verdict.sums.size() <= 1;
  return verdict;
}

ConditionReport ConditionChecker::CheckAll(const LengthVector& lv) const {
  ConditionReport report;
  report.c1 = CheckC1(lv);
  report.c2 = CheckC2(lv);
  report.c3 = CheckC3(lv);
  const Graph realized = Realize(skeleton_.base, lv);
  report.realized_diameter = Diameter(realized);
  report.geodetic = IsGeodetic(realized);
  return report;
}

C1Verdict CheckC1(const Skeleton& s, const LengthVector& lv) {
  return ConditionChecker(s).CheckC1(lv);
}
C2Verdict CheckC2(const Skeleton& s, const LengthVector& lv) {
  return ConditionChecker(s).CheckC2(lv);
}
C3Verdict CheckC3(const Skeleton& s, const LengthVector& lv) {
  return ConditionChecker(s).CheckC3(lv);
}
ConditionReport CheckAllConditions(const Skeleton& s, const LengthVector& lv) {
  return ConditionChecker(s).CheckAll(lv);
}

std::string FormatLengthVector(const Graph& base, const LengthVector& lv) {
  ValidateLengths(base, lv);
  std::string out;
  for (EdgeId id = 0; id < static_cast<EdgeId>(base.num_edges()); ++id) {
    const Edge& e = base.edge(id);
    out += std::to_string(e.u) + ' ' + std::to_string(e.v) + ' ' +
           std::to_string(lv[id]) + '\n';
  }
  return out;
}

LengthVector ParseLengthVector(const Graph& base, std::string_view text) {
  LengthVector lv{std::vector<int>(base.num_edges(), 0)};
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  std::size_t seen = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::istringstream fields(line);
    long long u = 0, v = 0, length = 0;
    std::string extra;
    if (!(fields >> u >> v >> length) || (fields >> extra)) {
      throw Error(ErrorCode::kParse, "line " + std::to_string(line_no) +
                                         ": expected 'u v length'");
    }
    const EdgeId id = base.edge_id(static_cast<Vertex>(u), static_cast<Vertex>(v));
    if (id < 0) {
      throw Error(ErrorCode::kDomainMismatch,
                  "line " + std::to_string(line_no) + ": (" +
                      std::to_string(u) + ", " + std::to_string(v) +
                      ") is not a base edge");
    }
    if (lv.lengths[id] != 0) {
      throw Error(ErrorCode::kDomainMismatch,
                  "line " + std::to_string(line_no) + ": edge listed twice");
    }
    if (length < 1 || length > INT32_MAX) {
      throw Error(ErrorCode::kDomainMismatch,
                  "line " + std::to_string(line_no) + ": length must be >= 1");
    }
    lv.lengths[id] = static_cast<int>(length);
    ++seen;
  }
  if (seen != base.num_edges()) {
    throw Error(ErrorCode::kDomainMismatch,
                "length vector covers " + std::to_string(seen) + " of " +
                    std::to_string(base.num_edges()) + " base edges");
  }
  return lv;
}

}  // namespace geodetic
