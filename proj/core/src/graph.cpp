#include "geodetic/graph.hpp"

#include <algorithm>
#include <string>

#include "geodetic/error.hpp"

namespace geodetic {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kSelfLoop: return "SelfLoop";
    case ErrorCode::kVertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::kDisconnected: return "Disconnected";
    case ErrorCode::kInvalidSize: return "InvalidSize";
    case ErrorCode::kDomainMismatch: return "DomainMismatch";
    case ErrorCode::kNoNodes: return "NoNodes";
    case ErrorCode::kPendantVertex: return "PendantVertex";
    case ErrorCode::kMultiEdgeCollapse: return "MultiEdgeCollapse";
    case ErrorCode::kLoopSegment: return "LoopSegment";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kNotMooreBase: return "NotMooreBase";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kNotGeodetic: return "NotGeodetic";
    case ErrorCode::kParse: return "ParseError";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Graph Graph::FromEdges(std::span<const Edge> edges, Vertex n) {
  if (n < 0) {
    throw Error(ErrorCode::kInvalidSize, "negative vertex count");
  }
  std::vector<Edge> normalized;
  normalized.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
      throw Error(ErrorCode::kVertexOutOfRange,
                  "edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                      ") has an endpoint outside 0.." + std::to_string(n - 1));
    }
    if (e.u == e.v) {
      throw Error(ErrorCode::kSelfLoop,
                  "self-loop at vertex " + std::to_string(e.u));
    }
    normalized.push_back(e.u < e.v ? e : Edge{e.v, e.u});
  }
  std::sort(normalized.begin(), normalized.end());
  normalized.erase(std::unique(normalized.begin(), normalized.end()),
                   normalized.end());

  Graph g;
  g.edges_ = std::move(normalized);
  g.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (const Edge& e : g.edges_) {
    ++g.offsets_[e.u + 1];
    ++g.offsets_[e.v + 1];
  }
  for (Vertex v = 0; v < n; ++v) g.offsets_[v + 1] += g.offsets_[v];

  g.neighbors_.resize(2 * g.edges_.size());
  g.slot_edge_.resize(2 * g.edges_.size());
  std::vector<std::int32_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for (EdgeId id = 0; id < static_cast<EdgeId>(g.edges_.size()); ++id) {
    const Edge& e = g.edges_[id];
    g.neighbors_[fill[e.u]] = e.v;
    g.slot_edge_[fill[e.u]++] = id;
    g.neighbors_[fill[e.v]] = e.u;
    g.slot_edge_[fill[e.v]++] = id;
  }
  // u-side and v-side insertions interleave; restore ascending order.
  for (Vertex v = 0; v < n; ++v) {
    const auto begin = g.offsets_[v];
    const auto end = g.offsets_[v + 1];
    std::vector<std::pair<Vertex, EdgeId>> slots;
    slots.reserve(end - begin);
    for (auto i = begin; i < end; ++i) {
      slots.emplace_back(g.neighbors_[i], g.slot_edge_[i]);
    }
    std::sort(slots.begin(), slots.end());
    for (auto i = begin; i < end; ++i) {
      g.neighbors_[i] = slots[i - begin].first;
      g.slot_edge_[i] = slots[i - begin].second;
    }
  }
  return g;
}

Graph Graph::FromEdges(std::span<const std::pair<int, int>> edges, Vertex n) {
  std::vector<Edge> converted;
  converted.reserve(edges.size());
  for (const auto& [u, v] : edges) converted.push_back({u, v});
  return FromEdges(std::span<const Edge>(converted), n);
}

int Graph::max_degree() const {
  int best = 0;
  for (Vertex v = 0; v < num_vertices(); ++v) best = std::max(best, degree(v));
  return best;
}

int Graph::min_degree() const {
  if (num_vertices() == 0) return 0;
  int best = degree(0);
  for (Vertex v = 1; v < num_vertices(); ++v) best = std::min(best, degree(v));
  return best;
}

EdgeId Graph::edge_id(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || u >= num_vertices() || v >= num_vertices()) return -1;
  const auto nbrs = neighbors(u);
  const auto it = std::lower_bound(nbrs.begin(), nbrs.end(), v);
  if (it == nbrs.end() || *it != v) return -1;
  return slot_edge_[offsets_[u] + (it - nbrs.begin())];
}

bool Graph::is_connected() const {
  const Vertex n = num_vertices();
  if (n <= 1) return true;
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack = {0};
  seen[0] = 1;
  Vertex reached = 1;
  while (!stack.empty()) {
    const Vertex u = stack.back();
    stack.pop_back();
    for (Vertex w : neighbors(u)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n;
}

}  // namespace geodetic
