#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace geodetic {

using Vertex = std::int32_t;
using EdgeId = std::int32_t;

struct Edge {
  Vertex u;
  Vertex v;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Immutable simple undirected graph on vertices 0..n-1.
//
// Adjacency is stored in compressed sparse row form with each neighbor list
// sorted ascending. Edges are numbered in canonical order: lexicographic on
// (u, v) with u < v. Every adjacency slot remembers the id of its edge so
// edge lookups are O(log deg).
class Graph {
 public:
  Graph() = default;

  // Duplicate edges collapse. Throws Error{kSelfLoop} or
  // Error{kVertexOutOfRange}.
  static Graph FromEdges(std::span<const Edge> edges, Vertex n);
  static Graph FromEdges(std::span<const std::pair<int, int>> edges, Vertex n);

  Vertex num_vertices() const { return static_cast<Vertex>(degree_offsets()); }
  std::size_t num_edges() const { return edges_.size(); }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {neighbors_.data() + offsets_[v],
            static_cast<std::size_t>(offsets_[v + 1] - offsets_[v])};
  }
  // Edge ids parallel to neighbors(v).
  std::span<const EdgeId> incident_edges(Vertex v) const {
    return {slot_edge_.data() + offsets_[v],
            static_cast<std::size_t>(offsets_[v + 1] - offsets_[v])};
  }
  int degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  int max_degree() const;
  int min_degree() const;

  bool has_edge(Vertex u, Vertex v) const { return edge_id(u, v) >= 0; }
  // -1 when absent.
  EdgeId edge_id(Vertex u, Vertex v) const;

  // Canonical edge list, u < v, lexicographically sorted.
  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }

  // Raw CSR views for tight inner loops.
  std::span<const std::int32_t> offsets() const { return offsets_; }
  std::span<const Vertex> flat_neighbors() const { return neighbors_; }

  bool is_connected() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.offsets_ == b.offsets_ && a.neighbors_ == b.neighbors_;
  }

 private:
  std::size_t degree_offsets() const {
    return offsets_.empty() ? 0 : offsets_.size() - 1;
  }

  std::vector<std::int32_t> offsets_{0};
  std::vector<Vertex> neighbors_;
  std::vector<EdgeId> slot_edge_;
  std::vector<Edge> edges_;
};

}  // namespace geodetic
