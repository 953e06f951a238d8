#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "geodetic/graph.hpp"

namespace geodetic {

inline constexpr std::uint32_t kUnreachable =
    std::numeric_limits<std::uint32_t>::max();

// Geodesic multiplicities either saturate at 2 ("at least two", enough for
// every uniqueness predicate) or are counted exactly with saturation at
// UINT64_MAX for diagnostics.
enum class CountMode { kSaturating, kExact };

struct BfsRow {
  std::vector<std::uint32_t> dist;
  std::vector<std::uint64_t> count;
};

// Single-source BFS with shortest-path counting:
//   count[v] = sum of count[u] over neighbors u with dist[u] == dist[v] - 1.
BfsRow BfsCounts(const Graph& g, Vertex source,
                 CountMode mode = CountMode::kSaturating);

// All-pairs hop distances and geodesic multiplicities.
class DistanceData {
 public:
  // Rows are computed independently (optionally on `workers` threads) and
  // stored by source index, so the result does not depend on worker count.
  static DistanceData Compute(const Graph& g,
                              CountMode mode = CountMode::kSaturating,
                              int workers = 1);

  Vertex size() const { return n_; }
  std::uint32_t distance(Vertex u, Vertex v) const {
    return dist_[static_cast<std::size_t>(u) * n_ + v];
  }
  std::uint64_t geodesic_count(Vertex u, Vertex v) const {
    return count_[static_cast<std::size_t>(u) * n_ + v];
  }
  std::span<const std::uint32_t> distance_row(Vertex u) const {
    return {dist_.data() + static_cast<std::size_t>(u) * n_,
            static_cast<std::size_t>(n_)};
  }
  bool connected() const;
  // Largest finite entry; 0 for graphs with fewer than two vertices.
  std::uint32_t max_finite_distance() const;

 private:
  Vertex n_ = 0;
  std::vector<std::uint32_t> dist_;
  std::vector<std::uint64_t> count_;
};

// Throws Error{kDisconnected}.
int Diameter(const Graph& g);

struct GeodeticVerdict {
  bool geodetic = true;
  // A pair joined by at least two geodesics when !geodetic.
  std::optional<Edge> witness;
  std::uint64_t multiplicity = 1;
  std::uint32_t witness_distance = 0;
};

// Throws Error{kDisconnected}.
GeodeticVerdict IsGeodetic(const Graph& g,
                           CountMode mode = CountMode::kSaturating);

// Reusable all-sources BFS over a raw CSR adjacency. Built for inner loops of
// the enumeration engines: buffers are kept between calls and the sweep stops
// at the first vertex pair with two geodesics.
class GeodesicProbe {
 public:
  struct Result {
    bool connected = true;
    bool geodetic = true;
    std::uint32_t diameter = 0;
  };

  // The sweep stops at the first pair with two geodesics, so connected and
  // diameter are only meaningful when geodetic is true. A disconnected graph
  // always reports geodetic == false. Distance rows of sources
  // 0..kept_sources-1 stay readable via distance() after a geodetic run.
  Result Run(std::span<const std::int32_t> offsets,
             std::span<const Vertex> neighbors, Vertex kept_sources = 0);

  std::uint32_t distance(Vertex source, Vertex v) const {
    return kept_[static_cast<std::size_t>(source) * n_ + v];
  }

 private:
  Vertex n_ = 0;
  std::vector<std::uint32_t> dist_;
  std::vector<Vertex> queue_;
  std::vector<std::uint32_t> kept_;
};

}  // namespace geodetic
