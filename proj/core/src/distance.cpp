#include "geodetic/distance.hpp"

#include <algorithm>
#include <thread>

#include "geodetic/error.hpp"

namespace geodetic {
namespace {

std::uint64_t AddCounts(std::uint64_t a, std::uint64_t b, CountMode mode) {
  if (mode == CountMode::kSaturating) return std::min<std::uint64_t>(2, a + b);
  const std::uint64_t sum = a + b;
  return sum < a ? std::numeric_limits<std::uint64_t>::max() : sum;
}

void FillRow(const Graph& g, Vertex source, CountMode mode,
             std::span<std::uint32_t> dist, std::span<std::uint64_t> count,
             std::vector<Vertex>& queue) {
  std::fill(dist.begin(), dist.end(), kUnreachable);
  std::fill(count.begin(), count.end(), 0);
  queue.clear();
  dist[source] = 0;
  count[source] = 1;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    const std::uint32_t next = dist[u] + 1;
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] == kUnreachable) {
        dist[w] = next;
        queue.push_back(w);
      }
      if (dist[w] == next) count[w] = AddCounts(count[w], count[u], mode);
    }
  }
}

}  // namespace

BfsRow BfsCounts(const Graph& g, Vertex source, CountMode mode) {
  if (source < 0 || source >= g.num_vertices()) {
    throw Error(ErrorCode::kVertexOutOfRange,
                "BFS source " + std::to_string(source) + " out of range");
  }
  BfsRow row;
  row.dist.resize(g.num_vertices());
  row.count.resize(g.num_vertices());
  std::vector<Vertex> queue;
  queue.reserve(g.num_vertices());
  FillRow(g, source, mode, row.dist, row.count, queue);
  return row;
}

DistanceData DistanceData::Compute(const Graph& g, CountMode mode,
                                   int workers) {
  DistanceData data;
  const Vertex n = g.num_vertices();
  data.n_ = n;
  data.dist_.resize(static_cast<std::size_t>(n) * n);
  data.count_.resize(static_cast<std::size_t>(n) * n);

  auto run_stripe = [&](int stripe, int stride) {
    std::vector<Vertex> queue;
    queue.reserve(n);
    for (Vertex s = stripe; s < n; s += stride) {
      const std::size_t base = static_cast<std::size_t>(s) * n;
      FillRow(g, s, mode,
              std::span<std::uint32_t>(data.dist_.data() + base, n),
              std::span<std::uint64_t>(data.count_.data() + base, n), queue);
    }
  };

  workers = std::clamp(workers, 1, std::max<int>(1, n));
  if (workers == 1) {
    run_stripe(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(run_stripe, w, workers);
  }
  return data;
}

bool DistanceData::connected() const {
  return std::find(dist_.begin(), dist_.end(), kUnreachable) == dist_.end();
}

std::uint32_t DistanceData::max_finite_distance() const {
  std::uint32_t best = 0;
  for (std::uint32_t d : dist_) {
    if (d != kUnreachable) best = std::max(best, d);
  }
  return best;
}

int Diameter(const Graph& g) {
  if (!g.is_connected()) {
    throw Error(ErrorCode::kDisconnected, "diameter of a disconnected graph");
  }
  std::uint32_t best = 0;
  std::vector<Vertex> queue;
  std::vector<std::uint32_t> dist(g.num_vertices());
  std::vector<std::uint64_t> count(g.num_vertices());
  for (Vertex s = 0; s < g.num_vertices(); ++s) {
    FillRow(g, s, CountMode::kSaturating, dist, count, queue);
    best = std::max(best, *std::max_element(dist.begin(), dist.end()));
  }
  return static_cast<int>(best);
}

GeodeticVerdict IsGeodetic(const Graph& g, CountMode mode) {
  if (!g.is_connected()) {
    throw Error(ErrorCode::kDisconnected,
                "geodeticity is undefined for a disconnected graph");
  }
  GeodeticVerdict verdict;
  const Vertex n = g.num_vertices();
  std::vector<Vertex> queue;
  std::vector<std::uint32_t> dist(n);
  std::vector<std::uint64_t> count(n);
  for (Vertex s = 0; s < n; ++s) {
    FillRow(g, s, mode, dist, count, queue);
    for (Vertex v = s + 1; v < n; ++v) {
      if (count[v] >= 2) {
        verdict.geodetic = false;
        verdict.witness = Edge{s, v};
        verdict.multiplicity = count[v];
        verdict.witness_distance = dist[v];
        return verdict;
      }
    }
  }
  return verdict;
}

GeodesicProbe::Result GeodesicProbe::Run(std::span<const std::int32_t> offsets,
                                         std::span<const Vertex> neighbors,
                                         Vertex kept_sources) {
  Result result;
  n_ = static_cast<Vertex>(offsets.size()) - 1;
  dist_.resize(n_);
  queue_.resize(n_);
  kept_.resize(static_cast<std::size_t>(kept_sources) * n_);

  for (Vertex s = 0; s < n_; ++s) {
    std::fill(dist_.begin(), dist_.end(), kUnreachable);
    dist_[s] = 0;
    queue_[0] = s;
    std::size_t tail = 1;
    for (std::size_t head = 0; head < tail; ++head) {
      const Vertex u = queue_[head];
      const std::uint32_t next = dist_[u] + 1;
      for (auto i = offsets[u]; i < offsets[u + 1]; ++i) {
        const Vertex w = neighbors[i];
        if (dist_[w] == kUnreachable) {
          dist_[w] = next;
          queue_[tail++] = w;
        } else if (dist_[w] == next) {
          // Second predecessor on the previous level: two geodesics.
          result.geodetic = false;
          return result;
        }
      }
    }
    if (tail != static_cast<std::size_t>(n_)) {
      result.connected = false;
      result.geodetic = false;
      return result;
    }
    result.diameter = std::max(result.diameter, dist_[queue_[tail - 1]]);
    if (s < kept_sources) {
      std::copy(dist_.begin(), dist_.end(),
                kept_.begin() + static_cast<std::size_t>(s) * n_);
    }
  }
  return result;
}

}  // namespace geodetic
