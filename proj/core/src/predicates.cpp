#include "geodetic/predicates.hpp"

#include <algorithm>
#include <functional>
#include <vector>

#include "geodetic/distance.hpp"
#include "geodetic/error.hpp"

namespace geodetic {

std::optional<std::int64_t> MooreBound(int k, int d) {
  if (k < 1 || d < 1) return std::nullopt;
  std::int64_t sum = 0;
  std::int64_t term = 1;
  for (int j = 1; j <= d; ++j) {
    if (__builtin_add_overflow(sum, term, &sum)) return std::nullopt;
    if (j < d && __builtin_mul_overflow(term, std::int64_t{k - 1}, &term)) {
      return std::nullopt;
    }
  }
  std::int64_t total = 0;
  if (__builtin_mul_overflow(sum, std::int64_t{k}, &total)) return std::nullopt;
  return total + 1;
}

std::optional<int> RegularDegree(const Graph& g) {
  if (g.num_vertices() == 0) return std::nullopt;
  const int k = g.degree(0);
  for (Vertex v = 1; v < g.num_vertices(); ++v) {
    if (g.degree(v) != k) return std::nullopt;
  }
  return k;
}

std::optional<SrgParams> StronglyRegularParams(const Graph& g) {
  const auto k = RegularDegree(g);
  const Vertex n = g.num_vertices();
  if (!k || *k == 0 || *k == n - 1) return std::nullopt;

  std::optional<int> lambda;
  std::optional<int> mu;
  std::vector<char> mark(n, 0);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex w : g.neighbors(u)) mark[w] = 1;
    for (Vertex v = u + 1; v < n; ++v) {
      int common = 0;
      for (Vertex w : g.neighbors(v)) common += mark[w];
      auto& slot = mark[v] ? lambda : mu;
      if (!slot) {
        slot = common;
      } else if (*slot != common) {
        return std::nullopt;
      }
    }
    for (Vertex w : g.neighbors(u)) mark[w] = 0;
  }
  return SrgParams{n, *k, *lambda, *mu};
}

std::optional<MooreParams> MooreParamsOf(const Graph& g) {
  if (!g.is_connected()) {
    throw Error(ErrorCode::kDisconnected, "Moore test needs a connected graph");
  }
  const auto k = RegularDegree(g);
  if (!k || *k < 2) return std::nullopt;
  const int d = Diameter(g);
  const auto bound = MooreBound(*k, d);
  if (!bound || *bound != g.num_vertices()) return std::nullopt;
  return MooreParams{*k, d};
}

bool IsBlock(const Graph& g) {
  const Vertex n = g.num_vertices();
  if (n < 3 || !g.is_connected()) return false;

  // Iterative Tarjan low-link from vertex 0.
  std::vector<int> disc(n, -1);
  std::vector<int> low(n, 0);
  std::vector<Vertex> parent(n, -1);
  std::vector<std::size_t> next_slot(n, 0);
  int timer = 0;
  int root_children = 0;
  std::vector<Vertex> stack = {0};
  disc[0] = low[0] = timer++;
  while (!stack.empty()) {
    const Vertex u = stack.back();
    const auto nbrs = g.neighbors(u);
    if (next_slot[u] < nbrs.size()) {
      const Vertex w = nbrs[next_slot[u]++];
      if (disc[w] < 0) {
        parent[w] = u;
        disc[w] = low[w] = timer++;
        if (u == 0) ++root_children;
        stack.push_back(w);
      } else if (w != parent[u]) {
        low[u] = std::min(low[u], disc[w]);
      }
      continue;
    }
    stack.pop_back();
    const Vertex p = parent[u];
    if (p >= 0) {
      low[p] = std::min(low[p], low[u]);
      if (p != 0 && low[u] >= disc[p]) return false;
    }
  }
  return root_children <= 1;
}

}  // namespace geodetic
