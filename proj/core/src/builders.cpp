#include "geodetic/builders.hpp"

#include <charconv>

#include "geodetic/error.hpp"
#include "geodetic/predicates.hpp"

namespace geodetic {
namespace {

void RequireSize(int n, int minimum, std::string_view what) {
  if (n < minimum) {
    throw Error(ErrorCode::kInvalidSize,
                std::string(what) + " needs at least " +
                    std::to_string(minimum) + " vertices, got " +
                    std::to_string(n));
  }
}

std::optional<int> ParseSuffix(std::string_view name, std::string_view prefix) {
  if (!name.starts_with(prefix) || name.size() == prefix.size()) {
    return std::nullopt;
  }
  int value = 0;
  const char* first = name.data() + prefix.size();
  const char* last = name.data() + name.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) return std::nullopt;
  return value;
}

}  // namespace

Graph CycleGraph(int n) {
  RequireSize(n, 3, "cycle");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return Graph::FromEdges(std::span<const Edge>(edges), n);
}

Graph CompleteGraph(int n) {
  RequireSize(n, 1, "complete graph");
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  return Graph::FromEdges(std::span<const Edge>(edges), n);
}

Graph PathGraph(int n) {
  RequireSize(n, 1, "path");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph::FromEdges(std::span<const Edge>(edges), n);
}

Graph PetersenGraph() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.push_back({i, (i + 1) % 5});
    edges.push_back({i, i + 5});
    edges.push_back({i + 5, (i + 2) % 5 + 5});
  }
  return Graph::FromEdges(std::span<const Edge>(edges), 10);
}

Graph HoffmanSingletonGraph() {
  auto pentagon = [](int h, int j) { return 5 * h + j; };
  auto pentagram = [](int k, int j) { return 25 + 5 * k + j; };
  std::vector<Edge> edges;
  for (int h = 0; h < 5; ++h) {
    for (int j = 0; j < 5; ++j) {
      edges.push_back({pentagon(h, j), pentagon(h, (j + 1) % 5)});
      edges.push_back({pentagram(h, j), pentagram(h, (j + 2) % 5)});
    }
  }
  for (int h = 0; h < 5; ++h) {
    for (int k = 0; k < 5; ++k) {
      for (int j = 0; j < 5; ++j) {
        edges.push_back({pentagon(h, j), pentagram(k, (h * k + j) % 5)});
      }
    }
  }
  Graph g = Graph::FromEdges(std::span<const Edge>(edges), 50);
  if (MooreParamsOf(g) != MooreParams{7, 2}) {
    throw Error(ErrorCode::kInvalidArgument,
                "Hoffman-Singleton construction failed its Moore (7, 2) check");
  }
  return g;
}

Graph BuiltinGraph(std::string_view name) {
  if (name == "c5") return CycleGraph(5);
  if (name == "petersen") return PetersenGraph();
  if (name == "hoffman-singleton" || name == "hs") {
    return HoffmanSingletonGraph();
  }
  if (auto n = ParseSuffix(name, "cycle")) return CycleGraph(*n);
  if (auto n = ParseSuffix(name, "path")) return PathGraph(*n);
  if (auto n = ParseSuffix(name, "k")) return CompleteGraph(*n);
  throw Error(ErrorCode::kInvalidArgument,
              "unknown built-in graph '" + std::string(name) +
                  "' (expected c5, petersen, hoffman-singleton, k<n>, "
                  "cycle<n> or path<n>)");
}

std::vector<std::string> BuiltinCorpusNames() {
  std::vector<std::string> names = {"c5", "petersen", "hoffman-singleton"};
  for (int n = 1; n <= 10; ++n) names.push_back("k" + std::to_string(n));
  for (int n = 3; n <= 15; ++n) names.push_back("cycle" + std::to_string(n));
  for (int n = 1; n <= 10; ++n) names.push_back("path" + std::to_string(n));
  return names;
}

}  // namespace geodetic
