#include "geodetic/cycles.hpp"

#include <algorithm>

namespace geodetic {
namespace {

class CycleWalker {
 public:
  CycleWalker(const Graph& g, int length,
              const std::function<bool(std::span<const Vertex>)>& visit)
      : g_(g), length_(length), visit_(visit), on_path_(g.num_vertices(), 0) {
    path_.reserve(length);
  }

  bool Run() {
    for (Vertex s = 0; s < g_.num_vertices(); ++s) {
      path_.assign(1, s);
      on_path_[s] = 1;
      const bool keep_going = Extend(s);
      on_path_[s] = 0;
      if (!keep_going) return false;
    }
    return true;
  }

 private:
  // Only vertices larger than the start may appear after it.
  bool Extend(Vertex start) {
    const Vertex tail = path_.back();
    if (static_cast<int>(path_.size()) == length_) {
      if (path_[1] < path_.back() && g_.has_edge(tail, start)) {
        return visit_(path_);
      }
      return true;
    }
    for (Vertex w : g_.neighbors(tail)) {
      if (w <= start || on_path_[w]) continue;
      path_.push_back(w);
      on_path_[w] = 1;
      const bool keep_going = Extend(start);
      on_path_[w] = 0;
      path_.pop_back();
      if (!keep_going) return false;
    }
    return true;
  }

  const Graph& g_;
  int length_;
  const std::function<bool(std::span<const Vertex>)>& visit_;
  std::vector<char> on_path_;
  std::vector<Vertex> path_;
};

void ExtendPaths(const Graph& g, int length, std::vector<Vertex>& path,
                 std::vector<char>& on_path,
                 std::vector<std::vector<Vertex>>& out) {
  if (static_cast<int>(path.size()) == length + 1) {
    if (path.front() < path.back()) out.push_back(path);
    return;
  }
  for (Vertex w : g.neighbors(path.back())) {
    if (on_path[w]) continue;
    path.push_back(w);
    on_path[w] = 1;
    ExtendPaths(g, length, path, on_path, out);
    on_path[w] = 0;
    path.pop_back();
  }
}

}  // namespace

void ForEachSimpleCycle(
    const Graph& g, int length,
    const std::function<bool(std::span<const Vertex>)>& visit) {
  if (length < 3) return;
  CycleWalker(g, length, visit).Run();
}

std::vector<std::vector<Vertex>> SimpleCycles(const Graph& g, int length) {
  std::vector<std::vector<Vertex>> cycles;
  ForEachSimpleCycle(g, length, [&](std::span<const Vertex> c) {
    cycles.emplace_back(c.begin(), c.end());
    return true;
  });
  return cycles;
}

std::vector<std::vector<Vertex>> SimplePaths(const Graph& g, int length) {
  std::vector<std::vector<Vertex>> paths;
  if (length < 1) return paths;
  std::vector<Vertex> path;
  std::vector<char> on_path(g.num_vertices(), 0);
  for (Vertex s = 0; s < g.num_vertices(); ++s) {
    path.assign(1, s);
    on_path[s] = 1;
    ExtendPaths(g, length, path, on_path, paths);
    on_path[s] = 0;
  }
  return paths;
}

}  // namespace geodetic
