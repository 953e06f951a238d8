#pragma once

#include <functional>
#include <span>
#include <vector>

#include "geodetic/graph.hpp"

namespace geodetic {

// Visits every simple cycle with exactly `length` edges once. The vertex
// sequence starts at the cycle's smallest vertex and is oriented so that the
// second vertex is smaller than the last. Return false from `visit` to stop.
void ForEachSimpleCycle(const Graph& g, int length,
                        const std::function<bool(std::span<const Vertex>)>& visit);

std::vector<std::vector<Vertex>> SimpleCycles(const Graph& g, int length);

// Simple paths with exactly `length` >= 1 edges, each reported once in the
// direction with first vertex < last vertex, ordered lexicographically.
std::vector<std::vector<Vertex>> SimplePaths(const Graph& g, int length);

}  // namespace geodetic
