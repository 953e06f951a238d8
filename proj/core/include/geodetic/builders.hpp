#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "geodetic/graph.hpp"

namespace geodetic {

// Throws Error{kInvalidSize} when n < 3.
Graph CycleGraph(int n);
// n >= 1.
Graph CompleteGraph(int n);
// Path on n >= 1 vertices.
Graph PathGraph(int n);

// Outer 5-cycle 0..4, inner pentagram 5..9 (i+5 ~ ((i+2) mod 5)+5), spokes
// i ~ i+5.
Graph PetersenGraph();

// Robertson's pentagon/pentagram construction. Vertex 5h+j is vertex j of
// pentagon P_h, vertex 25+5k+j is vertex j of pentagram Q_k; P_h[j] is
// adjacent to Q_k[(h*k + j) mod 5]. The result is checked to be a Moore graph
// with (k, d) = (7, 2) before it is returned.
Graph HoffmanSingletonGraph();

// Names accepted on the command line: c5, petersen, hoffman-singleton,
// k<n>, cycle<n>, path<n>. Throws Error{kInvalidArgument} otherwise.
Graph BuiltinGraph(std::string_view name);

// Canonical names of the fixed built-in corpus used by round-trip checks.
std::vector<std::string> BuiltinCorpusNames();

}  // namespace geodetic
