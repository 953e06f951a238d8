#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "geodetic/graph.hpp"

namespace geodetic {

// Edge-list text: one "u v" pair per line, 0-based, whitespace separated.
// Lines whose first non-blank character is '#' are comments. The writer emits
// a "# vertices N" comment, which the reader honors so isolated trailing
// vertices survive a round trip; without it n is max vertex + 1.
Graph ParseEdgeList(std::string_view text);
std::string FormatEdgeList(const Graph& g);

// graph6: N(n) followed by the upper triangle of the adjacency matrix read
// column by column (x(0,1), x(0,2), x(1,2), x(0,3), ...), padded with zeros
// to a multiple of six bits, each group emitted as (bits + 63). An optional
// ">>graph6<<" header and trailing whitespace are accepted on input.
std::string EncodeGraph6(const Graph& g);
Graph DecodeGraph6(std::string_view text);

Graph ReadEdgeListFile(const std::string& path);

}  // namespace geodetic
