#include "geodetic/graph_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <vector>

#include "geodetic/error.hpp"

namespace geodetic {
namespace {

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

Error ParseFailure(std::size_t line_no, const std::string& what) {
  return Error(ErrorCode::kParse,
               "line " + std::to_string(line_no) + ": " + what);
}

void AppendSize(std::string& out, std::uint64_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
    }
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
    }
  }
}

}  // namespace

Graph ParseEdgeList(std::string_view text) {
  std::vector<Edge> edges;
  Vertex declared = -1;
  Vertex max_vertex = -1;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view line = Trim(text.substr(0, eol));
    text = eol == std::string_view::npos ? std::string_view{}
                                         : text.substr(eol + 1);
    ++line_no;
    if (line.empty()) continue;
    if (line.front() == '#') {
      std::istringstream comment{std::string(line.substr(1))};
      std::string key;
      long long n = 0;
      if (comment >> key >> n && key == "vertices") {
        declared = static_cast<Vertex>(n);
      }
      continue;
    }
    std::istringstream fields{std::string(line)};
    long long u = 0;
    long long v = 0;
    std::string extra;
    if (!(fields >> u >> v) || (fields >> extra)) {
      throw ParseFailure(line_no, "expected 'u v', got '" + std::string(line) + "'");
    }
    if (u < 0 || v < 0 || u > INT32_MAX || v > INT32_MAX) {
      throw Error(ErrorCode::kVertexOutOfRange,
                  "line " + std::to_string(line_no) + ": vertex out of range");
    }
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    max_vertex = std::max({max_vertex, edges.back().u, edges.back().v});
  }
  const Vertex n = declared >= 0 ? declared : max_vertex + 1;
  return Graph::FromEdges(std::span<const Edge>(edges), n);
}

std::string FormatEdgeList(const Graph& g) {
  std::string out = "# vertices " + std::to_string(g.num_vertices()) + "\n";
  for (const Edge& e : g.edges()) {
    out += std::to_string(e.u);
    out += ' ';
    out += std::to_string(e.v);
    out += '\n';
  }
  return out;
}

std::string EncodeGraph6(const Graph& g) {
  const std::uint64_t n = static_cast<std::uint64_t>(g.num_vertices());
  std::string out;
  AppendSize(out, n);
  int bits = 0;
  int acc = 0;
  for (Vertex v = 1; v < g.num_vertices(); ++v) {
    for (Vertex u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(63 + acc));
        bits = acc = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - bits))));
  return out;
}

Graph DecodeGraph6(std::string_view text) {
  text = Trim(text);
  constexpr std::string_view kHeader = ">>graph6<<";
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  if (text.empty()) throw Error(ErrorCode::kParse, "empty graph6 string");
  for (char c : text) {
    if (c < 63 || c > 126) {
      throw Error(ErrorCode::kParse, "graph6 byte out of range");
    }
  }

  std::size_t pos = 0;
  auto take = [&](int count) -> std::uint64_t {
    if (pos + count > text.size()) {
      throw Error(ErrorCode::kParse, "truncated graph6 size field");
    }
    std::uint64_t value = 0;
    for (int i = 0; i < count; ++i) value = (value << 6) | (text[pos++] - 63);
    return value;
  };
  std::uint64_t n = 0;
  if (text[0] != 126) {
    n = take(1);
  } else if (text.size() > 1 && text[1] != 126) {
    pos = 1;
    n = take(3);
  } else {
    pos = 2;
    n = take(6);
  }
  if (n > static_cast<std::uint64_t>(INT32_MAX)) {
    throw Error(ErrorCode::kParse, "graph6 vertex count too large");
  }

  const std::uint64_t pairs = n * (n > 0 ? n - 1 : 0) / 2;
  const std::uint64_t expected = (pairs + 5) / 6;
  if (text.size() - pos != expected) {
    throw Error(ErrorCode::kParse,
                "graph6 body has " + std::to_string(text.size() - pos) +
                    " bytes, expected " + std::to_string(expected));
  }
  std::vector<Edge> edges;
  std::uint64_t bit = 0;
  for (Vertex v = 1; v < static_cast<Vertex>(n); ++v) {
    for (Vertex u = 0; u < v; ++u, ++bit) {
      const int byte = text[pos + bit / 6] - 63;
      if ((byte >> (5 - bit % 6)) & 1) edges.push_back({u, v});
    }
  }
  // Padding bits must be zero for the encoding to be canonical.
  if (bit % 6 != 0) {
    const int last = text.back() - 63;
    if (last & ((1 << (6 - bit % 6)) - 1)) {
      throw Error(ErrorCode::kParse, "graph6 padding bits are not zero");
    }
  }
  return Graph::FromEdges(std::span<const Edge>(edges), static_cast<Vertex>(n));
}

Graph ReadEdgeListFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParse, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ParseEdgeList(buffer.str());
}

}  // namespace geodetic
