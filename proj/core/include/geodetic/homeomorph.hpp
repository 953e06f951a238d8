#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "geodetic/distance.hpp"
#include "geodetic/graph.hpp"

namespace geodetic {

// A base graph whose vertices all have degree >= 3, together with the
// diameter d0 of the base, which fixes the segment counts the geodeticity
// conditions look at (d0-segment paths, (2d0+1)- and (2d0+2)-segment cycles).
struct Skeleton {
  Graph base;
  int d0 = 1;
  std::string name;

  // Requires the base to be a Moore graph of degree >= 3; d0 is its
  // diameter. Throws Error{kNotMooreBase}.
  static Skeleton FromMooreBase(Graph base, std::string name = "");
  // Built-in name (petersen, k4, hoffman-singleton, ...).
  static Skeleton Named(std::string_view name);
};

// One positive segment length per base edge, indexed by canonical edge id.
struct LengthVector {
  std::vector<int> lengths;

  std::size_t size() const { return lengths.size(); }
  int operator[](EdgeId e) const { return lengths[e]; }
  friend bool operator==(const LengthVector&, const LengthVector&) = default;
  friend auto operator<=>(const LengthVector&, const LengthVector&) = default;

  static LengthVector Uniform(std::size_t edges, int length) {
    return {std::vector<int>(edges, length)};
  }
};

// Throws Error{kDomainMismatch} if lv does not have one entry >= 1 per base
// edge.
void ValidateLengths(const Graph& base, const LengthVector& lv);

// Subdivides base edge e into lv[e] edges. Base vertices keep their labels;
// the interior vertices of edge 0 come first (ordered from its smaller
// endpoint), then edge 1, and so on.
Graph Realize(const Graph& base, const LengthVector& lv);
inline Graph Realize(const Skeleton& s, const LengthVector& lv) {
  return Realize(s.base, lv);
}

// Builds the same subdivision as Realize straight into reusable CSR buffers,
// without the sorting and validation Graph construction does.
class SubdivisionBuilder {
 public:
  explicit SubdivisionBuilder(const Graph& base) : base_(base) {}

  void Build(std::span<const int> lengths);
  std::span<const std::int32_t> offsets() const { return offsets_; }
  std::span<const Vertex> neighbors() const { return neighbors_; }

 private:
  const Graph& base_;
  std::vector<std::int32_t> offsets_;
  std::vector<Vertex> neighbors_;
  std::vector<std::int32_t> fill_;
};

struct SkeletonizeResult {
  Graph base;
  LengthVector lengths;
};

// Smooths away every degree-2 vertex. Nodes are renumbered in increasing
// order of their original labels, so Skeletonize(Realize(base, lv)) returns
// base and lv unchanged. Throws Error{kDisconnected, kNoNodes,
// kPendantVertex, kMultiEdgeCollapse, kLoopSegment}.
SkeletonizeResult Skeletonize(const Graph& g);

struct SegmentCycle {
  // Base edges in traversal order; vertices[i] -> vertices[i+1] uses edges[i].
  std::vector<EdgeId> edges;
  std::vector<Vertex> vertices;

  int segment_count() const { return static_cast<int>(edges.size()); }
  friend bool operator==(const SegmentCycle&, const SegmentCycle&) = default;
};

struct SegmentPath {
  std::vector<EdgeId> edges;
  std::vector<Vertex> vertices;

  Vertex from() const { return vertices.front(); }
  Vertex to() const { return vertices.back(); }
};

// Simple cycles of the base with exactly m edges, each once.
std::vector<SegmentCycle> SegmentCycles(const Graph& base, int m);
// Simple paths of the base with exactly d0 edges, each once.
std::vector<SegmentPath> SegmentPaths(const Graph& base, int d0);

std::int64_t SegmentSum(std::span<const EdgeId> edges, const LengthVector& lv);

struct C1Violation {
  SegmentPath path;
  std::int64_t realized_length = 0;
  std::uint32_t distance = 0;
};
struct C1Verdict {
  bool passed = true;
  std::vector<C1Violation> violations;
};

struct C2Violation {
  SegmentCycle cycle;
  std::int64_t sum = 0;
};
struct C2Verdict {
  bool passed = true;
  std::vector<C2Violation> violations;
};

struct C3Verdict {
  bool passed = true;
  // Distinct cycle sums, each with the first cycle attaining it.
  std::map<std::int64_t, SegmentCycle> sums;
};

struct ConditionReport {
  C1Verdict c1;
  C2Verdict c2;
  C3Verdict c3;
  int realized_diameter = 0;
  GeodeticVerdict geodetic;

  bool all_conditions() const { return c1.passed && c2.passed && c3.passed; }
};

// Precomputes the segment paths and cycles of a skeleton once so that many
// length vectors can be checked cheaply.
class ConditionChecker {
 public:
  explicit ConditionChecker(const Skeleton& skeleton);

  const Skeleton& skeleton() const { return skeleton_; }
  std::span<const SegmentPath> paths() const { return paths_; }
  std::span<const SegmentCycle> odd_cycles() const { return odd_cycles_; }
  std::span<const SegmentCycle> even_cycles() const { return even_cycles_; }

  // Each d0-segment path realizes to a geodesic: its length equals the
  // realized distance between its end nodes.
  C1Verdict CheckC1(const LengthVector& lv) const;
  // Each (2d0+1)-segment cycle has odd length.
  C2Verdict CheckC2(const LengthVector& lv) const;
  // All (2d0+2)-segment cycles have equal length.
  C3Verdict CheckC3(const LengthVector& lv) const;
  ConditionReport CheckAll(const LengthVector& lv) const;

 private:
  Skeleton skeleton_;
  std::vector<SegmentPath> paths_;
  std::vector<SegmentCycle> odd_cycles_;
  std::vector<SegmentCycle> even_cycles_;
};

C1Verdict CheckC1(const Skeleton& s, const LengthVector& lv);
C2Verdict CheckC2(const Skeleton& s, const LengthVector& lv);
C3Verdict CheckC3(const Skeleton& s, const LengthVector& lv);
ConditionReport CheckAllConditions(const Skeleton& s, const LengthVector& lv);

// Text form: one "u v length" line per base edge in canonical order.
std::string FormatLengthVector(const Graph& base, const LengthVector& lv);
// Accepts the text form; the edges must be exactly the base edges (any
// order). Throws Error{kParse, kDomainMismatch}.
LengthVector ParseLengthVector(const Graph& base, std::string_view text);

}  // namespace geodetic
