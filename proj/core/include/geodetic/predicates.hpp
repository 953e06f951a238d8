#pragma once

#include <cstdint>
#include <optional>

#include "geodetic/graph.hpp"

namespace geodetic {

struct SrgParams {
  int n = 0;
  int k = 0;
  int lambda = 0;
  int mu = 0;

  // k(k - lambda - 1) == (n - k - 1) mu
  bool SatisfiesFeasibilityIdentity() const {
    return static_cast<std::int64_t>(k) * (k - lambda - 1) ==
           static_cast<std::int64_t>(n - k - 1) * mu;
  }
  friend bool operator==(const SrgParams&, const SrgParams&) = default;
};

struct MooreParams {
  int k = 0;
  int d = 0;
  friend bool operator==(const MooreParams&, const MooreParams&) = default;
};

// 1 + k * sum_{j=1..d} (k-1)^(j-1). nullopt on int64 overflow.
std::optional<std::int64_t> MooreBound(int k, int d);

std::optional<int> RegularDegree(const Graph& g);

// Complete and edgeless graphs have no strongly regular parameters: one of
// lambda/mu would be vacuous.
std::optional<SrgParams> StronglyRegularParams(const Graph& g);

// (k, d) iff g is k-regular (k >= 2) of diameter d with exactly MooreBound(k, d)
// vertices. Throws Error{kDisconnected}.
std::optional<MooreParams> MooreParamsOf(const Graph& g);

// True iff g is connected, has at least three vertices and no articulation
// vertex. K2 is not a block under this definition.
bool IsBlock(const Graph& g);

}  // namespace geodetic
