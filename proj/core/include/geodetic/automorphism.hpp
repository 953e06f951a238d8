#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "geodetic/graph.hpp"
#include "geodetic/homeomorph.hpp"

namespace geodetic {

// The full automorphism group of a small base graph, stored element by
// element together with the induced permutation of canonical edge ids.
class AutomorphismGroup {
 public:
  static constexpr Vertex kMaxVertices = 60;

  // Backtracking search over vertex images, most-connected vertex first,
  // pruned by degree, distance profile and adjacency to mapped vertices.
  // Throws Error{kTooLarge} above kMaxVertices.
  static AutomorphismGroup Compute(const Graph& base);

  std::size_t order() const { return order_; }
  Vertex num_vertices() const { return n_; }
  std::size_t num_edges() const { return m_; }

  std::span<const std::uint16_t> vertex_map(std::size_t i) const {
    return {perms_.data() + i * n_, static_cast<std::size_t>(n_)};
  }
  // edge_map(i)[e] is the image of edge e under element i.
  std::span<const std::uint16_t> edge_map(std::size_t i) const {
    return {edge_action_.data() + i * m_, m_};
  }

  // Membership-based check that the stored set contains the identity and is
  // closed under composition. Checks every pair when order^2 <= max_pairs,
  // otherwise a fixed, deterministic sample of max_pairs products.
  bool VerifyGroupAxioms(std::size_t max_pairs = 1'000'000) const;

 private:
  Vertex n_ = 0;
  std::size_t m_ = 0;
  std::size_t order_ = 0;
  std::vector<std::uint16_t> perms_;
  std::vector<std::uint16_t> edge_action_;
};

inline AutomorphismGroup Automorphisms(const Graph& base) {
  return AutomorphismGroup::Compute(base);
}

// Lexicographically smallest image of lv under the group's edge action.
LengthVector CanonicalLengths(const LengthVector& lv,
                              const AutomorphismGroup& group);

// Number of group elements fixing lv; the orbit of lv has
// order() / StabilizerOrder(lv) elements.
std::size_t StabilizerOrder(const LengthVector& lv,
                            const AutomorphismGroup& group);

}  // namespace geodetic
