#include "geodetic/automorphism.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <unordered_set>

#include "geodetic/distance.hpp"
#include "geodetic/error.hpp"

namespace geodetic {
namespace {

class AutomorphismSearch {
 public:
  explicit AutomorphismSearch(const Graph& g)
      : g_(g),
        n_(g.num_vertices()),
        distances_(DistanceData::Compute(g)),
        image_(n_, -1),
        used_(n_, 0) {
    for (Vertex v = 0; v < n_; ++v) {
      std::vector<std::uint32_t> row(distances_.distance_row(v).begin(),
                                     distances_.distance_row(v).end());
      std::sort(row.begin(), row.end());
      profiles_.push_back(std::move(row));
      std::uint64_t mask = 0;
      for (Vertex w : g.neighbors(v)) mask |= std::uint64_t{1} << w;
      adjacency_.push_back(mask);
    }
    BuildOrder();
  }

  std::vector<std::vector<Vertex>> Run() {
    Assign(0);
    return found_;
  }

 private:
  // Greedy max-connectivity order: the next vertex is the one with the most
  // already-ordered neighbors (lowest index on ties), so later vertices are
  // pinned down by several mapped neighbors at once. parent_ records one
  // ordered neighbor, whose image's neighborhood supplies the candidates.
  void BuildOrder() {
    std::vector<char> placed(n_, 0);
    std::vector<int> links(n_, 0);
    parent_.assign(n_, -1);
    for (Vertex step = 0; step < n_; ++step) {
      Vertex best = -1;
      for (Vertex v = 0; v < n_; ++v) {
        if (!placed[v] && (best < 0 || links[v] > links[best])) best = v;
      }
      placed[best] = 1;
      order_.push_back(best);
      for (Vertex w : g_.neighbors(best)) {
        if (placed[w]) continue;
        if (parent_[w] < 0) parent_[w] = best;
        ++links[w];
      }
    }
  }

  // Adjacency to every mapped vertex must be preserved. Only v's mapped
  // neighbors are walked; non-adjacency follows from the masks agreeing.
  bool Compatible(Vertex v, Vertex candidate) const {
    if (used_[candidate] || g_.degree(v) != g_.degree(candidate) ||
        profiles_[v] != profiles_[candidate]) {
      return false;
    }
    std::uint64_t mapped_nbrs = 0;
    for (std::uint64_t bits = adjacency_[v] & assigned_; bits;
         bits &= bits - 1) {
      mapped_nbrs |= std::uint64_t{1} << image_[std::countr_zero(bits)];
    }
    return mapped_nbrs == (adjacency_[candidate] & image_mask_);
  }

  void Assign(std::size_t depth) {
    if (depth == order_.size()) {
      found_.push_back(image_);
      return;
    }
    const Vertex v = order_[depth];
    auto try_candidate = [&](Vertex candidate) {
      if (!Compatible(v, candidate)) return;
      image_[v] = candidate;
      used_[candidate] = 1;
      assigned_ |= std::uint64_t{1} << v;
      image_mask_ |= std::uint64_t{1} << candidate;
      Assign(depth + 1);
      assigned_ &= ~(std::uint64_t{1} << v);
      image_mask_ &= ~(std::uint64_t{1} << candidate);
      used_[candidate] = 0;
      image_[v] = -1;
    };
    if (parent_[v] >= 0) {
      for (Vertex candidate : g_.neighbors(image_[parent_[v]])) {
        try_candidate(candidate);
      }
    } else {
      for (Vertex candidate = 0; candidate < n_; ++candidate) {
        try_candidate(candidate);
      }
    }
  }

  const Graph& g_;
  Vertex n_;
  DistanceData distances_;
  std::vector<std::vector<std::uint32_t>> profiles_;
  std::vector<std::uint64_t> adjacency_;
  std::uint64_t assigned_ = 0;
  std::uint64_t image_mask_ = 0;
  std::vector<Vertex> order_;
  std::vector<Vertex> parent_;
  std::vector<Vertex> image_;
  std::vector<char> used_;
  std::vector<std::vector<Vertex>> found_;
};

}  // namespace

AutomorphismGroup AutomorphismGroup::Compute(const Graph& base) {
  if (base.num_vertices() > kMaxVertices) {
    throw Error(ErrorCode::kTooLarge,
                "automorphism search is limited to " +
                    std::to_string(kMaxVertices) + " vertices, got " +
                    std::to_string(base.num_vertices()));
  }
  auto maps = AutomorphismSearch(base).Run();
  std::sort(maps.begin(), maps.end());

  AutomorphismGroup group;
  group.n_ = base.num_vertices();
  group.m_ = base.num_edges();
  group.order_ = maps.size();
  group.perms_.reserve(maps.size() * group.n_);
  group.edge_action_.reserve(maps.size() * group.m_);
  for (const auto& map : maps) {
    for (Vertex image : map) group.perms_.push_back(static_cast<std::uint16_t>(image));
    for (const Edge& e : base.edges()) {
      const EdgeId target = base.edge_id(map[e.u], map[e.v]);
      if (target < 0) {
        throw Error(ErrorCode::kInvalidArgument,
                    "automorphism search produced a non-adjacency-preserving map");
      }
      group.edge_action_.push_back(static_cast<std::uint16_t>(target));
    }
  }
  return group;
}

bool AutomorphismGroup::VerifyGroupAxioms(std::size_t max_pairs) const {
  auto key = [&](std::span<const std::uint16_t> p) {
    return std::string(reinterpret_cast<const char*>(p.data()),
                       p.size() * sizeof(std::uint16_t));
  };
  std::unordered_set<std::string> members;
  for (std::size_t i = 0; i < order_; ++i) members.insert(key(vertex_map(i)));

  std::vector<std::uint16_t> identity(n_);
  for (Vertex v = 0; v < n_; ++v) identity[v] = static_cast<std::uint16_t>(v);
  if (!members.contains(key(identity))) return false;

  std::vector<std::uint16_t> product(n_);
  auto check = [&](std::size_t i, std::size_t j) {
    const auto a = vertex_map(i);
    const auto b = vertex_map(j);
    for (Vertex v = 0; v < n_; ++v) product[v] = a[b[v]];
    return members.contains(key(product));
  };
  if (order_ * order_ <= max_pairs) {
    for (std::size_t i = 0; i < order_; ++i) {
      for (std::size_t j = 0; j < order_; ++j) {
        if (!check(i, j)) return false;
      }
    }
    return true;
  }
  // Linear congruential walk over pairs; deterministic.
  std::uint64_t state = 0x9E3779B97F4A7C15ull;
  for (std::size_t t = 0; t < max_pairs; ++t) {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    const std::size_t i = (state >> 33) % order_;
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    const std::size_t j = (state >> 33) % order_;
    if (!check(i, j)) return false;
  }
  return true;
}

LengthVector CanonicalLengths(const LengthVector& lv,
                              const AutomorphismGroup& group) {
  if (lv.size() != group.num_edges()) {
    throw Error(ErrorCode::kDomainMismatch,
                "length vector does not match the group's base");
  }
  LengthVector best = lv;
  std::vector<int> image(lv.size());
  for (std::size_t i = 0; i < group.order(); ++i) {
    const auto action = group.edge_map(i);
    for (std::size_t e = 0; e < lv.size(); ++e) image[action[e]] = lv.lengths[e];
    if (image < best.lengths) best.lengths = image;
  }
  return best;
}

std::size_t StabilizerOrder(const LengthVector& lv,
                            const AutomorphismGroup& group) {
  std::size_t fixed = 0;
  for (std::size_t i = 0; i < group.order(); ++i) {
    const auto action = group.edge_map(i);
    bool same = true;
    for (std::size_t e = 0; e < lv.size() && same; ++e) {
      same = lv.lengths[action[e]] == lv.lengths[e];
    }
    fixed += same;
  }
  return fixed;
}

}  // namespace geodetic
