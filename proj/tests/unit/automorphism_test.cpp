#include <gtest/gtest.h>

#include <geodetic/automorphism.hpp>
#include <geodetic/builders.hpp>
#include <geodetic/error.hpp>
#include <geodetic/homeomorph.hpp>

#include <random>
#include <set>

#include "oracles.hpp"

namespace geodetic {
namespace {

TEST(Automorphisms, Orders) {
  EXPECT_EQ(Automorphisms(CompleteGraph(4)).order(), 24u);
  EXPECT_EQ(Automorphisms(PetersenGraph()).order(), 120u);
  EXPECT_EQ(Automorphisms(CycleGraph(5)).order(), 10u);
  EXPECT_EQ(Automorphisms(PathGraph(4)).order(), 2u);
  EXPECT_EQ(Automorphisms(CompleteGraph(1)).order(), 1u);
}

TEST(Automorphisms, AgreeWithBruteForce) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 40; ++trial) {
    Graph g = oracle::RandomGraph(rng, 3 + trial % 6, 0.3 + 0.05 * (trial % 5));
    EXPECT_EQ(Automorphisms(g).order(), oracle::CountAutomorphismsNaive(g));
  }
  EXPECT_EQ(oracle::CountAutomorphismsNaive(PetersenGraph()), 120u);
}

TEST(Automorphisms, ElementsPreserveAdjacency) {
  Graph p = PetersenGraph();
  auto group = Automorphisms(p);
  EXPECT_TRUE(group.VerifyGroupAxioms());
  std::set<std::vector<std::uint16_t>> distinct;
  for (std::size_t i = 0; i < group.order(); ++i) {
    auto vm = group.vertex_map(i);
    auto em = group.edge_map(i);
    distinct.emplace(vm.begin(), vm.end());
    for (EdgeId e = 0; e < 15; ++e) {
      const Edge& edge = p.edge(e);
      EXPECT_EQ(p.edge_id(vm[edge.u], vm[edge.v]), em[e]);
    }
  }
  EXPECT_EQ(distinct.size(), 120u);
}

TEST(Automorphisms, HoffmanSingleton) {
  auto group = Automorphisms(HoffmanSingletonGraph());
  EXPECT_EQ(group.order(), 252000u);
  EXPECT_TRUE(group.VerifyGroupAxioms(20000));
}

TEST(Automorphisms, TooLarge) {
  try {
    Automorphisms(CycleGraph(61));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTooLarge);
  }
}

TEST(CanonicalLengths, Behaviour) {
  Graph p = PetersenGraph();
  auto group = Automorphisms(p);
  auto ones = LengthVector::Uniform(15, 1);
  EXPECT_EQ(CanonicalLengths(ones, group), ones);
  EXPECT_EQ(StabilizerOrder(ones, group), 120u);

  // Edge transitivity: a single 2 anywhere canonicalizes to the same vector.
  std::set<LengthVector> forms;
  for (EdgeId e = 0; e < 15; ++e) {
    auto lv = ones;
    lv.lengths[e] = 2;
    forms.insert(CanonicalLengths(lv, group));
    EXPECT_EQ(StabilizerOrder(lv, group), 8u);
  }
  EXPECT_EQ(forms.size(), 1u);
}

TEST(CanonicalLengths, OrbitInvariantAndIdempotent) {
  Graph p = PetersenGraph();
  auto group = Automorphisms(p);
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<int> len(1, 4);
  std::uniform_int_distribution<std::size_t> pick(0, group.order() - 1);
  for (int trial = 0; trial < 200; ++trial) {
    LengthVector lv;
    for (int e = 0; e < 15; ++e) lv.lengths.push_back(len(rng));
    LengthVector canon = CanonicalLengths(lv, group);
    EXPECT_LE(canon, lv);
    EXPECT_EQ(CanonicalLengths(canon, group), canon);
    auto em = group.edge_map(pick(rng));
    LengthVector moved = lv;
    for (EdgeId e = 0; e < 15; ++e) moved.lengths[em[e]] = lv.lengths[e];
    EXPECT_EQ(CanonicalLengths(moved, group), canon);
    EXPECT_EQ(group.order() % StabilizerOrder(lv, group), 0u);
  }
}

}  // namespace
}  // namespace geodetic
