#include <gtest/gtest.h>

#include <geodetic/builders.hpp>
#include <geodetic/error.hpp>
#include <geodetic/graph.hpp>

#include <random>

#include "oracles.hpp"

namespace geodetic {
namespace {

ErrorCode CodeOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::kInvalidArgument;
}

TEST(Graph, PathFromEdges) {
  std::vector<std::pair<int, int>> es{{0, 1}, {1, 2}};
  Graph g = Graph::FromEdges(es, 3);
  EXPECT_EQ(g.num_vertices(), 3);
  EXPECT_EQ(g.num_edges(), 2u);
  EXPECT_EQ(g.degree(1), 2);
  EXPECT_TRUE(g.has_edge(2, 1));
  EXPECT_FALSE(g.has_edge(0, 2));
}

TEST(Graph, SelfLoopRejected) {
  std::vector<std::pair<int, int>> es{{0, 0}};
  EXPECT_EQ(CodeOf([&] { Graph::FromEdges(es, 1); }), ErrorCode::kSelfLoop);
}

TEST(Graph, OutOfRangeRejected) {
  std::vector<std::pair<int, int>> es{{0, 3}};
  EXPECT_EQ(CodeOf([&] { Graph::FromEdges(es, 3); }),
            ErrorCode::kVertexOutOfRange);
  std::vector<std::pair<int, int>> neg{{-1, 0}};
  EXPECT_EQ(CodeOf([&] { Graph::FromEdges(neg, 3); }),
            ErrorCode::kVertexOutOfRange);
}

TEST(Graph, DuplicatesCollapse) {
  std::vector<std::pair<int, int>> es{{0, 1}, {1, 0}, {0, 1}};
  Graph g = Graph::FromEdges(es, 2);
  EXPECT_EQ(g.num_edges(), 1u);
  EXPECT_EQ(g.degree(0), 1);
}

TEST(Graph, CanonicalEdgeOrder) {
  std::vector<std::pair<int, int>> es{{3, 2}, {0, 3}, {1, 0}, {2, 0}};
  Graph g = Graph::FromEdges(es, 4);
  std::vector<Edge> expect{{0, 1}, {0, 2}, {0, 3}, {2, 3}};
  ASSERT_EQ(g.num_edges(), expect.size());
  for (std::size_t i = 0; i < expect.size(); ++i) {
    EXPECT_EQ(g.edge(static_cast<EdgeId>(i)), expect[i]);
    EXPECT_EQ(g.edge_id(expect[i].v, expect[i].u), static_cast<EdgeId>(i));
  }
  EXPECT_EQ(g.edge_id(1, 2), -1);
}

TEST(Graph, AdjacencyInvariantsOnRandomGraphs) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = oracle::RandomGraph(rng, 1 + trial % 20, 0.3);
    std::size_t slots = 0;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      auto nb = g.neighbors(v);
      auto ids = g.incident_edges(v);
      slots += nb.size();
      EXPECT_TRUE(std::is_sorted(nb.begin(), nb.end()));
      EXPECT_EQ(std::adjacent_find(nb.begin(), nb.end()), nb.end());
      for (std::size_t i = 0; i < nb.size(); ++i) {
        EXPECT_NE(nb[i], v);
        EXPECT_TRUE(g.has_edge(nb[i], v));
        const Edge& e = g.edge(ids[i]);
        EXPECT_EQ(e, (Edge{std::min(v, nb[i]), std::max(v, nb[i])}));
      }
    }
    EXPECT_EQ(slots, 2 * g.num_edges());
  }
}

TEST(Graph, Connectivity) {
  EXPECT_TRUE(PetersenGraph().is_connected());
  std::vector<std::pair<int, int>> es{{0, 1}};
  EXPECT_FALSE(Graph::FromEdges(es, 3).is_connected());
  EXPECT_TRUE(CompleteGraph(1).is_connected());
}

TEST(Builders, Sizes) {
  EXPECT_EQ(CycleGraph(7).num_edges(), 7u);
  EXPECT_EQ(CompleteGraph(6).num_edges(), 15u);
  EXPECT_EQ(PathGraph(4).num_edges(), 3u);
  EXPECT_EQ(PathGraph(1).num_vertices(), 1);
  EXPECT_EQ(PetersenGraph().num_edges(), 15u);
  Graph hs = HoffmanSingletonGraph();
  EXPECT_EQ(hs.num_vertices(), 50);
  EXPECT_EQ(hs.num_edges(), 175u);
}

TEST(Builders, PetersenLabeling) {
  Graph p = PetersenGraph();
  for (int i = 0; i < 5; ++i) {
    EXPECT_TRUE(p.has_edge(i, (i + 1) % 5));
    EXPECT_TRUE(p.has_edge(i, i + 5));
    EXPECT_TRUE(p.has_edge(i + 5, (i + 2) % 5 + 5));
  }
}

TEST(Builders, PetersenGirthFive) {
  Graph p = PetersenGraph();
  EXPECT_EQ(oracle::CountCyclesNaive(p, 3), 0u);
  EXPECT_EQ(oracle::CountCyclesNaive(p, 4), 0u);
  EXPECT_EQ(oracle::CountCyclesNaive(p, 5), 12u);
}

TEST(Builders, InvalidSizes) {
  EXPECT_EQ(CodeOf([] { CycleGraph(2); }), ErrorCode::kInvalidSize);
  EXPECT_EQ(CodeOf([] { CompleteGraph(0); }), ErrorCode::kInvalidSize);
  EXPECT_EQ(CodeOf([] { PathGraph(0); }), ErrorCode::kInvalidSize);
}

TEST(Builders, Names) {
  EXPECT_EQ(BuiltinGraph("c5"), CycleGraph(5));
  EXPECT_EQ(BuiltinGraph("petersen"), PetersenGraph());
  EXPECT_EQ(BuiltinGraph("k4"), CompleteGraph(4));
  EXPECT_EQ(BuiltinGraph("cycle9"), CycleGraph(9));
  EXPECT_EQ(BuiltinGraph("path3"), PathGraph(3));
  EXPECT_EQ(BuiltinGraph("hoffman-singleton").num_vertices(), 50);
  EXPECT_EQ(CodeOf([] { BuiltinGraph("dodecahedron"); }),
            ErrorCode::kInvalidArgument);
  EXPECT_EQ(CodeOf([] { BuiltinGraph("k"); }), ErrorCode::kInvalidArgument);
  for (const auto& name : BuiltinCorpusNames()) {
    EXPECT_NO_THROW(BuiltinGraph(name)) << name;
  }
}

}  // namespace
}  // namespace geodetic
