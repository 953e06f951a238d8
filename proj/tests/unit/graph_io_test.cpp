#include <gtest/gtest.h>

#include <geodetic/builders.hpp>
#include <geodetic/error.hpp>
#include <geodetic/graph_io.hpp>

#include <random>

#include "oracles.hpp"

namespace geodetic {
namespace {

// Reference strings produced by networkx.to_graph6_bytes(header=False).
TEST(Graph6, KnownEncodings) {
  EXPECT_EQ(EncodeGraph6(CompleteGraph(4)), "C~");
  EXPECT_EQ(EncodeGraph6(CycleGraph(5)), "Dhc");
  EXPECT_EQ(EncodeGraph6(PathGraph(3)), "Bg");
  EXPECT_EQ(EncodeGraph6(PetersenGraph()), "IheA@GUAo");
  EXPECT_EQ(EncodeGraph6(CompleteGraph(1)), "@");
}

TEST(Graph6, HeaderAndWhitespace) {
  EXPECT_EQ(DecodeGraph6(">>graph6<<C~\n"), CompleteGraph(4));
  EXPECT_EQ(DecodeGraph6("IheA@GUAo  "), PetersenGraph());
}

TEST(Graph6, ExtendedSizes) {
  // 63 vertices switches to the four-byte size form, 258048 would need the
  // eight-byte form; test the boundary with sparse paths.
  for (int n : {62, 63, 64, 200}) {
    Graph p = PathGraph(n);
    std::string s = EncodeGraph6(p);
    if (n >= 63) {
      EXPECT_EQ(s[0], '~');
    }
    EXPECT_EQ(DecodeGraph6(s), p) << n;
  }
}

TEST(Graph6, Malformed) {
  EXPECT_THROW(DecodeGraph6(""), Error);
  EXPECT_THROW(DecodeGraph6("C"), Error);     // body too short
  EXPECT_THROW(DecodeGraph6("C~~"), Error);   // body too long
  EXPECT_THROW(DecodeGraph6("B\x7f"), Error); // byte out of range
  EXPECT_THROW(DecodeGraph6("Bh"), Error);    // nonzero padding bits
}

TEST(Graph6, BuiltinCorpusRoundTrip) {
  for (const auto& name : BuiltinCorpusNames()) {
    Graph g = BuiltinGraph(name);
    std::string s = EncodeGraph6(g);
    Graph back = DecodeGraph6(s);
    EXPECT_EQ(back, g) << name;
    EXPECT_EQ(EncodeGraph6(back), s) << name;
  }
}

TEST(Graph6, RandomRoundTrip) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 1000; ++trial) {
    Graph g = oracle::RandomGraph(rng, 1 + trial % 90, 0.02 + 0.001 * (trial % 500));
    std::string s = EncodeGraph6(g);
    Graph back = DecodeGraph6(s);
    ASSERT_EQ(back, g) << trial;
    ASSERT_EQ(EncodeGraph6(back), s);
  }
}

TEST(EdgeList, ParseAndFormat) {
  Graph g = ParseEdgeList("# a comment\n0 1\n  1 2\n\n# more\n2 0\n");
  EXPECT_EQ(g, CycleGraph(3));
  Graph p = PetersenGraph();
  EXPECT_EQ(ParseEdgeList(FormatEdgeList(p)), p);
}

TEST(EdgeList, IsolatedVerticesSurvive) {
  std::vector<std::pair<int, int>> es{{0, 1}};
  Graph g = Graph::FromEdges(es, 4);
  EXPECT_EQ(ParseEdgeList(FormatEdgeList(g)).num_vertices(), 4);
}

TEST(EdgeList, Errors) {
  EXPECT_THROW(ParseEdgeList("0 x\n"), Error);
  EXPECT_THROW(ParseEdgeList("0\n"), Error);
  EXPECT_THROW(ParseEdgeList("1 1\n"), Error);
  EXPECT_THROW(ParseEdgeList("0 1 2\n"), Error);
  EXPECT_THROW(ParseEdgeList("# vertices 2\n0 5\n"), Error);
}

}  // namespace
}  // namespace geodetic
