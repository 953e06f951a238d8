#include <gtest/gtest.h>

#include <geodetic/distance.hpp>
#include <geodetic/homeomorph.hpp>

#include <map>

#include "oracles.hpp"

// Exhaustive sweeps over bounded length spaces: the three conditions
// must imply geodeticity (sufficiency), and every geodetic realization found
// is checked against the conditions (necessity). Labelled "long".

namespace geodetic {
namespace {

struct Tally {
  std::size_t satisfying = 0;
  std::size_t satisfying_not_geodetic = 0;
  std::size_t geodetic = 0;
  std::size_t geodetic_violating = 0;
  std::map<int, std::size_t> geodetic_by_diameter;
};

void Visit(const ConditionChecker& checker, const LengthVector& lv, Tally& t) {
  const bool conditions = checker.CheckC2(lv).passed &&
                          checker.CheckC3(lv).passed &&
                          checker.CheckC1(lv).passed;
  const bool geodetic = IsGeodetic(Realize(checker.skeleton(), lv)).geodetic;
  t.satisfying += conditions;
  t.satisfying_not_geodetic += conditions && !geodetic;
  t.geodetic += geodetic;
  if (geodetic) ++t.geodetic_by_diameter[Diameter(Realize(checker.skeleton(), lv))];
  if (geodetic && !conditions) {
    ++t.geodetic_violating;
    ADD_FAILURE() << "geodetic realization violating the conditions: "
                  << FormatLengthVector(checker.skeleton().base, lv);
  }
}

TEST(Conditions, K4BothDirectionsUpToFour) {
  ConditionChecker checker(Skeleton::Named("k4"));
  Tally t;
  std::vector<int> x(6, 1);
  while (true) {
    Visit(checker, LengthVector{x}, t);
    int i = 0;
    while (i < 6 && x[i] == 4) x[i++] = 1;
    if (i == 6) break;
    ++x[i];
  }
  EXPECT_EQ(t.satisfying_not_geodetic, 0u);
  EXPECT_EQ(t.geodetic_violating, 0u);
  EXPECT_EQ(t.satisfying, t.geodetic);
  // Diameters 1..4 are complete inside the box; longer ones are partial.
  EXPECT_EQ(t.geodetic_by_diameter[1], 1u);
  EXPECT_EQ(t.geodetic_by_diameter[2], 4u);
  EXPECT_EQ(t.geodetic_by_diameter[3], 10u);
  EXPECT_EQ(t.geodetic_by_diameter[4], 20u);
}

TEST(Conditions, PetersenSufficiencyUpToFour) {
  Skeleton s = Skeleton::Named("petersen");
  ConditionChecker checker(s);
  std::size_t satisfying = 0, up_to_five = 0;
  for (auto& x : oracle::ParityAndEqualSumVectors(s.base, s.d0, 4)) {
    LengthVector lv{x};
    if (!checker.CheckC1(lv).passed) continue;
    ++satisfying;
    Graph g = Realize(s, lv);
    EXPECT_TRUE(IsGeodetic(g).geodetic) << FormatLengthVector(s.base, lv);
    up_to_five += Diameter(g) <= 5;
  }
  EXPECT_EQ(satisfying, 262u);
  // Diameter d needs lengths <= d - 1, so diameters 2..5 are complete here.
  EXPECT_EQ(up_to_five, 1u + 6u + 21u + 56u);
}

TEST(Conditions, PetersenNecessityUpToThree) {
  Skeleton s = Skeleton::Named("petersen");
  ConditionChecker checker(s);
  SubdivisionBuilder builder(s.base);
  GeodesicProbe probe;
  std::size_t geodetic = 0;
  std::vector<int> x(15, 1);
  while (true) {
    builder.Build(x);
    if (probe.Run(builder.offsets(), builder.neighbors()).geodetic) {
      ++geodetic;
      LengthVector lv{x};
      EXPECT_TRUE(checker.CheckAll(lv).all_conditions())
          << FormatLengthVector(s.base, lv);
    }
    int i = 0;
    while (i < 15 && x[i] == 3) x[i++] = 1;
    if (i == 15) break;
    ++x[i];
  }
  EXPECT_EQ(geodetic, 70u);
}

}  // namespace
}  // namespace geodetic
