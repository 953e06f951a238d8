#include <gtest/gtest.h>

#include <geodetic/automorphism.hpp>
#include <geodetic/checkpoint.hpp>
#include <geodetic/cycles.hpp>
#include <geodetic/diophantine.hpp>
#include <geodetic/distance.hpp>
#include <geodetic/error.hpp>

#include <filesystem>
#include <fstream>
#include <set>

#include "oracles.hpp"

namespace geodetic {
namespace {

namespace fs = std::filesystem;

// Solutions computed without the engine: parity/equal-sum DFS from the test
// oracles, then direct realization checks.
std::vector<LengthVector> ReferenceSolutions(const Skeleton& s, int target_d) {
  const int bound = SegmentLengthBound(s.d0, target_d);
  auto paths = oracle::ParityAndEqualSumVectors(s.base, s.d0, bound);
  std::vector<LengthVector> out;
  for (auto& x : paths) {
    LengthVector lv{x};
    Graph g = Realize(s.base, lv);
    if (!IsGeodetic(g).geodetic || Diameter(g) != target_d) continue;
    auto dd = DistanceData::Compute(g);
    bool c1 = true;
    for (const auto& p : SimplePaths(s.base, s.d0)) {
      int len = 0;
      for (std::size_t i = 0; i + 1 < p.size(); ++i)
        len += lv[s.base.edge_id(p[i], p[i + 1])];
      if (static_cast<int>(dd.distance(p.front(), p.back())) != len) c1 = false;
    }
    if (c1) out.push_back(lv);
  }
  std::sort(out.begin(), out.end());
  return out;
}

TEST(BuildSystem, PetersenDiameterTwo) {
  auto sys = BuildSystem(Skeleton::Named("petersen"), 2);
  EXPECT_EQ(sys.num_vars(), 15u);
  for (const auto& b : sys.bounds) {
    EXPECT_EQ(b.lo, 1);
    EXPECT_EQ(b.hi, 1);
  }
  EXPECT_EQ(sys.parity.size(), 12u);
  EXPECT_EQ(sys.equal_sum.size(), 10u);
}

TEST(BuildSystem, Bounds) {
  auto p5 = BuildSystem(Skeleton::Named("petersen"), 5);
  for (const auto& b : p5.bounds) EXPECT_EQ(b.hi, 4);
  EXPECT_EQ(p5.sum_lo, 6);
  auto k4 = BuildSystem(Skeleton::Named("k4"), 3);
  EXPECT_EQ(k4.num_vars(), 6u);
  EXPECT_EQ(k4.parity.size(), 4u);
  EXPECT_EQ(k4.equal_sum.size(), 3u);
  for (const auto& b : k4.bounds) EXPECT_EQ(b.hi, 3);
  EXPECT_EQ(SegmentLengthBound(2, 2), 1);
  EXPECT_EQ(SegmentLengthBound(2, 7), 6);
  EXPECT_EQ(SegmentLengthBound(1, 4), 4);
  EXPECT_THROW(BuildSystem(Skeleton::Named("petersen"), 1), Error);
}

TEST(BuildSystem, ConstraintsReferenceValidEdges) {
  auto sys = BuildSystem(Skeleton::Named("petersen"), 4);
  for (const auto* group : {&sys.parity, &sys.equal_sum}) {
    for (const auto& c : *group) {
      EXPECT_GE(c.edges.size(), 3u);
      for (EdgeId e : c.edges) {
        EXPECT_GE(e, 0);
        EXPECT_LT(e, 15);
      }
    }
  }
}

TEST(DumpSystem, MembershipCounts) {
  auto k4 = DumpSystem(BuildSystem(Skeleton::Named("k4"), 2));
  ASSERT_EQ(k4["membership_counts"].size(), 6u);
  for (const auto& m : k4["membership_counts"]) {
    EXPECT_EQ(m["parity"], 2);
    EXPECT_EQ(m["equal_sum"], 2);
  }
  auto p = DumpSystem(BuildSystem(Skeleton::Named("petersen"), 3));
  for (const auto& m : p["membership_counts"]) {
    EXPECT_EQ(m["parity"], 4);
    EXPECT_EQ(m["equal_sum"], 4);
  }
  EXPECT_EQ(p["constraints"].size(), 22u);
  EXPECT_EQ(p["constraints"][0]["type"], "parity");
}

TEST(SolveConditions, PetersenMatchesReference) {
  Skeleton s = Skeleton::Named("petersen");
  const std::size_t expected[] = {1, 6, 21};
  for (int d = 2; d <= 4; ++d) {
    auto result = SolveConditions(BuildSystem(s, d));
    auto ref = ReferenceSolutions(s, d);
    EXPECT_EQ(result.solutions, ref) << d;
    EXPECT_EQ(result.solutions.size(), expected[d - 2]);
  }
}

TEST(SolveConditions, K4MatchesReference) {
  Skeleton s = Skeleton::Named("k4");
  for (int d = 1; d <= 4; ++d) {
    auto result = SolveConditions(BuildSystem(s, d));
    EXPECT_EQ(result.solutions, ReferenceSolutions(s, d)) << d;
  }
  auto d1 = SolveConditions(BuildSystem(s, 1));
  ASSERT_EQ(d1.solutions.size(), 1u);
  EXPECT_EQ(d1.solutions[0], LengthVector::Uniform(6, 1));
}

TEST(SolveExhaustive, AgreesWithConditions) {
  for (const char* name : {"k4", "petersen"}) {
    Skeleton s = Skeleton::Named(name);
    for (int d = std::max(2, s.d0); d <= 3; ++d) {
      auto cond = SolveConditions(BuildSystem(s, d));
      auto ex = SolveExhaustive(s, d, SegmentLengthBound(s.d0, d));
      EXPECT_EQ(cond.solutions, ex.solutions) << name << " d=" << d;
    }
  }
}

TEST(SolveExhaustive, K4SoundBound) {
  Skeleton s = Skeleton::Named("k4");
  auto small = SolveExhaustive(s, 2, 1);
  EXPECT_TRUE(small.solutions.empty());
  auto sound = SolveExhaustive(s, 2, 5);
  EXPECT_EQ(sound.nodes, 15625u);
  EXPECT_EQ(sound.solutions, SolveExhaustive(s, 2, 2).solutions);
}

TEST(SolveExhaustive, RefusesHugeSpaces) {
  SearchOptions opts;
  opts.max_candidates = 1000;
  EXPECT_THROW(SolveExhaustive(Skeleton::Named("petersen"), 3, 2, opts),
               BudgetExceededError);
}

TEST(Solve, WorkerCountDoesNotMatter) {
  Skeleton s = Skeleton::Named("petersen");
  auto sys = BuildSystem(s, 4);
  auto one = SolveConditions(sys);
  for (int w : {2, 4, 8}) {
    SearchOptions opts;
    opts.workers = w;
    EXPECT_EQ(SolveConditions(sys, opts).solutions, one.solutions);
    EXPECT_EQ(SolveExhaustive(s, 3, 2, opts).solutions,
              SolveExhaustive(s, 3, 2).solutions);
  }
}

TEST(Solve, NodeBudgetAndResume) {
  Skeleton s = Skeleton::Named("petersen");
  auto sys = BuildSystem(s, 5);
  auto full = SolveConditions(sys);

  fs::path ckpt = fs::temp_directory_path() / "geodetic_resume_test.ckpt";
  fs::remove(ckpt);
  SearchOptions opts;
  opts.checkpoint_path = ckpt.string();
  opts.node_budget = full.nodes / 3;
  try {
    SolveConditions(sys, opts);
    FAIL() << "budget should have run out";
  } catch (const BudgetExceededError& e) {
    EXPECT_LT(e.completed_units(), e.total_units());
    EXPECT_EQ(e.checkpoint_path(), ckpt.string());
  }
  opts.node_budget.reset();
  auto resumed = SolveConditions(sys, opts);
  EXPECT_GT(resumed.resumed_partitions, 0u);
  EXPECT_EQ(resumed.solutions, full.solutions);

  // Everything is recorded now, so a third run does no search at all.
  auto again = SolveConditions(sys, opts);
  EXPECT_EQ(again.resumed_partitions, again.partitions);
  EXPECT_EQ(again.solutions, full.solutions);
  fs::remove(ckpt);
}

TEST(Solve, TimeBudget) {
  SearchOptions opts;
  opts.time_budget = std::chrono::milliseconds(1);
  EXPECT_THROW(SolveExhaustive(Skeleton::Named("petersen"), 4, 3, opts),
               BudgetExceededError);
}

TEST(Checkpoint, HeaderMismatchRejected) {
  fs::path p = fs::temp_directory_path() / "geodetic_header_test.ckpt";
  fs::remove(p);
  {
    CheckpointLog log(p.string(), {"petersen", 4, 3, "exhaustive"});
    log.Record({1, 2}, {LengthVector::Uniform(3, 1)});
  }
  CheckpointLog again(p.string(), {"petersen", 4, 3, "exhaustive"});
  ASSERT_EQ(again.completed().size(), 1u);
  EXPECT_EQ(again.completed().begin()->first, (std::vector<int>{1, 2}));
  EXPECT_EQ(again.completed().begin()->second.size(), 1u);
  EXPECT_THROW(CheckpointLog(p.string(), {"petersen", 5, 3, "exhaustive"}), Error);
  fs::remove(p);
}

TEST(Checkpoint, TornLineIgnored) {
  fs::path p = fs::temp_directory_path() / "geodetic_torn_test.ckpt";
  fs::remove(p);
  { CheckpointLog log(p.string(), {"k4", 2, 2, "conditions"}); }
  {
    std::ofstream out(p, std::ios::app);
    out << FormatCheckpointLine({3}, {}) << "\n";
    out << "4 : 1,1,2";
  }
  CheckpointLog log(p.string(), {"k4", 2, 2, "conditions"});
  EXPECT_EQ(log.completed().size(), 1u);
  EXPECT_TRUE(log.completed().count({3}));
  fs::remove(p);
}

TEST(ConjecturedCount, MatchesFactorials) {
  EXPECT_EQ(ConjecturedCount(2), 1u);
  EXPECT_EQ(ConjecturedCount(3), 6u);
  EXPECT_EQ(ConjecturedCount(4), 21u);
  EXPECT_EQ(ConjecturedCount(5), 56u);
  for (int d = 2; d <= 30; ++d) {
    EXPECT_EQ(std::to_string(ConjecturedCount(d)),
              oracle::FactorialBinomial(d + 3, 5))
        << d;
  }
  EXPECT_THROW(ConjecturedCount(1), Error);
  EXPECT_THROW(ConjecturedCount(100000), Error);
}

TEST(EnumerateClasses, PetersenReport) {
  Skeleton s = Skeleton::Named("petersen");
  auto report = EnumerateClasses(s, 4, EngineMode::kConditions);
  EXPECT_EQ(report.base, "petersen");
  EXPECT_EQ(report.raw_solution_count, 21u);
  EXPECT_EQ(report.class_count, 2u);
  ASSERT_TRUE(report.formula_value);
  EXPECT_EQ(*report.formula_value, 21u);
  EXPECT_TRUE(report.formula_match.value_or(false));
  EXPECT_TRUE(report.all_realizations_geodetic);
  EXPECT_FALSE(report.witnesses_truncated);
  std::uint64_t orbit_total = 0;
  auto group = Automorphisms(s.base);
  for (const auto& w : report.witnesses) {
    orbit_total += w.orbit_size;
    EXPECT_EQ(CanonicalLengths(w.canonical, group), w.canonical);
    EXPECT_EQ(w.orbit_size * StabilizerOrder(w.canonical, group), 120u);
  }
  EXPECT_EQ(orbit_total, report.raw_solution_count);
  EXPECT_TRUE(std::is_sorted(report.witnesses.begin(), report.witnesses.end(),
                             [](const auto& a, const auto& b) {
                               return a.canonical < b.canonical;
                             }));
}

TEST(EnumerateClasses, K4HasNoFormula) {
  auto report = EnumerateClasses(Skeleton::Named("k4"), 3, EngineMode::kConditions);
  EXPECT_FALSE(report.formula_value);
  EXPECT_FALSE(report.formula_match);
  EXPECT_EQ(report.raw_solution_count, 10u);
  EXPECT_EQ(report.class_count, 2u);
}

TEST(EnumerateClasses, ExhaustiveCaveatAndSoundMode) {
  Skeleton k4 = Skeleton::Named("k4");
  auto plain = EnumerateClasses(k4, 2, EngineMode::kExhaustive);
  EXPECT_EQ(plain.bound, 2);
  EXPECT_TRUE(plain.caveat.has_value());
  EnumerateOptions opts;
  opts.sound = true;
  auto sound = EnumerateClasses(k4, 2, EngineMode::kExhaustive, opts);
  EXPECT_EQ(sound.bound, 5);
  EXPECT_FALSE(sound.caveat.has_value());
  EXPECT_EQ(sound.class_count, plain.class_count);

  auto oracle_report = ExhaustiveOracle(Skeleton::Named("petersen"), 2, 1);
  EXPECT_EQ(oracle_report.raw_solution_count, 1u);
  EXPECT_EQ(oracle_report.class_count, 1u);
}

TEST(EnumerateClasses, WitnessTruncation) {
  EnumerateOptions opts;
  opts.max_witnesses = 1;
  auto report = EnumerateClasses(Skeleton::Named("petersen"), 5,
                                 EngineMode::kConditions, opts);
  EXPECT_EQ(report.class_count, 3u);
  EXPECT_EQ(report.witnesses.size(), 1u);
  EXPECT_TRUE(report.witnesses_truncated);
}

TEST(EnumerateClasses, JsonIsDeterministic) {
  Skeleton s = Skeleton::Named("petersen");
  std::string first;
  for (int w : {1, 4, 8}) {
    EnumerateOptions opts;
    opts.search.workers = w;
    auto doc = ToJson(EnumerateClasses(s, 3, EngineMode::kConditions, opts));
    EXPECT_FALSE(doc.contains("elapsed_ms"));
    if (first.empty()) first = doc.dump();
    EXPECT_EQ(doc.dump(), first);
  }
  auto timed = ToJson(EnumerateClasses(s, 2, EngineMode::kConditions), true);
  EXPECT_TRUE(timed.contains("elapsed_ms"));
}

TEST(EngineMode, Names) {
  EXPECT_EQ(ParseEngineMode("conditions"), EngineMode::kConditions);
  EXPECT_EQ(ParseEngineMode("exhaustive"), EngineMode::kExhaustive);
  EXPECT_EQ(EngineModeName(EngineMode::kExhaustive), "exhaustive");
  EXPECT_THROW(ParseEngineMode("magic"), Error);
}

}  // namespace
}  // namespace geodetic
