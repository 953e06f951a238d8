#include <benchmark/benchmark.h>

#include <geodetic/automorphism.hpp>
#include <geodetic/builders.hpp>
#include <geodetic/diophantine.hpp>
#include <geodetic/distance.hpp>
#include <geodetic/homeomorph.hpp>

namespace {

using namespace geodetic;

void BM_IsGeodeticHoffmanSingleton(benchmark::State& state) {
  Graph g = HoffmanSingletonGraph();
  for (auto _ : state) benchmark::DoNotOptimize(IsGeodetic(g).geodetic);
}
BENCHMARK(BM_IsGeodeticHoffmanSingleton)->Unit(benchmark::kMicrosecond);

void BM_DistanceDataRealizedPetersen(benchmark::State& state) {
  Graph g = Realize(PetersenGraph(), LengthVector::Uniform(15, static_cast<int>(state.range(0))));
  for (auto _ : state) {
    benchmark::DoNotOptimize(DistanceData::Compute(g, CountMode::kSaturating, 1));
  }
}
BENCHMARK(BM_DistanceDataRealizedPetersen)->Arg(1)->Arg(3)->Arg(7)->Unit(benchmark::kMicrosecond);

void BM_Automorphisms(benchmark::State& state, Graph g) {
  for (auto _ : state) benchmark::DoNotOptimize(Automorphisms(g).order());
}
BENCHMARK_CAPTURE(BM_Automorphisms, petersen, PetersenGraph())->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Automorphisms, hoffman_singleton, HoffmanSingletonGraph())
    ->Unit(benchmark::kMillisecond);

void BM_ConditionsEngine(benchmark::State& state) {
  Skeleton s = Skeleton::Named("petersen");
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(EnumerateClasses(s, d, EngineMode::kConditions).raw_solution_count);
  }
}
BENCHMARK(BM_ConditionsEngine)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_ExhaustiveEngine(benchmark::State& state) {
  Skeleton s = Skeleton::Named("petersen");
  for (auto _ : state) {
    benchmark::DoNotOptimize(EnumerateClasses(s, 3, EngineMode::kExhaustive).raw_solution_count);
  }
}
BENCHMARK(BM_ExhaustiveEngine)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
