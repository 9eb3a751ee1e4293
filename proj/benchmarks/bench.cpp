// Microbenchmarks for the hot paths: the two pyramid/prism detectors, the
// long-hole search, the parity-constrained detectors, coloring, and the
// exhaustive oracle they are all compared against.
#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "prismatic/coloring.hpp"
#include "prismatic/holes.hpp"
#include "prismatic/oracle.hpp"
#include "prismatic/parity.hpp"
#include "prismatic/prism_pyramid.hpp"
#include "prismatic/verification.hpp"

using namespace prismatic;

namespace {

Graph gnp_for(int n, double p, std::uint64_t salt) {
  std::mt19937_64 rng(1729 + salt);
  return random_gnp(n, p, rng);
}

}  // namespace

static void BM_DetectQuadrupleScan(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Graph g = gnp_for(n, 0.25, n);
  for (auto _ : state) benchmark::DoNotOptimize(detect_pyramid_or_prism_v1(g));
}
BENCHMARK(BM_DetectQuadrupleScan)->Arg(30)->Arg(45)->Arg(60);

static void BM_DetectSetBased(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Graph g = gnp_for(n, 0.25, n);
  for (auto _ : state) benchmark::DoNotOptimize(detect_pyramid_or_prism_v2(g).found);
}
BENCHMARK(BM_DetectSetBased)->Arg(30)->Arg(45)->Arg(60);

static void BM_LongHole(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Graph g = gnp_for(n, 0.08, 7 * n);
  for (auto _ : state) benchmark::DoNotOptimize(find_long_hole(g));
}
BENCHMARK(BM_LongHole)->Arg(40)->Arg(80);

static void BM_EvenPrismDetect(benchmark::State& state) {
  // a frame large enough that the auto mode skips the precondition scan
  Graph g = build_lg_subdivided_k4({2, 2, 2, 2, 2, 2}).graph;
  for (auto _ : state) benchmark::DoNotOptimize(detect_even_prism(g));
}
BENCHMARK(BM_EvenPrismDetect);

static void BM_OddPrismDetect(benchmark::State& state) {
  Graph g = build_lg_subdivided_k4({1, 1, 1, 1, 1, 1}).graph;
  DetectOptions opts;
  opts.mode = PrecondMode::Unchecked;
  for (auto _ : state) benchmark::DoNotOptimize(detect_odd_prism(g, opts));
}
BENCHMARK(BM_OddPrismDetect);

static void BM_ColorEvenCycle(benchmark::State& state) {
  Graph g = make_cycle(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(color_class_a(g).palette);
}
BENCHMARK(BM_ColorEvenCycle)->Arg(16)->Arg(32)->Arg(64);

static void BM_OracleSubsetScan(benchmark::State& state) {
  Graph g = make_petersen();
  for (auto _ : state) benchmark::DoNotOptimize(oracle_find(g, OracleKind::PrismAny));
}
BENCHMARK(BM_OracleSubsetScan);

BENCHMARK_MAIN();
