#include <benchmark/benchmark.h>

#include "nadyn/detectors.hpp"
#include "nadyn/fixtures.hpp"

using namespace nadyn;

static void BM_PiecewiseEval(benchmark::State& state) {
  const SelfMap& tent = named_map("tent");
  Point p = Point::interval(Rational(3, 7));
  for (auto _ : state) {
    p = apply(tent, p);
    benchmark::DoNotOptimize(p);
  }
}
BENCHMARK(BM_PiecewiseEval);

static void BM_PiecewiseEvalDoubleOnly(benchmark::State& state) {
  const SelfMap& tent = named_map("tent");
  Point p = Point::interval(0.437);
  for (auto _ : state) {
    p = apply(tent, p);
    benchmark::DoNotOptimize(p);
  }
}
BENCHMARK(BM_PiecewiseEvalDoubleOnly);

static void BM_ShiftMetric(benchmark::State& state) {
  Space s = Space::binary_shift(16);
  Point a = Point::shift(s, *Word::parse("10110100111@-5"));
  Point b = Point::shift(s, *Word::parse("10010101111@-5"));
  for (auto _ : state) benchmark::DoNotOptimize(distance(a, b));
}
BENCHMARK(BM_ShiftMetric);

static void BM_OrbitGrid(benchmark::State& state) {
  const Schedule& f = get_fixture("tent_autonomous").schedule;
  auto seeds = space_grid(f.space(), static_cast<int>(state.range(0)));
  for (auto _ : state)
    for (const Point& seed : seeds) benchmark::DoNotOptimize(evolve(f, 64, seed));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_OrbitGrid)->RangeMultiplier(2)->Range(32, 256)->Complexity();

static void BM_Transitivity(benchmark::State& state) {
  const Schedule& f = get_fixture("tent_autonomous").schedule;
  DetectorParams p = DetectorParams::defaults_for(f.space());
  p.grid_resolution = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(check_transitivity(f, p));
}
BENCHMARK(BM_Transitivity)->Arg(32)->Arg(128)->Unit(benchmark::kMillisecond);

static void BM_SensitivityExactRoute(benchmark::State& state) {
  const Schedule& f = get_fixture("tent_autonomous").schedule;
  DetectorParams p = DetectorParams::defaults_for(f.space());
  for (auto _ : state) benchmark::DoNotOptimize(check_sensitivity(f, p));
}
BENCHMARK(BM_SensitivityExactRoute)->Unit(benchmark::kMillisecond);

static void BM_EquicontinuityShiftGrid(benchmark::State& state) {
  const Schedule& g = get_fixture("shift_alternating").schedule;
  DetectorParams p = DetectorParams::defaults_for(g.space());
  p.grid_resolution = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(check_equicontinuity(g, p));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_EquicontinuityShiftGrid)->Arg(128)->Arg(512)->Arg(2048)->Unit(benchmark::kMillisecond);

static void BM_BlockScheduleIndex(benchmark::State& state) {
  const Schedule& f = get_fixture("shift_block").schedule;
  long i = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(f.at(i));
    i = i % 4096 + 1;
  }
}
BENCHMARK(BM_BlockScheduleIndex);

BENCHMARK_MAIN();
