#include <numbers>

#include <benchmark/benchmark.h>

#include "htube/curvature_verify.hpp"
#include "htube/foliation.hpp"
#include "htube/isoperimetric.hpp"
#include "htube/profile_curves.hpp"
#include "htube/sister.hpp"

using namespace htube;
constexpr double pi = std::numbers::pi;

static void BM_ClosedFormProfile(benchmark::State& st) {
  const TubeParams t{4, 0.5, 0.7};
  double phi = 0;
  for (auto _ : st) {
    benchmark::DoNotOptimize(closed_form_profile(t, phi));
    phi += 1e-3;
  }
}
BENCHMARK(BM_ClosedFormProfile);

static void BM_IntegrateProfile(benchmark::State& st) {
  const TubeParams t{-1, 1, 1};
  for (auto _ : st) benchmark::DoNotOptimize(integrate_profile(t, 0, 2 * pi, 1e-10));
}
BENCHMARK(BM_IntegrateProfile)->Unit(benchmark::kMicrosecond);

static void BM_NumericMeanCurvature(benchmark::State& st) {
  const TubeParams t{4, 0.4, 1};
  for (auto _ : st) benchmark::DoNotOptimize(numeric_mean_curvature(t, 0.7, 0.2));
}
BENCHMARK(BM_NumericMeanCurvature)->Unit(benchmark::kMicrosecond);

static void BM_TangencyScan(benchmark::State& st) {
  const auto grid = make_grid(0.05, 5, 0.05);
  for (auto _ : st) benchmark::DoNotOptimize(tangency_scan({4, 0.4}, grid));
}
BENCHMARK(BM_TangencyScan)->Unit(benchmark::kMicrosecond);

static void BM_LatticeB(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(lattice_b(4, 0.5, 0.3));
}
BENCHMARK(BM_LatticeB)->Unit(benchmark::kMicrosecond);

static void BM_ConformalProfile(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(ConformalProfile(4, 0.5).a());
}
BENCHMARK(BM_ConformalProfile)->Unit(benchmark::kMicrosecond);

static void BM_TubeVolume(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(tube_volume({4, 0.7, 0.8}));
}
BENCHMARK(BM_TubeVolume)->Unit(benchmark::kMicrosecond);

static void BM_IsoperimetricSweep(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(isoperimetric_sweep(1.05, 0.025, 20, 0.025));
}
BENCHMARK(BM_IsoperimetricSweep)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
