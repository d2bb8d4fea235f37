#include <cmath>
#include <numbers>
#include <vector>

#include <benchmark/benchmark.h>

#include "gendiff/decompose.h"
#include "gendiff/integrals.h"
#include "gendiff/partitions.h"
#include "gendiff/random.h"
#include "gendiff/sharpness.h"
#include "gendiff/spectrum.h"

namespace {

using namespace gendiff;

Spectrum random_spectrum(std::int64_t band, std::uint64_t seed) {
  Engine e(seed);
  Spectrum f(band);
  for (std::int64_t n = -band; n <= band; ++n) {
    f.set(n, Complex(uniform01(e) - 0.5, uniform01(e) - 0.5));
  }
  return f;
}

void BM_Synthesize(benchmark::State& state) {
  const auto band = state.range(0);
  const Spectrum f = random_spectrum(band, 1);
  for (auto _ : state) benchmark::DoNotOptimize(synthesize(f, 2 * band + 1));
}
BENCHMARK(BM_Synthesize)->Arg(32)->Arg(256);

void BM_Analyze(benchmark::State& state) {
  const auto band = state.range(0);
  const SampleGrid grid = synthesize(random_spectrum(band, 2), 2 * band + 1);
  for (auto _ : state) benchmark::DoNotOptimize(analyze(grid, band));
}
BENCHMARK(BM_Analyze)->Arg(32)->Arg(256);

void BM_Decompose(benchmark::State& state) {
  const int s = static_cast<int>(state.range(0));
  Spectrum f = random_spectrum(32, 3);
  f.erase(1);
  f.erase(-1);
  const auto shifts = random_shifts(s, 4);
  for (auto _ : state) benchmark::DoNotOptimize(decompose_gd(f, 1, -1, s, shifts));
}
BENCHMARK(BM_Decompose)->Arg(1)->Arg(2);

void BM_RefineFor(benchmark::State& state) {
  const auto n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(refine_for(n, 1, -1));
}
BENCHMARK(BM_RefineFor)->Arg(9)->Arg(500);

void BM_LatticeLhs(benchmark::State& state) {
  McConfig cfg;
  cfg.points = static_cast<std::uint64_t>(state.range(0));
  cfg.scheme = Scheme::kLatticeShifted;
  for (auto _ : state) benchmark::DoNotOptimize(estimate_lhs(9, 1, -1, 1, 5, cfg));
}
BENCHMARK(BM_LatticeLhs)->Arg(1 << 12)->Arg(1 << 16)->Unit(benchmark::kMillisecond);

void BM_Witness(benchmark::State& state) {
  std::vector<double> c;
  for (double p : {2.0, 3.0, 5.0, 7.0, 11.0}) {
    const double r = std::sqrt(p);
    c.push_back(2 * std::numbers::pi * (r - std::floor(r)));
  }
  const auto depth = static_cast<std::size_t>(state.range(0));
  const PhiPath path = PhiPath::from_seed(depth, 0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        build_witness(c, 1, 1, path, 1000000, QAssignment::kConstrainedFirst));
  }
}
BENCHMARK(BM_Witness)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
