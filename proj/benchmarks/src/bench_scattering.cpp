#include <benchmark/benchmark.h>

#include "hlab/potentials.hpp"
#include "hlab/scattering.hpp"

using namespace hlab;

// One outward sweep plus tail fit and energy quadrature.  For smooth
// potentials the adaptive quadrature contributes a grid-independent floor,
// so the node count only shows at the large end.
static void BM_ChannelParameterGaussian(benchmark::State& state) {
  auto g = RadialPotential::gaussian(1.5, 0.5);
  GridSpec grid;
  grid.points = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto res = scattering_length(g, 2, 2, grid);
    benchmark::DoNotOptimize(res.b);
  }
}
BENCHMARK(BM_ChannelParameterGaussian)->RangeMultiplier(4)->Range(1024, 65536);

// Hard core: no interaction quadrature, the Numerov sweep dominates and the
// cost is linear in the node count.
static void BM_ChannelParameterHardDisc(benchmark::State& state) {
  auto wall = RadialPotential::hard_core(1.0);
  GridSpec grid;
  grid.points = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto res = scattering_length(wall, 3, 2, grid);
    benchmark::DoNotOptimize(res.b);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ChannelParameterHardDisc)
    ->RangeMultiplier(4)
    ->Range(1024, 16384)
    ->Complexity(benchmark::oN);

// Logarithmic channel: solve on [0, R] with the far readoff radius.
static void BM_LogChannel(benchmark::State& state) {
  auto g = RadialPotential::gaussian(2.0, 0.5);
  for (auto _ : state) {
    auto res = scattering_length(g, 0, 2, GridSpec{});
    benchmark::DoNotOptimize(res.b);
  }
}
BENCHMARK(BM_LogChannel);

// Moment integral only; the adaptive quadrature is grid-free.
static void BM_BornMoment(benchmark::State& state) {
  auto g = RadialPotential::gaussian(1.5, 0.5);
  for (auto _ : state) {
    double born = born_scattering_length(g, 2, 3);
    benchmark::DoNotOptimize(born);
  }
}
BENCHMARK(BM_BornMoment);
