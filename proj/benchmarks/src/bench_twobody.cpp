#include <benchmark/benchmark.h>

#include "hlab/potentials.hpp"
#include "hlab/twobody.hpp"

using namespace hlab;

// Tridiagonal assembly of the relative magnetic sector.
static void BM_SectorAssembly(benchmark::State& state) {
  auto g = RadialPotential::gaussian(1.5, 0.5);
  TwoBodyGrid grid;
  grid.points = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto op = relative_sector_operator(g, 0.1, 1, grid);
    benchmark::DoNotOptimize(op.diag);
  }
}
BENCHMARK(BM_SectorAssembly)->Arg(1024)->Arg(4096)->Arg(16384);

// Assembly plus the lowest three eigenvalues of the tridiagonal form.
static void BM_SectorSpectrum(benchmark::State& state) {
  auto g = RadialPotential::gaussian(1.5, 0.5);
  TwoBodyGrid grid;
  grid.points = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto op = relative_sector_operator(g, 0.1, 1, grid);
    auto sp = sector_spectrum(op);
    benchmark::DoNotOptimize(sp[0]);
  }
}
BENCHMARK(BM_SectorSpectrum)->Arg(1024)->Arg(4096);

// Richardson-refined ground energy: two solves at n and 2n.
static void BM_SectorGroundRefined(benchmark::State& state) {
  auto g = RadialPotential::soft_disc(1.0, 1.0);
  TwoBodyGrid grid;
  grid.points = 1024;
  for (auto _ : state) {
    double e = sector_ground_energy(g, 0.05, 1, grid);
    benchmark::DoNotOptimize(e);
  }
}
BENCHMARK(BM_SectorGroundRefined);
