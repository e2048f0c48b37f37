#include <benchmark/benchmark.h>

#include <string>

#include "hlab/basis.hpp"
#include "hlab/eigensolve.hpp"
#include "hlab/laughlin.hpp"
#include "hlab/operators.hpp"

using namespace hlab;

// Basis enumeration alone: partition generation plus index hashing.
static void BM_BasisBuild(benchmark::State& state) {
  long L = state.range(0);
  for (auto _ : state) {
    auto basis = build_basis(5, L, Statistics::Bose);
    benchmark::DoNotOptimize(basis.size());
  }
}
BENCHMARK(BM_BasisBuild)->Arg(20)->Arg(30)->Arg(40);

// Projector assembly sweeps all pairs of basis elements through the
// centre-of-mass/relative rotation; cost grows with dim^2 times pair count.
static void BM_ProjectorAssembly(benchmark::State& state) {
  auto basis = build_basis(4, state.range(0), Statistics::Bose);
  for (auto _ : state) {
    auto op = pair_projector_matrix(basis, 1);
    benchmark::DoNotOptimize(op.mat);
  }
  state.SetLabel("dim=" + std::to_string(basis.size()));
}
BENCHMARK(BM_ProjectorAssembly)->Arg(12)->Arg(18)->Arg(24);

// Full cascade up to channel 2 over the same block.
static void BM_CascadeAssembly(benchmark::State& state) {
  auto basis = build_basis(4, 18, Statistics::Bose);
  for (auto _ : state) {
    auto op = cascade_hamiltonian(basis, 2);
    benchmark::DoNotOptimize(op.mat);
  }
}
BENCHMARK(BM_CascadeAssembly);

// Ground pair of an assembled block: dense path below the threshold.
static void BM_GroundState(benchmark::State& state) {
  auto basis = build_basis(5, state.range(0), Statistics::Bose);
  auto h = pseudo_hamiltonian(basis, 0);
  for (auto _ : state) {
    auto sp = spectrum(h, 1);
    benchmark::DoNotOptimize(sp.values[0]);
  }
  state.SetLabel("dim=" + std::to_string(basis.size()));
}
BENCHMARK(BM_GroundState)->Arg(20)->Arg(30);

// Monomial expansion of the pair-product state: the term count explodes
// combinatorially with N, which is what caps desk-scale use.
static void BM_LaughlinExpansion(benchmark::State& state) {
  int N = static_cast<int>(state.range(0));
  int m = 2;
  long L = static_cast<long>(m) * N * (N - 1) / 2;
  auto basis = build_basis(N, L, Statistics::Bose);
  for (auto _ : state) {
    auto vec = laughlin_vector(N, m, basis);
    benchmark::DoNotOptimize(vec.sum());
  }
  state.SetLabel("dim=" + std::to_string(basis.size()));
}
BENCHMARK(BM_LaughlinExpansion)->Arg(4)->Arg(5)->Arg(6);
