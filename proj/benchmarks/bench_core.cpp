#include <benchmark/benchmark.h>

#include "toric4/abelian_lattice.hpp"
#include "toric4/chow_ring.hpp"
#include "toric4/lattice_fan.hpp"
#include "toric4/surface_classify.hpp"
#include "toric4/theta_engine.hpp"
#include "toric4/toric_morphism.hpp"

using namespace toric4;

namespace {

void BM_ThetaEntry(benchmark::State& state) {
  const int s_cut = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto s = theta_series(1, 2, s_cut, 60);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_ThetaEntry)->Arg(8)->Arg(20)->Arg(50);

void BM_ObstructionConstant(benchmark::State& state) {
  const long long w = state.range(0);
  for (auto _ : state) {
    auto v = obstruction_constant(8, w);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_ObstructionConstant)->Arg(60)->Arg(120)->Arg(240);

void BM_MinorDeterminant(benchmark::State& state) {
  ThetaMatrix m = build_theta_matrix(static_cast<int>(state.range(0)), 80);
  for (auto _ : state) {
    auto d = matrix_minor(m, 0);
    benchmark::DoNotOptimize(d);
  }
}
BENCHMARK(BM_MinorDeterminant)->Arg(8)->Arg(20);

void BM_DivisibilityScan(benchmark::State& state) {
  const int kmax = static_cast<int>(state.range(0));
  for (auto _ : state) {
    int hits = 0;
    for (int k = 0; k <= kmax; ++k)
      for (Int nu = 1; nu <= 1000; ++nu) {
        Int num = -Int(k) * (nu * nu + 3 * nu) + 8 * nu + 24;
        if (num % (2 * nu) == 0) ++hits;
      }
    benchmark::DoNotOptimize(hits);
  }
}
BENCHMARK(BM_DivisibilityScan)->Arg(8)->Arg(40);

void BM_SieveP3(benchmark::State& state) {
  for (auto _ : state) {
    auto r = sieve_p3_bundle({2, 2, 2});
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_SieveP3);

void BM_EnumerateP2(benchmark::State& state) {
  const Int mu_max = state.range(0);
  for (auto _ : state) {
    auto r = enumerate_p2_bundle(1, 1, 6, mu_max);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_EnumerateP2)->Arg(40)->Arg(400);

void BM_PrimitiveCollections(benchmark::State& state) {
  Fan f = make_kleinschmidt(2, 2, {Int(3), Int(1)});
  for (auto _ : state) {
    auto pcs = primitive_collections(f);
    benchmark::DoNotOptimize(pcs);
  }
}
BENCHMARK(BM_PrimitiveCollections);

void BM_ReiderAnalysis(benchmark::State& state) {
  GramNS g;
  g.m = {{{22, 14}, {14, 6}}};
  for (auto _ : state) {
    auto r = reider_case_analysis(g);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_ReiderAnalysis);

}  // namespace

BENCHMARK_MAIN();
