#include <benchmark/benchmark.h>

#include <random>

#include "ncfact/complexes.hpp"
#include "ncfact/ncs.hpp"
#include "ncfact/top_poset.hpp"

namespace {

using namespace ncfact;

void BM_IntervalDelta(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  SymmetricGroup sym(d);
  for (auto _ : state) {
    benchmark::DoNotOptimize(interval(sym, delta(d)));
  }
}
BENCHMARK(BM_IntervalDelta)->Arg(4)->Arg(5)->Arg(6);

void BM_EnumerateLinear(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  SymmetricGroup sym(d);
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_linear(sym, delta(d)));
  }
}
BENCHMARK(BM_EnumerateLinear)->Arg(3)->Arg(4);

void BM_IntervalComplex(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  SymmetricGroup sym(d);
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_interval_complex(sym, delta(d)));
  }
}
BENCHMARK(BM_IntervalComplex)->Arg(3)->Arg(4);

void BM_StratumComplex(benchmark::State& state) {
  SymmetricGroup sym(4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(stratum_complex(sym, delta(4), 2));
  }
}
BENCHMARK(BM_StratumComplex);

void BM_ComplementaryRegions(benchmark::State& state) {
  SymmetricGroup sym(12);
  std::mt19937_64 rng(42);
  std::vector<NCSPartition> pool;
  for (int i = 0; i < 64; ++i) pool.push_back(random_ncs_partition(sym, rng));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(complementary_regions(pool[i++ % pool.size()]));
  }
}
BENCHMARK(BM_ComplementaryRegions);

void BM_PsiRoundTrip(benchmark::State& state) {
  SymmetricGroup sym(6);
  std::mt19937_64 rng(42);
  std::vector<CircClass<Permutation>> pool;
  for (int i = 0; i < 64; ++i) {
    pool.push_back(circ_quotient(sym, random_top_point(sym, delta(6), rng)));
  }
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& c = pool[i++ % pool.size()];
    benchmark::DoNotOptimize(psi_big_inv(sym, psi_big(sym, c)));
  }
}
BENCHMARK(BM_PsiRoundTrip);

}  // namespace

BENCHMARK_MAIN();
