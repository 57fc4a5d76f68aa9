#include "frobtool/basis_cache.hpp"
#include "frobtool/frobenius_algebra.hpp"
#include "frobtool/gallery.hpp"
#include "frobtool/monomial_engine.hpp"

#include <benchmark/benchmark.h>

using namespace frob;

namespace {

// Each iteration starts cold: the process-wide basis cache is cleared.
void BM_KatzmanComponent(benchmark::State& state) {
  const auto e = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    BasisCache::global().clear();
    benchmark::DoNotOptimize(component(gallery::katzman_ideal(2), e));
  }
}
BENCHMARK(BM_KatzmanComponent)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_DeterminantalColon(benchmark::State& state) {
  const auto e = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    BasisCache::global().clear();
    const Ideal I = gallery::determinantal_ideal(2);
    benchmark::DoNotOptimize(colon(frobenius_power(I, e), I).basis());
  }
}
BENCHMARK(BM_DeterminantalColon)->DenseRange(1, 2)->Unit(benchmark::kMillisecond);

void BM_FrobeniusPower(benchmark::State& state) {
  const auto e = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    BasisCache::global().clear();
    benchmark::DoNotOptimize(frobenius_power(gallery::twisted_cubic_ideal(3), e).basis());
  }
}
BENCHMARK(BM_FrobeniusPower)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_LatticeProbe(benchmark::State& state) {
  const auto emax = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(mono::frac_fingen_probe(
        [](unsigned e) { return mono::polynomial_component(3, 2, e); }, 2, emax));
  }
}
BENCHMARK(BM_LatticeProbe)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_DeterminantalLattice(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(gallery::determinantal_case(2, 0, 4));
}
BENCHMARK(BM_DeterminantalLattice)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
