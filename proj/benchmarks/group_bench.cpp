#include <benchmark/benchmark.h>

#include "arcsym/subgroups.hpp"
#include "bench_common.hpp"

namespace {

// Schreier-Sims from the bare generators.
void BM_StabilizerChain(benchmark::State& state, const char* key) {
  const auto& g = bench::group(key);
  for (auto _ : state) {
    arcsym::PermutationGroup h(g.degree(), g.generators());
    benchmark::DoNotOptimize(h.order());
  }
}

void BM_Sp62Chain(benchmark::State& state) {
  const auto& g = bench::catalog().sp6_2.group;
  for (auto _ : state) {
    arcsym::PermutationGroup h(g.degree(), g.generators());
    benchmark::DoNotOptimize(h.order());
  }
}

void BM_SubgroupClasses(benchmark::State& state, const char* key) {
  const auto& g = bench::group(key);
  for (auto _ : state) benchmark::DoNotOptimize(arcsym::subgroups_up_to_conjugacy(g).size());
}

}  // namespace

BENCHMARK_CAPTURE(BM_StabilizerChain, A5, "A5");
BENCHMARK_CAPTURE(BM_StabilizerChain, PSL27, "PSL(2,7)");
BENCHMARK_CAPTURE(BM_StabilizerChain, S12, "S12");
BENCHMARK(BM_Sp62Chain);
BENCHMARK_CAPTURE(BM_SubgroupClasses, S4, "S4")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_SubgroupClasses, A5, "A5")->Unit(benchmark::kMillisecond);
