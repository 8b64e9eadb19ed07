#include <benchmark/benchmark.h>

#include "arcsym/actions.hpp"
#include "arcsym/symmetry.hpp"
#include "bench_common.hpp"

using namespace arcsym;

namespace {

void BM_RegularSubgroup(benchmark::State& state, const char* key) {
  const auto& g = bench::group(key);
  for (auto _ : state) benchmark::DoNotOptimize(find_regular_subgroup(g).has_value());
}

void BM_RegularSubgroupWreath(benchmark::State& state) {
  const auto w = wreath_product_action(bench::group("C5"), 2);
  for (auto _ : state) benchmark::DoNotOptimize(find_regular_subgroup(w).has_value());
}

void BM_RglrHypothesis(benchmark::State& state, const char* key) {
  const auto& g = bench::group(key);
  for (auto _ : state) benchmark::DoNotOptimize(lemma_rglr_hypothesis_check(g).holds);
}

}  // namespace

BENCHMARK_CAPTURE(BM_RegularSubgroup, A4, "A4");
BENCHMARK_CAPTURE(BM_RegularSubgroup, PSL27, "PSL(2,7)")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_RegularSubgroup, AGL32, "AGL(3,2)")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RegularSubgroupWreath);
BENCHMARK_CAPTURE(BM_RglrHypothesis, S5, "S5")->Unit(benchmark::kMillisecond);
