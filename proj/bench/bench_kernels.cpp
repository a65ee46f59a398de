#include <benchmark/benchmark.h>

#include "ramcov/constructions.hpp"
#include "ramcov/covering.hpp"
#include "ramcov/invariants.hpp"
#include "ramcov/kernels/chain_enumeration.hpp"
#include "ramcov/kernels/composition_table.hpp"
#include "ramcov/kernels/walk_counts.hpp"
#include "ramcov/nerve.hpp"
#include "ramcov/selftest.hpp"

using namespace ramcov;

namespace {

Execution mode(const benchmark::State& state) { return state.range(0) ? Execution::parallel : Execution::serial; }

void set_label(benchmark::State& state) { state.SetLabel(state.range(0) ? "parallel" : "serial"); }

CategoryPtr large_category() {
  const auto c = builtin_category("diamond-cover4");
  const auto w = builtin_category("wedge2");
  return wedge({{{c, c->object("x1")}, {w, w->object("x")}, {c, c->object("y1")}}}).category;
}

void BM_Associativity(benchmark::State& state) {
  const auto c = random_category(7, 10);
  const auto& table = c->composition_table();
  std::vector<std::int32_t> all(table.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<std::int32_t>(i);
  for (auto _ : state)
    benchmark::DoNotOptimize(kernels::associativity_failures(table, all, mode(state)));
  set_label(state);
}

void BM_WalkSums(benchmark::State& state) {
  const auto a = adjacency_matrix(*large_category());
  for (auto _ : state) benchmark::DoNotOptimize(kernels::walk_sums(a, 40, mode(state)));
  set_label(state);
}

void BM_ChainSearch(benchmark::State& state) {
  const auto c = large_category();
  for (auto _ : state) benchmark::DoNotOptimize(kernels::count_chains_by_search(*c, 4, false, mode(state)));
  set_label(state);
}

void BM_Compatibility(benchmark::State& state) {
  const auto p = builtin_functor("P-diamond4");
  const auto profile = *check_ramified_covering(p);
  for (auto _ : state) benchmark::DoNotOptimize(check_simplicial_compatibility(p, profile, 4, mode(state)));
  set_label(state);
}

void BM_Selftest(benchmark::State& state) {
  SelftestOptions options;
  options.cases = 20;
  for (auto _ : state) benchmark::DoNotOptimize(run_selftest(options, mode(state)));
  set_label(state);
}

}  // namespace

BENCHMARK(BM_Associativity)->Arg(0)->Arg(1);
BENCHMARK(BM_WalkSums)->Arg(0)->Arg(1);
BENCHMARK(BM_ChainSearch)->Arg(0)->Arg(1);
BENCHMARK(BM_Compatibility)->Arg(0)->Arg(1);
BENCHMARK(BM_Selftest)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
