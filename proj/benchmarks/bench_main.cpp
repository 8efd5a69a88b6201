#include <benchmark/benchmark.h>

#include <numeric>
#include <vector>

#include "zerosum/class_group.hpp"
#include "zerosum/davenport.hpp"
#include "zerosum/sumset.hpp"
#include "zerosum/verifier.hpp"

namespace {

using namespace zerosum;

void BM_MzLength(benchmark::State& state) {
  const auto n = state.range(0);
  const auto group = AbelianGroup::cyclic(n);
  std::vector<ElementIndex> entries;
  for (std::int64_t i = 0; i < n; ++i) entries.push_back(static_cast<ElementIndex>((i * i + 1) % n));
  for (auto _ : state) benchmark::DoNotOptimize(mz_length(group, entries));
}
BENCHMARK(BM_MzLength)->Arg(16)->Arg(64)->Arg(256)->Arg(1024);

void BM_ReachableSums(benchmark::State& state) {
  const auto n = state.range(0);
  const auto group = AbelianGroup::cyclic(n);
  std::vector<ElementIndex> entries(static_cast<std::size_t>(n / 2), 2);
  for (auto _ : state) benchmark::DoNotOptimize(reachable_sums(group, entries));
}
BENCHMARK(BM_ReachableSums)->Arg(64)->Arg(1024)->Arg(16384);

void BM_Davenport(benchmark::State& state) {
  const auto group = AbelianGroup({state.range(0), state.range(1)});
  for (auto _ : state) benchmark::DoNotOptimize(davenport(group).value);
}
BENCHMARK(BM_Davenport)->Args({2, 4})->Args({3, 3})->Args({2, 6})->Args({4, 4});

void BM_VerifySupportBound(benchmark::State& state) {
  verify::VerifyOptions opts;
  opts.orbit_reduction = state.range(1) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(verify::verify_support_bound(state.range(0), opts));
}
BENCHMARK(BM_VerifySupportBound)->Args({8, 1})->Args({8, 0})->Args({10, 1})->Args({10, 0});

void BM_ClassGroup(benchmark::State& state) {
  const quad::QuadOrder order(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(quad::ClassGroup(order).order_h());
}
BENCHMARK(BM_ClassGroup)->Arg(26)->Arg(5077)->Arg(100003);

}  // namespace

BENCHMARK_MAIN();
