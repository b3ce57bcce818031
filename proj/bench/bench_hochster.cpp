#include <benchmark/benchmark.h>

#include "sqfpow/graph.hpp"
#include "sqfpow/homology.hpp"
#include "sqfpow/io.hpp"

using namespace sqfpow;

namespace {

SqfIdeal whiskered_ones(int s) {
  const std::vector<int> ones(static_cast<std::size_t>(s), 1);
  return edge_ideal(family::whiskered(ones));
}

const Field Q = Field::rational();

void BM_betti_parallel(benchmark::State& state) {
  const SqfIdeal i = whiskered_ones(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hochster_betti(i, Q));
}

void BM_betti_serial(benchmark::State& state) {
  const SqfIdeal i = whiskered_ones(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hochster_betti_serial(i, Q));
}

void BM_depth_parallel(benchmark::State& state) {
  const SqfIdeal i = squarefree_power(counterexample_ideal(), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(depth(i, Q));
}

void BM_depth_serial(benchmark::State& state) {
  const SqfIdeal i = squarefree_power(counterexample_ideal(), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(depth_serial(i, Q));
}

void BM_betti_prime_field(benchmark::State& state) {
  const SqfIdeal i = whiskered_ones(static_cast<int>(state.range(0)));
  const Field gf = Field::gf(kDefaultPrime);
  for (auto _ : state) benchmark::DoNotOptimize(hochster_betti(i, gf));
}

}  // namespace

BENCHMARK(BM_betti_parallel)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_betti_serial)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_betti_prime_field)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_depth_parallel)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_depth_serial)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
