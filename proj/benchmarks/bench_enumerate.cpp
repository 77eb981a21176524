#include <benchmark/benchmark.h>

#include "polysnake/enumerate.hpp"

using namespace polysnake;

static void EnumerateSnakes(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    std::uint64_t count = enumerate_snakes(2, n);
    benchmark::DoNotOptimize(count);
  }
  state.SetComplexityN(n);
}
BENCHMARK(EnumerateSnakes)->DenseRange(8, 12)->Unit(benchmark::kMillisecond);

static void CountPds3D(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    std::uint64_t count = count_pds(3, n);
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(CountPds3D)->DenseRange(5, 8)->Unit(benchmark::kMillisecond);
