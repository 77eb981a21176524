#include <benchmark/benchmark.h>

#include "polysnake/maximal.hpp"

using namespace polysnake;

static void MaxSnakeLength(benchmark::State& state) {
  int side = static_cast<int>(state.range(0));
  SnakeClass cls = static_cast<SnakeClass>(state.range(1));
  for (auto _ : state) {
    SearchResult r = max_snake_length({side, side, cls, 1'000'000'000ull, 1});
    benchmark::DoNotOptimize(r.n_max);
  }
}
BENCHMARK(MaxSnakeLength)
    ->ArgsProduct({{3, 4, 5}, {0, 1, 2}})
    ->Unit(benchmark::kMillisecond);
