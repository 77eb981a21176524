#include <benchmark/benchmark.h>

#include "polysnake/gf_catalog.hpp"
#include "polysnake/inscribed_gf.hpp"
#include "polysnake/series.hpp"

using namespace polysnake;

static void ExpandRational(benchmark::State& state) {
  RationalGF gf = gf_pds_nd({4});
  int order = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto coeffs = expand_coefficients(gf, order);
    benchmark::DoNotOptimize(coeffs);
  }
}
BENCHMARK(ExpandRational)->Arg(64)->Arg(256)->Arg(1024);

static void InscribedWidth(benchmark::State& state) {
  int b = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto gf = gf_inscribed_pds(b, default_inscribed_order(b));
    benchmark::DoNotOptimize(gf.series);
  }
}
BENCHMARK(InscribedWidth)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

static void BubbleFixedPoint(benchmark::State& state) {
  int order = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto b = gf_bubble_all(order);
    benchmark::DoNotOptimize(b);
  }
}
BENCHMARK(BubbleFixedPoint)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);
