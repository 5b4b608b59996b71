#include <benchmark/benchmark.h>

#include "wbr/polygen.hpp"
#include "wbr/verify.hpp"
#include "wbr/witt.hpp"

using namespace wbr;

static void BM_FrameBuild(benchmark::State& state) {
  auto n = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(build_frame(make_abelian(2, {n, n})));
}
BENCHMARK(BM_FrameBuild)->Arg(2)->Arg(3);

static void BM_PolyMul(benchmark::State& state) {
  Frame f = build_frame(make_abelian(2, {2, 2}));
  auto u = gen_polys(f, PolyKind::Product, 4);
  const MPoly& big = u.polys.back();
  for (auto _ : state) benchmark::DoNotOptimize(big * big);
}
BENCHMARK(BM_PolyMul);

static void BM_WittMul(benchmark::State& state) {
  auto n = static_cast<std::uint32_t>(state.range(0));
  Frame f = build_frame(make_abelian(2, {n, n}));
  Rng rng(1);
  WittVec a = random_vec(f, 2, rng, false);
  WittVec b = random_vec(f, 2, rng, false);
  for (auto _ : state) benchmark::DoNotOptimize(witt_mul(a, b));
}
BENCHMARK(BM_WittMul)->Arg(2)->Arg(3);

BENCHMARK_MAIN();
