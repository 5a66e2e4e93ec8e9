#include <benchmark/benchmark.h>

#include "confal/parse.hpp"
#include "confal/poly.hpp"

using namespace confal;

static void BM_PolyMul(benchmark::State& state) {
  Context ctx = Context::make();
  Poly p = parse_poly(ctx, "(d + 2*x + a)^3");
  Poly q = parse_poly(ctx, "(d - x + b)^3");
  for (auto _ : state) benchmark::DoNotOptimize(p * q);
}
BENCHMARK(BM_PolyMul);

static void BM_Substitute(benchmark::State& state) {
  Context ctx = Context::make();
  Poly p = parse_poly(ctx, "(d + 2*x + a)^4");
  Poly r = parse_poly(ctx, "-d - x");
  VarId x = ctx.lam(0);
  for (auto _ : state) benchmark::DoNotOptimize(p.substitute(x, r));
}
BENCHMARK(BM_Substitute);

BENCHMARK_MAIN();
