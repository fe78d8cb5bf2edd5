#include <benchmark/benchmark.h>

#include "mirabolic/operator_matrix.hpp"
#include "mirabolic/oracle.hpp"
#include "mirabolic/verifier.hpp"

using namespace mirabolic;

static void BM_GaussBracket(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(gauss_bracket(N, N / 2));
}
BENCHMARK(BM_GaussBracket)->Arg(8)->Arg(16)->Arg(32);

static void BM_EnumerateBasis(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_decorated(3, 3, d));
}
BENCHMARK(BM_EnumerateBasis)->Arg(2)->Arg(3)->Arg(4);

static void BM_LaurentProduct(benchmark::State& state) {
  Laurent a, b;
  for (int e = -8; e <= 8; ++e) {
    a += Laurent::monomial(e, e * e + 1);
    b += Laurent::monomial(-e, 2 * e + 3);
  }
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_LaurentProduct);

static void BM_ActLeftFullBasis(benchmark::State& state) {
  const Context ctx{3, 3, static_cast<int>(state.range(0))};
  const auto basis = BasisIndex::make(ctx);
  const auto f1 = GeneratorToken::f(1);
  for (auto _ : state)
    for (const auto& x : basis.keys)
      benchmark::DoNotOptimize(act_left_basis(f1, ctx, x));
}
BENCHMARK(BM_ActLeftFullBasis)->Arg(2)->Arg(3);

static void BM_TokenOperatorProduct(benchmark::State& state) {
  const Context ctx{3, 3, 3};
  const auto basis = BasisIndex::make(ctx);
  const auto e = token_matrix(basis, GeneratorToken::e(1), true);
  const auto f = token_matrix(basis, GeneratorToken::f(1), true);
  for (auto _ : state) benchmark::DoNotOptimize(e * f);
}
BENCHMARK(BM_TokenOperatorProduct);

static void BM_OrbitTable(benchmark::State& state) {
  const int q = static_cast<int>(state.range(0));
  for (auto _ : state) {
    WorkBudget budget{0, 0};
    benchmark::DoNotOptimize(build_orbit_table(Context{2, 2, 2}, q, budget));
  }
}
BENCHMARK(BM_OrbitTable)->Arg(2)->Arg(3);

static void BM_PresentationCheck(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(verify_presentation(Context{2, 2, 2}, true));
}
BENCHMARK(BM_PresentationCheck);

BENCHMARK_MAIN();
