#include <benchmark/benchmark.h>

#include "densepm/certify.hpp"
#include "densepm/hankel.hpp"
#include "densepm/linalg.hpp"

namespace {

using namespace densepm;

void BM_DeterminantA(benchmark::State& state) {
  const auto a = build_A(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(determinant(a));
}
BENCHMARK(BM_DeterminantA)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_LeadingMinorsQ(benchmark::State& state) {
  const auto q = build_Q(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(leading_principal_minors(q));
}
BENCHMARK(BM_LeadingMinorsQ)->Arg(10)->Arg(20)->Arg(40);

void BM_SolveA(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = build_A(n);
  ExactVector p(n + 1);
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = 0; j <= n; ++j) p[i] += a(i, j);
  for (auto _ : state) benchmark::DoNotOptimize(solve_symmetric_exact(a, p));
}
BENCHMARK(BM_SolveA)->Arg(8)->Arg(16)->Arg(32);

void BM_FactorCheck(benchmark::State& state) {
  const auto kind = static_cast<MatrixKind>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(check_factorization(kind, 12));
}
BENCHMARK(BM_FactorCheck)->DenseRange(0, 5, 1);

}  // namespace
