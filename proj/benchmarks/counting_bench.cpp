#include <benchmark/benchmark.h>

#include <random>

#include "densepm/counting.hpp"
#include "densepm/graphs.hpp"

namespace {

using namespace densepm;

ExactMatrix random_01(std::size_t k, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(0.5);
  ExactMatrix m(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) m(i, j) = coin(rng) ? 1 : 0;
  return m;
}

void BM_PermanentAllOnes(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  const auto m = ExactMatrix::filled(k, k, 1);
  for (auto _ : state) benchmark::DoNotOptimize(permanent(m));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_PermanentAllOnes)->DenseRange(8, 20, 4)->Unit(benchmark::kMillisecond);

void BM_PermanentRandom01(benchmark::State& state) {
  const auto m = random_01(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(permanent(m));
}
BENCHMARK(BM_PermanentRandom01)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_PermanentWorkers(benchmark::State& state) {
  const auto m = random_01(18, 2);
  const PermanentOptions options{static_cast<unsigned>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(permanent(m, options));
}
BENCHMARK(BM_PermanentWorkers)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

// Large entries force the BigInt row-sum path.
void BM_PermanentBigEntries(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  const auto m = ExactMatrix::filled(k, k, pow2(70));
  for (auto _ : state) benchmark::DoNotOptimize(permanent(m));
}
BENCHMARK(BM_PermanentBigEntries)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);

void BM_CountGeneralComplete(benchmark::State& state) {
  const auto g = SimpleGraph::complete(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(count_pm_general(g));
}
BENCHMARK(BM_CountGeneralComplete)->DenseRange(12, 24, 4)->Unit(benchmark::kMillisecond);

void BM_CountGeneralAlphaInstance(benchmark::State& state) {
  std::mt19937_64 rng(3);
  std::bernoulli_distribution coin(0.5);
  const std::size_t n = 5;
  BipartiteMultigraph g(n, n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      if (coin(rng)) g.set_multiplicity(u, v, 1);
  const auto dense = augment_alpha(g, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(count_pm_general(dense));
}
BENCHMARK(BM_CountGeneralAlphaInstance)->DenseRange(0, 5, 1);

void BM_MatchingsBySize(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  const auto g = augment_beta(BipartiteMultigraph(), k);
  for (auto _ : state) benchmark::DoNotOptimize(matchings_by_size(g));
}
BENCHMARK(BM_MatchingsBySize)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

}  // namespace
