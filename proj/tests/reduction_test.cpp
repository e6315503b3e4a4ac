#include "densepm/reduction.hpp"

#include <gtest/gtest.h>

#include <atomic>

#include "densepm/errors.hpp"
#include "test_support.hpp"

namespace densepm {
namespace {

using testing::random_bipartite;
using testing::running_example;

ExactVector vec(std::initializer_list<long> values) {
  ExactVector v;
  for (long x : values) v.emplace_back(x);
  return v;
}

MatchingPolynomial poly(std::initializer_list<long> counts) { return {vec(counts)}; }

/// Exact counts, but remembers how often it was asked.
class CountingOracle final : public CountOracle {
 public:
  BigInt count(const BipartiteMultigraph& g) const override {
    ++calls;
    return inner.count(g);
  }
  BigInt count(const SimpleGraph& g) const override {
    ++calls;
    return inner.count(g);
  }
  mutable std::atomic<int> calls{0};
  ExactCountOracle inner;
};

/// Adds `delta` to the count of G_target.
class SkewedOracle final : public CountOracle {
 public:
  SkewedOracle(std::size_t target_side, long delta) : target_side_(target_side), delta_(delta) {}
  BigInt count(const BipartiteMultigraph& g) const override {
    return inner_.count(g) + (g.n_left() == target_side_ ? delta_ : 0);
  }
  BigInt count(const SimpleGraph& g) const override {
    return inner_.count(g) + (g.n_vertices() == 2 * target_side_ ? delta_ : 0);
  }

 private:
  std::size_t target_side_;
  long delta_;
  ExactCountOracle inner_;
};

TEST(ReduceBeta, WorkedExamples) {
  const ExactCountOracle oracle;
  auto r = reduce_beta(running_example(), oracle);
  EXPECT_EQ(r.p, vec({6, 13, 44}));
  EXPECT_EQ(r.recovered, poly({1, 3, 1}));
  EXPECT_EQ(r.oracle_calls, 3u);
  EXPECT_EQ(r.construction, Construction::Beta);
  EXPECT_FALSE(r.verified.has_value());

  r = reduce_beta(BipartiteMultigraph::from_rows({{1}}), oracle);
  EXPECT_EQ(r.p, vec({2, 3}));
  EXPECT_EQ(r.recovered, poly({1, 1}));

  r = reduce_beta(BipartiteMultigraph::from_rows({{1, 1}, {1, 1}}), oracle);
  EXPECT_EQ(r.p, vec({8, 16, 52}));
  EXPECT_EQ(r.recovered, poly({1, 4, 2}));
}

TEST(ReduceAlpha, WorkedExamples) {
  const ExactCountOracle oracle;
  auto r = reduce_alpha(running_example(), oracle);
  EXPECT_EQ(r.p, vec({2, 3, 10}));
  EXPECT_EQ(r.recovered, poly({1, 3, 1}));
  EXPECT_EQ(r.construction, Construction::Alpha);

  // p_0 = f(1)^2 + f(0)^2 = 1, p_1 = f(2)^2 + f(1)^2 = 1; G_1 has only {01, 23}.
  r = reduce_alpha(BipartiteMultigraph::from_rows({{1}}), oracle);
  EXPECT_EQ(r.p, vec({1, 1}));
  EXPECT_EQ(r.recovered, poly({1, 1}));

  r = reduce_alpha(BipartiteMultigraph(1, 1), oracle);
  EXPECT_EQ(r.recovered, poly({1, 0}));
}

TEST(Reduce, EmptyGraph) {
  const ExactCountOracle oracle;
  for (auto c : {Construction::Beta, Construction::Alpha}) {
    const auto r = reduce(c, BipartiteMultigraph(), oracle);
    EXPECT_EQ(r.p, vec({1}));
    EXPECT_EQ(r.recovered, poly({1}));
    EXPECT_EQ(r.oracle_calls, 1u);
  }
}

TEST(Reduce, RejectsInvalidInput) {
  const ExactCountOracle oracle;
  for (auto c : {Construction::Beta, Construction::Alpha}) {
    EXPECT_THROW(reduce(c, BipartiteMultigraph(2, 3), oracle), InputError);
    EXPECT_THROW(reduce(c, BipartiteMultigraph::from_rows({{2}}), oracle), InputError);
  }
}

TEST(Reduce, OracleCallBudget) {
  std::mt19937_64 rng(43);
  for (std::size_t n = 0; n <= 4; ++n)
    for (auto c : {Construction::Beta, Construction::Alpha}) {
      CountingOracle oracle;
      const auto r = reduce(c, random_bipartite(rng, n, 0.5), oracle);
      EXPECT_EQ(oracle.calls.load(), static_cast<int>(n + 1));
      EXPECT_EQ(r.oracle_calls, n + 1);
      EXPECT_EQ(r.p.size(), n + 1);
      EXPECT_EQ(r.recovered.size(), n + 1);
    }
}

TEST(Reduce, InconsistentOracleIsReported) {
  // Bumping p_0 shifts the solution by A_2^-1 e_0 = (3, -3, 1/2).
  const SkewedOracle skew_beta(2, 1);
  EXPECT_THROW(reduce_beta(running_example(), skew_beta), OracleInconsistencyError);

  // Under alpha with n = 1, Q = I, so a negative count gives a negative m.
  const SkewedOracle skew_alpha(1, -5);
  try {
    reduce_alpha(BipartiteMultigraph::from_rows({{1}}), skew_alpha);
    FAIL();
  } catch (const OracleInconsistencyError& e) {
    EXPECT_EQ(e.index(), 1u);
  }
}

TEST(Reduce, ConcurrentCallsGiveIdenticalReports) {
  std::mt19937_64 rng(47);
  const ExactCountOracle oracle;
  for (auto c : {Construction::Beta, Construction::Alpha}) {
    const auto g = random_bipartite(rng, 4, 0.6);
    const auto serial = reduce(c, g, oracle);
    const auto parallel = reduce(c, g, oracle, {.concurrent_oracle_calls = true});
    EXPECT_EQ(serial.p, parallel.p);
    EXPECT_EQ(serial.recovered, parallel.recovered);
  }
}

TEST(ForwardIdentity, Beta) {
  std::mt19937_64 rng(53);
  for (std::size_t n = 0; n <= 6; ++n)
    for (double p : {0.3, 0.7}) {
      const auto g = random_bipartite(rng, n, p);
      const auto m = testing::matchings_by_enumeration(g);
      for (std::size_t i = 0; i <= n; ++i) {
        BigInt expected;
        for (std::size_t j = 0; j <= n; ++j) expected += factorial(static_cast<unsigned>(n + i - j)) * m[j];
        ASSERT_EQ(count_pm_bipartite(augment_beta(g, i)), expected) << n << ' ' << i;
      }
    }
}

TEST(ForwardIdentity, Alpha) {
  std::mt19937_64 rng(59);
  for (std::size_t n = 0; n <= 4; ++n)
    for (double p : {0.3, 0.7}) {
      const auto g = random_bipartite(rng, n, p);
      const auto m = testing::matchings_by_enumeration(g);
      for (std::size_t i = 0; i <= n; ++i) {
        BigInt expected;
        for (std::size_t j = 0; j <= n; ++j) {
          const BigInt f = double_factorial_pm(static_cast<unsigned>(n + i - j));
          expected += f * f * m[j];
        }
        ASSERT_EQ(count_pm_general(augment_alpha(g, i)), expected) << n << ' ' << i;
      }
    }
}

TEST(VerifyRoundtrip, Examples) {
  EXPECT_EQ(verify_roundtrip(running_example(), Construction::Beta).verified, true);
  EXPECT_EQ(verify_roundtrip(running_example(), Construction::Alpha).verified, true);
  const auto empty = verify_roundtrip(BipartiteMultigraph(1, 1), Construction::Beta);
  EXPECT_EQ(empty.verified, true);
  EXPECT_EQ(empty.recovered, poly({1, 0}));
}

TEST(VerifyRoundtrip, Caps) {
  EXPECT_THROW(verify_roundtrip(BipartiteMultigraph(9, 9), Construction::Beta), ResourceLimitError);
  EXPECT_THROW(verify_roundtrip(BipartiteMultigraph(6, 6), Construction::Alpha), ResourceLimitError);
  EXPECT_THROW(verify_roundtrip(BipartiteMultigraph(3, 3), Construction::Beta, 2), ResourceLimitError);
}

TEST(VerifyRoundtrip, RandomGraphs) {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial % 5);
    const auto g = random_bipartite(rng, n, 0.5);
    for (auto c : {Construction::Beta, Construction::Alpha}) {
      const auto r = verify_roundtrip(g, c);
      ASSERT_EQ(r.verified, true);
      ASSERT_EQ(r.recovered[0], 1);
      ASSERT_EQ(r.recovered[n], count_pm_bipartite(g));
    }
  }
}

TEST(Construction, NamesRoundTrip) {
  EXPECT_EQ(parse_construction("beta"), Construction::Beta);
  EXPECT_EQ(parse_construction("alpha"), Construction::Alpha);
  EXPECT_FALSE(parse_construction("gamma").has_value());
  EXPECT_EQ(construction_name(Construction::Alpha), "alpha");
}

}  // namespace
}  // namespace densepm
