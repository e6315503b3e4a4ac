#include "densepm/counting.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

#include "densepm/errors.hpp"

namespace densepm {

BigInt double_factorial_pm(unsigned n) {
  if (n % 2 != 0) return 0;
  BigInt result;
  if (n == 0) return 1;
  mpz_2fac_ui(result.get_mpz_t(), n - 1);
  return result;
}

namespace {

using Subset = std::uint64_t;

constexpr Subset gray(Subset g) { return g ^ (g >> 1); }

// Row sums kept in int64 when every entry is a nonnegative value small enough
// that no sum can overflow; products start in uint64 and spill into a BigInt.
struct SmallEntries {
  std::size_t n;
  std::vector<std::int64_t> a;  // row-major

  void accumulate(Subset lo, Subset hi, BigInt& sum) const {
    std::vector<std::int64_t> row_sum(n, 0);
    Subset current = gray(lo);
    for (std::size_t j = 0; j < n; ++j)
      if (current >> j & 1)
        for (std::size_t i = 0; i < n; ++i) row_sum[i] += a[i * n + j];
    BigInt product;
    for (Subset g = lo; g < hi; ++g) {
      if (g != lo) {
        const auto col = static_cast<std::size_t>(std::countr_zero(g));
        const bool added = (gray(g) >> col) & 1;
        for (std::size_t i = 0; i < n; ++i)
          row_sum[i] += added ? a[i * n + col] : -a[i * n + col];
        current = gray(g);
      }
      if (current == 0) continue;
      std::uint64_t small = 1;
      bool spilled = false;
      bool zero = false;
      for (std::size_t i = 0; i < n; ++i) {
        const auto r = static_cast<std::uint64_t>(row_sum[i]);
        if (r == 0) {
          zero = true;
          break;
        }
        if (spilled) {
          mpz_mul_ui(product.get_mpz_t(), product.get_mpz_t(), r);
        } else if (__builtin_mul_overflow(small, r, &small)) {
          product = 1;
          for (std::size_t t = 0; t <= i; ++t)
            mpz_mul_ui(product.get_mpz_t(), product.get_mpz_t(),
                       static_cast<std::uint64_t>(row_sum[t]));
          spilled = true;
        }
      }
      if (zero) continue;
      const bool negative = (n - static_cast<std::size_t>(std::popcount(current))) % 2 != 0;
      if (spilled) {
        if (negative) sum -= product;
        else sum += product;
      } else if (negative) {
        mpz_sub_ui(sum.get_mpz_t(), sum.get_mpz_t(), small);
      } else {
        mpz_add_ui(sum.get_mpz_t(), sum.get_mpz_t(), small);
      }
    }
  }
};

struct GeneralEntries {
  const ExactMatrix& a;

  void accumulate(Subset lo, Subset hi, BigInt& sum) const {
    const std::size_t n = a.rows();
    std::vector<BigInt> row_sum(n);
    Subset current = gray(lo);
    for (std::size_t j = 0; j < n; ++j)
      if (current >> j & 1)
        for (std::size_t i = 0; i < n; ++i) row_sum[i] += a(i, j);
    BigInt product;
    for (Subset g = lo; g < hi; ++g) {
      if (g != lo) {
        const auto col = static_cast<std::size_t>(std::countr_zero(g));
        const bool added = (gray(g) >> col) & 1;
        for (std::size_t i = 0; i < n; ++i) {
          if (added) row_sum[i] += a(i, col);
          else row_sum[i] -= a(i, col);
        }
        current = gray(g);
      }
      if (current == 0) continue;
      product = 1;
      for (std::size_t i = 0; i < n && product != 0; ++i) product *= row_sum[i];
      if ((n - static_cast<std::size_t>(std::popcount(current))) % 2 != 0) sum -= product;
      else sum += product;
    }
  }
};

template <class Kernel>
BigInt ryser(const Kernel& kernel, std::size_t n, unsigned workers) {
  const Subset total = Subset{1} << n;
  workers = std::max(1u, workers);
  if (total < 4096) workers = 1;
  std::vector<BigInt> partial(workers);
  if (workers == 1) {
    kernel.accumulate(0, total, partial[0]);
  } else {
    std::vector<std::thread> threads;
    const Subset chunk = total / workers;
    for (unsigned w = 0; w < workers; ++w) {
      const Subset lo = w * chunk;
      const Subset hi = (w + 1 == workers) ? total : lo + chunk;
      threads.emplace_back([&, w, lo, hi] { kernel.accumulate(lo, hi, partial[w]); });
    }
    for (auto& t : threads) t.join();
  }
  BigInt sum;
  for (const auto& p : partial) sum += p;
  return sum;
}

bool fits_small(const ExactMatrix& m) {
  const std::size_t n = m.rows();
  const auto limit = static_cast<long>(std::numeric_limits<std::int64_t>::max() / static_cast<std::int64_t>(n + 1));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (m(i, j) < 0 || !m(i, j).fits_slong_p() || m(i, j).get_si() > limit) return false;
  return true;
}

}  // namespace

BigInt permanent(const ExactMatrix& m, PermanentOptions options) {
  if (!m.square())
    throw InputError("permanent needs a square matrix, got " + std::to_string(m.rows()) + "x" +
                     std::to_string(m.cols()));
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n >= 63) throw ResourceLimitError("permanent order " + std::to_string(n) + " exceeds 62");
  if (fits_small(m)) {
    SmallEntries kernel{n, std::vector<std::int64_t>(n * n)};
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) kernel.a[i * n + j] = m(i, j).get_si();
    return ryser(kernel, n, options.workers);
  }
  return ryser(GeneralEntries{m}, n, options.workers);
}

BigInt count_pm_bipartite(const BipartiteMultigraph& g, PermanentOptions options) {
  if (!g.balanced()) return 0;
  const std::size_t n = g.n_left();
  ExactMatrix m(n, n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) {
      const auto mult = g.multiplicity(u, v);
      mpz_import(m(u, v).get_mpz_t(), 1, 1, sizeof(mult), 0, 0, &mult);
    }
  return permanent(m, options);
}

namespace {

template <class Count>
class LowestVertexCounter {
 public:
  explicit LowestVertexCounter(std::vector<std::uint64_t> neighbours)
      : neighbours_(std::move(neighbours)) {}

  Count count(std::uint64_t unmatched) {
    if (unmatched == 0) return Count(1);
    if (auto it = memo_.find(unmatched); it != memo_.end()) return it->second;
    const auto u = std::countr_zero(unmatched);
    const std::uint64_t rest = unmatched & ~(std::uint64_t{1} << u);
    std::uint64_t candidates = neighbours_[static_cast<std::size_t>(u)] & rest;
    Count total(0);
    while (candidates != 0) {
      const auto v = std::countr_zero(candidates);
      candidates &= candidates - 1;
      total += count(rest & ~(std::uint64_t{1} << v));
    }
    memo_.emplace(unmatched, total);
    return total;
  }

 private:
  std::vector<std::uint64_t> neighbours_;
  std::unordered_map<std::uint64_t, Count> memo_;
};

}  // namespace

BigInt count_pm_general(const SimpleGraph& g, std::size_t max_vertices) {
  const std::size_t n = g.n_vertices();
  if (n > max_vertices || n > 64)
    throw ResourceLimitError("general graph has " + std::to_string(n) + " vertices, cap is " +
                             std::to_string(std::min<std::size_t>(max_vertices, 64)));
  if (n % 2 != 0) return 0;
  if (n == 0) return 1;
  std::vector<std::uint64_t> neighbours(n, 0);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      if (u != v && g.adjacent(u, v)) neighbours[u] |= std::uint64_t{1} << v;
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  // (n-1)!! bounds the count and stays below 2^64 through n = 34.
  if (n <= 34) {
    LowestVertexCounter<std::uint64_t> counter(std::move(neighbours));
    const std::uint64_t c = counter.count(all);
    BigInt result;
    mpz_import(result.get_mpz_t(), 1, 1, sizeof(c), 0, 0, &c);
    return result;
  }
  LowestVertexCounter<BigInt> counter(std::move(neighbours));
  return counter.count(all);
}

MatchingPolynomial matchings_by_size(const BipartiteMultigraph& g, std::size_t max_side) {
  const bool transpose = g.n_right() > g.n_left();
  const std::size_t rows = transpose ? g.n_right() : g.n_left();
  const std::size_t side = transpose ? g.n_left() : g.n_right();
  if (side > max_side || side >= 63)
    throw ResourceLimitError("matching enumeration side " + std::to_string(side) + " exceeds cap " +
                             std::to_string(max_side));
  auto mult = [&](std::size_t r, std::size_t c) {
    const auto m = transpose ? g.multiplicity(c, r) : g.multiplicity(r, c);
    BigInt out;
    mpz_import(out.get_mpz_t(), 1, 1, sizeof(m), 0, 0, &m);
    return out;
  };

  // ways[mask]: matchings among the rows seen so far that cover exactly `mask`.
  const std::size_t states = std::size_t{1} << side;
  std::vector<BigInt> ways(states);
  ways[0] = 1;
  for (std::size_t r = 0; r < rows; ++r) {
    std::vector<std::pair<std::size_t, BigInt>> edges;
    for (std::size_t c = 0; c < side; ++c)
      if (auto m = mult(r, c); m != 0) edges.emplace_back(c, std::move(m));
    if (edges.empty()) continue;
    for (std::size_t mask = states; mask-- > 0;) {
      if (ways[mask] == 0) continue;
      for (const auto& [c, m] : edges)
        if (!(mask >> c & 1)) ways[mask | (std::size_t{1} << c)] += ways[mask] * m;
    }
  }

  MatchingPolynomial poly;
  poly.counts.assign(side + 1, 0);
  for (std::size_t mask = 0; mask < states; ++mask)
    poly.counts[static_cast<std::size_t>(std::popcount(mask))] += ways[mask];
  return poly;
}

}  // namespace densepm
