#include "densepm/hankel.hpp"

#include <string>

#include "densepm/counting.hpp"
#include "densepm/errors.hpp"

namespace densepm {
namespace {

template <class Entry>
ExactMatrix hankel(std::size_t size, Entry entry) {
  ExactMatrix m(size, size);
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j) m(i, j) = entry(i + j);
  return m;
}

void require_even(std::size_t n, const char* name) {
  if (n % 2 != 0) throw InputError(std::string(name) + " is defined for even n only, got " + std::to_string(n));
}

}  // namespace

ExactMatrix build_A(std::size_t n) {
  std::vector<BigInt> fact(2 * n + 1);
  for (std::size_t t = 0; t < fact.size(); ++t) fact[t] = factorial(static_cast<unsigned>(t));
  return hankel(n + 1, [&](std::size_t s) { return fact[s]; });
}

ExactMatrix pascal_lower(std::size_t n) {
  ExactMatrix l(n + 1, n + 1);
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t k = 0; k <= i; ++k) l(i, k) = binomial(static_cast<long>(i), static_cast<long>(k));
  return l;
}

ExactMatrix symmetric_pascal(std::size_t n) {
  ExactMatrix p(n + 1, n + 1);
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = 0; j <= n; ++j) p(i, j) = binomial(static_cast<long>(i + j), static_cast<long>(j));
  return p;
}

ExactMatrix factorial_diagonal(std::size_t n) {
  ExactVector d(n + 1);
  for (std::size_t i = 0; i <= n; ++i) d[i] = factorial(static_cast<unsigned>(i));
  return ExactMatrix::diagonal(d);
}

ExactMatrix build_B(std::size_t n) {
  require_even(n, "B");
  return hankel(n / 2 + 1, [](std::size_t s) { return double_factorial_pm(static_cast<unsigned>(2 * s)); });
}

ExactMatrix build_C(std::size_t n) {
  require_even(n, "C");
  return hankel(n / 2, [](std::size_t s) { return double_factorial_pm(static_cast<unsigned>(2 * s + 2)); });
}

ExactMatrix central_binomial_lower(std::size_t m) {
  ExactMatrix l(m + 1, m + 1);
  for (std::size_t i = 0; i <= m; ++i)
    for (std::size_t k = 0; k <= i; ++k)
      l(i, k) = binomial(static_cast<long>(2 * i), static_cast<long>(i - k));
  return l;
}

ExactMatrix central_binomial_weights(std::size_t m) {
  ExactVector w(m + 1, 2);
  w[0] = 1;
  return ExactMatrix::diagonal(w);
}

ExactMatrix central_binomial_hankel(std::size_t m) {
  return hankel(m + 1, [](std::size_t s) {
    return binomial(static_cast<long>(2 * s), static_cast<long>(s));
  });
}

ScaledMatrix build_U(std::size_t m) {
  ScaledMatrix u{build_A(m), std::vector<unsigned>(m + 1)};
  for (std::size_t i = 0; i <= m; ++i) u.exponents[i] = static_cast<unsigned>(i);
  return u;
}

ExactMatrix power_of_two_diagonal(std::size_t m) {
  ExactVector d(m + 1);
  for (std::size_t i = 0; i <= m; ++i) d[i] = pow2(static_cast<unsigned>(i));
  return ExactMatrix::diagonal(d);
}

ExactMatrix build_Q(std::size_t n) {
  return hankel(n + 1, [](std::size_t s) {
    const BigInt f = double_factorial_pm(static_cast<unsigned>(s));
    return BigInt(f * f);
  });
}

CheckerboardBlocks checkerboard_split(const ExactMatrix& q, std::size_t n) {
  if (q.rows() != n + 1 || q.cols() != n + 1)
    throw InputError("checkerboard split expects a " + std::to_string(n + 1) + "x" +
                     std::to_string(n + 1) + " matrix");
  std::vector<std::size_t> even;
  std::vector<std::size_t> odd;
  for (std::size_t i = 0; i <= n; ++i) (i % 2 == 0 ? even : odd).push_back(i);

  CheckerboardBlocks out;
  out.top_left = q.permuted(even, even);
  out.bottom_right = q.permuted(odd, odd);
  out.off_blocks_zero = q.permuted(even, odd).is_zero() && q.permuted(odd, even).is_zero();
  return out;
}

}  // namespace densepm
