#include "densepm/certify.hpp"

#include <algorithm>

#include "densepm/counting.hpp"
#include "densepm/errors.hpp"
#include "densepm/hankel.hpp"

namespace densepm {

std::optional<MatrixKind> parse_matrix_kind(std::string_view name) {
  if (name == "A") return MatrixKind::A;
  if (name == "B") return MatrixKind::B;
  if (name == "C") return MatrixKind::C;
  if (name == "Q") return MatrixKind::Q;
  if (name == "pascalL") return MatrixKind::PascalLower;
  if (name == "cbinL") return MatrixKind::CentralBinomialLower;
  return std::nullopt;
}

std::string_view matrix_kind_name(MatrixKind kind) {
  switch (kind) {
    case MatrixKind::A: return "A";
    case MatrixKind::B: return "B";
    case MatrixKind::C: return "C";
    case MatrixKind::Q: return "Q";
    case MatrixKind::PascalLower: return "pascalL";
    case MatrixKind::CentralBinomialLower: return "cbinL";
  }
  return "?";
}

ExactMatrix build_matrix(MatrixKind kind, std::size_t n) {
  switch (kind) {
    case MatrixKind::A: return build_A(n);
    case MatrixKind::B: return build_B(n);
    case MatrixKind::C: return build_C(n);
    case MatrixKind::Q: return build_Q(n);
    case MatrixKind::PascalLower: return pascal_lower(n);
    case MatrixKind::CentralBinomialLower: return central_binomial_lower(n);
  }
  throw InputError("unknown matrix kind");
}

FactorCheck check_factorization(MatrixKind kind, std::size_t n) {
  switch (kind) {
    case MatrixKind::A: {
      const auto d = factorial_diagonal(n);
      const auto l = pascal_lower(n);
      return {build_A(n) == d * (l * l.transpose()) * d, "A = D L L^T D"};
    }
    case MatrixKind::PascalLower: {
      const auto l = pascal_lower(n);
      return {l * l.transpose() == symmetric_pascal(n), "L L^T = [binomial(i+j, j)]"};
    }
    case MatrixKind::CentralBinomialLower: {
      const auto l = central_binomial_lower(n);
      return {l * central_binomial_weights(n) * l.transpose() == central_binomial_hankel(n),
              "L diag(1,2,...,2) L^T = [binomial(2(i+j), i+j)]"};
    }
    case MatrixKind::B: {
      const auto b = build_B(n);
      const std::size_t m = n / 2;
      const auto u = build_U(m);
      const auto l = central_binomial_lower(m);
      const auto v = l * central_binomial_weights(m) * l.transpose();
      ExactMatrix scaled_b = b;
      for (std::size_t i = 0; i <= m; ++i)
        for (std::size_t j = 0; j <= m; ++j)
          scaled_b(i, j) *= pow2(u.exponents[i] + u.exponents[j]);
      return {scaled_b == schur_product(u.scaled, v), "P B P = A o V, P = diag(2^i)"};
    }
    case MatrixKind::C: {
      const auto c = build_C(n);
      const auto b = build_B(n);
      return {c == b.block(1, 0, n / 2, n / 2), "C = B without first row and last column"};
    }
    case MatrixKind::Q: {
      ExactMatrix h(n + 1, n + 1);
      for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t j = 0; j <= n; ++j) h(i, j) = double_factorial_pm(static_cast<unsigned>(i + j));
      return {build_Q(n) == schur_product(h, h), "Q = H o H, H = [f(i+j)]"};
    }
  }
  throw InputError("unknown matrix kind");
}

bool vandermonde_identity_holds(std::size_t i, std::size_t j) {
  const auto li = static_cast<long>(i);
  const auto lj = static_cast<long>(j);
  BigInt sum;
  for (long k = 0; k <= std::min(li, lj); ++k) sum += binomial(li, k) * binomial(lj, k);
  return sum == binomial(li + lj, lj);
}

bool central_binomial_identity_holds(std::size_t i, std::size_t j) {
  const auto li = static_cast<long>(i);
  const auto lj = static_cast<long>(j);
  BigInt sum = binomial(2 * li, li) * binomial(2 * lj, lj);
  for (long k = 1; k <= std::max(li, lj); ++k) sum += 2 * binomial(2 * li, li - k) * binomial(2 * lj, lj - k);
  return sum == binomial(2 * (li + lj), li + lj);
}

bool double_factorial_identity_holds(std::size_t t) {
  const auto ut = static_cast<unsigned>(t);
  const BigInt denominator = pow2(ut) * factorial(ut);
  const BigInt numerator = factorial(2 * ut);
  if (numerator % denominator != 0) return false;
  return double_factorial_pm(2 * ut) == numerator / denominator;
}

}  // namespace densepm
