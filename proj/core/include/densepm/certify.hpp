#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "densepm/exact_matrix.hpp"

namespace densepm {

enum class MatrixKind { A, B, C, Q, PascalLower, CentralBinomialLower };

std::optional<MatrixKind> parse_matrix_kind(std::string_view name);
std::string_view matrix_kind_name(MatrixKind kind);

/// Builds the named matrix for parameter n (B and C need even n).
ExactMatrix build_matrix(MatrixKind kind, std::size_t n);

struct FactorCheck {
  bool holds = false;
  std::string identity;  // human-readable statement of what was compared
};

/// Rebuilds the matrix from its triangular or Hankel factors and compares
/// exactly:
///   A        A = D L L^T D, D = diag(i!), L = pascal_lower
///   pascalL  L L^T = [binomial(i+j, j)]
///   cbinL    L diag(1,2,...,2) L^T = [binomial(2(i+j), i+j)]
///   B        P B P = A_{n/2} o V_{n/2}, P = diag(2^i), V by its factorization
///   C        C_n = B_n without first row and last column
///   Q        Q = H o H, H = [f(i+j)]
FactorCheck check_factorization(MatrixKind kind, std::size_t n);

/// binomial(i+j, j) == sum_k binomial(i,k) binomial(j,k).
bool vandermonde_identity_holds(std::size_t i, std::size_t j);

/// binomial(2(i+j), i+j) == binomial(2i,i) binomial(2j,j)
///                          + 2 sum_{k>=1} binomial(2i,i-k) binomial(2j,j-k).
bool central_binomial_identity_holds(std::size_t i, std::size_t j);

/// f(2t) == (2t)! / (2^t t!).
bool double_factorial_identity_holds(std::size_t t);

}  // namespace densepm
