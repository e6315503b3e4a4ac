#pragma once

#include <cstddef>
#include <vector>

#include "densepm/exact_matrix.hpp"

namespace densepm {

// Hankel matrices over factorials and perfect-matching counts of complete
// graphs, together with the triangular factors that certify them. Sizes follow
// the conventions below; every entry is exact.

/// (n+1)x(n+1), entry (i,j) = (i+j)!.
ExactMatrix build_A(std::size_t n);

/// (n+1)x(n+1) lower triangular, entry (i,k) = binomial(i,k).
ExactMatrix pascal_lower(std::size_t n);

/// (n+1)x(n+1), entry (i,j) = binomial(i+j, j).
ExactMatrix symmetric_pascal(std::size_t n);

/// diag(0!, 1!, ..., n!).
ExactMatrix factorial_diagonal(std::size_t n);

/// (n/2+1)x(n/2+1), entry (i,j) = f(2(i+j)) where f counts perfect matchings of
/// complete graphs. Throws InputError for odd n.
ExactMatrix build_B(std::size_t n);

/// (n/2)x(n/2), entry (i,j) = f(2(i+j)+2): B_n without its first row and last
/// column. build_C(0) is the empty matrix. Throws InputError for odd n.
ExactMatrix build_C(std::size_t n);

/// (m+1)x(m+1) lower triangular, entry (i,k) = binomial(2i, i-k).
ExactMatrix central_binomial_lower(std::size_t m);

/// diag(1, 2, ..., 2) of size m+1.
ExactMatrix central_binomial_weights(std::size_t m);

/// (m+1)x(m+1), entry (i,j) = binomial(2(i+j), i+j).
ExactMatrix central_binomial_hankel(std::size_t m);

/// The factorial half of the split of B into two Hankel factors. Its entries
/// (i+j)!/2^(i+j) are not integers, so it is carried as an integer matrix plus
/// per-index power-of-two exponents: entry(i,j) = scaled(i,j) / 2^(e_i + e_j).
struct ScaledMatrix {
  ExactMatrix scaled;
  std::vector<unsigned> exponents;
};

/// scaled = build_A(m), exponents e_i = i.
ScaledMatrix build_U(std::size_t m);

/// diag(2^0, 2^1, ..., 2^m).
ExactMatrix power_of_two_diagonal(std::size_t m);

/// (n+1)x(n+1), entry (i,j) = f(i+j)^2. Zero exactly where i+j is odd.
ExactMatrix build_Q(std::size_t n);

struct CheckerboardBlocks {
  ExactMatrix top_left;      // even rows x even columns
  ExactMatrix bottom_right;  // odd rows x odd columns
  bool off_blocks_zero = false;
};

/// Reorders rows and columns of the (n+1)x(n+1) matrix q as (0,2,4,...,1,3,...)
/// and returns the two diagonal blocks. Throws InputError on a shape mismatch.
CheckerboardBlocks checkerboard_split(const ExactMatrix& q, std::size_t n);

}  // namespace densepm
