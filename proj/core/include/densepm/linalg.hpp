#pragma once

#include "densepm/exact_matrix.hpp"

namespace densepm {

/// Exact determinant by fraction-free (Bareiss) elimination with row swaps.
/// Throws InputError unless m is square. det of the empty matrix is 1.
BigInt determinant(const ExactMatrix& m);

/// Determinants of the k x k leading submatrices, k = 1..dim. Throws
/// InputError unless m is symmetric.
ExactVector leading_principal_minors(const ExactMatrix& m);

/// Sylvester's criterion: every leading principal minor is positive.
bool is_positive_definite(const ExactMatrix& m);

/// The unique integer x with a x = p (equivalently x a = p, a being
/// symmetric). Throws InputError on shape or symmetry violations,
/// SingularSystemError when det a = 0, and OracleInconsistencyError naming the
/// first non-integral component.
ExactVector solve_symmetric_exact(const ExactMatrix& a, const ExactVector& p);

}  // namespace densepm
