#include "densepm/linalg.hpp"

#include <string>
#include <utility>

#include "densepm/errors.hpp"

namespace densepm {
namespace {

// One Bareiss step on rows below k, columns from k+1 through `width`.
void eliminate_below(ExactMatrix& m, std::size_t k, std::size_t width, const BigInt& previous_pivot) {
  for (std::size_t i = k + 1; i < m.rows(); ++i) {
    for (std::size_t j = k + 1; j < width; ++j) {
      m(i, j) = m(i, j) * m(k, k) - m(i, k) * m(k, j);
      mpz_divexact(m(i, j).get_mpz_t(), m(i, j).get_mpz_t(), previous_pivot.get_mpz_t());
    }
    m(i, k) = 0;
  }
}

void swap_rows(ExactMatrix& m, std::size_t a, std::size_t b) {
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

// Forward-eliminates the leading n columns with partial pivoting on nonzero
// entries. Returns false if a column has no usable pivot.
bool bareiss_forward(ExactMatrix& m, std::size_t n, bool& negated) {
  BigInt previous = 1;
  negated = false;
  for (std::size_t k = 0; k < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && m(r, k) == 0) ++r;
      if (r == n) return false;
      swap_rows(m, k, r);
      negated = !negated;
    }
    eliminate_below(m, k, m.cols(), previous);
    previous = m(k, k);
  }
  return true;
}

}  // namespace

BigInt determinant(const ExactMatrix& m) {
  if (!m.square()) throw InputError("determinant needs a square matrix");
  if (m.empty()) return 1;
  ExactMatrix work = m;
  bool negated = false;
  if (!bareiss_forward(work, work.rows(), negated)) return 0;
  const BigInt& last = work(work.rows() - 1, work.cols() - 1);
  return negated ? BigInt(-last) : last;
}

ExactVector leading_principal_minors(const ExactMatrix& m) {
  if (!m.symmetric()) throw InputError("leading principal minors need a symmetric matrix");
  const std::size_t n = m.rows();
  ExactVector minors;
  minors.reserve(n);
  // Without pivoting, the k-th Bareiss pivot is the k-th leading minor.
  ExactMatrix work = m;
  BigInt previous = 1;
  std::size_t k = 0;
  for (; k < n; ++k) {
    minors.push_back(work(k, k));
    if (work(k, k) == 0) break;
    eliminate_below(work, k, n, previous);
    previous = work(k, k);
  }
  for (std::size_t size = k + 2; size <= n; ++size) minors.push_back(determinant(m.block(0, 0, size, size)));
  return minors;
}

bool is_positive_definite(const ExactMatrix& m) {
  for (const auto& minor : leading_principal_minors(m))
    if (minor <= 0) return false;
  return true;
}

ExactVector solve_symmetric_exact(const ExactMatrix& a, const ExactVector& p) {
  if (!a.symmetric()) throw InputError("solver expects a symmetric matrix");
  const std::size_t n = a.rows();
  if (p.size() != n)
    throw InputError("right-hand side has length " + std::to_string(p.size()) + ", expected " +
                     std::to_string(n));
  if (n == 0) return {};

  ExactMatrix work(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) work(i, j) = a(i, j);
    work(i, n) = p[i];
  }
  bool negated = false;
  if (!bareiss_forward(work, n, negated)) throw SingularSystemError();

  std::vector<BigRational> x(n);
  for (std::size_t i = n; i-- > 0;) {
    BigRational rhs(work(i, n));
    for (std::size_t j = i + 1; j < n; ++j) rhs -= BigRational(work(i, j)) * x[j];
    x[i] = rhs / BigRational(work(i, i));
    x[i].canonicalize();
  }

  ExactVector out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].get_den() != 1)
      throw OracleInconsistencyError(i, "solution component " + x[i].get_str() + " is not an integer");
    out[i] = x[i].get_num();
  }
  return out;
}

}  // namespace densepm
