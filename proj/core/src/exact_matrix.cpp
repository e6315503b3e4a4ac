#include "densepm/exact_matrix.hpp"

#include <sstream>

#include "densepm/errors.hpp"

namespace densepm {

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {
  if (rows == 0 || cols == 0) rows_ = cols_ = 0;
}

ExactMatrix::ExactMatrix(std::initializer_list<std::initializer_list<BigInt>> rows) {
  std::vector<std::vector<BigInt>> copy;
  for (const auto& r : rows) copy.emplace_back(r);
  *this = from_rows(copy);
}

ExactMatrix ExactMatrix::from_rows(const std::vector<std::vector<BigInt>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  ExactMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw InputError("ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

ExactMatrix ExactMatrix::diagonal(const ExactVector& entries) {
  ExactMatrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

ExactMatrix ExactMatrix::filled(std::size_t rows, std::size_t cols, const BigInt& value) {
  ExactMatrix m(rows, cols);
  for (auto& x : m.data_) x = value;
  return m;
}

bool ExactMatrix::symmetric() const {
  if (!square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

ExactMatrix ExactMatrix::block(std::size_t row0, std::size_t col0, std::size_t n_rows,
                               std::size_t n_cols) const {
  if (row0 + n_rows > rows_ || col0 + n_cols > cols_) throw InputError("block out of range");
  ExactMatrix b(n_rows, n_cols);
  for (std::size_t i = 0; i < b.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j) b(i, j) = (*this)(row0 + i, col0 + j);
  return b;
}

ExactMatrix ExactMatrix::permuted(std::span<const std::size_t> row_order,
                                  std::span<const std::size_t> col_order) const {
  ExactMatrix p(row_order.size(), col_order.size());
  for (std::size_t i = 0; i < p.rows_; ++i)
    for (std::size_t j = 0; j < p.cols_; ++j) {
      if (row_order[i] >= rows_ || col_order[j] >= cols_) throw InputError("permutation index out of range");
      p(i, j) = (*this)(row_order[i], col_order[j]);
    }
  return p;
}

bool ExactMatrix::is_zero() const {
  for (const auto& x : data_)
    if (x != 0) return false;
  return true;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols() != b.rows()) throw InputError("matrix product dimension mismatch");
  ExactMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw InputError("matrix sum dimension mismatch");
  ExactMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) + b(i, j);
  return c;
}

ExactMatrix schur_product(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw InputError("entry-wise product needs equal dimensions, got " + std::to_string(a.rows()) +
                     "x" + std::to_string(a.cols()) + " and " + std::to_string(b.rows()) + "x" +
                     std::to_string(b.cols()));
  ExactMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) * b(i, j);
  return c;
}

std::string format_rows(const ExactMatrix& m) {
  std::ostringstream out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out << ' ';
      out << to_decimal(m(i, j));
    }
    out << '\n';
  }
  return out.str();
}

std::string format_nested(const ExactMatrix& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) out += ',';
    out += '[';
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ',';
      out += to_decimal(m(i, j));
    }
    out += ']';
  }
  return out + "]";
}

std::string format_vector(const ExactVector& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ' ';
    out += to_decimal(v[i]);
  }
  return out;
}

}  // namespace densepm
