#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "densepm/bigint.hpp"

namespace densepm {

using ExactVector = std::vector<BigInt>;

/// Dense row-major matrix of arbitrary-precision integers. The 0x0 matrix is
/// the designated empty matrix.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols);
  ExactMatrix(std::initializer_list<std::initializer_list<BigInt>> rows);

  static ExactMatrix from_rows(const std::vector<std::vector<BigInt>>& rows);
  static ExactMatrix identity(std::size_t n);
  static ExactMatrix diagonal(const ExactVector& entries);
  static ExactMatrix filled(std::size_t rows, std::size_t cols, const BigInt& value);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }
  bool square() const noexcept { return rows_ == cols_; }
  bool symmetric() const;

  BigInt& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const BigInt> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }

  ExactMatrix transpose() const;
  ExactMatrix block(std::size_t row0, std::size_t col0, std::size_t n_rows, std::size_t n_cols) const;
  /// Rows and columns selected (and reordered) by index.
  ExactMatrix permuted(std::span<const std::size_t> row_order,
                       std::span<const std::size_t> col_order) const;
  bool is_zero() const;

  friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

/// Throws InputError on inner-dimension mismatch.
ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b);

/// Entry-wise (Hadamard) product. Throws InputError on shape mismatch.
ExactMatrix schur_product(const ExactMatrix& a, const ExactMatrix& b);

/// One row per line, space-separated decimal integers.
std::string format_rows(const ExactMatrix& m);
/// Compact nested form, e.g. [[1,1],[1,9]].
std::string format_nested(const ExactMatrix& m);
std::string format_vector(const ExactVector& v);

}  // namespace densepm
