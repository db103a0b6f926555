#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace critforge {

using Integer = mpz_class;
using IntegerVector = std::vector<Integer>;

/// Dense row-major matrix of arbitrary-precision integers.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols);
  IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntegerMatrix identity(std::size_t n);
  static IntegerMatrix diagonal(std::span<const Integer> entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  const Integer& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  IntegerMatrix transpose() const;
  IntegerMatrix submatrix(std::span<const std::size_t> row_indices,
                          std::span<const std::size_t> col_indices) const;
  /// Block-diagonal sum [[a, 0], [0, b]].
  static IntegerMatrix direct_sum(const IntegerMatrix& a,
                                  const IntegerMatrix& b);

  /// Throws DimensionMismatch.
  IntegerVector apply(std::span<const Integer> x) const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[target] += factor * row[source]
  void add_row_multiple(std::size_t target, std::size_t source,
                        const Integer& factor);
  void add_col_multiple(std::size_t target, std::size_t source,
                        const Integer& factor);
  void negate_row(std::size_t r);

  std::string to_string() const;

  friend IntegerMatrix operator*(const IntegerMatrix& a,
                                 const IntegerMatrix& b);
  friend bool operator==(const IntegerMatrix& a, const IntegerMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// Exact determinant by fraction-free (Bareiss) elimination.
Integer determinant(const IntegerMatrix& m);

}  // namespace critforge
