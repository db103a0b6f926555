#include "critforge/integer_matrix.hpp"

#include <sstream>
#include <utility>

#include "critforge/errors.hpp"

namespace critforge {

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntegerMatrix::IntegerMatrix(
    std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) {
      throw Error(ErrorKind::DimensionMismatch, "ragged matrix literal");
    }
    for (long value : row) data_.emplace_back(value);
  }
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntegerMatrix IntegerMatrix::diagonal(std::span<const Integer> entries) {
  IntegerMatrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

IntegerMatrix IntegerMatrix::transpose() const {
  IntegerMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

IntegerMatrix IntegerMatrix::submatrix(
    std::span<const std::size_t> row_indices,
    std::span<const std::size_t> col_indices) const {
  IntegerMatrix s(row_indices.size(), col_indices.size());
  for (std::size_t r = 0; r < row_indices.size(); ++r) {
    for (std::size_t c = 0; c < col_indices.size(); ++c) {
      if (row_indices[r] >= rows_ || col_indices[c] >= cols_) {
        throw Error(ErrorKind::IndexOutOfRange, "submatrix index");
      }
      s(r, c) = (*this)(row_indices[r], col_indices[c]);
    }
  }
  return s;
}

IntegerMatrix IntegerMatrix::direct_sum(const IntegerMatrix& a,
                                        const IntegerMatrix& b) {
  IntegerMatrix s(a.rows_ + b.rows_, a.cols_ + b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    for (std::size_t c = 0; c < a.cols_; ++c) s(r, c) = a(r, c);
  }
  for (std::size_t r = 0; r < b.rows_; ++r) {
    for (std::size_t c = 0; c < b.cols_; ++c) {
      s(a.rows_ + r, a.cols_ + c) = b(r, c);
    }
  }
  return s;
}

IntegerVector IntegerMatrix::apply(std::span<const Integer> x) const {
  if (x.size() != cols_) {
    throw Error(ErrorKind::DimensionMismatch,
                "vector of length " + std::to_string(x.size()) +
                    " against " + std::to_string(cols_) + " columns");
  }
  IntegerVector y(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (sgn((*this)(r, c)) != 0) y[r] += (*this)(r, c) * x[c];
    }
  }
  return y;
}

void IntegerMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) {
    std::swap((*this)(a, c), (*this)(b, c));
  }
}

void IntegerMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) {
    std::swap((*this)(r, a), (*this)(r, b));
  }
}

void IntegerMatrix::add_row_multiple(std::size_t target, std::size_t source,
                                     const Integer& factor) {
  if (sgn(factor) == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) {
    const Integer& s = (*this)(source, c);
    if (sgn(s) != 0) (*this)(target, c) += factor * s;
  }
}

void IntegerMatrix::add_col_multiple(std::size_t target, std::size_t source,
                                     const Integer& factor) {
  if (sgn(factor) == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) {
    const Integer& s = (*this)(r, source);
    if (sgn(s) != 0) (*this)(r, target) += factor * s;
  }
}

void IntegerMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

std::string IntegerMatrix::to_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    out << (r ? ", [" : "[");
    for (std::size_t c = 0; c < cols_; ++c) {
      out << (c ? ", " : "") << (*this)(r, c).get_str();
    }
    out << ']';
  }
  out << ']';
  return out.str();
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.cols_ != b.rows_) {
    throw Error(ErrorKind::DimensionMismatch, "matrix product shapes");
  }
  IntegerMatrix p(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& x = a(i, k);
      if (sgn(x) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (sgn(b(k, j)) != 0) p(i, j) += x * b(k, j);
      }
    }
  }
  return p;
}

Integer determinant(const IntegerMatrix& m) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorKind::DimensionMismatch, "determinant of non-square");
  }
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntegerMatrix a = m;
  Integer previous = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(a(k, k)) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && sgn(a(swap, k)) == 0) ++swap;
      if (swap == n) return 0;
      a.swap_rows(k, swap);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer value = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(value.get_mpz_t(), value.get_mpz_t(),
                     previous.get_mpz_t());
        a(i, j) = value;
      }
    }
    previous = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

}  // namespace critforge
