#pragma once

#include <cstddef>
#include <optional>
#include <span>

#include "critforge/integer_matrix.hpp"

namespace critforge {

/// U * M * V = D with U, V unimodular and D diagonal in Smith form: the
/// nonzero diagonal entries are positive, each divides the next, and zeros
/// trail.
struct SmithDecomposition {
  IntegerMatrix U;
  IntegerMatrix V;
  IntegerMatrix D;
  std::size_t rank = 0;

  /// The min(rows, cols) diagonal entries of D, zeros included.
  IntegerVector diagonal() const;
};

/// Pivoting takes the nonzero entry of least absolute value, first in
/// row-major order, so the output is a deterministic function of the input.
SmithDecomposition smith_normal_form(const IntegerMatrix& m);

/// Diagonal of the Smith form without accumulating the transforms.
IntegerVector smith_diagonal(const IntegerMatrix& m);

/// gcd of all k x k minors, read off the Smith diagonal. D_0 = 1.
/// Throws IndexOutOfRange when k > min(rows, cols).
Integer determinantal_divisor(const IntegerMatrix& m, std::size_t k);
Integer determinantal_divisor(const SmithDecomposition& snf, std::size_t k);

/// Some integral x with m * x = b, or nullopt when none exists.
/// Throws DimensionMismatch.
std::optional<IntegerVector> solve_integer(const IntegerMatrix& m,
                                           std::span<const Integer> b);
std::optional<IntegerVector> solve_integer(const SmithDecomposition& snf,
                                           std::span<const Integer> b);

}  // namespace critforge
