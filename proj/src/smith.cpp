#include "critforge/smith.hpp"

#include <algorithm>

#include "critforge/errors.hpp"

namespace critforge {

namespace {

struct Pivot {
  std::size_t row;
  std::size_t col;
};

std::optional<Pivot> smallest_entry(const IntegerMatrix& a, std::size_t t) {
  std::optional<Pivot> best;
  Integer best_abs;
  for (std::size_t r = t; r < a.rows(); ++r) {
    for (std::size_t c = t; c < a.cols(); ++c) {
      if (sgn(a(r, c)) == 0) continue;
      if (!best || mpz_cmpabs(a(r, c).get_mpz_t(), best_abs.get_mpz_t()) < 0) {
        best = Pivot{r, c};
        best_abs = abs(a(r, c));
      }
    }
  }
  return best;
}

// Reduces `a` in place to Smith form. When `track` is set, row operations are
// mirrored on *u and column operations on *v.
std::size_t reduce(IntegerMatrix& a, IntegerMatrix* u, IntegerMatrix* v) {
  const std::size_t limit = std::min(a.rows(), a.cols());
  std::size_t rank = 0;
  for (std::size_t t = 0; t < limit; ++t) {
    for (;;) {
      const auto pivot = smallest_entry(a, t);
      if (!pivot) return rank;
      a.swap_rows(t, pivot->row);
      if (u) u->swap_rows(t, pivot->row);
      a.swap_cols(t, pivot->col);
      if (v) v->swap_cols(t, pivot->col);

      bool clean = true;
      for (std::size_t r = t + 1; r < a.rows(); ++r) {
        if (sgn(a(r, t)) == 0) continue;
        const Integer q = a(r, t) / a(t, t);
        a.add_row_multiple(r, t, -q);
        if (u) u->add_row_multiple(r, t, -q);
        if (sgn(a(r, t)) != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < a.cols(); ++c) {
        if (sgn(a(t, c)) == 0) continue;
        const Integer q = a(t, c) / a(t, t);
        a.add_col_multiple(c, t, -q);
        if (v) v->add_col_multiple(c, t, -q);
        if (sgn(a(t, c)) != 0) clean = false;
      }
      if (!clean) continue;

      // Pivot row and column are clear; enforce divisibility of the rest.
      std::optional<std::size_t> offending;
      for (std::size_t r = t + 1; r < a.rows() && !offending; ++r) {
        for (std::size_t c = t + 1; c < a.cols(); ++c) {
          if (!mpz_divisible_p(a(r, c).get_mpz_t(), a(t, t).get_mpz_t())) {
            offending = r;
            break;
          }
        }
      }
      if (!offending) break;
      a.add_row_multiple(t, *offending, 1);
      if (u) u->add_row_multiple(t, *offending, 1);
    }
    if (sgn(a(t, t)) < 0) {
      a.negate_row(t);
      if (u) u->negate_row(t);
    }
    ++rank;
  }
  return rank;
}

}  // namespace

IntegerVector SmithDecomposition::diagonal() const {
  IntegerVector out;
  const std::size_t n = std::min(D.rows(), D.cols());
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(D(i, i));
  return out;
}

SmithDecomposition smith_normal_form(const IntegerMatrix& m) {
  SmithDecomposition out;
  out.D = m;
  out.U = IntegerMatrix::identity(m.rows());
  out.V = IntegerMatrix::identity(m.cols());
  out.rank = reduce(out.D, &out.U, &out.V);
  return out;
}

IntegerVector smith_diagonal(const IntegerMatrix& m) {
  IntegerMatrix a = m;
  reduce(a, nullptr, nullptr);
  IntegerVector out;
  const std::size_t n = std::min(a.rows(), a.cols());
  for (std::size_t i = 0; i < n; ++i) out.push_back(a(i, i));
  return out;
}

Integer determinantal_divisor(const SmithDecomposition& snf, std::size_t k) {
  const std::size_t n = std::min(snf.D.rows(), snf.D.cols());
  if (k > n) {
    throw Error(ErrorKind::IndexOutOfRange,
                "k=" + std::to_string(k) + " exceeds " + std::to_string(n));
  }
  Integer product = 1;
  for (std::size_t i = 0; i < k; ++i) product *= snf.D(i, i);
  return product;
}

Integer determinantal_divisor(const IntegerMatrix& m, std::size_t k) {
  if (k > std::min(m.rows(), m.cols())) {
    throw Error(ErrorKind::IndexOutOfRange,
                "k=" + std::to_string(k) + " exceeds matrix dimensions");
  }
  const IntegerVector diag = smith_diagonal(m);
  Integer product = 1;
  for (std::size_t i = 0; i < k; ++i) product *= diag[i];
  return product;
}

std::optional<IntegerVector> solve_integer(const SmithDecomposition& snf,
                                           std::span<const Integer> b) {
  if (b.size() != snf.U.cols()) {
    throw Error(ErrorKind::DimensionMismatch,
                "right-hand side of length " + std::to_string(b.size()) +
                    " against " + std::to_string(snf.U.cols()) + " rows");
  }
  const IntegerVector c = snf.U.apply(b);
  IntegerVector y(snf.V.rows());
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i < snf.rank) {
      if (!mpz_divisible_p(c[i].get_mpz_t(), snf.D(i, i).get_mpz_t())) {
        return std::nullopt;
      }
      mpz_divexact(y[i].get_mpz_t(), c[i].get_mpz_t(),
                   snf.D(i, i).get_mpz_t());
    } else if (sgn(c[i]) != 0) {
      return std::nullopt;
    }
  }
  return snf.V.apply(y);
}

std::optional<IntegerVector> solve_integer(const IntegerMatrix& m,
                                           std::span<const Integer> b) {
  if (b.size() != m.rows()) {
    throw Error(ErrorKind::DimensionMismatch,
                "right-hand side of length " + std::to_string(b.size()) +
                    " against " + std::to_string(m.rows()) + " rows");
  }
  return solve_integer(smith_normal_form(m), b);
}

}  // namespace critforge
