#include "porc/intmat.hpp"

#include <algorithm>
#include <utility>

#include "porc/errors.hpp"

namespace porc {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {
  if (rows == 0 || cols == 0) throw DomainError("matrix must have at least one row and one column");
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : IntMatrix(rows.size(), rows.size() ? rows.begin()->size() : 0) {
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != cols_) throw DomainError("ragged matrix literal");
    std::size_t c = 0;
    for (long v : row) (*this)(r, c++) = v;
    ++r;
  }
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

void IntMatrix::negate_col(std::size_t c) {
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = -(*this)(r, c);
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const BigInt& factor) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(dst, c) += factor * (*this)(src, c);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const BigInt& factor) {
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, dst) += factor * (*this)(r, src);
}

namespace {

// Moves the smallest nonzero |entry| of the trailing submatrix to (t, t).
// Returns false when that submatrix is zero.
bool place_min_pivot(IntMatrix& a, std::size_t t) {
  std::size_t br = 0, bc = 0;
  bool found = false;
  BigInt best;
  for (std::size_t r = t; r < a.rows(); ++r)
    for (std::size_t c = t; c < a.cols(); ++c) {
      if (a(r, c) == 0) continue;
      BigInt v = abs(a(r, c));
      if (!found || v < best) {
        best = std::move(v);
        br = r;
        bc = c;
        found = true;
      }
    }
  if (!found) return false;
  a.swap_rows(t, br);
  a.swap_cols(t, bc);
  return true;
}

}  // namespace

ElementaryDivisors smith_normal_form(IntMatrix a) {
  const std::size_t steps = std::min(a.rows(), a.cols());
  ElementaryDivisors out;
  out.divisors.assign(a.cols(), BigInt(0));
  for (std::size_t t = 0; t < steps; ++t) {
    if (!place_min_pivot(a, t)) break;
    for (;;) {
      bool dirty = false;
      // Clear column t and row t by division; any nonzero remainder is smaller
      // than the pivot and becomes the next pivot.
      for (std::size_t r = t + 1; r < a.rows(); ++r) {
        if (a(r, t) == 0) continue;
        BigInt q;
        mpz_fdiv_q(q.get_mpz_t(), a(r, t).get_mpz_t(), a(t, t).get_mpz_t());
        a.add_row_multiple(r, t, -q);
        if (a(r, t) != 0) dirty = true;
      }
      for (std::size_t c = t + 1; c < a.cols(); ++c) {
        if (a(t, c) == 0) continue;
        BigInt q;
        mpz_fdiv_q(q.get_mpz_t(), a(t, c).get_mpz_t(), a(t, t).get_mpz_t());
        a.add_col_multiple(c, t, -q);
        if (a(t, c) != 0) dirty = true;
      }
      if (dirty) {
        // A remainder smaller than |pivot| exists; pivot on the new minimum.
        place_min_pivot(a, t);
        continue;
      }
      // Row and column are clear; enforce divisibility of the remainder.
      std::size_t bad_row = 0;
      for (std::size_t r = t + 1; r < a.rows() && !bad_row; ++r)
        for (std::size_t c = t + 1; c < a.cols(); ++c)
          if (!mpz_divisible_p(a(r, c).get_mpz_t(), a(t, t).get_mpz_t())) {
            bad_row = r;
            break;
          }
      if (bad_row == 0) break;
      a.add_row_multiple(t, bad_row, BigInt(1));
    }
    out.divisors[t] = abs(a(t, t));
  }
  return out;
}

BigInt divisor_product(const ElementaryDivisors& d) {
  BigInt p = 1;
  for (const auto& x : d.divisors) p *= x;
  return p;
}

}  // namespace porc
