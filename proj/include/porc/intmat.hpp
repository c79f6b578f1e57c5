#pragma once

// Smith normal form over Z.

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "porc/bigint.hpp"

namespace porc {

/// Dense row-major integer matrix with at least one row and one column.
class IntMatrix {
 public:
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  BigInt& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  // Elementary unimodular operations.
  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  void negate_row(std::size_t r);
  void negate_col(std::size_t c);
  /// row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const BigInt& factor);
  /// col[dst] += factor * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const BigInt& factor);

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<BigInt> entries_;
};

/// d_1 | d_2 | ... with one entry per column; zeros trail.
struct ElementaryDivisors {
  std::vector<BigInt> divisors;

  friend bool operator==(const ElementaryDivisors&, const ElementaryDivisors&) = default;
};

ElementaryDivisors smith_normal_form(IntMatrix m);

/// Product of all divisors; 0 signals a rank-deficient matrix.
BigInt divisor_product(const ElementaryDivisors& d);

}  // namespace porc
