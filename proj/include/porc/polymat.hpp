#pragma once

// Relation matrices whose entries are integer polynomials in q.

#include <cstddef>
#include <vector>

#include "porc/intmat.hpp"
#include "porc/polyalg.hpp"

namespace porc {

using PolyRow = std::vector<IntPolynomial>;
using PolySquare = std::vector<PolyRow>;

/// Equation rows followed by the k membership rows (q^n-1) e_i.
class RelationMatrix {
 public:
  std::size_t k() const noexcept { return k_; }
  unsigned n() const noexcept { return n_; }
  const std::vector<PolyRow>& rows() const noexcept { return rows_; }
  /// Number of leading rows that came from equations.
  std::size_t equation_rows() const noexcept { return rows_.size() - k_; }

 private:
  friend RelationMatrix build_relation_matrix(std::vector<PolyRow>, std::size_t, unsigned);

  std::size_t k_ = 0;
  unsigned n_ = 0;
  std::vector<PolyRow> rows_;
};

/// q^n - 1 as a polynomial in q.
IntPolynomial membership_polynomial(unsigned n);

/// Throws DomainError on k == 0, n == 0 or a row of length != k.
RelationMatrix build_relation_matrix(std::vector<PolyRow> equation_rows, std::size_t k, unsigned n);

/// Fraction-free (Bareiss) elimination over Z[q] with exact division.
IntPolynomial bareiss_determinant(PolySquare m);

/// Laplace expansion along the first row; exponential, for cross-checks.
IntPolynomial cofactor_determinant(const PolySquare& m);

struct MinorOptions {
  /// Above this many row subsets a warning goes to std::clog.
  std::size_t warn_subsets = 1'000'000;
};

/// Determinants of every k-row subset, subsets in lexicographic order.
/// Zero minors are kept.
std::vector<IntPolynomial> maximal_minors(const RelationMatrix& m, const MinorOptions& opts = {});

/// Entrywise evaluation at q0; throws DomainError for q0 <= 1.
IntMatrix evaluate_matrix(const RelationMatrix& m, const BigInt& q0);

/// gcd of |p(q0)| over all p, with gcd(0, a) = |a|.
BigInt gcd_of_values(const std::vector<IntPolynomial>& ps, const BigInt& q0);

/// Number of k-subsets of an r-set, saturating at SIZE_MAX.
std::size_t binomial(std::size_t r, std::size_t k);

}  // namespace porc
