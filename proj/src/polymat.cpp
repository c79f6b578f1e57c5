#include "porc/polymat.hpp"

#include <algorithm>
#include <iostream>
#include <limits>
#include <numeric>
#include <utility>

#include "porc/errors.hpp"

namespace porc {

IntPolynomial membership_polynomial(unsigned n) {
  return IntPolynomial::monomial(BigInt(1), n) - IntPolynomial{BigInt(1)};
}

RelationMatrix build_relation_matrix(std::vector<PolyRow> equation_rows, std::size_t k, unsigned n) {
  if (k == 0) throw DomainError("relation matrix needs at least one column");
  if (n == 0) throw DomainError("extension degree must be at least 1");
  for (std::size_t i = 0; i < equation_rows.size(); ++i)
    if (equation_rows[i].size() != k)
      throw DomainError("row " + std::to_string(i) + " has " + std::to_string(equation_rows[i].size()) +
                        " entries, expected " + std::to_string(k));
  RelationMatrix m;
  m.k_ = k;
  m.n_ = n;
  m.rows_ = std::move(equation_rows);
  const IntPolynomial member = membership_polynomial(n);
  for (std::size_t i = 0; i < k; ++i) {
    PolyRow row(k);
    row[i] = member;
    m.rows_.push_back(std::move(row));
  }
  return m;
}

IntPolynomial bareiss_determinant(PolySquare m) {
  const std::size_t k = m.size();
  if (k == 0) return IntPolynomial{BigInt(1)};
  bool negate = false;
  IntPolynomial prev{BigInt(1)};
  for (std::size_t i = 0; i + 1 < k; ++i) {
    if (m[i][i].is_zero()) {
      std::size_t j = i + 1;
      while (j < k && m[j][i].is_zero()) ++j;
      if (j == k) return {};
      std::swap(m[i], m[j]);
      negate = !negate;
    }
    for (std::size_t r = i + 1; r < k; ++r) {
      for (std::size_t c = i + 1; c < k; ++c)
        m[r][c] = exact_divide(m[r][c] * m[i][i] - m[r][i] * m[i][c], prev);
      m[r][i] = IntPolynomial{};
    }
    prev = m[i][i];
  }
  IntPolynomial det = std::move(m[k - 1][k - 1]);
  return negate ? -det : det;
}

IntPolynomial cofactor_determinant(const PolySquare& m) {
  const std::size_t k = m.size();
  if (k == 0) return IntPolynomial{BigInt(1)};
  if (k == 1) return m[0][0];
  IntPolynomial det;
  for (std::size_t c = 0; c < k; ++c) {
    if (m[0][c].is_zero()) continue;
    PolySquare sub;
    sub.reserve(k - 1);
    for (std::size_t r = 1; r < k; ++r) {
      PolyRow row;
      row.reserve(k - 1);
      for (std::size_t cc = 0; cc < k; ++cc)
        if (cc != c) row.push_back(m[r][cc]);
      sub.push_back(std::move(row));
    }
    IntPolynomial term = m[0][c] * cofactor_determinant(sub);
    if (c % 2 == 0)
      det += term;
    else
      det -= term;
  }
  return det;
}

std::size_t binomial(std::size_t r, std::size_t k) {
  if (k > r) return 0;
  k = std::min(k, r - k);
  // Exact in 128 bits for the values that can fit the result.
  unsigned __int128 acc = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    acc = acc * (r - k + i) / i;
    if (acc > std::numeric_limits<std::size_t>::max()) return std::numeric_limits<std::size_t>::max();
  }
  return static_cast<std::size_t>(acc);
}

std::vector<IntPolynomial> maximal_minors(const RelationMatrix& m, const MinorOptions& opts) {
  const std::size_t k = m.k();
  const std::size_t r = m.rows().size();
  const std::size_t total = binomial(r, k);
  if (total > opts.warn_subsets)
    std::clog << "warning: enumerating " << total << " maximal minors (" << r << " rows, " << k << " columns)\n";

  std::vector<IntPolynomial> out;
  out.reserve(std::min<std::size_t>(total, 1u << 20));
  std::vector<std::size_t> pick(k);
  std::iota(pick.begin(), pick.end(), 0);
  for (;;) {
    PolySquare sq;
    sq.reserve(k);
    for (std::size_t i : pick) sq.push_back(m.rows()[i]);
    out.push_back(bareiss_determinant(std::move(sq)));

    // Next combination in lexicographic order.
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == r - k + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

IntMatrix evaluate_matrix(const RelationMatrix& m, const BigInt& q0) {
  if (q0 <= 1) throw DomainError("degenerate modulus q^n-1 <= 0");
  IntMatrix out(m.rows().size(), m.k());
  for (std::size_t r = 0; r < m.rows().size(); ++r)
    for (std::size_t c = 0; c < m.k(); ++c) out(r, c) = eval_poly(m.rows()[r][c], q0);
  return out;
}

BigInt gcd_of_values(const std::vector<IntPolynomial>& ps, const BigInt& q0) {
  BigInt g = 0;
  for (const auto& p : ps) g = gcd(g, eval_poly(p, q0));
  return g;
}

}  // namespace porc
