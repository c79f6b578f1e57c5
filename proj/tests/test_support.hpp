#pragma once

// Shared generators and brute-force oracles for the test suites. Nothing here
// calls into the Smith form or the synthesis code it is used to check.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "porc/errors.hpp"
#include "porc/intmat.hpp"
#include "porc/monomial.hpp"
#include "porc/polyalg.hpp"
#include "porc/porcsynth.hpp"

namespace porc::testkit {

inline IntPolynomial poly(std::initializer_list<long> coeffs) {
  std::vector<BigInt> v;
  for (long c : coeffs) v.emplace_back(c);
  return IntPolynomial(std::move(v));
}

inline IntPolynomial random_poly(std::mt19937_64& rng, int max_degree, long bound) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<long> coeff(-bound, bound);
  const int d = deg(rng);
  std::vector<BigInt> v;
  for (int i = 0; i <= d; ++i) v.emplace_back(coeff(rng));
  return IntPolynomial(std::move(v));
}

/// 1..max_count polynomials, at least one nonzero.
inline std::vector<IntPolynomial> random_family(std::mt19937_64& rng, int max_count, int max_degree, long bound) {
  std::uniform_int_distribution<int> count(1, max_count);
  for (;;) {
    std::vector<IntPolynomial> fs;
    const int s = count(rng);
    bool nonzero = false;
    for (int i = 0; i < s; ++i) {
      fs.push_back(random_poly(rng, max_degree, bound));
      nonzero = nonzero || !fs.back().is_zero();
    }
    if (nonzero) return fs;
  }
}

/// Synthesis sweeps draw families until this many have a residue modulus small
/// enough to evaluate d at hundreds of points; larger ones are skipped.
inline constexpr std::int64_t kSweepModulusCap = 5000;

inline std::optional<GcdPorcFunction> synthesize_within_cap(const std::vector<IntPolynomial>& fs,
                                                            std::int64_t cap = kSweepModulusCap) {
  SynthOptions opts;
  opts.max_modulus = cap;
  try {
    return synthesize_gcd_function(fs, opts);
  } catch (const ScaleError&) {
    return std::nullopt;
  }
}

inline IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long bound) {
  std::uniform_int_distribution<long> entry(-bound, bound);
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = entry(rng);
  return m;
}

/// Integer determinant by Laplace expansion.
inline BigInt laplace_det(const std::vector<std::vector<BigInt>>& a) {
  const std::size_t n = a.size();
  if (n == 1) return a[0][0];
  BigInt det = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (a[0][c] == 0) continue;
    std::vector<std::vector<BigInt>> sub;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<BigInt> row;
      for (std::size_t cc = 0; cc < n; ++cc)
        if (cc != c) row.push_back(a[r][cc]);
      sub.push_back(std::move(row));
    }
    const BigInt t = a[0][c] * laplace_det(sub);
    det += (c % 2 == 0) ? t : BigInt(-t);
  }
  return det;
}

/// gcd of |k x k minors| over all row subsets (k = cols).
inline BigInt minor_gcd_oracle(const IntMatrix& m) {
  const std::size_t k = m.cols(), r = m.rows();
  BigInt g = 0;
  if (r < k) return g;
  std::vector<std::size_t> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  for (;;) {
    std::vector<std::vector<BigInt>> sq;
    for (std::size_t i : pick) {
      std::vector<BigInt> row;
      for (std::size_t c = 0; c < k; ++c) row.push_back(m(i, c));
      sq.push_back(std::move(row));
    }
    g = gcd(g, laplace_det(sq));
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == r - k + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return g;
}

/// Random system with k <= max_k unknowns, exponents of degree <= max_deg.
inline MonomialSystem random_system(std::mt19937_64& rng, std::size_t max_k, int max_eq, int max_neq, unsigned max_n,
                                    int max_deg = 2, long bound = 3) {
  std::uniform_int_distribution<std::size_t> kd(1, max_k);
  std::uniform_int_distribution<int> eqd(0, max_eq), neqd(0, max_neq);
  std::uniform_int_distribution<unsigned> nd(1, max_n);
  MonomialSystem sys;
  sys.k = kd(rng);
  sys.n = nd(rng);
  for (std::size_t i = 0; i < sys.k; ++i) sys.variables.push_back("x" + std::to_string(i + 1));
  auto add = [&](RelationKind kind) {
    MonomialRelation rel;
    rel.kind = kind;
    for (std::size_t i = 0; i < sys.k; ++i) rel.exponents.push_back(random_poly(rng, max_deg, bound));
    sys.relations.push_back(std::move(rel));
  };
  const int e = eqd(rng), ne = neqd(rng);
  for (int i = 0; i < e; ++i) add(RelationKind::equation);
  for (int i = 0; i < ne; ++i) add(RelationKind::inequation);
  std::shuffle(sys.relations.begin(), sys.relations.end(), rng);
  return sys;
}

inline const char* kSystem1 =
    "field GF(q^2); vars x1, x2; eq x1^(q^2-1) = 1; neq x1^(q-1) = 1; eq x1^(q+1)*x2^-2 = 1";
inline const char* kSystem1Equations = "field GF(q^2); vars x1, x2; eq x1^(q^2-1) = 1; eq x1^(q+1)*x2^-2 = 1";

}  // namespace porc::testkit
