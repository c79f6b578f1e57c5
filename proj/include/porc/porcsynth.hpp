#pragma once

// Closed forms for the gcd of integer polynomial values:
//   gcd(f_1(x), ..., f_s(x)) = d(x) * |f(x)|,
//   d(x) = alpha + sum_i alpha_i * gcd(x - n_i, m_i).

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "porc/bigint.hpp"
#include "porc/polyalg.hpp"

namespace porc {

/// coeff * gcd(x - residue, modulus). Canonical form: 0 < residue < modulus.
struct PorcTerm {
  BigRational coeff;
  std::int64_t residue = 0;
  std::int64_t modulus = 1;

  friend bool operator==(const PorcTerm&, const PorcTerm&) = default;
};

struct PorcExpression {
  BigRational alpha;
  std::vector<PorcTerm> terms;

  friend bool operator==(const PorcExpression&, const PorcExpression&) = default;
};

/// h(x) = d(x) * |f(x)| with d constant on residue classes modulo m.
struct GcdPorcFunction {
  IntPolynomial f;
  PorcExpression d;
  std::int64_t m = 1;

  friend bool operator==(const GcdPorcFunction&, const GcdPorcFunction&) = default;
};

/// sign * d(q) * |f(q)|
struct SignedTerm {
  int sign = 1;
  GcdPorcFunction g;

  friend bool operator==(const SignedTerm&, const SignedTerm&) = default;
};

/// Signed sum of gcd-PORC terms; the shape every solution count takes.
struct CountingFunction {
  std::vector<SignedTerm> terms;

  friend bool operator==(const CountingFunction&, const CountingFunction&) = default;
};

struct IndicatorTerm {
  int sign;
  std::int64_t modulus;
};

/// k(x) = sum over subsets T of the prime factors of m of (-1)^|T| gcd(x, m / prod(T)).
/// k vanishes off 0 mod m and equals c = phi(m) on it.
struct IndicatorScheme {
  std::int64_t m = 0;
  std::vector<std::int64_t> prime_factors;
  std::vector<IndicatorTerm> subset_terms;  // indexed by subset bitmask
  std::int64_t c = 0;
};

/// Throws DomainError for m <= 1.
IndicatorScheme build_indicator(std::int64_t m);

BigInt indicator_eval(const IndicatorScheme& s, const BigInt& x);

std::vector<std::int64_t> prime_factors(std::int64_t m);

/// Entry a-1 holds gcd(fs(x)) / |f(x)| for the least x >= a, x = a (mod m),
/// with f(x) != 0.
std::vector<BigInt> residue_gcd_profile(std::span<const IntPolynomial> fs, const IntPolynomial& f, std::int64_t m);

struct SynthOptions {
  /// Largest residue modulus the profiler will enumerate.
  std::int64_t max_modulus = 1'000'000;
};

GcdPorcFunction synthesize_gcd_function(std::span<const IntPolynomial> fs, const SynthOptions& opts = {});

/// Reduces residues, folds modulus-1 terms and residue-0 terms into the
/// constant, merges like terms and drops zeros. Terms come out sorted by
/// (modulus, residue). When `modulus` is given every term modulus must
/// divide it (ConsistencyError otherwise).
PorcExpression porc_canonicalize(const PorcExpression& e, std::optional<std::int64_t> modulus = std::nullopt);

/// sum_{a=0}^{m-1} gcd(a, m) with gcd(0, m) = m.
BigInt gcd_residue_sum(std::int64_t m);

BigRational porc_eval(const PorcExpression& e, const BigInt& x);

/// d(x) * |f(x)|
BigRational gcd_porc_eval(const GcdPorcFunction& g, const BigInt& x);

/// Empty when g satisfies every structural invariant of a synthesized
/// function; otherwise a description of the first violation.
std::optional<std::string> structural_violation(const GcdPorcFunction& g);

struct ResidueTable {
  std::int64_t modulus = 1;
  /// entries[r] agrees with the function on arguments = r (mod modulus)
  /// wherever every f involved is nonnegative.
  std::vector<IntPolynomial> entries;
};

/// Throws ConsistencyError if some class collapses to a non-integral polynomial.
ResidueTable porc_to_residue_table(const CountingFunction& cf);
ResidueTable porc_to_residue_table(const GcdPorcFunction& g);

std::string to_string(const PorcExpression& e, std::string_view var = "x");
std::string to_string(const GcdPorcFunction& g, std::string_view var = "x");
std::string to_string(const CountingFunction& cf, std::string_view var = "q");

}  // namespace porc
