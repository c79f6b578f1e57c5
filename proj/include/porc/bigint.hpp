#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace porc {

/// gcd() and lcm() on BigInt come from gmpxx.
using BigInt = mpz_class;
/// Always kept canonical: gcd(|num|, den) = 1 and den >= 1.
using BigRational = mpq_class;

/// Nonnegative residue of a modulo m (m > 0).
inline BigInt mod_floor(const BigInt& a, const BigInt& m) {
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

inline BigRational make_rational(const BigInt& num, const BigInt& den) {
  BigRational r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integral(const BigRational& r) { return r.get_den() == 1; }

/// "num" when integral, "num/den" otherwise.
inline std::string to_string(const BigRational& r) {
  return is_integral(r) ? r.get_num().get_str() : r.get_str();
}

inline std::string to_string(const BigInt& z) { return z.get_str(); }

/// Parses "a" or "a/b"; throws std::invalid_argument on malformed text or b = 0.
BigRational parse_rational(const std::string& text);

/// Throws std::overflow_error if z does not fit.
std::int64_t to_int64(const BigInt& z);

}  // namespace porc
