#pragma once

// Brute-force oracles: explicit GF(p^n) arithmetic and exponent enumeration.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "porc/bigint.hpp"
#include "porc/monomial.hpp"

namespace porc {

struct EnumOptions {
  /// Largest number of tuples (and largest field) an oracle will enumerate.
  std::uint64_t max_enum = 1'000'000;
};

bool is_prime(std::uint64_t n);

/// (p, e) with q = p^e, or nullopt when q is not a prime power.
std::optional<std::pair<std::uint32_t, unsigned>> prime_power(std::uint64_t q);

/// GF(p^n) as Z_p[t] / (modulus). Elements are encoded as base-p integers,
/// digit i being the coefficient of t^i; 0 is zero and 1 is one.
class FieldContext {
 public:
  using Element = std::uint32_t;

  std::uint32_t p() const noexcept { return p_; }
  unsigned degree() const noexcept { return n_; }
  /// Monic, lowest degree first, size degree() + 1.
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }
  std::uint32_t size() const noexcept { return size_; }

  Element add(Element a, Element b) const;
  Element mul(Element a, Element b) const;
  Element inverse(Element a) const;  // a != 0
  /// a^e for any integer e; negative e requires a != 0.
  Element pow(Element a, const BigInt& e) const;

 private:
  friend FieldContext make_field(std::uint32_t p, unsigned n, const EnumOptions& opts);

  std::uint32_t p_ = 0;
  unsigned n_ = 0;
  std::uint32_t size_ = 0;
  std::vector<std::uint32_t> modulus_;
};

/// Deterministic irreducible modulus: the first monic degree-n polynomial,
/// counting upward with the t^{n-1} coefficient most significant.
/// Throws DomainError for non-prime p or n == 0, ScaleError when p^n > max_enum.
FieldContext make_field(std::uint32_t p, unsigned n, const EnumOptions& opts = {});

/// True when the monic polynomial (lowest degree first) has no monic factor
/// of degree 1..deg/2 over Z_p.
bool is_irreducible(const std::vector<std::uint32_t>& monic, std::uint32_t p);

/// Tuples of nonzero elements of GF(q^n), q = p^e, satisfying every
/// equation and violating every inequation. x^{sum c_j q^j} is computed as
/// prod_j Frob^j(x)^{c_j} with Frob(x) = x^q.
BigInt brute_force_count(const MonomialSystem& sys, std::uint32_t p, unsigned e, const EnumOptions& opts = {});

/// Same count for q0 given directly; throws DomainError if q0 is not a prime power.
BigInt brute_force_count(const MonomialSystem& sys, std::uint64_t q0, const EnumOptions& opts = {});

/// Tuples in (Z_{q0^n - 1})^k satisfying every equation row as a linear
/// congruence and violating every inequation row.
BigInt exponent_space_count(const MonomialSystem& sys, std::uint64_t q0, const EnumOptions& opts = {});

}  // namespace porc
