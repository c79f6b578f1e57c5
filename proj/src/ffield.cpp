#include "porc/ffield.hpp"

#include <algorithm>
#include <array>
#include <functional>

#include "porc/errors.hpp"

namespace porc {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::optional<std::pair<std::uint32_t, unsigned>> prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  std::uint64_t p = 2;
  while (p * p <= q && q % p != 0) ++p;
  if (q % p != 0) p = q;  // q itself is prime
  unsigned e = 0;
  while (q % p == 0) {
    q /= p;
    ++e;
  }
  if (q != 1 || p > UINT32_MAX) return std::nullopt;
  return std::pair{static_cast<std::uint32_t>(p), e};
}

namespace {

constexpr unsigned kMaxDegree = 32;
using Digits = std::array<std::uint64_t, 2 * kMaxDegree>;

// Remainder of a by monic b over Z_p; both lowest degree first.
std::vector<std::uint32_t> poly_rem(std::vector<std::uint32_t> a, const std::vector<std::uint32_t>& b, std::uint32_t p) {
  const std::size_t db = b.size() - 1;
  for (std::size_t i = a.size(); i-- > db;) {
    const std::uint64_t c = a[i];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] = static_cast<std::uint32_t>((a[i - db + j] + (p - c) * b[j]) % p);
  }
  a.resize(std::min(a.size(), db));
  return a;
}

bool all_zero(const std::vector<std::uint32_t>& v) {
  for (auto x : v)
    if (x) return false;
  return true;
}

}  // namespace

bool is_irreducible(const std::vector<std::uint32_t>& monic, std::uint32_t p) {
  const std::size_t n = monic.size() - 1;
  for (std::size_t d = 1; d <= n / 2; ++d) {
    // Every monic divisor candidate of degree d.
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      std::vector<std::uint32_t> cand(d + 1);
      std::uint64_t c = code;
      for (std::size_t i = 0; i < d; ++i) {
        cand[i] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      cand[d] = 1;
      if (all_zero(poly_rem(monic, cand, p))) return false;
    }
  }
  return true;
}

FieldContext make_field(std::uint32_t p, unsigned n, const EnumOptions& opts) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  if (n == 0) throw DomainError("field degree must be at least 1");
  std::uint64_t size = 1;
  for (unsigned i = 0; i < n; ++i) {
    size *= p;
    if (size > opts.max_enum || i >= kMaxDegree)
      throw ScaleError("field of order " + std::to_string(p) + "^" + std::to_string(n) + " exceeds the enumeration cap");
  }
  FieldContext f;
  f.p_ = p;
  f.n_ = n;
  f.size_ = static_cast<std::uint32_t>(size);
  for (std::uint64_t code = 0; code < size; ++code) {
    std::vector<std::uint32_t> cand(n + 1);
    std::uint64_t c = code;
    for (unsigned i = 0; i < n; ++i) {
      cand[i] = static_cast<std::uint32_t>(c % p);
      c /= p;
    }
    cand[n] = 1;
    if (is_irreducible(cand, p)) {
      f.modulus_ = std::move(cand);
      return f;
    }
  }
  throw ConsistencyError("no irreducible polynomial found");
}

FieldContext::Element FieldContext::add(Element a, Element b) const {
  Element out = 0, scale = 1;
  for (unsigned i = 0; i < n_; ++i) {
    out += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return out;
}

FieldContext::Element FieldContext::mul(Element a, Element b) const {
  Digits da{}, db{}, prod{};
  for (unsigned i = 0; i < n_; ++i) {
    da[i] = a % p_;
    db[i] = b % p_;
    a /= p_;
    b /= p_;
  }
  for (unsigned i = 0; i < n_; ++i) {
    if (!da[i]) continue;
    for (unsigned j = 0; j < n_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
  }
  // t^n = -(modulus[0] + ... + modulus[n-1] t^{n-1})
  for (unsigned i = 2 * n_ - 1; i-- > n_;) {
    const std::uint64_t c = prod[i];
    if (!c) continue;
    prod[i] = 0;
    for (unsigned j = 0; j < n_; ++j) prod[i - n_ + j] = (prod[i - n_ + j] + (p_ - c) * modulus_[j]) % p_;
  }
  Element out = 0;
  for (unsigned i = n_; i-- > 0;) out = out * p_ + static_cast<Element>(prod[i]);
  return out;
}

FieldContext::Element FieldContext::pow(Element a, const BigInt& e) const {
  if (a == 0) {
    if (e < 0) throw DomainError("zero has no inverse");
    return e == 0 ? 1 : 0;
  }
  std::uint64_t r = mod_floor(e, BigInt(size_ - 1)).get_ui();
  Element acc = 1;
  while (r) {
    if (r & 1) acc = mul(acc, a);
    a = mul(a, a);
    r >>= 1;
  }
  return acc;
}

FieldContext::Element FieldContext::inverse(Element a) const {
  if (a == 0) throw DomainError("zero has no inverse");
  return pow(a, BigInt(size_) - 2);
}

BigInt brute_force_count(const MonomialSystem& sys, std::uint32_t p, unsigned e, const EnumOptions& opts) {
  if (e == 0) throw DomainError("prime-power exponent must be at least 1");
  const FieldContext field = make_field(p, e * sys.n, opts);
  const std::uint64_t units = field.size() - 1;
  std::uint64_t tuples = 1;
  for (std::size_t i = 0; i < sys.k; ++i) {
    tuples *= units;
    if (tuples > opts.max_enum) throw ScaleError("brute-force enumeration exceeds the cap");
  }
  std::uint64_t q = 1;
  for (unsigned i = 0; i < e; ++i) q *= p;

  // power[r][i][x] = x^{exponent_{r,i}(q)} for every nonzero x, via Frobenius.
  const std::size_t nrel = sys.relations.size();
  std::vector<std::vector<std::vector<FieldContext::Element>>> power(nrel, std::vector<std::vector<FieldContext::Element>>(sys.k));
  for (std::size_t r = 0; r < nrel; ++r)
    for (std::size_t i = 0; i < sys.k; ++i) {
      const IntPolynomial& ex = sys.relations[r].exponents[i];
      if (ex.is_zero()) continue;
      auto& table = power[r][i];
      table.assign(field.size(), 1);
      for (FieldContext::Element x = 1; x < field.size(); ++x) {
        FieldContext::Element frob = x, acc = 1;
        for (std::size_t j = 0; j < ex.coeffs().size(); ++j) {
          if (j > 0) frob = field.pow(frob, BigInt(static_cast<unsigned long>(q)));
          if (ex.coeffs()[j] != 0) acc = field.mul(acc, field.pow(frob, ex.coeffs()[j]));
        }
        table[x] = acc;
      }
    }

  // prefix[r][i] = product of the first i factors of relation r
  std::vector<std::vector<FieldContext::Element>> prefix(nrel, std::vector<FieldContext::Element>(sys.k + 1, 1));
  std::uint64_t count = 0;
  std::function<void(std::size_t)> walk = [&](std::size_t i) {
    if (i == sys.k) {
      for (std::size_t r = 0; r < nrel; ++r) {
        const bool is_one = prefix[r][sys.k] == 1;
        if (is_one != (sys.relations[r].kind == RelationKind::equation)) return;
      }
      ++count;
      return;
    }
    for (FieldContext::Element x = 1; x < field.size(); ++x) {
      for (std::size_t r = 0; r < nrel; ++r)
        prefix[r][i + 1] = power[r][i].empty() ? prefix[r][i] : field.mul(prefix[r][i], power[r][i][x]);
      walk(i + 1);
    }
  };
  walk(0);
  return BigInt(static_cast<unsigned long>(count));
}

BigInt brute_force_count(const MonomialSystem& sys, std::uint64_t q0, const EnumOptions& opts) {
  const auto pe = prime_power(q0);
  if (!pe) throw DomainError(std::to_string(q0) + " is not a prime power");
  return brute_force_count(sys, pe->first, pe->second, opts);
}

BigInt exponent_space_count(const MonomialSystem& sys, std::uint64_t q0, const EnumOptions& opts) {
  if (q0 < 2) throw DomainError("degenerate modulus q^n-1 <= 0");
  BigInt modulus_big = 1;
  for (unsigned i = 0; i < sys.n; ++i) modulus_big *= static_cast<unsigned long>(q0);
  modulus_big -= 1;
  BigInt tuples = 1;
  for (std::size_t i = 0; i < sys.k; ++i) tuples *= modulus_big;
  if (tuples > static_cast<unsigned long>(opts.max_enum)) throw ScaleError("exponent-space enumeration exceeds the cap");
  const std::uint64_t modulus = modulus_big.get_ui();

  const std::size_t nrel = sys.relations.size();
  std::vector<std::vector<std::uint64_t>> beta(nrel, std::vector<std::uint64_t>(sys.k));
  for (std::size_t r = 0; r < nrel; ++r)
    for (std::size_t i = 0; i < sys.k; ++i)
      beta[r][i] = mod_floor(eval_poly(sys.relations[r].exponents[i], BigInt(static_cast<unsigned long>(q0))), modulus_big).get_ui();

  std::vector<std::vector<std::uint64_t>> prefix(nrel, std::vector<std::uint64_t>(sys.k + 1, 0));
  std::uint64_t count = 0;
  std::function<void(std::size_t)> walk = [&](std::size_t i) {
    if (i == sys.k) {
      for (std::size_t r = 0; r < nrel; ++r) {
        const bool holds = prefix[r][sys.k] == 0;
        if (holds != (sys.relations[r].kind == RelationKind::equation)) return;
      }
      ++count;
      return;
    }
    for (std::uint64_t m = 0; m < modulus; ++m) {
      for (std::size_t r = 0; r < nrel; ++r) prefix[r][i + 1] = (prefix[r][i] + beta[r][i] * m) % modulus;
      walk(i + 1);
    }
  };
  walk(0);
  return BigInt(static_cast<unsigned long>(count));
}

}  // namespace porc
