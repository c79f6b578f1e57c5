#include "porc/polyalg.hpp"

#include <sstream>
#include <stdexcept>

#include "porc/errors.hpp"

namespace porc {

BigRational parse_rational(const std::string& text) {
  BigRational r;
  if (text.empty() || r.set_str(text, 10) != 0) throw std::invalid_argument("malformed rational '" + text + "'");
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  r.canonicalize();
  return r;
}

std::int64_t to_int64(const BigInt& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("integer " + z.get_str() + " exceeds 64 bits");
  return z.get_si();
}

RatPolynomial to_rational(const IntPolynomial& p) {
  std::vector<BigRational> v;
  v.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) v.emplace_back(c);
  return RatPolynomial(std::move(v));
}

BigInt eval_poly(const IntPolynomial& p, const BigInt& x) {
  BigInt acc = 0;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * x + *it;
  return acc;
}

BigRational eval_poly(const RatPolynomial& p, const BigRational& x) {
  BigRational acc = 0;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * x + *it;
  return acc;
}

ContentPrimitive content_and_primitive(const IntPolynomial& p) {
  if (p.is_zero()) throw DomainError("no primitive part");
  BigInt g = 0;
  for (const auto& c : p.coeffs()) g = gcd(g, c);
  if (p.leading() < 0) g = -g;
  std::vector<BigInt> v;
  v.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) v.emplace_back(c / g);
  return {g, IntPolynomial(std::move(v))};
}

std::pair<BigRational, IntPolynomial> primitive_associate(const RatPolynomial& p) {
  if (p.is_zero()) throw DomainError("no primitive part");
  BigInt den = 1;
  for (const auto& c : p.coeffs()) den = lcm(den, c.get_den());
  std::vector<BigInt> v;
  v.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) v.emplace_back(c.get_num() * (den / c.get_den()));
  auto [content, prim] = content_and_primitive(IntPolynomial(std::move(v)));
  return {make_rational(den, content), std::move(prim)};
}

QuotRem divmod(const RatPolynomial& a, const RatPolynomial& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<BigRational> rem = a.coeffs();
  const long db = b.degree();
  if (a.degree() < db) return {RatPolynomial{}, a};
  std::vector<BigRational> quo(static_cast<std::size_t>(a.degree() - db + 1));
  for (long i = a.degree(); i >= db; --i) {
    const BigRational c = rem[i] / b.leading();
    quo[i - db] = c;
    if (c == 0) continue;
    for (long j = 0; j <= db; ++j) rem[i - db + j] -= c * b.coeffs()[j];
  }
  return {RatPolynomial(std::move(quo)), RatPolynomial(std::move(rem))};
}

IntPolynomial exact_divide(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  if (a.is_zero()) return {};
  const long db = b.degree();
  if (a.degree() < db) throw ConsistencyError("inexact polynomial division");
  std::vector<BigInt> rem = a.coeffs();
  std::vector<BigInt> quo(static_cast<std::size_t>(a.degree() - db + 1));
  for (long i = a.degree(); i >= db; --i) {
    if (rem[i] == 0) continue;
    if (!mpz_divisible_p(rem[i].get_mpz_t(), b.leading().get_mpz_t()))
      throw ConsistencyError("inexact polynomial division");
    const BigInt c = rem[i] / b.leading();
    quo[i - db] = c;
    for (long j = 0; j <= db; ++j) rem[i - db + j] -= c * b.coeffs()[j];
  }
  for (const auto& r : rem)
    if (r != 0) throw ConsistencyError("inexact polynomial division");
  return IntPolynomial(std::move(quo));
}

bool divides_rationally(const IntPolynomial& b, const IntPolynomial& a) {
  return divmod(to_rational(a), to_rational(b)).remainder.is_zero();
}

ExtendedGcd extended_gcd(const RatPolynomial& a, const RatPolynomial& b) {
  RatPolynomial r0 = a, r1 = b;
  RatPolynomial s0{BigRational(1)}, s1{};
  RatPolynomial t0{}, t1{BigRational(1)};
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    RatPolynomial s = s0 - q * s1;
    RatPolynomial t = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
    t0 = std::move(t1);
    t1 = std::move(t);
  }
  if (!r0.is_zero()) {
    const BigRational inv = 1 / r0.leading();
    r0 *= inv;
    s0 *= inv;
    t0 *= inv;
  }
  return {std::move(r0), std::move(s0), std::move(t0)};
}

BezoutResult bezout_cofactors(std::span<const IntPolynomial> fs) {
  // Fold the two-argument extended Euclid from the left: after step j,
  // sum_{i<=j} fs[i] * cofactors[i] == g.
  std::vector<RatPolynomial> cofactors(fs.size());
  RatPolynomial g;
  bool started = false;
  for (std::size_t j = 0; j < fs.size(); ++j) {
    if (fs[j].is_zero()) continue;
    const RatPolynomial fj = to_rational(fs[j]);
    if (!started) {
      const BigRational inv = 1 / fj.leading();
      g = fj * inv;
      cofactors[j] = RatPolynomial{inv};
      started = true;
      continue;
    }
    auto [next, s, t] = extended_gcd(g, fj);
    for (std::size_t i = 0; i < j; ++i)
      if (!cofactors[i].is_zero()) cofactors[i] = cofactors[i] * s;
    cofactors[j] = std::move(t);
    g = std::move(next);
  }
  if (!started) throw DomainError("gcd undefined");

  auto [scale, f] = primitive_associate(g);
  BigInt m = 1;
  for (auto& c : cofactors) {
    c *= scale;
    for (const auto& coeff : c.coeffs()) m = lcm(m, coeff.get_den());
  }
  return {std::move(f), std::move(cofactors), std::move(m)};
}

IntPolynomial rational_gcd(std::span<const IntPolynomial> fs) {
  RatPolynomial g;
  bool any = false;
  for (const auto& f : fs) {
    if (f.is_zero()) continue;
    any = true;
    g = extended_gcd(g, to_rational(f)).gcd;
  }
  if (!any) throw DomainError("gcd undefined");
  return primitive_associate(g).second;
}

namespace {

template <class Coeff>
std::string render(const Polynomial<Coeff>& p, std::string_view var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long i = p.degree(); i >= 0; --i) {
    Coeff c = p.coeffs()[i];
    if (c == 0) continue;
    if (c < 0) {
      os << "-";
      c = -c;
    } else if (!first) {
      os << "+";
    }
    first = false;
    if (i == 0) {
      os << c.get_str();
      continue;
    }
    if (c != 1) os << c.get_str() << "*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

}  // namespace

std::string to_string(const IntPolynomial& p, std::string_view var) { return render(p, var); }
std::string to_string(const RatPolynomial& p, std::string_view var) { return render(p, var); }

}  // namespace porc
