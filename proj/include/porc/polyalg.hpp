#pragma once

// Exact univariate polynomials over Z and Q.

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "porc/bigint.hpp"

namespace porc {

/// Dense univariate polynomial; coeffs()[i] is the coefficient of x^i.
/// The coefficient list never ends in a zero, so the zero polynomial is empty.
template <class Coeff>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<Coeff> coeffs) : coeffs_(coeffs) { trim(); }

  static Polynomial constant(const Coeff& c) { return Polynomial(std::vector<Coeff>{c}); }
  static Polynomial monomial(const Coeff& c, std::size_t degree) {
    std::vector<Coeff> v(degree + 1);
    v[degree] = c;
    return Polynomial(std::move(v));
  }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Coeff>& coeffs() const noexcept { return coeffs_; }
  const Coeff& leading() const { return coeffs_.back(); }

  /// Coefficient of x^i; zero past the degree.
  Coeff operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Coeff(0); }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator*=(const Coeff& s) {
    for (auto& c : coeffs_) c *= s;
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Coeff& s) { return a *= s; }
  friend Polynomial operator*(const Coeff& s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Coeff> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(out));
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Coeff> coeffs_;
};

using IntPolynomial = Polynomial<BigInt>;
using RatPolynomial = Polynomial<BigRational>;

RatPolynomial to_rational(const IntPolynomial& p);

/// Exact value of p at x (Horner).
BigInt eval_poly(const IntPolynomial& p, const BigInt& x);
BigRational eval_poly(const RatPolynomial& p, const BigRational& x);

struct ContentPrimitive {
  BigInt content;
  IntPolynomial primitive;
};

/// content * primitive == p, primitive has coprime coefficients and a positive
/// leading coefficient. Throws DomainError("no primitive part") on zero.
ContentPrimitive content_and_primitive(const IntPolynomial& p);

/// Returns (scale, q) with q = scale * p primitive in Z[x] with positive leading
/// coefficient. p must be nonzero.
std::pair<BigRational, IntPolynomial> primitive_associate(const RatPolynomial& p);

struct QuotRem {
  RatPolynomial quotient;
  RatPolynomial remainder;
};

/// Euclidean division in Q[x]; throws DomainError on division by zero.
QuotRem divmod(const RatPolynomial& a, const RatPolynomial& b);

/// a / b in Z[x]; throws ConsistencyError when b does not divide a there.
IntPolynomial exact_divide(const IntPolynomial& a, const IntPolynomial& b);

/// True when b divides a in Q[x] (b nonzero).
bool divides_rationally(const IntPolynomial& b, const IntPolynomial& a);

struct ExtendedGcd {
  RatPolynomial gcd;  // monic, or zero when both inputs are zero
  RatPolynomial s;
  RatPolynomial t;
};

/// s*a + t*b == gcd.
ExtendedGcd extended_gcd(const RatPolynomial& a, const RatPolynomial& b);

/// Primitive, positive-leading generator of the ideal (fs) in Q[x]. Zero
/// members are skipped; throws DomainError("gcd undefined") if all are zero.
IntPolynomial rational_gcd(std::span<const IntPolynomial> fs);

struct BezoutResult {
  IntPolynomial f;                      // == rational_gcd(fs)
  std::vector<RatPolynomial> cofactors;  // sum fs[i] * cofactors[i] == f
  BigInt m;                             // lcm of all cofactor denominators
};

BezoutResult bezout_cofactors(std::span<const IntPolynomial> fs);

/// Descending-degree rendering such as "3q^2-q+5"; "0" for the zero polynomial.
std::string to_string(const IntPolynomial& p, std::string_view var = "x");
std::string to_string(const RatPolynomial& p, std::string_view var = "x");

}  // namespace porc
