#include "porc/porcsynth.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <utility>

#include "porc/errors.hpp"

namespace porc {

std::vector<std::int64_t> prime_factors(std::int64_t m) {
  std::vector<std::int64_t> out;
  for (std::int64_t p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    out.push_back(p);
    while (m % p == 0) m /= p;
  }
  if (m > 1) out.push_back(m);
  return out;
}

IndicatorScheme build_indicator(std::int64_t m) {
  if (m <= 1) throw DomainError("indicator modulus must exceed 1");
  IndicatorScheme s;
  s.m = m;
  s.prime_factors = prime_factors(m);
  const std::size_t r = s.prime_factors.size();
  s.subset_terms.reserve(std::size_t{1} << r);
  s.c = 0;
  for (std::size_t mask = 0; mask < (std::size_t{1} << r); ++mask) {
    std::int64_t d = 1;
    int sign = 1;
    for (std::size_t i = 0; i < r; ++i)
      if (mask & (std::size_t{1} << i)) {
        d *= s.prime_factors[i];
        sign = -sign;
      }
    s.subset_terms.push_back({sign, m / d});
    s.c += sign * (m / d);
  }
  return s;
}

BigInt indicator_eval(const IndicatorScheme& s, const BigInt& x) {
  BigInt acc = 0;
  for (const auto& t : s.subset_terms) {
    BigInt g = gcd(x, BigInt(t.modulus));
    if (t.sign > 0)
      acc += g;
    else
      acc -= g;
  }
  return acc;
}

std::vector<BigInt> residue_gcd_profile(std::span<const IntPolynomial> fs, const IntPolynomial& f, std::int64_t m) {
  if (m < 1) throw DomainError("residue modulus must be positive");
  if (f.is_zero()) throw DomainError("reference polynomial is zero");
  std::vector<BigInt> out;
  out.reserve(static_cast<std::size_t>(m));
  for (std::int64_t a = 1; a <= m; ++a) {
    // f has at most deg f roots, so this terminates quickly.
    BigInt x = a;
    BigInt fx = eval_poly(f, x);
    while (fx == 0) {
      x += m;
      fx = eval_poly(f, x);
    }
    BigInt g = 0;
    for (const auto& fi : fs) g = gcd(g, eval_poly(fi, x));
    fx = abs(fx);
    if (!mpz_divisible_p(g.get_mpz_t(), fx.get_mpz_t()))
      throw ConsistencyError("f(x) does not divide the gcd of values at x = " + x.get_str());
    out.emplace_back(g / fx);
  }
  return out;
}

BigInt gcd_residue_sum(std::int64_t m) {
  BigInt sum = m;
  for (std::int64_t a = 1; a < m; ++a) sum += std::gcd(a, m);
  return sum;
}

PorcExpression porc_canonicalize(const PorcExpression& e, std::optional<std::int64_t> modulus) {
  PorcExpression out;
  out.alpha = e.alpha;
  std::map<std::pair<std::int64_t, std::int64_t>, BigRational> acc;  // (modulus, residue)
  for (const auto& t : e.terms) {
    if (t.modulus < 1) throw DomainError("gcd term modulus must be positive");
    if (modulus && *modulus % t.modulus != 0)
      throw ConsistencyError("term modulus " + std::to_string(t.modulus) + " does not divide " +
                             std::to_string(*modulus));
    if (t.coeff == 0) continue;
    if (t.modulus == 1) {
      out.alpha += t.coeff;
      continue;
    }
    const std::int64_t r = ((t.residue % t.modulus) + t.modulus) % t.modulus;
    acc[{t.modulus, r}] += t.coeff;
  }

  // gcd(x, m) = S(m) - sum_{0<a<m} gcd(x - a, m), S(m) constant.
  for (auto it = acc.begin(); it != acc.end();) {
    const auto [mod, r] = it->first;
    if (r != 0) {
      ++it;
      continue;
    }
    const BigRational c = it->second;
    it = acc.erase(it);
    if (c == 0) continue;
    out.alpha += c * BigRational(gcd_residue_sum(mod));
    for (std::int64_t a = 1; a < mod; ++a) acc[{mod, a}] -= c;
  }

  for (const auto& [key, coeff] : acc)
    if (coeff != 0) out.terms.push_back({coeff, key.second, key.first});
  return out;
}

BigRational porc_eval(const PorcExpression& e, const BigInt& x) {
  // Group numerators by denominator; canonical expressions have very few.
  std::map<BigInt, BigInt> by_den;
  for (const auto& t : e.terms) {
    if (t.modulus < 1) throw DomainError("gcd term modulus must be positive");
    const auto mod = static_cast<unsigned long>(t.modulus);
    const auto xr = static_cast<std::int64_t>(mpz_fdiv_ui(x.get_mpz_t(), mod));
    const std::int64_t g = std::gcd(xr - t.residue % t.modulus, t.modulus);
    by_den[t.coeff.get_den()] += t.coeff.get_num() * g;
  }
  BigRational acc = e.alpha;
  for (const auto& [den, num] : by_den) acc += make_rational(num, den);
  return acc;
}

BigRational gcd_porc_eval(const GcdPorcFunction& g, const BigInt& x) {
  return porc_eval(g.d, x) * BigRational(BigInt(abs(eval_poly(g.f, x))));
}

GcdPorcFunction synthesize_gcd_function(std::span<const IntPolynomial> fs, const SynthOptions& opts) {
  BezoutResult bz = bezout_cofactors(fs);
  if (bz.m > opts.max_modulus)
    throw ScaleError("residue modulus " + bz.m.get_str() + " exceeds cap " + std::to_string(opts.max_modulus));
  GcdPorcFunction out;
  out.f = std::move(bz.f);
  out.m = to_int64(bz.m);
  if (out.m == 1) {
    out.d.alpha = 1;
    return out;
  }

  const std::vector<BigInt> profile = residue_gcd_profile(fs, out.f, out.m);
  const IndicatorScheme ind = build_indicator(out.m);

  // d(x) = sum_{a=1}^{m} d(a) * k(x - a) / c. Numerators are accumulated per
  // (subset modulus, residue) over the common denominator c, so the m * 2^r
  // raw terms are never materialized.
  BigInt alpha_num = 0;
  std::vector<std::pair<std::int64_t, std::vector<BigInt>>> sums;
  for (const auto& t : ind.subset_terms) {
    if (t.modulus == 1) {
      BigInt total = 0;
      for (const auto& v : profile) total += v;
      alpha_num += t.sign * total;
      continue;
    }
    std::vector<BigInt> num(static_cast<std::size_t>(t.modulus));
    for (std::int64_t a = 1; a <= out.m; ++a) {
      BigInt& slot = num[static_cast<std::size_t>(a % t.modulus)];
      if (t.sign > 0)
        slot += profile[static_cast<std::size_t>(a - 1)];
      else
        slot -= profile[static_cast<std::size_t>(a - 1)];
    }
    // gcd(x, M) = S(M) - sum_{0<r<M} gcd(x - r, M)
    if (num[0] != 0) {
      alpha_num += num[0] * gcd_residue_sum(t.modulus);
      for (std::size_t r = 1; r < num.size(); ++r) num[r] -= num[0];
      num[0] = 0;
    }
    sums.emplace_back(t.modulus, std::move(num));
  }
  std::sort(sums.begin(), sums.end(), [](const auto& a, const auto& b) { return a.first < b.first; });

  const BigInt c(ind.c);
  out.d.alpha = make_rational(alpha_num, c);
  for (const auto& [mod, num] : sums)
    for (std::size_t r = 1; r < num.size(); ++r)
      if (num[r] != 0) out.d.terms.push_back({make_rational(num[r], c), static_cast<std::int64_t>(r), mod});
  return out;
}

std::optional<std::string> structural_violation(const GcdPorcFunction& g) {
  if (g.f.is_zero()) return "f is zero";
  if (g.f.leading() < 0) return "f has negative leading coefficient";
  if (content_and_primitive(g.f).content != 1) return "f is not primitive";
  if (g.m < 1) return "modulus m < 1";

  std::optional<BigInt> c;
  if (g.m > 1) c = BigInt(build_indicator(g.m).c);

  const PorcTerm* prev = nullptr;
  for (const auto& t : g.d.terms) {
    const std::string where = "term gcd(x-" + std::to_string(t.residue) + "," + std::to_string(t.modulus) + ")";
    if (t.modulus <= 1) return where + ": modulus <= 1";
    if (t.residue <= 0 || t.residue >= t.modulus) return where + ": residue outside (0, modulus)";
    if (t.coeff == 0) return where + ": zero coefficient";
    if (g.m % t.modulus != 0) return where + ": modulus does not divide m";
    const std::int64_t cofactor = g.m / t.modulus;
    for (std::int64_t p : prime_factors(cofactor))
      if (cofactor % (p * p) == 0) return where + ": m / modulus is not square-free";
    if (c && !mpz_divisible_p(c->get_mpz_t(), t.coeff.get_den().get_mpz_t()))
      return where + ": coefficient denominator does not divide k(m)";
    if (prev && std::pair(prev->modulus, prev->residue) >= std::pair(t.modulus, t.residue))
      return where + ": terms not strictly sorted by (modulus, residue)";
    prev = &t;
  }
  if (c && !mpz_divisible_p(c->get_mpz_t(), g.d.alpha.get_den().get_mpz_t()))
    return "constant denominator does not divide k(m)";

  for (std::int64_t a = 1; a <= g.m; ++a) {
    const BigRational v = porc_eval(g.d, BigInt(a));
    if (!is_integral(v) || v <= 0 || !mpz_divisible_p(BigInt(g.m).get_mpz_t(), v.get_num().get_mpz_t()))
      return "d(" + std::to_string(a) + ") = " + to_string(v) + " is not a positive divisor of m";
  }
  return std::nullopt;
}

ResidueTable porc_to_residue_table(const CountingFunction& cf) {
  ResidueTable out;
  for (const auto& term : cf.terms)
    for (const auto& t : term.g.d.terms) out.modulus = std::lcm(out.modulus, t.modulus);
  out.entries.reserve(static_cast<std::size_t>(out.modulus));
  for (std::int64_t r = 0; r < out.modulus; ++r) {
    RatPolynomial acc;
    for (const auto& term : cf.terms) {
      const BigRational dv = porc_eval(term.g.d, BigInt(r)) * term.sign;
      acc += to_rational(term.g.f) * dv;
    }
    std::vector<BigInt> coeffs;
    coeffs.reserve(acc.coeffs().size());
    for (const auto& c : acc.coeffs()) {
      if (!is_integral(c))
        throw ConsistencyError("residue class " + std::to_string(r) + " collapses to a non-integral polynomial");
      coeffs.push_back(c.get_num());
    }
    out.entries.emplace_back(std::move(coeffs));
  }
  return out;
}

ResidueTable porc_to_residue_table(const GcdPorcFunction& g) {
  return porc_to_residue_table(CountingFunction{{SignedTerm{1, g}}});
}

namespace {

std::string render_gcd(std::string_view var, const PorcTerm& t) {
  std::ostringstream os;
  os << "gcd(" << var << "-" << t.residue << "," << t.modulus << ")";
  return os.str();
}

// Pieces of a sum, each with its sign split off.
std::vector<std::pair<bool, std::string>> expression_pieces(const PorcExpression& e, std::string_view var) {
  std::vector<std::pair<bool, std::string>> pieces;
  if (e.alpha != 0 || e.terms.empty()) pieces.emplace_back(e.alpha < 0, to_string(BigRational(abs(e.alpha))));
  std::vector<PorcTerm> sorted = e.terms;
  std::sort(sorted.begin(), sorted.end(), [](const PorcTerm& a, const PorcTerm& b) {
    return std::pair(a.modulus, a.residue) < std::pair(b.modulus, b.residue);
  });
  for (const auto& t : sorted) {
    const BigRational mag = abs(t.coeff);
    std::string body = render_gcd(var, t);
    if (mag != 1) body = to_string(mag) + "*" + body;
    pieces.emplace_back(t.coeff < 0, std::move(body));
  }
  return pieces;
}

std::string join_pieces(const std::vector<std::pair<bool, std::string>>& pieces) {
  std::string out;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const auto& [neg, body] = pieces[i];
    if (i == 0)
      out += neg ? "-" + body : body;
    else
      out += (neg ? " - " : " + ") + body;
  }
  return out;
}

// d * f without the term's sign.
std::string render_product(const GcdPorcFunction& g, std::string_view var) {
  const bool unit_d = g.d.terms.empty() && g.d.alpha == 1;
  const bool unit_f = g.f == IntPolynomial{BigInt(1)};
  std::string f_str = to_string(g.f, var);
  const bool f_compound = g.f.coeffs().size() > 1 &&
                          std::count_if(g.f.coeffs().begin(), g.f.coeffs().end(), [](const BigInt& c) { return c != 0; }) > 1;
  if (f_compound) f_str = "(" + f_str + ")";
  if (unit_d) return unit_f ? "1" : f_str;

  const auto pieces = expression_pieces(g.d, var);
  std::string d_str = join_pieces(pieces);
  if (pieces.size() > 1 || pieces.front().first) d_str = "(" + d_str + ")";
  return unit_f ? d_str : d_str + "*" + f_str;
}

}  // namespace

std::string to_string(const PorcExpression& e, std::string_view var) { return join_pieces(expression_pieces(e, var)); }

std::string to_string(const GcdPorcFunction& g, std::string_view var) { return render_product(g, var); }

std::string to_string(const CountingFunction& cf, std::string_view var) {
  if (cf.terms.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < cf.terms.size(); ++i) {
    const bool neg = cf.terms[i].sign < 0;
    const std::string body = render_product(cf.terms[i].g, var);
    if (i == 0)
      out += neg ? "-" + body : body;
    else
      out += (neg ? " - " : " + ") + body;
  }
  return out;
}

}  // namespace porc
