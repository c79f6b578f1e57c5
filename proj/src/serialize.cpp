#include "porc/serialize.hpp"

#include <stdexcept>
#include <string>

#include "porc/errors.hpp"

namespace porc {
namespace {

Json integer_to_json(const BigInt& z) {
  if (z.fits_slong_p()) return Json(static_cast<std::int64_t>(z.get_si()));
  return Json(z.get_str());
}

BigInt integer_from_json(const Json& j, const char* what) {
  if (j.is_number_integer()) return BigInt(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) {
    BigInt z;
    if (z.set_str(j.get<std::string>(), 10) == 0) return z;
  }
  throw SchemaError(std::string(what) + ": expected an integer, got " + j.dump());
}

std::int64_t small_from_json(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw SchemaError(std::string(what) + ": expected an integer, got " + j.dump());
  return j.get<std::int64_t>();
}

BigRational rational_from_json(const Json& j, const char* what) {
  if (j.is_number_integer()) return BigRational(BigInt(static_cast<long>(j.get<std::int64_t>())));
  if (!j.is_string()) throw SchemaError(std::string(what) + ": expected a rational string, got " + j.dump());
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw SchemaError(std::string(what) + ": " + e.what());
  }
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw SchemaError("expected a JSON object, got " + j.dump());
  const auto it = j.find(key);
  if (it == j.end()) throw SchemaError(std::string("missing key '") + key + "'");
  return *it;
}

}  // namespace

Json to_json(const IntPolynomial& p) {
  Json arr = Json::array();
  for (const auto& c : p.coeffs()) arr.push_back(integer_to_json(c));
  return arr;
}

Json to_json(const PorcExpression& e) {
  Json terms = Json::array();
  for (const auto& t : e.terms)
    terms.push_back(Json{{"coeff", to_string(t.coeff)}, {"n", t.residue}, {"m", t.modulus}});
  return Json{{"alpha", to_string(e.alpha)}, {"terms", std::move(terms)}};
}

Json to_json(const GcdPorcFunction& g) { return Json{{"f", to_json(g.f)}, {"d", to_json(g.d)}, {"m", g.m}}; }

Json to_json(const CountingFunction& cf) {
  Json terms = Json::array();
  for (const auto& t : cf.terms)
    terms.push_back(Json{{"sign", t.sign}, {"f", to_json(t.g.f)}, {"d", to_json(t.g.d)}, {"m", t.g.m}});
  return Json{{"terms", std::move(terms)}};
}

Json to_json(const ResidueTable& t) {
  Json entries = Json::array();
  for (const auto& p : t.entries) entries.push_back(to_json(p));
  return Json{{"modulus", t.modulus}, {"entries", std::move(entries)}};
}

IntPolynomial int_polynomial_from_json(const Json& j) {
  if (!j.is_array()) throw SchemaError("polynomial: expected a coefficient array, got " + j.dump());
  std::vector<BigInt> coeffs;
  coeffs.reserve(j.size());
  for (const auto& c : j) coeffs.push_back(integer_from_json(c, "polynomial coefficient"));
  return IntPolynomial(std::move(coeffs));
}

PorcExpression porc_expression_from_json(const Json& j) {
  PorcExpression e;
  e.alpha = rational_from_json(field(j, "alpha"), "alpha");
  const Json& terms = field(j, "terms");
  if (!terms.is_array()) throw SchemaError("terms: expected an array");
  for (const auto& t : terms) {
    PorcTerm term{rational_from_json(field(t, "coeff"), "coeff"), small_from_json(field(t, "n"), "n"),
                  small_from_json(field(t, "m"), "m")};
    if (term.modulus < 1) throw SchemaError("m: gcd modulus must be positive");
    e.terms.push_back(std::move(term));
  }
  return e;
}

GcdPorcFunction gcd_porc_from_json(const Json& j) {
  GcdPorcFunction g{int_polynomial_from_json(field(j, "f")), porc_expression_from_json(field(j, "d")),
                    small_from_json(field(j, "m"), "m")};
  if (g.f.is_zero()) throw SchemaError("f: zero polynomial");
  if (g.m < 1) throw SchemaError("m: modulus must be positive");
  return g;
}

CountingFunction counting_function_from_json(const Json& j) {
  const Json& terms = field(j, "terms");
  if (!terms.is_array()) throw SchemaError("terms: expected an array");
  CountingFunction cf;
  for (const auto& t : terms) {
    const std::int64_t sign = small_from_json(field(t, "sign"), "sign");
    if (sign != 1 && sign != -1) throw SchemaError("sign: expected 1 or -1");
    cf.terms.push_back({static_cast<int>(sign), gcd_porc_from_json(t)});
  }
  return cf;
}

}  // namespace porc
