#pragma once

// JSON encoding. Polynomials are coefficient arrays ascending by degree
// (JSON integers, or decimal strings beyond 64 bits); rationals are
// "num" or "num/den" strings.
//
//   GcdPorcFunction   {"f":[0,1],"d":{"alpha":"0","terms":[{"coeff":"1","n":1,"m":2}]},"m":2}
//   CountingFunction  {"terms":[{"sign":1,"f":[...],"d":{...},"m":2}, ...]}

#include <json.hpp>

#include "porc/polyalg.hpp"
#include "porc/porcsynth.hpp"

namespace porc {

using Json = nlohmann::ordered_json;

Json to_json(const IntPolynomial& p);
Json to_json(const PorcExpression& e);
Json to_json(const GcdPorcFunction& g);
Json to_json(const CountingFunction& cf);
Json to_json(const ResidueTable& t);

// All of these throw SchemaError on malformed input.
IntPolynomial int_polynomial_from_json(const Json& j);
PorcExpression porc_expression_from_json(const Json& j);
GcdPorcFunction gcd_porc_from_json(const Json& j);
CountingFunction counting_function_from_json(const Json& j);

}  // namespace porc
