#pragma once

// Systems of monomial equations x_1^{e_1(q)} ... x_k^{e_k(q)} = 1 (or != 1)
// over the multiplicative group of GF(q^n), and their PORC counting functions.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "porc/bigint.hpp"
#include "porc/polyalg.hpp"
#include "porc/polymat.hpp"
#include "porc/porcsynth.hpp"

namespace porc {

enum class RelationKind { equation, inequation };

struct MonomialRelation {
  std::vector<IntPolynomial> exponents;  // one per unknown, polynomials in q
  RelationKind kind = RelationKind::equation;

  friend bool operator==(const MonomialRelation&, const MonomialRelation&) = default;
};

/// Unknowns range over nonzero elements of GF(q^n); membership is implicit.
struct MonomialSystem {
  std::size_t k = 0;
  unsigned n = 1;
  std::vector<MonomialRelation> relations;
  std::vector<std::string> variables;

  std::size_t inequation_count() const;
};

/// Parses the system DSL:
///
///   field GF(q^2);
///   vars x1, x2;
///   eq  x1^(q^2-1) = 1;
///   neq x1^(q-1) = 1;
///   eq  x1^(q+1)*x2^-2 = 1
///
/// Throws ParseError with the 1-based line/column of the offending token.
MonomialSystem parse_system(std::string_view text);

/// Parses a single integer polynomial such as "x^2+x" or "-3*q^4 + 2". Any one
/// identifier may serve as the variable; mixing two is an error.
IntPolynomial parse_polynomial(std::string_view text);

struct CountOptions {
  std::size_t max_inequations = 20;
  MinorOptions minors;
  SynthOptions synth;
};

/// Relation matrix with the equations plus the inequations selected by `mask`
/// (bit i = i-th inequation), rows in declaration order.
RelationMatrix subset_relation_matrix(const MonomialSystem& sys, std::size_t mask);

/// Inclusion-exclusion over inequations of Smith-form divisor products.
BigInt count_at(const MonomialSystem& sys, const BigInt& q0, const CountOptions& opts = {});

/// One signed gcd-PORC term per inequation subset, subsets by ascending mask.
CountingFunction synthesize_counting_function(const MonomialSystem& sys, const CountOptions& opts = {});

/// sum sign * d(q0) * |f(q0)|; throws ConsistencyError if the result is
/// negative or non-integral.
BigInt counting_eval(const CountingFunction& cf, const BigInt& q0);

}  // namespace porc
