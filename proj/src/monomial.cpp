#include "porc/monomial.hpp"

#include <algorithm>

#include "porc/errors.hpp"
#include "porc/intmat.hpp"

namespace porc {

std::size_t MonomialSystem::inequation_count() const {
  return static_cast<std::size_t>(std::count_if(relations.begin(), relations.end(), [](const MonomialRelation& r) {
    return r.kind == RelationKind::inequation;
  }));
}

namespace {

void check_inequation_cap(const MonomialSystem& sys, const CountOptions& opts) {
  const std::size_t neq = sys.inequation_count();
  if (neq > opts.max_inequations)
    throw ScaleError("inclusion-exclusion blow-up: " + std::to_string(neq) + " inequations exceed the cap of " +
                     std::to_string(opts.max_inequations));
}

int subset_sign(std::size_t mask) { return __builtin_popcountll(mask) % 2 == 0 ? 1 : -1; }

}  // namespace

RelationMatrix subset_relation_matrix(const MonomialSystem& sys, std::size_t mask) {
  std::vector<PolyRow> rows;
  std::size_t neq_index = 0;
  for (const auto& rel : sys.relations) {
    if (rel.kind == RelationKind::equation) {
      rows.push_back(rel.exponents);
    } else {
      if (mask & (std::size_t{1} << neq_index)) rows.push_back(rel.exponents);
      ++neq_index;
    }
  }
  return build_relation_matrix(std::move(rows), sys.k, sys.n);
}

BigInt count_at(const MonomialSystem& sys, const BigInt& q0, const CountOptions& opts) {
  if (q0 <= 1) throw DomainError("degenerate modulus q^n-1 <= 0");
  check_inequation_cap(sys, opts);
  const std::size_t subsets = std::size_t{1} << sys.inequation_count();
  BigInt total = 0;
  for (std::size_t mask = 0; mask < subsets; ++mask) {
    const BigInt count = divisor_product(smith_normal_form(evaluate_matrix(subset_relation_matrix(sys, mask), q0)));
    if (count == 0) throw ConsistencyError("relation matrix lost full column rank");
    if (subset_sign(mask) > 0)
      total += count;
    else
      total -= count;
  }
  if (total < 0) throw ConsistencyError("inclusion-exclusion produced a negative count");
  return total;
}

CountingFunction synthesize_counting_function(const MonomialSystem& sys, const CountOptions& opts) {
  check_inequation_cap(sys, opts);
  const std::size_t subsets = std::size_t{1} << sys.inequation_count();
  CountingFunction cf;
  cf.terms.reserve(subsets);
  for (std::size_t mask = 0; mask < subsets; ++mask) {
    const std::vector<IntPolynomial> minors = maximal_minors(subset_relation_matrix(sys, mask), opts.minors);
    cf.terms.push_back({subset_sign(mask), synthesize_gcd_function(minors, opts.synth)});
  }
  return cf;
}

BigInt counting_eval(const CountingFunction& cf, const BigInt& q0) {
  BigRational total = 0;
  for (const auto& t : cf.terms) {
    const BigRational v = gcd_porc_eval(t.g, q0);
    if (t.sign > 0)
      total += v;
    else
      total -= v;
  }
  if (!is_integral(total)) throw ConsistencyError("counting function is non-integral at q = " + q0.get_str());
  if (total < 0) throw ConsistencyError("counting function is negative at q = " + q0.get_str());
  return total.get_num();
}

}  // namespace porc
