#include "porc/verify.hpp"

#include <algorithm>

#include "porc/errors.hpp"

namespace porc {

bool VerifyRow::agrees() const {
  if (smith != formula) return false;
  if (field && *field != smith) return false;
  if (exponent && *exponent != smith) return false;
  return true;
}

bool VerifyReport::ok() const {
  return std::all_of(rows.begin(), rows.end(), [](const VerifyRow& r) { return r.agrees(); });
}

VerifyReport verify_system(const MonomialSystem& sys, const VerifyOptions& opts) {
  if (opts.q_lo < 2 || opts.q_hi < opts.q_lo) throw DomainError("q-range must satisfy 2 <= lo <= hi");
  VerifyReport report;
  report.formula = synthesize_counting_function(sys, opts.count);
  for (std::uint64_t q = opts.q_lo; q <= opts.q_hi; ++q) {
    VerifyRow row;
    row.q = q;
    const BigInt q_big(static_cast<unsigned long>(q));
    row.smith = count_at(sys, q_big, opts.count);
    row.formula = counting_eval(report.formula, q_big);
    if (prime_power(q)) {
      try {
        row.field = brute_force_count(sys, q, opts.enumeration);
      } catch (const ScaleError&) {
      }
    }
    try {
      row.exponent = exponent_space_count(sys, q, opts.enumeration);
    } catch (const ScaleError&) {
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace porc
