#pragma once

// Cross-checks a system's synthesized counting function against the Smith
// form count and the two enumeration oracles over a range of q.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "porc/ffield.hpp"
#include "porc/monomial.hpp"

namespace porc {

struct VerifyOptions {
  std::uint64_t q_lo = 2;
  std::uint64_t q_hi = 9;
  CountOptions count;
  EnumOptions enumeration;
};

struct VerifyRow {
  std::uint64_t q = 0;
  BigInt smith;    // count_at
  BigInt formula;  // counting_eval of the synthesized function
  std::optional<BigInt> field;     // brute_force_count, prime powers within the cap
  std::optional<BigInt> exponent;  // exponent_space_count, within the cap

  bool agrees() const;
};

struct VerifyReport {
  CountingFunction formula;
  std::vector<VerifyRow> rows;

  bool ok() const;
};

VerifyReport verify_system(const MonomialSystem& sys, const VerifyOptions& opts = {});

}  // namespace porc
