#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "porc/errors.hpp"
#include "porc/porcsynth.hpp"
#include "test_support.hpp"

using namespace porc;
using porc::testkit::poly;

namespace {

std::int64_t totient_by_counting(std::int64_t m) {
  std::int64_t n = 0;
  for (std::int64_t a = 1; a <= m; ++a) n += std::gcd(a, m) == 1;
  return n;
}

BigInt gcd_of_values_at(const std::vector<IntPolynomial>& fs, const BigInt& x) {
  BigInt g = 0;
  for (const auto& f : fs) g = gcd(g, eval_poly(f, x));
  return g;
}

PorcExpression single(const BigRational& coeff, std::int64_t n, std::int64_t m) { return {BigRational(0), {{coeff, n, m}}}; }

// The PORC part of the order-p^6 group count.
CountingFunction p6_groups() {
  CountingFunction cf;
  cf.terms.push_back({1, {poly({344, 39, 3}), PorcExpression{BigRational(1), {}}, 1}});
  PorcExpression d{BigRational(0), {{BigRational(24), 1, 3}, {BigRational(11), 1, 4}, {BigRational(2), 1, 5}}};
  cf.terms.push_back({1, {poly({1}), d, 60}});
  return cf;
}

}  // namespace

TEST(Indicator, Examples) {
  const auto s12 = build_indicator(12);
  EXPECT_EQ(s12.prime_factors, (std::vector<std::int64_t>{2, 3}));
  ASSERT_EQ(s12.subset_terms.size(), 4u);
  const std::int64_t mods[] = {12, 6, 4, 2};
  const int signs[] = {1, -1, -1, 1};
  for (int i = 0; i < 4; ++i) {
    EXPECT_EQ(s12.subset_terms[i].modulus, mods[i]);
    EXPECT_EQ(s12.subset_terms[i].sign, signs[i]);
  }
  EXPECT_EQ(s12.c, 4);

  const auto s4 = build_indicator(4);
  ASSERT_EQ(s4.subset_terms.size(), 2u);
  EXPECT_EQ(s4.subset_terms[0].modulus, 4);
  EXPECT_EQ(s4.subset_terms[1].modulus, 2);
  EXPECT_EQ(s4.subset_terms[1].sign, -1);
  EXPECT_EQ(s4.c, 2);

  const auto s2 = build_indicator(2);
  EXPECT_EQ(s2.subset_terms[1].modulus, 1);
  EXPECT_EQ(s2.c, 1);

  EXPECT_THROW(build_indicator(1), DomainError);
  EXPECT_THROW(build_indicator(-6), DomainError);
}

TEST(Indicator, EvalExamples) {
  EXPECT_EQ(indicator_eval(build_indicator(12), BigInt(12)), 4);
  EXPECT_EQ(indicator_eval(build_indicator(12), BigInt(7)), 0);
  EXPECT_EQ(indicator_eval(build_indicator(4), BigInt(2)), 0);
}

TEST(Indicator, CompletenessUpTo500) {
  for (std::int64_t m = 2; m <= 500; ++m) {
    const auto s = build_indicator(m);
    ASSERT_EQ(s.c, totient_by_counting(m)) << "m=" << m;
    for (std::int64_t x = 1; x < m; ++x) ASSERT_EQ(indicator_eval(s, BigInt(x)), 0) << "m=" << m << " x=" << x;
    ASSERT_EQ(indicator_eval(s, BigInt(m)), s.c);
    // Periodic, including negative arguments.
    ASSERT_EQ(indicator_eval(s, BigInt(-m)), s.c);
    ASSERT_EQ(indicator_eval(s, BigInt(0)), s.c);
  }
}

TEST(ResidueProfile, Examples) {
  const std::vector<IntPolynomial> a{poly({0, 1, 1}), poly({0, -1, 1})};
  EXPECT_EQ(residue_gcd_profile(a, poly({0, 1}), 2), (std::vector<BigInt>{2, 1}));
  const std::vector<IntPolynomial> b{poly({-1, 0, 1}), poly({-1, 0, 0, 1})};
  EXPECT_EQ(residue_gcd_profile(b, poly({-1, 1}), 1), (std::vector<BigInt>{1}));
  const std::vector<IntPolynomial> c{poly({2})};
  EXPECT_EQ(residue_gcd_profile(c, poly({1}), 2), (std::vector<BigInt>{2, 2}));
}

TEST(ResidueProfile, ExamplesMatchDirectGcd) {
  // x = 3 and x = 4 representatives for [x^2+x, x^2-x].
  const std::vector<IntPolynomial> a{poly({0, 1, 1}), poly({0, -1, 1})};
  EXPECT_EQ(gcd_of_values_at(a, BigInt(3)), 6);
  EXPECT_EQ(gcd_of_values_at(a, BigInt(4)), 4);
}

TEST(Canonicalize, Examples) {
  EXPECT_EQ(porc_canonicalize(single(BigRational(1), 5, 3)), single(BigRational(1), 2, 3));

  const auto r = porc_canonicalize(single(BigRational(1), 0, 4));
  EXPECT_EQ(r.alpha, 8);
  ASSERT_EQ(r.terms.size(), 3u);
  for (std::int64_t a = 1; a <= 3; ++a) EXPECT_EQ(r.terms[a - 1], (PorcTerm{BigRational(-1), a, 4}));

  const auto z = porc_canonicalize(single(BigRational(0), 1, 2));
  EXPECT_EQ(z.alpha, 0);
  EXPECT_TRUE(z.terms.empty());
}

TEST(Canonicalize, ConstantSumIdentityByEnumeration) {
  for (std::int64_t m = 1; m <= 60; ++m) {
    BigInt direct = 0;
    for (std::int64_t a = 0; a < m; ++a) direct += std::gcd(a, m) == 0 ? m : std::gcd(a, m);
    EXPECT_EQ(gcd_residue_sum(m), direct);
    for (std::int64_t x = -30; x <= 30; ++x) {
      BigInt s = 0;
      for (std::int64_t a = 0; a < m; ++a) s += gcd(BigInt(x - a), BigInt(m));
      ASSERT_EQ(s, direct) << "m=" << m << " x=" << x;
    }
  }
}

TEST(Canonicalize, PreservesValuesAndInvariants) {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<std::int64_t> mod(1, 30), res(-50, 50);
  std::uniform_int_distribution<long> num(-6, 6), den(1, 5);
  for (int i = 0; i < 300; ++i) {
    PorcExpression e{make_rational(BigInt(num(rng)), BigInt(den(rng))), {}};
    const int terms = static_cast<int>(rng() % 6);
    for (int t = 0; t < terms; ++t) e.terms.push_back({make_rational(BigInt(num(rng)), BigInt(den(rng))), res(rng), mod(rng)});
    const auto c = porc_canonicalize(e);
    for (std::size_t t = 0; t < c.terms.size(); ++t) {
      EXPECT_GT(c.terms[t].modulus, 1);
      EXPECT_GT(c.terms[t].residue, 0);
      EXPECT_LT(c.terms[t].residue, c.terms[t].modulus);
      EXPECT_NE(c.terms[t].coeff, 0);
      if (t > 0)
        EXPECT_LT(std::pair(c.terms[t - 1].modulus, c.terms[t - 1].residue), std::pair(c.terms[t].modulus, c.terms[t].residue));
    }
    for (long x = -40; x <= 40; ++x) ASSERT_EQ(porc_eval(c, BigInt(x)), porc_eval(e, BigInt(x)));
  }
}

TEST(Canonicalize, RejectsForeignModulus) {
  EXPECT_THROW(porc_canonicalize(single(BigRational(1), 1, 3), 4), ConsistencyError);
  EXPECT_NO_THROW(porc_canonicalize(single(BigRational(1), 1, 3), 6));
}

TEST(PorcEval, Examples) {
  const auto d = single(BigRational(1), 1, 2);
  EXPECT_EQ(porc_eval(d, BigInt(7)), 2);
  EXPECT_EQ(porc_eval(d, BigInt(4)), 1);
  EXPECT_EQ(porc_eval(PorcExpression{BigRational(344), {}}, BigInt(-91)), 344);
  // gcd(0, m) = m
  EXPECT_EQ(porc_eval(single(BigRational(1), 3, 5), BigInt(3)), 5);
}

TEST(SynthesizeGcd, Examples) {
  const std::vector<IntPolynomial> a{poly({0, 1, 1}), poly({0, -1, 1})};
  const auto ga = synthesize_gcd_function(a);
  EXPECT_EQ(ga.f, poly({0, 1}));
  EXPECT_EQ(ga.d, single(BigRational(1), 1, 2));
  EXPECT_EQ(ga.m, 2);
  EXPECT_EQ(gcd_porc_eval(ga, BigInt(3)), 6);

  const std::vector<IntPolynomial> b{poly({-1, 0, 1}), poly({-1, 0, 0, 1})};
  const auto gb = synthesize_gcd_function(b);
  EXPECT_EQ(gb.f, poly({-1, 1}));
  EXPECT_EQ(gb.d, (PorcExpression{BigRational(1), {}}));
  EXPECT_EQ(gb.m, 1);

  const std::vector<IntPolynomial> c{poly({0, 2}), poly({0, 1, 1})};
  const auto gc = synthesize_gcd_function(c);
  EXPECT_EQ(gc.f, poly({0, 1}));
  EXPECT_EQ(gc.d, single(BigRational(1), 1, 2));
  EXPECT_EQ(gc.m, 2);
}

TEST(SynthesizeGcd, ConstantFamily) {
  const std::vector<IntPolynomial> fs{poly({6}), poly({4})};
  const auto g = synthesize_gcd_function(fs);
  EXPECT_EQ(g.f, poly({1}));
  for (long x = -5; x <= 5; ++x) EXPECT_EQ(gcd_porc_eval(g, BigInt(x)), 2);
  EXPECT_FALSE(structural_violation(g));
}

TEST(SynthesizeGcd, AllZeroIsAnError) {
  const std::vector<IntPolynomial> fs{IntPolynomial{}, IntPolynomial{}};
  EXPECT_THROW(synthesize_gcd_function(fs), DomainError);
}

TEST(SynthesizeGcd, ModulusCap) {
  const std::vector<IntPolynomial> fs{poly({0, 1, 1}), poly({0, -1, 1})};
  SynthOptions opts;
  opts.max_modulus = 1;
  EXPECT_THROW(synthesize_gcd_function(fs, opts), ScaleError);
}

TEST(SynthesizeGcd, SoundnessSweep) {
  std::mt19937_64 rng(42);
  int checked = 0, drawn = 0;
  while (checked < 300) {
    const auto fs = testkit::random_family(rng, 4, 5, 15);
    ++drawn;
    const auto g = testkit::synthesize_within_cap(fs);
    if (!g) continue;
    ++checked;
    const auto violation = structural_violation(*g);
    ASSERT_FALSE(violation) << *violation;
    for (long x = -200; x <= 200; ++x) {
      const BigInt xb(x);
      const BigInt fx = eval_poly(g->f, xb);
      if (fx == 0) continue;
      ASSERT_EQ(BigRational(gcd_of_values_at(fs, xb)), porc_eval(g->d, xb) * BigRational(BigInt(abs(fx))))
          << "x=" << x << " f=" << to_string(g->f);
    }
  }
  RecordProperty("families_drawn", drawn);
}

TEST(SynthesizeGcd, MatchesCanonicalizedRawSum) {
  std::mt19937_64 rng(45);
  int checked = 0;
  while (checked < 150) {
    const auto fs = testkit::random_family(rng, 3, 4, 10);
    const auto g = testkit::synthesize_within_cap(fs, 600);
    if (!g || g->m == 1) continue;
    ++checked;
    const auto profile = residue_gcd_profile(fs, g->f, g->m);
    const auto ind = build_indicator(g->m);
    PorcExpression raw;
    for (std::int64_t a = 1; a <= g->m; ++a)
      for (const auto& t : ind.subset_terms)
        raw.terms.push_back({make_rational(profile[a - 1] * t.sign, BigInt(ind.c)), a, t.modulus});
    ASSERT_EQ(g->d, porc_canonicalize(raw, g->m));
  }
}

TEST(SynthesizeGcd, ProfileDependsOnlyOnResidueClass) {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 200; ++i) {
    const auto fs = testkit::random_family(rng, 4, 4, 12);
    const auto bz = bezout_cofactors(fs);
    if (bz.m > testkit::kSweepModulusCap) continue;
    const std::int64_t m = to_int64(bz.m);
    const auto profile = residue_gcd_profile(fs, bz.f, m);
    for (std::int64_t a = 1; a <= m; ++a) {
      for (std::int64_t t : {3, 7}) {
        const BigInt x = BigInt(a) + BigInt(m) * t;
        const BigInt fx = eval_poly(bz.f, x);
        if (fx == 0) continue;
        EXPECT_EQ(gcd_of_values_at(fs, x) / BigInt(abs(fx)), profile[a - 1]);
      }
      EXPECT_TRUE(mpz_divisible_p(BigInt(m).get_mpz_t(), profile[a - 1].get_mpz_t()));
    }
  }
}

TEST(ResidueTable, Examples) {
  CountingFunction cf;
  cf.terms.push_back({1, {poly({0, -1, 1}), single(BigRational(1), 1, 2), 2}});
  const auto t = porc_to_residue_table(cf);
  EXPECT_EQ(t.modulus, 2);
  EXPECT_EQ(t.entries, (std::vector<IntPolynomial>{poly({0, -1, 1}), poly({0, -2, 2})}));

  const auto five = porc_to_residue_table(GcdPorcFunction{poly({5}), PorcExpression{BigRational(1), {}}, 1});
  EXPECT_EQ(five.modulus, 1);
  EXPECT_EQ(five.entries, (std::vector<IntPolynomial>{poly({5})}));
}

TEST(ResidueTable, GroupsOfOrderP6) {
  const auto t = porc_to_residue_table(p6_groups());
  EXPECT_EQ(t.modulus, 60);
  ASSERT_EQ(t.entries.size(), 60u);
  EXPECT_EQ(t.entries[1], poly({470, 39, 3}));
  // Values at p = 5 and 7 computed by hand from the printed formula.
  EXPECT_EQ(eval_poly(t.entries[5], BigInt(5)), 684);
  EXPECT_EQ(eval_poly(t.entries[7], BigInt(7)), 860);
}

TEST(ResidueTable, NonIntegralCollapseIsReported) {
  CountingFunction cf;
  cf.terms.push_back({1, {poly({1}), single(BigRational(1, 2), 1, 2), 2}});
  EXPECT_THROW(porc_to_residue_table(cf), ConsistencyError);
}

TEST(ResidueTable, AgreesWithDirectEvaluation) {
  std::mt19937_64 rng(44);
  for (int i = 0; i < 60; ++i) {
    const auto fs = testkit::random_family(rng, 3, 3, 8);
    const auto found = testkit::synthesize_within_cap(fs, 500);
    if (!found) continue;
    const auto& g = *found;
    const auto t = porc_to_residue_table(g);
    // Start past every root of f so |f| = f.
    BigInt bound = 1;
    for (const auto& c : g.f.coeffs()) bound += abs(c);
    for (std::int64_t j = 0; j < 10 * t.modulus; ++j) {
      const BigInt x = bound + j;
      const auto r = static_cast<std::size_t>(mod_floor(x, BigInt(t.modulus)).get_ui());
      EXPECT_EQ(BigRational(eval_poly(t.entries[r], x)), gcd_porc_eval(g, x));
    }
  }
}

TEST(Render, Expressions) {
  EXPECT_EQ(to_string(single(BigRational(1), 1, 2), "q"), "gcd(q-1,2)");
  EXPECT_EQ(to_string(PorcExpression{BigRational(8), {{BigRational(-1), 1, 4}, {BigRational(1, 2), 3, 4}}}, "x"),
            "8 - gcd(x-1,4) + 1/2*gcd(x-3,4)");
  EXPECT_EQ(to_string(PorcExpression{BigRational(0), {}}, "x"), "0");
  EXPECT_EQ(to_string(GcdPorcFunction{poly({0, 1}), single(BigRational(1), 1, 2), 2}, "x"), "gcd(x-1,2)*x");
  EXPECT_EQ(to_string(p6_groups(), "p"), "(3*p^2+39*p+344) + (24*gcd(p-1,3) + 11*gcd(p-1,4) + 2*gcd(p-1,5))");
}
