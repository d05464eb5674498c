#include <gtest/gtest.h>

#include "acm/conjecture.hpp"
#include "oracles.hpp"

using namespace acm;

namespace {

TEST(XMembers, PowerMonoid) {
  const auto xs = x_members(Monoid(6, 6), 100);
  std::vector<u64> elements;
  for (const auto& x : xs) elements.push_back(x.element);
  EXPECT_EQ(elements, (std::vector<u64>{6, 12, 18, 24, 36, 48, 54, 72, 96}));
  EXPECT_THROW(x_members(Monoid(4, 12), 100), Error);
}

TEST(GlobalProfileOf, Examples) {
  const auto p = global_profile(Monoid(6, 6), 10'000);
  EXPECT_EQ(p.zeta, 1u);
  EXPECT_EQ(p.mu, 6u);
  EXPECT_EQ(p.mu_prime, 12u);
  EXPECT_EQ(p.catenary_order_mu, 3u);
  EXPECT_TRUE(p.bounded_estimate);
  try {
    global_profile(Monoid(6, 6), 5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::CapExceeded);
  }
  const auto q = global_profile(Monoid(12, 12), 10'000);
  EXPECT_EQ(q.zeta, 1u);
  EXPECT_EQ(q.mu, 12u);
}

TEST(GlobalProfileOf, MuMinimizesMaxMultiplier) {
  for (const auto& [a, b] : {std::pair<u64, u64>{6, 6}, {12, 12}, {10, 10}, {30, 30}}) {
    const Monoid m(a, b);
    const auto p = global_profile(m, 20'000);
    const auto xs = x_members(m, 20'000);
    ASSERT_TRUE(m.contains(p.mu));
    ASSERT_TRUE(m.contains(p.mu_prime));
    ASSERT_NE(p.mu, p.mu_prime);
    for (const auto& x : xs) {
      ASSERT_GE(x.max_multiplier, p.zeta);
      if (x.max_multiplier == p.zeta) ASSERT_GE(x.element, p.mu);
      if (x.max_multiplier > p.zeta) {
        ASSERT_GE(x.max_multiplier, p.mu_prime_max_multiplier);
        if (x.max_multiplier == p.mu_prime_max_multiplier) ASSERT_GE(x.element, p.mu_prime);
      }
    }
  }
}

TEST(CatenaryOrder, Examples) {
  const Monoid m(6, 6);
  EXPECT_EQ(catenary_order(m, 6, 6), 3u);
  EXPECT_EQ(catenary_order(m, 12, 6), 2u);
  try {
    catenary_order(Monoid(3, 6), 3, 6);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::CapExceeded);
  }
  EXPECT_THROW(catenary_order(m, 1, 6), Error);
}

TEST(CatenaryOrder, EarlierPowersFactorUniquely) {
  for (const auto& [a, b] : {std::pair<u64, u64>{6, 6}, {12, 12}, {10, 10}}) {
    const Monoid m(a, b);
    for (u64 x : oracle::members({a, b}, 100)) {
      unsigned t = 0;
      try {
        t = catenary_order(m, x, 4);
      } catch (const Error& e) {
        ASSERT_TRUE(e.kind() == ErrorKind::CapExceeded || e.kind() == ErrorKind::Overflow);
        continue;
      }
      u64 power = 1;
      for (unsigned k = 1; k < t; ++k) {
        power *= x;
        ASSERT_EQ(oracle::factorizations({a, b}, power).size(), 1u) << x << "^" << k;
      }
      ASSERT_GT(enumerate_factorizations(m, checked_pow(x, t)).size(), 1u);
    }
  }
}

TEST(LdProbe, Examples) {
  const auto r = probe_ld_conjecture(Monoid(6, 6), 10'000);
  EXPECT_EQ(r.max_delta, 1u);
  EXPECT_EQ(r.min_ld, Rational(1, 1));
  EXPECT_EQ(r.inverse_max_delta, Rational(1, 1));
  EXPECT_EQ(r.verdict, Verdict::Consistent);
  const auto small = probe_ld_conjecture(Monoid(6, 6), 30);
  EXPECT_EQ(small.verdict, Verdict::InsufficientData);
  const auto r12 = probe_ld_conjecture(Monoid(12, 12), 10'000);
  EXPECT_EQ(r12.verdict, ld_verdict(r12.min_ld, r12.inverse_max_delta));
  EXPECT_THROW(probe_ld_conjecture(Monoid(4, 12), 100), Error);
}

TEST(CatenaryProbe, Examples) {
  const auto r = probe_catenary_conjecture(Monoid(6, 6), 10'000);
  EXPECT_EQ(r.profile.zeta, 1u);
  EXPECT_EQ(r.profile.catenary_order_mu, 3u);
  EXPECT_EQ(r.probe_element, u64{432});
  EXPECT_EQ(r.probe_catenary, std::size_t{3});
  EXPECT_EQ(r.rhs, std::size_t{3});
  EXPECT_EQ(r.surveyed_max, 3u);
  EXPECT_EQ(r.surveyed_witness, u64{216});
  EXPECT_EQ(r.verdict, Verdict::Consistent);
  ASSERT_EQ(r.hedges.size(), 3u);
  EXPECT_EQ(r.hedges[0].exponent, 1u);
  EXPECT_EQ(r.hedges[2].exponent, 3u);

  const auto small = probe_catenary_conjecture(Monoid(6, 6), 100);
  ASSERT_TRUE(small.rhs);
  EXPECT_LE(small.surveyed_max, *small.rhs);
  EXPECT_FALSE(small.within_reach);

  const auto r12 = probe_catenary_conjecture(Monoid(12, 12), 10'000);
  EXPECT_EQ(r12.verdict, catenary_verdict(r12.rhs, r12.surveyed_max, r12.within_reach));
}

TEST(Verdicts, PureComparisons) {
  EXPECT_EQ(ld_verdict(std::nullopt, Rational(1, 1)), Verdict::InsufficientData);
  EXPECT_EQ(ld_verdict(Rational(1, 2), Rational(1, 1)), Verdict::Inconsistent);
  EXPECT_EQ(catenary_verdict(std::nullopt, 3, true), Verdict::InsufficientData);
  EXPECT_EQ(catenary_verdict(std::size_t{3}, 4, false), Verdict::Inconsistent);
  EXPECT_EQ(catenary_verdict(std::size_t{3}, 2, false), Verdict::Consistent);
  EXPECT_EQ(catenary_verdict(std::size_t{3}, 2, true), Verdict::Inconsistent);
}

}  // namespace
