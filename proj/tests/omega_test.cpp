#include <random>

#include <gtest/gtest.h>

#include "acm/omega.hpp"
#include "oracles.hpp"

using namespace acm;

namespace {

/// Longest bullet over all multisets of the given atoms up to max_len,
/// checked entirely with the test oracle.
unsigned brute_longest_bullet(oracle::Acm m, u64 x, const std::vector<u64>& atoms, std::size_t max_len) {
  unsigned best = 0;
  std::vector<u64> cur;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (!cur.empty() && oracle::bullet(m, x, cur)) best = std::max<unsigned>(best, cur.size());
    if (cur.size() == max_len) return;
    for (std::size_t i = from; i < atoms.size(); ++i) {
      cur.push_back(atoms[i]);
      self(self, i);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return best;
}

TEST(OmegaClosed, RegularExamples) {
  EXPECT_EQ(omega_closed_regular(Monoid(1, 4), 693), 4u);
  EXPECT_EQ(omega_closed_regular(Monoid(1, 4), 5), 1u);
  EXPECT_EQ(omega_closed_regular(Monoid(1, 5), 1296), 8u);
  EXPECT_THROW(omega_closed_regular(Monoid(4, 12), 40), Error);
}

TEST(OmegaClosed, SingularExamples) {
  const Monoid m(4, 12);
  EXPECT_EQ(omega_closed_singular(m, 40, OmegaVariant::Ceiling), 3u);
  EXPECT_EQ(omega_closed_singular(m, 40, OmegaVariant::Floor), 2u);
  EXPECT_EQ(omega_closed_singular(m, 40), 3u);
  EXPECT_EQ(omega_closed_singular(m, 4, OmegaVariant::Floor), 2u);
  EXPECT_EQ(omega_closed_singular(m, 4, OmegaVariant::Ceiling), 2u);
  EXPECT_THROW(omega_closed_singular(Monoid(1, 4), 9), Error);
}

TEST(OmegaClosed, Subadditive) {
  const Monoid m(1, 4);
  std::mt19937_64 rng(4242);
  for (int i = 0; i < 100; ++i) {
    const u64 x = 1 + 4 * (1 + rng() % 20'000);
    const u64 y = 1 + 4 * (1 + rng() % 20'000);
    EXPECT_EQ(omega_closed_regular(m, x * y), omega_closed_regular(m, x) + omega_closed_regular(m, y));
  }
}

TEST(OmegaClosed, Unbounded) {
  for (u64 b : {4, 5, 7}) {
    const Monoid m(1, b);
    for (unsigned k = 1; k <= 8; ++k) EXPECT_GE(omega_closed_regular(m, checked_pow(1 + b, k)), k);
  }
}

TEST(IsBullet, Examples) {
  const Monoid m(4, 12);
  EXPECT_TRUE(is_bullet(m, 40, std::vector<u64>{100, 4, 4}));
  EXPECT_FALSE(is_bullet(m, 16, std::vector<u64>{4, 4, 4}));
  EXPECT_TRUE(is_bullet(Monoid(1, 4), 9, std::vector<u64>{21, 33}));
  EXPECT_THROW(is_bullet(m, 40, std::vector<u64>{16, 4}), Error);
}

TEST(IsBullet, MatchesOracle) {
  std::mt19937_64 rng(99);
  for (const auto& [a, b] : {std::pair<u64, u64>{4, 12}, {1, 4}, {4, 6}, {6, 6}}) {
    const Monoid m(a, b);
    const auto atoms = m.atoms_up_to(300);
    const auto xs = oracle::members({a, b}, 200);
    for (int i = 0; i < 2000; ++i) {
      const u64 x = xs[rng() % xs.size()];
      std::vector<u64> z;
      const std::size_t len = 1 + rng() % 4;
      for (std::size_t k = 0; k < len; ++k) z.push_back(atoms[rng() % atoms.size()]);
      ASSERT_EQ(is_bullet(m, x, z), oracle::bullet({a, b}, x, z)) << m.name() << " " << x;
    }
  }
}

TEST(OmegaOracle, Examples) {
  const Monoid m(4, 12);
  const auto r40 = omega_oracle(m, 40, 1000, 5);
  EXPECT_EQ(r40.oracle_lower_bound, 3u);
  EXPECT_EQ(r40.witness_bullet, (std::vector<u64>{4, 4, 100}));
  EXPECT_EQ(r40.floor_agrees(), false);
  EXPECT_EQ(r40.ceiling_agrees(), true);
  const auto r16 = omega_oracle(m, 16, 1000, 5);
  EXPECT_EQ(r16.oracle_lower_bound, 3u);
  EXPECT_TRUE(is_bullet(m, 16, r16.witness_bullet));
  EXPECT_TRUE(is_bullet(m, 16, std::vector<u64>{28, 52, 4}));
  const auto h5 = omega_oracle(Monoid(1, 4), 5, 1000, 4);
  EXPECT_EQ(h5.oracle_lower_bound, 1u);
  EXPECT_EQ(h5.witness_bullet, (std::vector<u64>{5}));
  EXPECT_TRUE(h5.oracle_exact);
}

TEST(OmegaOracle, NoBulletWithinBounds) {
  try {
    omega_oracle(Monoid(1, 4), 693, 20, 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::CapExceeded);
  }
}

TEST(OmegaOracle, MatchesBruteForceSearch) {
  for (const auto& [a, b] : {std::pair<u64, u64>{4, 12}, {4, 6}, {1, 4}, {1, 5}}) {
    const Monoid m(a, b);
    const auto atoms = m.atoms_up_to(250);
    for (u64 x : oracle::members({a, b}, 120)) {
      const unsigned expected = brute_longest_bullet({a, b}, x, atoms, 3);
      if (expected == 0) continue;
      const auto rep = omega_oracle(m, x, 250, 3);
      ASSERT_EQ(rep.oracle_lower_bound, expected) << m.name() << " " << x;
      ASSERT_TRUE(oracle::bullet({a, b}, x, rep.witness_bullet));
    }
  }
}

TEST(OmegaWitness, Examples) {
  const Monoid h(1, 4);
  EXPECT_EQ(omega_witness_regular(h, 9), (std::vector<u64>{21, 33}));
  EXPECT_EQ(omega_witness_regular(h, 49), (std::vector<u64>{77, 133}));
  EXPECT_EQ(omega_witness_regular(h, 5), (std::vector<u64>{5}));
  EXPECT_THROW(omega_witness_regular(Monoid(4, 12), 40), Error);
}

TEST(OmegaWitness, BulletOfClosedFormLength) {
  for (u64 b : {4, 5, 7}) {
    const Monoid m(1, b);
    for (u64 x : oracle::members({1, b}, 500)) {
      const auto w = omega_witness_regular(m, x);
      ASSERT_EQ(w.size(), oracle::omega_regular(x)) << x;
      ASSERT_TRUE(oracle::bullet({1, b}, x, w)) << x;
    }
  }
}

}  // namespace
