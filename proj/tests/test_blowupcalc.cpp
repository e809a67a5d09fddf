#include <gtest/gtest.h>

#include <random>

#include "fano/blowupcalc.hpp"

using namespace fano;

TEST(Blowup, Examples) {
  EXPECT_EQ(blowup_invariants(36, 2, 0).degX, 30);
  EXPECT_EQ(blowup_invariants(40, 1, 0).degX, 36);
  EXPECT_EQ(blowup_invariants(64, 4, 0).degX, 54);
  EXPECT_EQ(blowup_invariants(54, 6, 0).degX, 40);
  EXPECT_EQ(blowup_invariants(48, 2, 0).degX, 42);
  EXPECT_EQ(blowup_invariants(17, 0, 1), (BlowupResult{17, 0, 0, 0}));
}

TEST(Blowup, ExceptionalNumbers) {
  auto r = blowup_invariants(54, 7, 2);
  EXPECT_EQ(r.k2E, 7 - 4 + 2);
  EXPECT_EQ(r.kE2, 2);
  EXPECT_EQ(r.E3, -(7 + 4 - 2));
  EXPECT_THROW(blowup_invariants(10, 1, -1), Error);
}

// the degree drop is 2kC - 2pa + 2; compare with the factored form on a grid
TEST(Blowup, DegreeDropIdentity) {
  for (Int d = 2; d <= 64; d += 2)
    for (Int k = -2; k <= 30; ++k)
      for (Int g = 0; g <= 5; ++g) {
        auto r = blowup_invariants(d, k, g);
        ASSERT_EQ(d - r.degX, 2 * (k - g + 1));
        // cube out (s^*(-K_Y) - E)^3 using s^*A.E^2 = -A.C and s^*A.s^*B.E = 0
        ASSERT_EQ(r.degX, d + 3 * (-k) - r.E3);
      }
}

TEST(Blowup, FanoFilter) {
  EXPECT_TRUE(fano_filter(54, 4, 0));
  EXPECT_FALSE(fano_filter(10, 12, 0));
  for (Int g = 0; g <= 4; ++g) EXPECT_FALSE(fano_filter(40, 2 * g - 2, g)) << g;
  EXPECT_FALSE(fano_filter(40, 1, -1));
}

TEST(Blowup, Deficit4) {
  std::vector<std::pair<Int, Int>> want{{0, 1}, {1, 2}, {2, 3}};
  EXPECT_EQ(deficit4_cases(), want);
  // brute force: drop of exactly four within a generous box
  std::vector<std::pair<Int, Int>> got;
  for (Int g = 0; g <= 10; ++g)
    for (Int k = 0; k <= 40; ++k)
      if (blowup_invariants(100, k, g).degX == 96 && k > 2 * g - 2) got.emplace_back(g, k);
  EXPECT_EQ(got, want);
}

TEST(Blowup, CenterDivisorBound) {
  EXPECT_TRUE(center_divisor_bound(8, 9));
  EXPECT_FALSE(center_divisor_bound(9, 9));
  EXPECT_TRUE(center_divisor_bound(0, 1));
}

TEST(Blowup, MuSum) {
  EXPECT_FALSE(mu_sum_filter(1, 1, 2));
  EXPECT_TRUE(mu_sum_filter(1, 2, 2));
  EXPECT_FALSE(mu_sum_filter(0, 0, 0));
}
