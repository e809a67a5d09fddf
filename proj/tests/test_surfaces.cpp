#include <gtest/gtest.h>

#include "fano/surfaces.hpp"

using namespace fano;

TEST(Surfaces, Pairings) {
  auto b = p1p1(1, 1);
  EXPECT_EQ(self_int(b), 2);
  EXPECT_EQ(k_dot(b), -4);

  auto g = f1(0, 1);
  EXPECT_EQ(self_int(g), -1);
  EXPECT_EQ(k_dot(g), -1);

  EXPECT_EQ(self_int(p2(0)), 0);
  EXPECT_EQ(k_dot(p2(0)), 0);
  EXPECT_EQ(k_dot(p2(1)), -3);
  EXPECT_EQ(pairing(f1(1, 0), f1(0, 1)), 0);
  EXPECT_EQ(canonical_class(Base::F1), f1(-3, 1));
}

TEST(Surfaces, GenusExamples) {
  EXPECT_EQ(genus(p1p1(2, 2)), 1);
  EXPECT_EQ(genus(p2(4)), 3);
  EXPECT_EQ(genus(p2(1)), 0);
  EXPECT_EQ(genus(f1(0, 1)), 0);
  EXPECT_EQ(genus(f1(1, -1)), 0);  // a fibre of the ruling
}

TEST(Surfaces, GenusClosedFormOnP2) {
  for (Int d = 1; d <= 10; ++d) EXPECT_EQ(genus(p2(d)), (d - 1) * (d - 2) / 2) << d;
}

TEST(Surfaces, GenusClosedFormOnP1xP1) {
  for (Int a = 0; a <= 10; ++a)
    for (Int b = 0; b <= 10; ++b) {
      if (a == 0 && b == 0) continue;
      EXPECT_EQ(genus(p1p1(a, b)), (a - 1) * (b - 1)) << a << "," << b;
    }
}

TEST(Surfaces, EnumerateClasses) {
  auto p = enumerate_classes(Base::P2, 6);
  ASSERT_EQ(p.size(), 2u);
  EXPECT_EQ(p[0], p2(1));
  EXPECT_EQ(p[1], p2(2));

  auto q = enumerate_classes(Base::P1xP1, 4);
  std::vector<SurfaceClass> want{p1p1(0, 1), p1p1(0, 2), p1p1(1, 0), p1p1(1, 1), p1p1(2, 0)};
  EXPECT_EQ(q, want);

  EXPECT_TRUE(enumerate_classes(Base::P2, 0).empty());
  EXPECT_TRUE(enumerate_classes(Base::F1, 0).empty());
}

// brute force over a box as an independent count
TEST(Surfaces, EnumerateMatchesBruteForce) {
  for (Int cap = 1; cap <= 14; ++cap) {
    std::size_t n = 0;
    for (Int a = 0; a <= cap; ++a)
      for (Int b = 0; b <= cap; ++b)
        if (2 * (a + b) > 0 && 2 * (a + b) <= cap) ++n;
    EXPECT_EQ(enumerate_classes(Base::P1xP1, cap).size(), n) << cap;
  }
  auto odd = enumerate_classes(Base::P1xP1, 12, [](const SurfaceClass& c) { return genus(c) == 0; });
  for (const auto& c : odd) EXPECT_TRUE(c.coords[0] <= 1 || c.coords[1] <= 1);
}

TEST(Surfaces, Describe) {
  EXPECT_EQ(describe(p2(3)), "(3)");
  EXPECT_EQ(describe(p1p1(1, 2)), "(1,2)");
  EXPECT_EQ(describe(f1(1, 0)), "tau*O(1)");
  EXPECT_EQ(describe(f1(0, 1)), "Gamma");
  EXPECT_EQ(describe(f1(2, 1)), "tau*O(2)+Gamma");
}

TEST(Surfaces, BaseMismatchThrows) {
  try {
    pairing(p2(1), p1p1(1, 0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BaseMismatch);
  }
  EXPECT_EQ(parse_base("P1xP1"), Base::P1xP1);
  EXPECT_FALSE(parse_base("P3").has_value());
}
