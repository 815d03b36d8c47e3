#include <gtest/gtest.h>

#include "helpers.hpp"
#include "swapalg/circle.hpp"

namespace swapalg {
namespace {

using testing::A;

Rational J(int r, int x, int s, int y) { return linking_number(A(r), A(x), A(s), A(y)).value(); }
Rational S(int i, int j, int ip, int jp) { return parallel_number(A(i), A(j), A(ip), A(jp)).value(); }

TEST(Circle, Sign) {
  EXPECT_EQ(sign(Rational(-3)), -1);
  EXPECT_EQ(sign(Rational(0)), 0);
  EXPECT_EQ(sign(Rational(5, 2)), 1);
}

// Values frozen from tests/oracle/derive_values.py.
TEST(Circle, LinkingNumberExamples) {
  EXPECT_EQ(J(1, 3, 2, 4), 1);
  EXPECT_EQ(J(1, 3, 1, 3), 0);
  EXPECT_EQ(J(1, 3, 1, 2), Rational(-1, 2));
  EXPECT_EQ(J(1, 2, 3, 4), 0);
}

TEST(Circle, HalfIntegerValuesAreCanonical) {
  Rational one = J(1, 3, 2, 4);
  EXPECT_EQ(one.get_den(), 1);
  EXPECT_EQ(one.get_str(), "1");
}

TEST(Circle, ParallelNumberExamples) {
  EXPECT_EQ(S(1, 4, 2, 3), 1);
  EXPECT_EQ(S(2, 3, 1, 4), -1);
  EXPECT_EQ(S(1, 3, 1, 2), Rational(1, 2));
  EXPECT_EQ(S(1, 3, 2, 4), 0);
}

TEST(Circle, LinkingNumberPropertiesOnFivePoints) {
  for (int r = 1; r <= 5; ++r) {
    for (int x = 1; x <= 5; ++x) {
      for (int s = 1; s <= 5; ++s) {
        for (int y = 1; y <= 5; ++y) {
          EXPECT_EQ(J(r, x, s, y), -J(s, y, r, x));
          EXPECT_EQ(J(r, x, r, x), 0);
          for (int t = 1; t <= 5; ++t) EXPECT_EQ(J(r, x, s, y) + J(r, x, y, t) + J(r, x, t, s), 0);
        }
      }
    }
  }
}

TEST(Circle, LinkingNumberIgnoresTheBasepoint) {
  for (int shift = 0; shift < 5; ++shift) {
    auto sigma = [&](int k) { return static_cast<std::int64_t>((k - 1 - shift + 5) % 5); };
    for (int r = 1; r <= 5; ++r) {
      for (int x = 1; x <= 5; ++x) {
        for (int s = 1; s <= 5; ++s) {
          for (int y = 1; y <= 5; ++y) {
            EXPECT_EQ(linking_number_at(sigma(r), sigma(x), sigma(s), sigma(y)).value(), J(r, x, s, y));
          }
        }
      }
    }
  }
}

TEST(Circle, ParallelNumberIsAntisymmetric) {
  for (int i = 1; i <= 5; ++i) {
    for (int j = 1; j <= 5; ++j) {
      for (int ip = 1; ip <= 5; ++ip) {
        for (int jp = 1; jp <= 5; ++jp) {
          if (i != j && ip != jp) {
            EXPECT_EQ(S(i, j, ip, jp), -S(ip, jp, i, j));
          }
        }
      }
    }
  }
}

TEST(Circle, CyclicOrder) {
  EXPECT_TRUE(cyclically_ordered({A(1), A(3), A(4)}));
  EXPECT_TRUE(cyclically_ordered({A(3), A(4), A(1)}));
  EXPECT_FALSE(cyclically_ordered({A(3), A(1), A(4)}));
  EXPECT_FALSE(cyclically_ordered({A(1), A(1)}));
  EXPECT_TRUE(cyclically_ordered({A(2)}));
}

}  // namespace
}  // namespace swapalg
