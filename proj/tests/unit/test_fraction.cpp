#include <gtest/gtest.h>

#include "helpers.hpp"
#include "swapalg/bracket.hpp"
#include "swapalg/errors.hpp"
#include "swapalg/fraction.hpp"

namespace swapalg {
namespace {

using testing::A;
using testing::G;
using testing::pts;

TEST(Fraction, Arithmetic) {
  RankContext ctx(2, PointSet(4));
  FractionElement f = FractionElement::certified(G(1, 2) + G(3, 4), G(1, 3), ctx);
  EXPECT_TRUE(frac_equal(f + FractionElement(), f, ctx).is_zero());
  EXPECT_TRUE(frac_equal(f * f.inverted(ctx), FractionElement::constant(1), ctx).is_zero());
  FractionElement g = FractionElement::certified(G(2, 4), G(4, 1), ctx);
  FractionElement product = f * g;
  EXPECT_EQ(product.num(), (G(1, 2) + G(3, 4)) * G(2, 4));
  EXPECT_EQ(product.den(), G(1, 3) * G(4, 1));
  EXPECT_TRUE(is_zero(f - f, ctx).is_zero());
  EXPECT_THROW(FractionElement::certified(G(1, 2), PairPoly(), ctx), ZeroDenominator);
  EXPECT_THROW(FractionElement().inverted(ctx), ZeroDenominator);
}

TEST(Fraction, Render) {
  RankContext ctx(2, PointSet(4));
  EXPECT_EQ(FractionElement::from_poly(G(1, 2)).render(), "1 * a1.a2");
  EXPECT_EQ(FractionElement::certified(G(1, 2), G(3, 4), ctx).render(), "(1 * a1.a2) / (1 * a3.a4)");
}

TEST(Fraction, Equality) {
  RankContext ctx(2, PointSet(4));
  FractionElement f = FractionElement::certified(G(1, 2), G(1, 3), ctx);
  FractionElement g = FractionElement::certified(G(1, 3), G(1, 2), ctx);
  EXPECT_TRUE(frac_equal(f, f, ctx).is_zero());
  EXPECT_EQ(frac_equal(f, g, ctx).verdict, Verdict::NonZero);
  // Equal in Q(P) with different representatives.
  FractionElement scaled = FractionElement::certified(G(1, 2) * G(2, 4), G(1, 3) * G(2, 4), ctx);
  EXPECT_TRUE(frac_equal(f, scaled, ctx).is_zero());
}

TEST(Fraction, CrossFraction) {
  RankContext ctx(2, PointSet(4));
  FractionElement cf = cross_fraction(A(1), A(2), A(3), A(4));
  EXPECT_EQ(cf.num(), G(1, 3) * G(2, 4));
  EXPECT_EQ(cf.den(), G(1, 4) * G(2, 3));
  FractionElement swapped = cross_fraction(A(1), A(2), A(4), A(3));
  EXPECT_TRUE(frac_equal(cf * swapped, FractionElement::constant(1), ctx).is_zero());
  EXPECT_THROW(cross_fraction(A(1), A(2), A(3), A(1)), PreconditionError);
  for (int i = 1; i <= 4; ++i) {
    for (int j = 1; j <= 4; ++j) {
      if (i != j) {
            EXPECT_TRUE(bracket_fraction(FractionElement::from_poly(G(i, j)), cf, {0, 1}).num().is_zero());
          }
    }
  }
}

TEST(Fraction, DefaultRightTuple) {
  auto right = default_right_tuple(3, A(2));
  EXPECT_EQ(right, (std::vector<Point>{Point::aux(2, 1), Point::aux(2, 2), Point::aux(2, 3)}));
  EXPECT_EQ(default_right_tuple(2, A(2), 4).front(), Point::aux(2, 4));
  EXPECT_THROW(default_right_tuple(2, A(2), Point::kMaxSlot), InvalidInput);
}

TEST(DeterminantRatioTest, Identities) {
  RankContext ctx(3, PointSet(6));
  auto left = pts({1, 4});
  DeterminantRatio same = det_ratio(left, A(2), A(2), ctx);
  EXPECT_TRUE(frac_equal(same.realized, FractionElement::constant(1), ctx).is_zero());
  DeterminantRatio e = det_ratio(left, A(3), A(5), ctx);
  DeterminantRatio back = det_ratio(left, A(5), A(3), ctx, e.right);
  EXPECT_TRUE(frac_equal(e.realized * back.realized, FractionElement::constant(1), ctx).is_zero());
}

TEST(DeterminantRatioTest, RealizationsAgree) {
  RankContext ctx(2, PointSet(5));
  std::vector<Point> left{A(1)};
  DeterminantRatio by_default = det_ratio(left, A(3), A(4), ctx);
  DeterminantRatio by_points = det_ratio(left, A(3), A(4), ctx, pts({5, 2}));
  EXPECT_NE(by_default.right, by_points.right);
  EXPECT_TRUE(frac_equal(by_default.realized, by_points.realized, ctx).is_zero());
}

TEST(DeterminantRatioTest, Errors) {
  RankContext ctx(2, PointSet(5));
  std::vector<Point> left{A(1)};
  EXPECT_THROW(det_ratio(left, A(3), A(1), ctx), PreconditionError);
  EXPECT_THROW(det_ratio(pts({1, 2}), A(3), A(4), ctx), InvalidInput);
  EXPECT_THROW(det_ratio(left, A(3), A(4), ctx, pts({2, 2})), PreconditionError);
}

}  // namespace
}  // namespace swapalg
