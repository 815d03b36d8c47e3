#include <gtest/gtest.h>

#include <random>

#include "helpers.hpp"
#include "swapalg/errors.hpp"
#include "swapalg/grassmannian.hpp"

namespace swapalg {
namespace {

using testing::A;

FormalCoordExpr m(int i, int j) { return FormalCoordExpr::variable(CoordSymbol{i, j}); }

TEST(Schubert, IndexValidation) {
  EXPECT_THROW(SchubertIndex(4, {2, 1}), InvalidInput);
  EXPECT_THROW(SchubertIndex(4, {1, 5}), InvalidInput);
  EXPECT_THROW(SchubertIndex(2, {1, 2}), InvalidInput);
  SchubertIndex index(5, {1, 3});
  EXPECT_EQ(index.complement(), (std::vector<int>{2, 4, 5}));
  EXPECT_EQ(coordinates(index).size(), 6U);
  EXPECT_THROW(check_symbol(CoordSymbol{2, 4}, index), InvalidInput);
}

TEST(Plucker, Examples) {
  RationalMatrix m{{1, 0, 2, 3}, {0, 1, 4, 5}};
  EXPECT_EQ(plucker(m, {1, 2}), 1);
  EXPECT_EQ(plucker(m, {2, 3}), -2);
  EXPECT_EQ(schubert_cell_index(m).subset(), (std::vector<int>{1, 2}));
  RationalMatrix shifted{{0, 1, 0, 2}, {0, 0, 1, 3}};
  EXPECT_EQ(schubert_cell_index(shifted).subset(), (std::vector<int>{2, 3}));
  EXPECT_THROW(schubert_cell_index(RationalMatrix{{1, 2}, {2, 4}}), InvalidInput);
  EXPECT_EQ(coordinate_value(m, SchubertIndex(4, {1, 2}), CoordSymbol{1, 3}), plucker(m, {2, 3}));
}

// Values frozen from tests/oracle/derive_values.py.
TEST(FormulaBracket, Examples) {
  BracketParams p{2, 5};
  EXPECT_EQ(formula_bracket({1, 3}, {2, 4}, p), Rational(7) * m(1, 3) * m(2, 4));
  EXPECT_EQ(formula_bracket({1, 3}, {1, 4}, p), Rational(5) * m(1, 3) * m(1, 4));
  EXPECT_EQ(formula_bracket({1, 3}, {2, 3}, p), Rational(2) * m(1, 3) * m(2, 3));
  EXPECT_TRUE(formula_bracket({1, 3}, {1, 3}, p).is_zero());
  EXPECT_EQ(formula_bracket({1, 4}, {2, 3}, p), -formula_bracket({2, 3}, {1, 4}, p));
}

TEST(Theta, MainTheoremSmallestCell) {
  SchubertIndex index(4, {1, 2});
  RankContext ctx(2, PointSet(4));
  auto cs = coordinates(index);
  for (std::size_t a = 0; a < cs.size(); ++a) {
    EXPECT_TRUE(verify_theta_pair(cs[a], cs[a], index, {1, 0}, ctx).is_zero());
    for (std::size_t b = a + 1; b < cs.size(); ++b) {
      EXPECT_TRUE(verify_theta_pair(cs[a], cs[b], index, {1, 0}, ctx).is_zero()) << cs[a].name() << cs[b].name();
    }
  }
}

TEST(Theta, LogCanonicalPair) {
  SchubertIndex index(5, {1, 2});
  RankContext ctx(2, PointSet(5));
  EXPECT_TRUE(verify_lemma_01({1, 3}, {2, 4}, index, ctx).is_zero());
  EXPECT_TRUE(verify_lemma_01({1, 3}, {1, 3}, index, ctx).is_zero());
}

TEST(Theta, DetectsAWrongTargetBracket) {
  // The theta images do not satisfy the formula with alpha and beta exchanged on one side.
  SchubertIndex index(4, {1, 2});
  RankContext ctx(2, PointSet(4));
  FractionElement e = theta({1, 3}, index, ctx).realized;
  FractionElement f = theta({1, 4}, index, ctx, 1 + ctx.n()).realized;
  FractionElement lhs = bracket_fraction(e, f, {-1, 1});  // (beta - alpha, alpha + beta) at (1, 0)
  FractionElement wrong = theta_extend(formula_bracket({1, 3}, {1, 4}, {0, 1}), index, ctx);
  FractionElement right = theta_extend(formula_bracket({1, 3}, {1, 4}, {1, 0}), index, ctx);
  EXPECT_TRUE(frac_equal(lhs, right, ctx).is_zero());
  EXPECT_EQ(frac_equal(lhs, wrong, ctx).verdict, Verdict::NonZero);
}

TEST(Theta, Injectivity) {
  SchubertIndex index(4, {1, 2});
  RankContext ctx(2, PointSet(4));
  EXPECT_EQ(theta_is_zero(m(1, 3), index, ctx).verdict, Verdict::NonZero);
  EXPECT_EQ(theta_is_zero(m(1, 3) * m(2, 4) - m(1, 4) * m(2, 3), index, ctx).verdict, Verdict::NonZero);
  EXPECT_TRUE(theta_is_zero(m(1, 3) * m(2, 4) - m(2, 4) * m(1, 3), index, ctx).is_zero());
  for (const auto& sample : injectivity_spotcheck(index, ctx, 2, 10, 3)) {
    EXPECT_FALSE(sample.expr.is_constant());
    EXPECT_EQ(sample.certificate.verdict, Verdict::NonZero) << sample.expr.render();
  }
}

// theta(m_ij) at the configuration with vectors = columns of M equals the in-place replacement
// ratio det(M_I with column i replaced by j) / det(M_I) = (-1)^{#I strictly between i and j} m_ij(M).
TEST(Theta, HomomorphismOnConcreteMatrices) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> entry(-6, 6);
  for (const auto& subset : {std::vector<int>{1, 2}, std::vector<int>{1, 3}, std::vector<int>{2, 4}}) {
    SchubertIndex index(5, subset);
    RankContext ctx(2, PointSet(5));
    for (int trial = 0; trial < 5; ++trial) {
      RationalMatrix mat(2, std::vector<Rational>(5));
      for (auto& row : mat) {
        for (auto& x : row) x = entry(rng);
      }
      if (plucker(mat, subset) == 0) continue;
      for (const auto& c : coordinates(index)) {
        DeterminantRatio e = theta(c, index, ctx);
        ExactConfiguration config;
        for (int k = 1; k <= 5; ++k) config.frames[A(k)] = {{mat[0][k - 1], mat[1][k - 1]}, {0, 0}};
        for (std::size_t s = 0; s < e.right.size(); ++s) {
          config.frames[e.right[s]] = {{0, 0}, {entry(rng) + Rational(s == 0 ? 11 : 0), entry(rng) + Rational(s == 1 ? 13 : 0)}};
        }
        Rational den = evaluate_exact(e.realized.den(), config);
        if (den == 0) continue;
        int between = 0;
        for (int k : subset) between += (k > std::min(c.i, c.j) && k < std::max(c.i, c.j)) ? 1 : 0;
        Rational sign = between % 2 == 0 ? 1 : -1;
        EXPECT_EQ(evaluate_exact(e.realized.num(), config) / den, sign * coordinate_value(mat, index, c))
            << c.name();
      }
    }
  }
}

}  // namespace
}  // namespace swapalg
