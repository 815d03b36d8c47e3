#pragma once

#include <span>

#include "swapalg/circle.hpp"
#include "swapalg/fraction.hpp"
#include "swapalg/rank.hpp"

namespace swapalg {

struct BracketParams {
  Rational alpha = 1;
  Rational beta = 0;
};

/// {rx, sy} = J(rx, sy) * (alpha * ry * sx + beta * rx * sy).
PairPoly bracket_gen(const PairGen& rx, const PairGen& sy, const BracketParams& p);

/// Bilinear Leibniz extension of bracket_gen.
PairPoly bracket_poly(const PairPoly& f, const PairPoly& g, const BracketParams& p);

/// {a/b, c/d} = ({a,c}bd - {a,d}bc - {b,c}ad + {b,d}ac) / (b^2 d^2), unreduced.
FractionElement bracket_fraction(const FractionElement& f, const FractionElement& g, const BracketParams& p);

/// [A, B] = {A, B} / (A * B); throws ZeroDenominator if A or B is zero in Z_n(P).
FractionElement log_bracket(const FractionElement& a, const FractionElement& b, const BracketParams& p,
                            const RankContext& ctx);

enum class Side { Right, Left };

/// The boundary expansion of {ab, Delta(xs, ys)}_{1,0}. A point is on the right of the oriented
/// edge ab when it lies in the closed arc from b anticlockwise to a; the Left sum runs over the
/// closed left arc from a to b. The auxiliary points are side markers next to b (right) and a (left).
/// Requires a != b and each tuple mutually distinct and anticlockwise ordered.
PairPoly bracket_det_boundary(Point a, Point b, std::span<const Point> xs, std::span<const Point> ys, Side side);

/// sum_{s,t} (-1)^(s+t) * det(M_st) * {x_s y_t, B}_{1,0}, where M = (x_i y_j) and M_st drops row s, column t.
PairPoly bracket_cofactor(std::span<const Point> xs, std::span<const Point> ys, const PairPoly& b);
FractionElement bracket_cofactor(std::span<const Point> xs, std::span<const Point> ys, const FractionElement& b);

/// K = sum_i J(ab, x_i y_i).
Rational compute_K(Point a, Point b, std::span<const Point> xs, std::span<const Point> ys);

}  // namespace swapalg
