#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "swapalg/rank.hpp"

namespace swapalg {

/// An element num/den of the fraction field Q_n(P). The denominator is nonzero in Z_n(P);
/// no cancellation is ever performed, so equality goes through frac_equal.
class FractionElement {
 public:
  FractionElement() : den_(PairPoly::constant(1)) {}

  static FractionElement from_poly(PairPoly p) { return FractionElement(std::move(p), PairPoly::constant(1)); }
  static FractionElement constant(const Rational& c) { return from_poly(PairPoly::constant(c)); }
  /// Certifies den as NonZero under ctx; throws ZeroDenominator otherwise.
  static FractionElement certified(PairPoly num, PairPoly den, const RankContext& ctx);
  /// The caller guarantees den is nonzero in Z_n(P), e.g. a product of certified denominators.
  static FractionElement unchecked(PairPoly num, PairPoly den);

  const PairPoly& num() const { return num_; }
  const PairPoly& den() const { return den_; }

  /// 1/F; certifies the numerator as NonZero, throws ZeroDenominator otherwise.
  FractionElement inverted(const RankContext& ctx) const;

  FractionElement operator-() const { return FractionElement(-num_, den_); }
  friend FractionElement operator+(const FractionElement& a, const FractionElement& b);
  friend FractionElement operator-(const FractionElement& a, const FractionElement& b);
  friend FractionElement operator*(const FractionElement& a, const FractionElement& b);
  friend FractionElement operator*(const Rational& c, const FractionElement& a) {
    return FractionElement(c * a.num_, a.den_);
  }

  /// "num" when the denominator is 1, otherwise "(num) / (den)".
  std::string render() const;

  /// Structural equality of the stored pair (not equality in Q_n(P)).
  friend bool operator==(const FractionElement& a, const FractionElement& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  FractionElement(PairPoly num, PairPoly den) : num_(std::move(num)), den_(std::move(den)) {}

  PairPoly num_;
  PairPoly den_;
};

FractionElement divide(const FractionElement& a, const FractionElement& b, const RankContext& ctx);

/// Value num/den at a configuration; throws ZeroDenominator if den vanishes there.
std::uint64_t evaluate_config(const FractionElement& f, const GeometricConfiguration& config);

/// Certificate for F == G in Q_n(P), via F.num * G.den - G.num * F.den.
ZeroCertificate frac_equal(const FractionElement& f, const FractionElement& g, const RankContext& ctx);
ZeroCertificate is_zero(const FractionElement& f, const RankContext& ctx);

/// One summand coeff * prod(factors) of a sum of fractions.
struct FracTerm {
  Rational coeff;
  std::vector<const FractionElement*> factors;
};

/// Certificate for sum_k coeff_k * prod factors_k == 0 in Q_n(P). The sum is brought to a
/// common denominator lazily; nothing is expanded unless the reduction layer can afford it.
ZeroCertificate is_zero_fraction_sum(std::span<const FracTerm> terms, const RankContext& ctx);

/// (xz * yt) / (xt * yz); requires x != t, y != z, x != z, y != t.
FractionElement cross_fraction(Point x, Point y, Point z, Point t);

/// n fresh auxiliary points immediately after `after` in its gap, starting `offset` slots
/// past it. Throws InvalidInput if the gap has no room.
std::vector<Point> default_right_tuple(int n, Point after, int offset = 1);

/// E(left | t, y) = Delta((left, t), right) / Delta((left, y), right).
struct DeterminantRatio {
  std::vector<Point> left;
  Point t;
  Point y;
  std::vector<Point> right;
  FractionElement realized;
};

/// Realizes E(left | t, y). Without an explicit right tuple, uses default_right_tuple(n, t).
/// Throws PreconditionError for repeated points in left + (y) or in the right tuple and
/// ZeroDenominator when the realization's denominator is zero in Z_n(P).
DeterminantRatio det_ratio(std::span<const Point> left, Point t, Point y, const RankContext& ctx,
                           std::optional<std::vector<Point>> right = std::nullopt);

}  // namespace swapalg
