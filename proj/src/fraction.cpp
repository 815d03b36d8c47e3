#include "swapalg/fraction.hpp"

#include <algorithm>

#include "swapalg/errors.hpp"

namespace swapalg {

namespace {

bool is_one(const PairPoly& p) { return p.is_constant() && p.constant_value() == 1; }

bool has_repeats(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end());
  return std::adjacent_find(pts.begin(), pts.end()) != pts.end();
}

}  // namespace

FractionElement FractionElement::certified(PairPoly num, PairPoly den, const RankContext& ctx) {
  if (den.is_zero() || is_zero_rank_n(den, ctx).is_zero()) {
    throw ZeroDenominator("denominator " + den.render() + " is zero in the rank-" + std::to_string(ctx.n()) + " ring");
  }
  return FractionElement(std::move(num), std::move(den));
}

FractionElement FractionElement::unchecked(PairPoly num, PairPoly den) {
  if (den.is_zero()) throw ZeroDenominator("zero denominator");
  return FractionElement(std::move(num), std::move(den));
}

FractionElement FractionElement::inverted(const RankContext& ctx) const { return certified(den_, num_, ctx); }

FractionElement operator+(const FractionElement& a, const FractionElement& b) {
  if (a.den_ == b.den_) return FractionElement(a.num_ + b.num_, a.den_);
  return FractionElement(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

FractionElement operator-(const FractionElement& a, const FractionElement& b) { return a + (-b); }

FractionElement operator*(const FractionElement& a, const FractionElement& b) {
  return FractionElement(a.num_ * b.num_, a.den_ * b.den_);
}

std::string FractionElement::render() const {
  if (is_one(den_)) return num_.render();
  return "(" + num_.render() + ") / (" + den_.render() + ")";
}

FractionElement divide(const FractionElement& a, const FractionElement& b, const RankContext& ctx) {
  return a * b.inverted(ctx);
}

std::uint64_t evaluate_config(const FractionElement& f, const GeometricConfiguration& config) {
  std::uint64_t den = evaluate_config(f.den(), config);
  if (den == 0) throw ZeroDenominator("denominator vanishes at this configuration");
  return config.field().mul(evaluate_config(f.num(), config), config.field().inv(den));
}

ZeroCertificate frac_equal(const FractionElement& f, const FractionElement& g, const RankContext& ctx) {
  std::vector<ProductTerm> terms{{Rational(1), {&f.num(), &g.den()}}, {Rational(-1), {&g.num(), &f.den()}}};
  return is_zero_rank_n(terms, ctx);
}

ZeroCertificate is_zero(const FractionElement& f, const RankContext& ctx) { return is_zero_rank_n(f.num(), ctx); }

ZeroCertificate is_zero_fraction_sum(std::span<const FracTerm> terms, const RankContext& ctx) {
  // Over the common denominator prod_k prod_j den_kj, term k contributes
  // coeff_k * prod_j num_kj * prod_{l != k} prod_j den_lj.
  std::vector<ProductTerm> products;
  products.reserve(terms.size());
  for (std::size_t k = 0; k < terms.size(); ++k) {
    ProductTerm p{terms[k].coeff, {}};
    for (const FractionElement* f : terms[k].factors) p.factors.push_back(&f->num());
    for (std::size_t l = 0; l < terms.size(); ++l) {
      if (l == k) continue;
      for (const FractionElement* f : terms[l].factors) {
        if (!is_one(f->den())) p.factors.push_back(&f->den());
      }
    }
    products.push_back(std::move(p));
  }
  return is_zero_rank_n(products, ctx);
}

FractionElement cross_fraction(Point x, Point y, Point z, Point t) {
  if (x == t || y == z || x == z || y == t) {
    throw PreconditionError("cross fraction needs x != t, y != z, x != z and y != t");
  }
  return FractionElement::unchecked(gen(x, z) * gen(y, t), gen(x, t) * gen(y, z));
}

std::vector<Point> default_right_tuple(int n, Point after, int offset) {
  if (after.is_marker()) throw InvalidInput("right tuples cannot be placed after a side marker");
  int first = after.slot() + offset;
  if (offset < 1 || first + n - 1 > Point::kMaxSlot) {
    throw InvalidInput("no room for " + std::to_string(n) + " auxiliary points after " + after.name());
  }
  std::vector<Point> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) out.push_back(Point::aux(after.gap_index(), first + k));
  return out;
}

DeterminantRatio det_ratio(std::span<const Point> left, Point t, Point y, const RankContext& ctx,
                           std::optional<std::vector<Point>> right) {
  const auto n = static_cast<std::size_t>(ctx.n());
  if (left.size() + 1 != n) {
    throw InvalidInput("determinant ratio needs " + std::to_string(n - 1) + " left points, got " + std::to_string(left.size()));
  }
  std::vector<Point> denominator_rows(left.begin(), left.end());
  denominator_rows.push_back(y);
  if (has_repeats(denominator_rows)) throw PreconditionError("left points and y must be mutually distinct");
  std::vector<Point> cols = right ? *right : default_right_tuple(ctx.n(), t);
  if (cols.size() != n) throw InvalidInput("right tuple must have " + std::to_string(n) + " points");
  if (has_repeats(cols)) throw PreconditionError("right tuple points must be mutually distinct");
  std::vector<Point> numerator_rows(left.begin(), left.end());
  numerator_rows.push_back(t);
  PairPoly den = determinant(denominator_rows, cols);
  PairPoly num = determinant(numerator_rows, cols);
  return DeterminantRatio{std::vector<Point>(left.begin(), left.end()), t, y, std::move(cols),
                          FractionElement::certified(std::move(num), std::move(den), ctx)};
}

}  // namespace swapalg
