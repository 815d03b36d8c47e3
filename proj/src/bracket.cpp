#include "swapalg/bracket.hpp"

#include <map>
#include <utility>
#include <vector>

#include "swapalg/errors.hpp"

namespace swapalg {

PairPoly bracket_gen(const PairGen& rx, const PairGen& sy, const BracketParams& p) {
  HalfInt j = linking_number(rx, sy);
  if (j.is_zero()) return {};
  PairPoly swapped = gen(rx.left, sy.right) * gen(sy.left, rx.right);
  PairPoly kept = gen(rx.left, rx.right) * gen(sy.left, sy.right);
  return j.value() * (p.alpha * swapped + p.beta * kept);
}

namespace {

using Mono = Monomial<PairGen>;
using Pieces = std::map<PairGen, std::vector<std::pair<Mono, Rational>>>;

/// For each variable v of f, the terms of df/dv as (monomial, coefficient).
Pieces derivative_pieces(const PairPoly& f) {
  Pieces out;
  for (const auto& t : f.terms()) {
    for (const auto& [v, e] : t.monomial.factors()) out[v].emplace_back(*t.monomial.lowered(v), t.coeff * e);
  }
  return out;
}

}  // namespace

PairPoly bracket_poly(const PairPoly& f, const PairPoly& g, const BracketParams& p) {
  if (f.is_constant() || g.is_constant()) return {};
  Pieces pf = derivative_pieces(f);
  Pieces pg = derivative_pieces(g);
  PolyAccumulator<PairGen> acc;
  for (const auto& [u, df] : pf) {
    for (const auto& [v, dg] : pg) {
      PairPoly b = bracket_gen(u, v, p);
      if (b.is_zero()) continue;
      for (const auto& [mf, cf] : df) {
        for (const auto& [mg, cg] : dg) {
          Mono base = mf * mg;
          Rational c = cf * cg;
          for (const auto& t : b.terms()) acc.add(base * t.monomial, c * t.coeff);
        }
      }
    }
  }
  return acc.take();
}

FractionElement bracket_fraction(const FractionElement& f, const FractionElement& g, const BracketParams& p) {
  const PairPoly& a = f.num();
  const PairPoly& b = f.den();
  const PairPoly& c = g.num();
  const PairPoly& d = g.den();
  PairPoly num = bracket_poly(a, c, p) * (b * d) - bracket_poly(a, d, p) * (b * c) - bracket_poly(b, c, p) * (a * d) +
                 bracket_poly(b, d, p) * (a * c);
  PairPoly den = (b * d).pow(2);
  return FractionElement::unchecked(std::move(num), std::move(den));
}

FractionElement log_bracket(const FractionElement& a, const FractionElement& b, const BracketParams& p,
                            const RankContext& ctx) {
  if (is_zero(a, ctx).is_zero() || is_zero(b, ctx).is_zero()) {
    throw ZeroDenominator("log bracket of an element that is zero in the rank-" + std::to_string(ctx.n()) + " ring");
  }
  FractionElement br = bracket_fraction(a, b, p);
  // 1/(A*B) = (a.den * b.den) / (a.num * b.num), with both numerators certified nonzero above.
  return br * FractionElement::unchecked(a.den() * b.den(), a.num() * b.num());
}

namespace {

bool in_closed_arc(Point p, Point from, Point to) {
  if (from <= to) return from <= p && p <= to;
  return p >= from || p <= to;
}

std::vector<Point> replaced(std::span<const Point> tuple, std::size_t index, Point with) {
  std::vector<Point> out(tuple.begin(), tuple.end());
  out[index] = with;
  return out;
}

void require_ordered(std::span<const Point> tuple, const char* which) {
  if (!cyclically_ordered(tuple)) {
    throw PreconditionError(std::string(which) + " points must be mutually distinct and anticlockwise ordered");
  }
}

}  // namespace

PairPoly bracket_det_boundary(Point a, Point b, std::span<const Point> xs, std::span<const Point> ys, Side side) {
  if (xs.size() != ys.size() || xs.empty()) throw InvalidInput("boundary formula needs two tuples of equal positive length");
  if (a == b) throw PreconditionError("boundary formula needs a proper edge a != b");
  require_ordered(xs, "row");
  require_ordered(ys, "column");

  // The probe sits strictly on the opposite side from the summed points.
  const Point probe = side == Side::Right ? a.marker_after() : b.marker_after();
  auto counted = [&](Point q) { return side == Side::Right ? in_closed_arc(q, b, a) : in_closed_arc(q, a, b); };

  PolyAccumulator<PairGen> acc;
  for (std::size_t d = 0; d < xs.size(); ++d) {
    if (!counted(xs[d])) continue;
    HalfInt j = linking_number(a, b, xs[d], probe);
    if (j.is_zero()) continue;
    acc.add(gen(xs[d], b) * determinant(replaced(xs, d, a), ys), j.value());
  }
  for (std::size_t d = 0; d < ys.size(); ++d) {
    if (!counted(ys[d])) continue;
    HalfInt j = linking_number(a, b, probe, ys[d]);
    if (j.is_zero()) continue;
    acc.add(gen(a, ys[d]) * determinant(xs, replaced(ys, d, b)), j.value());
  }
  return acc.take();
}

namespace {

std::vector<Point> dropped(std::span<const Point> tuple, std::size_t index) {
  std::vector<Point> out;
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (i != index) out.push_back(tuple[i]);
  }
  return out;
}

template <class Visit>
void for_each_cofactor(std::span<const Point> xs, std::span<const Point> ys, Visit&& visit) {
  if (xs.size() != ys.size() || xs.empty()) throw InvalidInput("cofactor expansion needs a square determinant");
  for (std::size_t s = 0; s < xs.size(); ++s) {
    for (std::size_t t = 0; t < ys.size(); ++t) {
      if (xs[s] == ys[t]) continue;
      PairPoly minor = xs.size() == 1 ? PairPoly::constant(1) : determinant(dropped(xs, s), dropped(ys, t));
      if (minor.is_zero()) continue;
      Rational sign = (s + t) % 2 == 0 ? 1 : -1;
      visit(sign * minor, PairGen{xs[s], ys[t]});
    }
  }
}

}  // namespace

PairPoly bracket_cofactor(std::span<const Point> xs, std::span<const Point> ys, const PairPoly& b) {
  const BracketParams swapping{1, 0};
  PolyAccumulator<PairGen> acc;
  for_each_cofactor(xs, ys, [&](const PairPoly& minor, const PairGen& entry) {
    acc.add(minor * bracket_poly(PairPoly::variable(entry), b, swapping));
  });
  return acc.take();
}

FractionElement bracket_cofactor(std::span<const Point> xs, std::span<const Point> ys, const FractionElement& b) {
  // {g, N/D} = ({g, N} D - {g, D} N) / D^2.
  const BracketParams swapping{1, 0};
  PolyAccumulator<PairGen> acc;
  for_each_cofactor(xs, ys, [&](const PairPoly& minor, const PairGen& entry) {
    PairPoly g = PairPoly::variable(entry);
    acc.add(minor * (bracket_poly(g, b.num(), swapping) * b.den() - bracket_poly(g, b.den(), swapping) * b.num()));
  });
  return FractionElement::unchecked(acc.take(), b.den().pow(2));
}

Rational compute_K(Point a, Point b, std::span<const Point> xs, std::span<const Point> ys) {
  if (xs.size() != ys.size()) throw InvalidInput("compute_K needs tuples of equal length");
  Rational k = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) k += linking_number(a, b, xs[i], ys[i]).value();
  return k;
}

}  // namespace swapalg
