#include "swapalg/grassmannian.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "swapalg/circle.hpp"
#include "swapalg/errors.hpp"

namespace swapalg {

SchubertIndex::SchubertIndex(int r, std::vector<int> subset) : r_(r), subset_(std::move(subset)) {
  if (subset_.empty()) throw InvalidInput("Schubert index needs a nonempty subset");
  if (static_cast<int>(subset_.size()) >= r) throw InvalidInput("Schubert index subset must be smaller than r");
  for (std::size_t k = 0; k < subset_.size(); ++k) {
    if (subset_[k] < 1 || subset_[k] > r) throw InvalidInput("subset element " + std::to_string(subset_[k]) + " outside 1.." + std::to_string(r));
    if (k > 0 && subset_[k] <= subset_[k - 1]) throw InvalidInput("subset must be strictly increasing");
  }
}

bool SchubertIndex::contains(int k) const { return std::binary_search(subset_.begin(), subset_.end(), k); }

std::vector<int> SchubertIndex::complement() const {
  std::vector<int> out;
  for (int k = 1; k <= r_; ++k) {
    if (!contains(k)) out.push_back(k);
  }
  return out;
}

std::vector<CoordSymbol> coordinates(const SchubertIndex& index) {
  std::vector<CoordSymbol> out;
  for (int i : index.subset()) {
    for (int j : index.complement()) out.push_back({i, j});
  }
  return out;
}

void check_symbol(const CoordSymbol& c, const SchubertIndex& index) {
  if (!index.contains(c.i) || index.contains(c.j) || c.j < 1 || c.j > index.r()) {
    throw InvalidInput("coordinate " + c.name() + " does not belong to this Schubert cell");
  }
}

Rational det(RationalMatrix m) {
  const std::size_t n = m.size();
  for (const auto& row : m) {
    if (row.size() != n) throw InvalidInput("determinant of a non-square matrix");
  }
  Rational result = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      result = -result;
    }
    result *= m[col][col];
    for (std::size_t row = col + 1; row < n; ++row) {
      if (m[row][col] == 0) continue;
      Rational factor = m[row][col] / m[col][col];
      for (std::size_t k = col; k < n; ++k) m[row][k] -= factor * m[col][k];
    }
  }
  return result;
}

Rational plucker(const RationalMatrix& m, const std::vector<int>& cols) {
  if (m.empty() || cols.size() != m.size()) throw InvalidInput("Pluecker coordinate needs one column per row");
  const auto width = static_cast<int>(m.front().size());
  for (const auto& row : m) {
    if (static_cast<int>(row.size()) != width) throw InvalidInput("matrix rows have different lengths");
  }
  RationalMatrix sub(m.size(), std::vector<Rational>(cols.size()));
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c] < 1 || cols[c] > width) throw InvalidInput("column " + std::to_string(cols[c]) + " out of range");
    if (c > 0 && cols[c] <= cols[c - 1]) throw InvalidInput("Pluecker columns must be strictly increasing");
    for (std::size_t row = 0; row < m.size(); ++row) sub[row][c] = m[row][static_cast<std::size_t>(cols[c] - 1)];
  }
  return det(std::move(sub));
}

SchubertIndex schubert_cell_index(const RationalMatrix& m) {
  if (m.empty()) throw InvalidInput("empty matrix");
  const int n = static_cast<int>(m.size());
  const int r = static_cast<int>(m.front().size());
  if (n >= r) throw InvalidInput("matrix must have more columns than rows");
  std::vector<int> cols(static_cast<std::size_t>(n));
  // Lexicographic enumeration of n-subsets of {1..r}.
  for (int k = 0; k < n; ++k) cols[static_cast<std::size_t>(k)] = k + 1;
  while (true) {
    if (plucker(m, cols) != 0) return SchubertIndex(r, cols);
    int k = n - 1;
    while (k >= 0 && cols[static_cast<std::size_t>(k)] == r - n + k + 1) --k;
    if (k < 0) break;
    ++cols[static_cast<std::size_t>(k)];
    for (int l = k + 1; l < n; ++l) cols[static_cast<std::size_t>(l)] = cols[static_cast<std::size_t>(l - 1)] + 1;
  }
  throw InvalidInput("matrix does not have full row rank");
}

Rational coordinate_value(const RationalMatrix& m, const SchubertIndex& index, const CoordSymbol& c) {
  check_symbol(c, index);
  Rational base = plucker(m, index.subset());
  if (base == 0) throw ZeroDenominator("Delta_I vanishes; the matrix is not in this cell");
  std::vector<int> moved = index.subset();
  std::replace(moved.begin(), moved.end(), c.i, c.j);
  std::sort(moved.begin(), moved.end());
  return plucker(m, moved) / base;
}

FormalCoordExpr formula_bracket(const CoordSymbol& c, const CoordSymbol& cp, const BracketParams& p) {
  const Point ai = Point::main(c.i);
  const Point aj = Point::main(c.j);
  const Point aip = Point::main(cp.i);
  const Point ajp = Point::main(cp.j);
  const Rational s = parallel_number(ai, aj, aip, ajp).value();
  const Rational j = linking_number(ai, aj, aip, ajp).value();
  using Mono = Monomial<CoordSymbol>;
  std::vector<FormalCoordExpr::Term> terms;
  Rational parallel = (p.alpha - p.beta) * s;
  if (parallel != 0) {
    terms.push_back({Mono::from_factors({{CoordSymbol{c.i, cp.j}, 1}, {CoordSymbol{cp.i, c.j}, 1}}), parallel});
  }
  Rational linking = (p.alpha + p.beta) * j;
  if (linking != 0) terms.push_back({Mono::from_factors({{c, 1}, {cp, 1}}), linking});
  return FormalCoordExpr::from_terms(std::move(terms));
}

DeterminantRatio theta(const CoordSymbol& c, const SchubertIndex& index, const RankContext& ctx, int offset) {
  check_symbol(c, index);
  if (index.n() != ctx.n()) throw InvalidInput("Schubert index size must equal the rank");
  std::vector<Point> left;
  for (int k : index.subset()) {
    if (k != c.i) left.push_back(Point::main(k));
  }
  const Point aj = Point::main(c.j);
  return det_ratio(left, aj, Point::main(c.i), ctx, default_right_tuple(ctx.n(), aj, offset));
}

namespace {

/// theta images of every symbol in the given expressions, realized once each.
class ThetaTable {
 public:
  ThetaTable(const SchubertIndex& index, const RankContext& ctx) : index_(index), ctx_(ctx) {}

  const FractionElement& get(const CoordSymbol& c) {
    auto it = images_.find(c);
    if (it == images_.end()) it = images_.emplace(c, theta(c, index_, ctx_).realized).first;
    return it->second;
  }

  /// The terms of e as FracTerms over the cached images.
  std::vector<FracTerm> terms(const FormalCoordExpr& e, const Rational& scale) {
    std::vector<FracTerm> out;
    for (const auto& t : e.terms()) {
      FracTerm term{scale * t.coeff, {}};
      for (const auto& [sym, exp] : t.monomial.factors()) {
        for (std::uint32_t k = 0; k < exp; ++k) term.factors.push_back(&get(sym));
      }
      out.push_back(std::move(term));
    }
    return out;
  }

 private:
  const SchubertIndex& index_;
  const RankContext& ctx_;
  std::map<CoordSymbol, FractionElement> images_;
};

}  // namespace

FractionElement theta_extend(const FormalCoordExpr& e, const SchubertIndex& index, const RankContext& ctx) {
  ThetaTable table(index, ctx);
  FractionElement total = FractionElement::constant(0);
  for (const auto& t : e.terms()) {
    FractionElement term = FractionElement::constant(t.coeff);
    for (const auto& [sym, exp] : t.monomial.factors()) {
      for (std::uint32_t k = 0; k < exp; ++k) term = term * table.get(sym);
    }
    total = total + term;
  }
  return total;
}

ZeroCertificate theta_is_zero(const FormalCoordExpr& e, const SchubertIndex& index, const RankContext& ctx) {
  ThetaTable table(index, ctx);
  std::vector<FracTerm> terms = table.terms(e, 1);
  return is_zero_fraction_sum(terms, ctx);
}

ZeroCertificate verify_theta_pair(const CoordSymbol& c, const CoordSymbol& cp, const SchubertIndex& index,
                                  const BracketParams& p, const RankContext& ctx) {
  check_symbol(c, index);
  check_symbol(cp, index);
  // The second image gets its own right tuple, past the first one's slots.
  FractionElement first = theta(c, index, ctx).realized;
  FractionElement second = theta(cp, index, ctx, ctx.n() + 1).realized;
  FractionElement lhs = bracket_fraction(first, second, BracketParams{p.beta - p.alpha, p.alpha + p.beta});

  ThetaTable table(index, ctx);
  std::vector<FracTerm> terms{{Rational(1), {&lhs}}};
  for (auto& t : table.terms(formula_bracket(c, cp, p), -1)) terms.push_back(std::move(t));
  return is_zero_fraction_sum(terms, ctx);
}

ZeroCertificate verify_lemma_01(const CoordSymbol& c, const CoordSymbol& cp, const SchubertIndex& index,
                                const RankContext& ctx) {
  check_symbol(c, index);
  check_symbol(cp, index);
  FractionElement first = theta(c, index, ctx).realized;
  FractionElement second = theta(cp, index, ctx, ctx.n() + 1).realized;
  FractionElement lhs = bracket_fraction(first, second, BracketParams{0, 1});
  Rational j = linking_number(Point::main(c.i), Point::main(c.j), Point::main(cp.i), Point::main(cp.j)).value();
  std::vector<FracTerm> terms{{Rational(1), {&lhs}}, {-j, {&first, &second}}};
  return is_zero_fraction_sum(terms, ctx);
}

std::vector<InjectivitySample> injectivity_spotcheck(const SchubertIndex& index, const RankContext& ctx, int max_degree,
                                                     int samples, std::uint64_t seed) {
  if (max_degree < 1 || samples < 0) throw InvalidInput("injectivity check needs max_degree >= 1 and samples >= 0");
  const std::vector<CoordSymbol> symbols = coordinates(index);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> term_count(1, 4);
  std::uniform_int_distribution<int> degree(0, max_degree);
  std::uniform_int_distribution<std::size_t> pick(0, symbols.size() - 1);
  std::uniform_int_distribution<int> coeff(-5, 5);

  std::vector<InjectivitySample> out;
  while (static_cast<int>(out.size()) < samples) {
    std::vector<FormalCoordExpr::Term> terms;
    int count = term_count(rng);
    for (int k = 0; k < count; ++k) {
      std::vector<Monomial<CoordSymbol>::Factor> factors;
      int d = degree(rng);
      for (int e = 0; e < d; ++e) factors.emplace_back(symbols[pick(rng)], 1);
      int c = coeff(rng);
      if (c != 0) terms.push_back({Monomial<CoordSymbol>::from_factors(std::move(factors)), Rational(c)});
    }
    FormalCoordExpr e = FormalCoordExpr::from_terms(std::move(terms));
    if (e.is_constant()) continue;
    ZeroCertificate cert = theta_is_zero(e, index, ctx.with_seed(mix_seed(seed, out.size())));
    out.push_back({std::move(e), std::move(cert)});
  }
  return out;
}

}  // namespace swapalg
