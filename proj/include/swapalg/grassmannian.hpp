#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "swapalg/bracket.hpp"
#include "swapalg/fraction.hpp"
#include "swapalg/polynomial.hpp"
#include "swapalg/rank.hpp"

namespace swapalg {

/// A sorted n-subset I of {1..r}: the Schubert cell of Gr(n, r) where Delta_I is the
/// lexicographically first nonzero Pluecker coordinate.
class SchubertIndex {
 public:
  /// Throws InvalidInput unless 1 <= k_1 < ... < k_n <= r and n < r.
  SchubertIndex(int r, std::vector<int> subset);

  int r() const { return r_; }
  int n() const { return static_cast<int>(subset_.size()); }
  const std::vector<int>& subset() const { return subset_; }
  bool contains(int k) const;
  std::vector<int> complement() const;

  bool operator==(const SchubertIndex&) const = default;

 private:
  int r_;
  std::vector<int> subset_;
};

/// The coordinate m_ij with i in I and j outside I.
struct CoordSymbol {
  int i = 0;
  int j = 0;

  auto operator<=>(const CoordSymbol&) const = default;
  std::string name() const { return "m_" + std::to_string(i) + "_" + std::to_string(j); }
};

}  // namespace swapalg

template <>
struct std::hash<swapalg::CoordSymbol> {
  std::size_t operator()(const swapalg::CoordSymbol& c) const noexcept {
    return std::hash<std::uint64_t>{}((static_cast<std::uint64_t>(static_cast<std::uint32_t>(c.i)) << 32U) |
                                      static_cast<std::uint32_t>(c.j));
  }
};

namespace swapalg {

using FormalCoordExpr = Polynomial<CoordSymbol>;
using RationalMatrix = std::vector<std::vector<Rational>>;

/// All coordinates of the cell, ordered by (i, j).
std::vector<CoordSymbol> coordinates(const SchubertIndex& index);
/// Throws InvalidInput unless c.i is in I and c.j is not.
void check_symbol(const CoordSymbol& c, const SchubertIndex& index);

/// Exact determinant by fraction-free elimination over the rationals.
Rational det(RationalMatrix m);
/// Delta_I(M): the minor on the 1-based columns `cols` in increasing order.
Rational plucker(const RationalMatrix& m, const std::vector<int>& cols);
/// Lexicographically minimal I with Delta_I(M) != 0; throws InvalidInput for rank-deficient M.
SchubertIndex schubert_cell_index(const RationalMatrix& m);
/// m_ij(M) = Delta_{I(i->j)}(M) / Delta_I(M), where I(i->j) is the sorted set.
Rational coordinate_value(const RationalMatrix& m, const SchubertIndex& index, const CoordSymbol& c);

/// (alpha - beta) s_||(a_i a_j, a_i' a_j') m_ij' m_i'j + (alpha + beta) J(a_i a_j, a_i' a_j') m_ij m_i'j'.
FormalCoordExpr formula_bracket(const CoordSymbol& c, const CoordSymbol& cp, const BracketParams& p);

/// theta(m_ij) = E(I without a_i | a_j, a_i), with its right tuple in the gap after a_j
/// starting `offset` slots past it.
DeterminantRatio theta(const CoordSymbol& c, const SchubertIndex& index, const RankContext& ctx, int offset = 1);
/// Ring-homomorphic extension of theta to coordinate polynomials.
FractionElement theta_extend(const FormalCoordExpr& e, const SchubertIndex& index, const RankContext& ctx);

/// {theta(c), theta(c')}_{beta - alpha, alpha + beta} == theta(formula_bracket(c, c', p)) in Q_n(P).
ZeroCertificate verify_theta_pair(const CoordSymbol& c, const CoordSymbol& cp, const SchubertIndex& index,
                                  const BracketParams& p, const RankContext& ctx);

/// {E, E'}_{0,1} == J(a_i a_j, a_i' a_j') * E * E' for E = theta(c), E' = theta(c').
ZeroCertificate verify_lemma_01(const CoordSymbol& c, const CoordSymbol& cp, const SchubertIndex& index,
                                const RankContext& ctx);

/// Zero test of theta_extend(e) without expanding the sum of fractions.
ZeroCertificate theta_is_zero(const FormalCoordExpr& e, const SchubertIndex& index, const RankContext& ctx);

struct InjectivitySample {
  FormalCoordExpr expr;
  ZeroCertificate certificate;
};

/// Random nonzero coordinate polynomials of degree <= max_degree; each image should be NonZero.
std::vector<InjectivitySample> injectivity_spotcheck(const SchubertIndex& index, const RankContext& ctx, int max_degree,
                                                     int samples, std::uint64_t seed);

}  // namespace swapalg
