#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "swapalg/point.hpp"
#include "swapalg/polynomial.hpp"
#include "swapalg/scalar.hpp"

namespace swapalg {

/// Elements of Z(P): polynomials in the pair generators.
using PairPoly = Polynomial<PairGen>;

/// The generator pq; zero when p == q (the quotient by {xx}).
PairPoly gen(Point p, Point q);
/// As gen(p, q), but both points must belong to `points`.
PairPoly gen(const PointSet& points, Point p, Point q);

/// Delta((x_1..x_d),(y_1..y_d)) = det(x_i y_j) by Leibniz expansion.
PairPoly determinant(std::span<const Point> xs, std::span<const Point> ys);

/// Points that occur in some generator of f.
std::vector<Point> support_points(const PairPoly& f);

struct OracleParams {
  std::uint64_t prime = PrimeField::kDefaultPrime;
  int trials = 20;
  std::uint64_t seed = 1;
};

/// Limits past which the exact reduction layer is skipped and the oracle alone decides.
struct ReductionBudget {
  std::size_t max_input_terms = 20000;
  std::size_t max_generators = 20000;
  std::size_t max_steps = 200000;
};

class MinorCache;

/// Everything needed to decide equality in Z_n(P).
class RankContext {
 public:
  RankContext(int n, PointSet points, OracleParams oracle = {}, ReductionBudget budget = {});

  int n() const { return n_; }
  const PointSet& points() const { return points_; }
  const OracleParams& oracle() const { return oracle_; }
  const ReductionBudget& budget() const { return budget_; }
  const PrimeField& field() const { return field_; }

  /// Same rank, oracle and budget over a larger point set.
  RankContext with_points(PointSet points) const;
  RankContext with_seed(std::uint64_t seed) const;

  MinorCache& cache() const { return *cache_; }

 private:
  int n_;
  PointSet points_;
  OracleParams oracle_;
  ReductionBudget budget_;
  PrimeField field_;
  std::shared_ptr<MinorCache> cache_;
};

/// All (n+1)-minors with strictly increasing row and column tuples over `points`, skipping
/// those that vanish identically. Deterministic order: rows then columns, lexicographic.
std::vector<PairPoly> minor_generators(int n, std::span<const Point> points);
std::vector<PairPoly> minor_generators(const RankContext& ctx);

struct Reduction {
  PairPoly remainder;
  /// (index into the generator list, quotient); f - remainder == sum of quotient * generator.
  std::vector<std::pair<std::size_t, PairPoly>> quotients;
  std::vector<PairPoly> generators;
  std::size_t steps = 0;
  /// False when a budget limit cut the division short; the remainder is then f's tail.
  bool complete = true;
};

/// Multivariate division of f by the (n+1)-minors over ctx.points together with the points of f.
Reduction reduce_with_trace(const PairPoly& f, const RankContext& ctx);
PairPoly reduce(const PairPoly& f, const RankContext& ctx);

/// A point of the geometric model over F_p: a vector and a covector for each point with
/// zero self-pairing. The generator xy evaluates to covector(y) applied to vector(x).
class GeometricConfiguration {
 public:
  struct Frame {
    std::vector<std::uint64_t> vector;
    std::vector<std::uint64_t> covector;
  };

  GeometricConfiguration(int n, PrimeField field) : n_(n), field_(field) {}

  int n() const { return n_; }
  const PrimeField& field() const { return field_; }
  const std::map<Point, Frame>& frames() const { return frames_; }
  bool contains(Point p) const { return frames_.count(p) != 0; }
  void set(Point p, Frame frame);

  std::uint64_t pairing(Point left, Point right) const;

 private:
  int n_;
  PrimeField field_;
  std::map<Point, Frame> frames_;
};

/// splitmix64-style mixing of two words; the building block of all seeded sampling.
std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b);

/// Samples the frame of every point of ctx.points; deterministic given the seed. A point's
/// frame depends only on (seed, point), so configurations over different sets agree.
GeometricConfiguration random_config(const RankContext& ctx, std::uint64_t seed);
GeometricConfiguration random_config(int n, const PrimeField& field, std::span<const Point> points,
                                     std::uint64_t seed);

std::uint64_t evaluate_config(const PairPoly& f, const GeometricConfiguration& config);

/// Exact (rational) geometric configuration, used to compare against concrete matrices.
struct ExactConfiguration {
  std::map<Point, std::pair<std::vector<Rational>, std::vector<Rational>>> frames;
};
Rational evaluate_exact(const PairPoly& f, const ExactConfiguration& config);

enum class Verdict { ProvedZero, ProbablyZero, NonZero };
std::string to_string(Verdict v);

struct ZeroCertificate {
  Verdict verdict = Verdict::NonZero;
  /// "reduction" or "oracle".
  std::string method;
  int trials = 0;
  std::size_t reduction_steps = 0;
  /// For NonZero: the configuration seed and the nonzero value found there.
  std::optional<std::uint64_t> witness_seed;
  std::optional<std::uint64_t> witness_value;
  std::optional<GeometricConfiguration> witness;

  bool is_zero() const { return verdict != Verdict::NonZero; }
};

/// One summand coeff * prod(factors) of a lazily expanded polynomial.
struct ProductTerm {
  Rational coeff;
  std::vector<const PairPoly*> factors;
};

/// Seed of the t-th oracle trial.
std::uint64_t trial_seed(std::uint64_t base, int trial);

/// Decides f == 0 in Z_n(P): exact reduction when affordable, then random evaluation.
ZeroCertificate is_zero_rank_n(const PairPoly& f, const RankContext& ctx);
/// As above for sum_k coeff_k * prod factors_k without expanding unless the reduction
/// layer can afford it.
ZeroCertificate is_zero_rank_n(std::span<const ProductTerm> terms, const RankContext& ctx);
/// The random-evaluation layer alone, over `trials` configurations starting at `seed`.
ZeroCertificate is_zero_by_oracle(const PairPoly& f, const RankContext& ctx, int trials, std::uint64_t seed);

/// Number of terms of the expanded sum, saturating at SIZE_MAX.
std::size_t expanded_size_bound(std::span<const ProductTerm> terms);
PairPoly expand(std::span<const ProductTerm> terms);

}  // namespace swapalg
