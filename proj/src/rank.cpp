#include "swapalg/rank.hpp"

#include <algorithm>
#include <limits>
#include <mutex>
#include <numeric>
#include <unordered_map>

#include "swapalg/errors.hpp"

namespace swapalg {

PairPoly gen(Point p, Point q) {
  if (p == q) return {};
  return PairPoly::variable(PairGen{p, q});
}

PairPoly gen(const PointSet& points, Point p, Point q) {
  if (!points.contains(p) || !points.contains(q)) {
    throw InvalidInput("generator " + p.name() + "." + q.name() + " uses points outside the point set");
  }
  return gen(p, q);
}

namespace {

using Mono = Monomial<PairGen>;

void expand_determinant(std::span<const Point> xs, std::span<const Point> ys, std::size_t row, std::vector<bool>& used,
                        std::vector<Mono::Factor>& factors, int sign, PolyAccumulator<PairGen>& acc) {
  if (row == xs.size()) {
    acc.add(Mono::from_factors(factors), Rational(sign));
    return;
  }
  // Columns still free to the left of col give the inversion count contributed by this row.
  int free_before = 0;
  for (std::size_t col = 0; col < ys.size(); ++col) {
    if (used[col]) continue;
    if (xs[row] != ys[col]) {
      used[col] = true;
      factors.emplace_back(PairGen{xs[row], ys[col]}, 1);
      expand_determinant(xs, ys, row + 1, used, factors, (free_before % 2 == 0) ? sign : -sign, acc);
      factors.pop_back();
      used[col] = false;
    }
    ++free_before;
  }
}

}  // namespace

PairPoly determinant(std::span<const Point> xs, std::span<const Point> ys) {
  if (xs.size() != ys.size()) throw InvalidInput("determinant needs tuples of equal length");
  if (xs.empty()) throw InvalidInput("determinant needs at least one row");
  std::vector<bool> used(ys.size(), false);
  std::vector<Mono::Factor> factors;
  PolyAccumulator<PairGen> acc;
  expand_determinant(xs, ys, 0, used, factors, 1, acc);
  return acc.take();
}

std::vector<Point> support_points(const PairPoly& f) {
  std::vector<Point> pts;
  for (const PairGen& g : f.variables()) {
    pts.push_back(g.left);
    pts.push_back(g.right);
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

namespace {

/// Minors over one point list, with their leading terms indexed by smallest variable.
struct ReductionSystem {
  std::vector<PairPoly> generators;
  std::unordered_map<PairGen, std::vector<std::size_t>> by_first_var;
};

void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& visit) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    visit(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t result = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    if (result > std::numeric_limits<std::size_t>::max() / (n - k + i)) return std::numeric_limits<std::size_t>::max();
    result = result * (n - k + i) / i;
  }
  return result;
}

}  // namespace

std::vector<PairPoly> minor_generators(int n, std::span<const Point> points) {
  std::vector<Point> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  std::vector<PairPoly> out;
  auto size = static_cast<std::size_t>(n) + 1;
  std::vector<Point> xs(size);
  std::vector<Point> ys(size);
  for_each_subset(pts.size(), size, [&](const std::vector<std::size_t>& rows) {
    for (std::size_t i = 0; i < size; ++i) xs[i] = pts[rows[i]];
    for_each_subset(pts.size(), size, [&](const std::vector<std::size_t>& cols) {
      for (std::size_t i = 0; i < size; ++i) ys[i] = pts[cols[i]];
      PairPoly d = determinant(xs, ys);
      if (!d.is_zero()) out.push_back(std::move(d));
    });
  });
  return out;
}

std::vector<PairPoly> minor_generators(const RankContext& ctx) { return minor_generators(ctx.n(), ctx.points().points()); }

/// Memo of reduction systems keyed by point list. Fill is idempotent, so concurrent callers
/// may race to compute the same entry without changing results.
class MinorCache {
 public:
  explicit MinorCache(int n) : n_(n) {}

  std::shared_ptr<const ReductionSystem> get(const std::vector<Point>& pts) {
    {
      std::lock_guard<std::mutex> lock(mutex_);
      auto it = systems_.find(pts);
      if (it != systems_.end()) return it->second;
    }
    auto system = std::make_shared<ReductionSystem>();
    system->generators = minor_generators(n_, pts);
    for (std::size_t i = 0; i < system->generators.size(); ++i) {
      const auto& lead = system->generators[i].leading_term().monomial;
      system->by_first_var[lead.factors().front().first].push_back(i);
    }
    std::lock_guard<std::mutex> lock(mutex_);
    return systems_.try_emplace(pts, std::move(system)).first->second;
  }

 private:
  int n_;
  std::mutex mutex_;
  std::map<std::vector<Point>, std::shared_ptr<const ReductionSystem>> systems_;
};

RankContext::RankContext(int n, PointSet points, OracleParams oracle, ReductionBudget budget)
    : n_(n), points_(std::move(points)), oracle_(oracle), budget_(budget), field_(oracle.prime) {
  if (n < 2) throw InvalidInput("rank must be at least 2, got " + std::to_string(n));
  if (oracle.trials < 1) throw InvalidInput("oracle needs at least one trial");
  if (oracle.prime <= (1ULL << 50)) throw InvalidInput("oracle prime must exceed 2^50");
  cache_ = std::make_shared<MinorCache>(n);
}

RankContext RankContext::with_points(PointSet points) const {
  RankContext copy = *this;
  copy.points_ = std::move(points);
  return copy;
}

RankContext RankContext::with_seed(std::uint64_t seed) const {
  RankContext copy = *this;
  copy.oracle_.seed = seed;
  return copy;
}

namespace {

struct GrlexGreater {
  bool operator()(const Mono& a, const Mono& b) const { return grlex_compare(a, b) > 0; }
};

Reduction divide(const PairPoly& f, const ReductionSystem& system, std::size_t max_steps) {
  Reduction out;
  std::map<Mono, Rational, GrlexGreater> rest;
  for (const auto& t : f.terms()) rest.emplace_hint(rest.end(), t.monomial, t.coeff);
  std::vector<PairPoly::Term> remainder;
  std::map<std::size_t, PolyAccumulator<PairGen>> quotients;

  while (!rest.empty()) {
    if (out.steps >= max_steps) {
      out.complete = false;
      for (auto& [m, c] : rest) remainder.push_back({m, c});
      break;
    }
    auto head = rest.begin();
    const Mono& m = head->first;
    std::optional<std::size_t> divisor;
    for (const auto& [v, e] : m.factors()) {
      auto it = system.by_first_var.find(v);
      if (it == system.by_first_var.end()) continue;
      for (std::size_t idx : it->second) {
        if (system.generators[idx].leading_term().monomial.divides(m)) {
          divisor = idx;
          break;
        }
      }
      if (divisor) break;
    }
    if (!divisor) {
      remainder.push_back({m, head->second});
      rest.erase(head);
      continue;
    }
    const PairPoly& g = system.generators[*divisor];
    Mono q = g.leading_term().monomial.quotient_of(m);
    Rational qc = head->second / g.leading_term().coeff;
    quotients[*divisor].add(q, qc);
    for (const auto& t : g.terms()) {
      Mono key = t.monomial * q;
      auto [it, inserted] = rest.try_emplace(key, 0);
      it->second -= qc * t.coeff;
      if (it->second == 0) rest.erase(it);
    }
    ++out.steps;
  }
  out.remainder = PairPoly::from_terms(std::move(remainder));
  for (auto& [idx, acc] : quotients) {
    PairPoly q = acc.take();
    if (!q.is_zero()) out.quotients.emplace_back(idx, std::move(q));
  }
  out.generators = system.generators;
  return out;
}

}  // namespace

Reduction reduce_with_trace(const PairPoly& f, const RankContext& ctx) {
  auto system = ctx.cache().get(support_points(f));
  return divide(f, *system, ctx.budget().max_steps);
}

PairPoly reduce(const PairPoly& f, const RankContext& ctx) { return reduce_with_trace(f, ctx).remainder; }

std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
  std::uint64_t z = a + 0x9e3779b97f4a7c15ULL * (b + 1);
  z = (z ^ (z >> 30U)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27U)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31U);
}

std::uint64_t trial_seed(std::uint64_t base, int trial) { return mix_seed(base, static_cast<std::uint64_t>(trial) + 0x5157ULL); }

namespace {

class FieldSampler {
 public:
  FieldSampler(const PrimeField& field, std::uint64_t state) : field_(field), state_(state) {}

  std::uint64_t next() {
    const std::uint64_t p = field_.prime();
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % p;
    while (true) {
      state_ = mix_seed(state_, 1);
      if (state_ < limit) return state_ % p;
    }
  }

 private:
  const PrimeField& field_;
  std::uint64_t state_;
};

GeometricConfiguration::Frame sample_frame(int n, const PrimeField& field, Point point, std::uint64_t seed) {
  FieldSampler sampler(field, mix_seed(seed, static_cast<std::uint64_t>(static_cast<std::uint32_t>(point.position()))));
  auto dim = static_cast<std::size_t>(n);
  GeometricConfiguration::Frame frame{std::vector<std::uint64_t>(dim), std::vector<std::uint64_t>(dim)};
  std::size_t pivot = dim;
  while (pivot == dim) {
    for (auto& x : frame.vector) x = sampler.next();
    pivot = static_cast<std::size_t>(std::find_if(frame.vector.begin(), frame.vector.end(), [](std::uint64_t x) { return x != 0; }) -
                                     frame.vector.begin());
  }
  for (auto& x : frame.covector) x = sampler.next();
  std::uint64_t rest = 0;
  for (std::size_t k = 0; k < dim; ++k) {
    if (k != pivot) rest = field.add(rest, field.mul(frame.covector[k], frame.vector[k]));
  }
  frame.covector[pivot] = field.mul(field.neg(rest), field.inv(frame.vector[pivot]));
  return frame;
}

}  // namespace

void GeometricConfiguration::set(Point p, Frame frame) {
  if (frame.vector.size() != static_cast<std::size_t>(n_) || frame.covector.size() != static_cast<std::size_t>(n_)) {
    throw InvalidInput("frame of " + p.name() + " must have dimension " + std::to_string(n_));
  }
  frames_[p] = std::move(frame);
}

std::uint64_t GeometricConfiguration::pairing(Point left, Point right) const {
  auto l = frames_.find(left);
  auto r = frames_.find(right);
  if (l == frames_.end()) throw IncompleteAssignment("no frame for point " + left.name());
  if (r == frames_.end()) throw IncompleteAssignment("no frame for point " + right.name());
  std::uint64_t total = 0;
  for (std::size_t k = 0; k < l->second.vector.size(); ++k) {
    total = field_.add(total, field_.mul(r->second.covector[k], l->second.vector[k]));
  }
  return total;
}

GeometricConfiguration random_config(int n, const PrimeField& field, std::span<const Point> points, std::uint64_t seed) {
  GeometricConfiguration config(n, field);
  for (Point p : points) config.set(p, sample_frame(n, field, p, seed));
  return config;
}

GeometricConfiguration random_config(const RankContext& ctx, std::uint64_t seed) {
  return random_config(ctx.n(), ctx.field(), ctx.points().points(), seed);
}

std::uint64_t evaluate_config(const PairPoly& f, const GeometricConfiguration& config) {
  return f.evaluate_mod(config.field(), [&](const PairGen& g) -> std::optional<std::uint64_t> {
    return config.pairing(g.left, g.right);
  });
}

Rational evaluate_exact(const PairPoly& f, const ExactConfiguration& config) {
  return f.evaluate([&](const PairGen& g) -> std::optional<Rational> {
    auto l = config.frames.find(g.left);
    auto r = config.frames.find(g.right);
    if (l == config.frames.end() || r == config.frames.end()) return std::nullopt;
    const auto& v = l->second.first;
    const auto& phi = r->second.second;
    if (v.size() != phi.size()) throw InvalidInput("frames of different dimensions");
    Rational total = 0;
    for (std::size_t k = 0; k < v.size(); ++k) total += phi[k] * v[k];
    return total;
  });
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::ProvedZero:
      return "ProvedZero";
    case Verdict::ProbablyZero:
      return "ProbablyZero";
    case Verdict::NonZero:
      return "NonZero";
  }
  return "NonZero";
}

std::size_t expanded_size_bound(std::span<const ProductTerm> terms) {
  constexpr std::size_t kMax = std::numeric_limits<std::size_t>::max();
  std::size_t total = 0;
  for (const auto& t : terms) {
    std::size_t prod = 1;
    for (const PairPoly* f : t.factors) {
      if (f->size() == 0) {
        prod = 0;
        break;
      }
      if (prod > kMax / f->size()) return kMax;
      prod *= f->size();
    }
    if (total > kMax - prod) return kMax;
    total += prod;
  }
  return total;
}

PairPoly expand(std::span<const ProductTerm> terms) {
  PolyAccumulator<PairGen> acc;
  for (const auto& t : terms) {
    PairPoly prod = PairPoly::constant(t.coeff);
    for (const PairPoly* f : t.factors) {
      prod = prod * *f;
      if (prod.is_zero()) break;
    }
    acc.add(prod);
  }
  return acc.take();
}

namespace {

std::vector<Point> support_points(std::span<const ProductTerm> terms) {
  std::vector<Point> pts;
  for (const auto& t : terms) {
    for (const PairPoly* f : t.factors) {
      auto s = support_points(*f);
      pts.insert(pts.end(), s.begin(), s.end());
    }
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

std::uint64_t evaluate_terms(std::span<const ProductTerm> terms, const GeometricConfiguration& config) {
  const PrimeField& field = config.field();
  std::unordered_map<const PairPoly*, std::uint64_t> values;
  std::uint64_t total = 0;
  for (const auto& t : terms) {
    std::uint64_t prod = field.from_rational(t.coeff);
    for (const PairPoly* f : t.factors) {
      if (prod == 0) break;
      auto it = values.find(f);
      if (it == values.end()) it = values.emplace(f, evaluate_config(*f, config)).first;
      prod = field.mul(prod, it->second);
    }
    total = field.add(total, prod);
  }
  return total;
}

/// Runs trials [first, last) of the oracle; returns a NonZero certificate on the first witness.
std::optional<ZeroCertificate> oracle_trials(std::span<const ProductTerm> terms, const std::vector<Point>& pts,
                                             const RankContext& ctx, std::uint64_t base, int first, int last,
                                             ZeroCertificate& cert) {
  for (int t = first; t < last; ++t) {
    std::uint64_t seed = trial_seed(base, t);
    GeometricConfiguration config = random_config(ctx.n(), ctx.field(), pts, seed);
    std::uint64_t value = evaluate_terms(terms, config);
    ++cert.trials;
    if (value != 0) {
      cert.verdict = Verdict::NonZero;
      cert.method = "oracle";
      cert.witness_seed = seed;
      cert.witness_value = value;
      cert.witness = std::move(config);
      return cert;
    }
  }
  return std::nullopt;
}

ZeroCertificate decide(std::span<const ProductTerm> terms, const PairPoly* expanded, const RankContext& ctx) {
  ZeroCertificate cert;
  std::vector<Point> pts = support_points(terms);
  const std::uint64_t base = ctx.oracle().seed;
  const int trials = ctx.oracle().trials;
  if (auto hit = oracle_trials(terms, pts, ctx, base, 0, 1, cert)) return *hit;

  const auto& budget = ctx.budget();
  const std::size_t subsets = binomial(pts.size(), static_cast<std::size_t>(ctx.n()) + 1);
  const bool generators_fit = subsets == 0 || subsets <= budget.max_generators / subsets;
  if (generators_fit && expanded_size_bound(terms) <= budget.max_input_terms) {
    PairPoly f = expanded != nullptr ? *expanded : expand(terms);
    if (f.is_zero()) {
      cert.verdict = Verdict::ProvedZero;
      cert.method = "reduction";
      return cert;
    }
    Reduction red = reduce_with_trace(f, ctx);
    cert.reduction_steps = red.steps;
    if (red.complete && red.remainder.is_zero()) {
      cert.verdict = Verdict::ProvedZero;
      cert.method = "reduction";
      return cert;
    }
  }

  if (auto hit = oracle_trials(terms, pts, ctx, base, 1, trials, cert)) return *hit;
  cert.verdict = Verdict::ProbablyZero;
  cert.method = "oracle";
  return cert;
}

}  // namespace

ZeroCertificate is_zero_rank_n(const PairPoly& f, const RankContext& ctx) {
  ProductTerm term{Rational(1), {&f}};
  return decide(std::span<const ProductTerm>(&term, 1), &f, ctx);
}

ZeroCertificate is_zero_rank_n(std::span<const ProductTerm> terms, const RankContext& ctx) {
  return decide(terms, nullptr, ctx);
}

ZeroCertificate is_zero_by_oracle(const PairPoly& f, const RankContext& ctx, int trials, std::uint64_t seed) {
  ProductTerm term{Rational(1), {&f}};
  std::span<const ProductTerm> terms(&term, 1);
  ZeroCertificate cert;
  if (auto hit = oracle_trials(terms, support_points(f), ctx, seed, 0, trials, cert)) return *hit;
  cert.verdict = Verdict::ProbablyZero;
  cert.method = "oracle";
  return cert;
}

}  // namespace swapalg
