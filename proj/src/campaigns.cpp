#include "swapalg/campaigns.hpp"

#include <atomic>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <thread>

#include "swapalg/circle.hpp"
#include "swapalg/errors.hpp"

namespace swapalg {

namespace {

using Clock = std::chrono::steady_clock;

nlohmann::ordered_json parameters(std::optional<int> n, std::optional<int> r, const std::vector<int>* subset,
                                  const BracketParams* p, const OracleParams* oracle) {
  nlohmann::ordered_json j;
  j["n"] = n ? nlohmann::ordered_json(*n) : nlohmann::ordered_json();
  j["r"] = r ? nlohmann::ordered_json(*r) : nlohmann::ordered_json();
  j["I"] = subset ? nlohmann::ordered_json(*subset) : nlohmann::ordered_json();
  j["alpha"] = p ? nlohmann::ordered_json(p->alpha.get_str()) : nlohmann::ordered_json();
  j["beta"] = p ? nlohmann::ordered_json(p->beta.get_str()) : nlohmann::ordered_json();
  j["prime"] = oracle ? nlohmann::ordered_json(oracle->prime) : nlohmann::ordered_json();
  j["trials"] = oracle ? nlohmann::ordered_json(oracle->trials) : nlohmann::ordered_json();
  j["seed"] = oracle ? nlohmann::ordered_json(oracle->seed) : nlohmann::ordered_json();
  return j;
}

/// Runs make(k) for k in [0, count) on up to `jobs` threads; results keep index order.
std::vector<ReportItem> run_items(std::size_t count, unsigned jobs, const std::function<ReportItem(std::size_t)>& make) {
  std::vector<ReportItem> out(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < count; k = next++) {
      auto start = Clock::now();
      try {
        out[k] = make(k);
      } catch (...) {
        errors[k] = std::current_exception();
      }
      out[k].elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    }
  };
  unsigned threads = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(count)));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

std::vector<Point> main_points(int r) { return PointSet(r).points(); }

std::vector<PairGen> all_generators(int r) {
  std::vector<PairGen> out;
  for (Point x : main_points(r)) {
    for (Point y : main_points(r)) {
      if (x != y) out.push_back({x, y});
    }
  }
  return out;
}

/// All increasing m-tuples of the points.
std::vector<std::vector<Point>> tuples(const std::vector<Point>& pts, std::size_t m) {
  std::vector<std::vector<Point>> out;
  std::vector<Point> current;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (current.size() == m) {
      out.push_back(current);
      return;
    }
    for (std::size_t k = from; k < pts.size(); ++k) {
      current.push_back(pts[k]);
      rec(k + 1);
      current.pop_back();
    }
  };
  rec(0);
  return out;
}

/// Folds certificates into one item: the worst verdict wins.
class Tally {
 public:
  void add(const ZeroCertificate& cert) {
    ++checked_;
    trials_ = std::max(trials_, cert.trials);
    if (rank(cert.verdict) > rank(worst_)) worst_ = cert.verdict;
    if (cert.verdict != Verdict::ProvedZero || cert.method == "oracle") oracle_ = true;
    if (cert.method == "reduction") reduction_ = true;
    if (cert.verdict == Verdict::NonZero && first_failure_.empty()) first_failure_ = pending_label_;
  }
  void add_exact(bool ok) {
    ++checked_;
    if (!ok) {
      mismatch_ = true;
      if (first_failure_.empty()) first_failure_ = pending_label_;
    }
  }
  void label(std::string text) { pending_label_ = std::move(text); }

  ReportItem item(std::string key) const {
    ReportItem i;
    i.key = std::move(key);
    i.checked = checked_;
    i.trials = trials_;
    if (mismatch_) {
      i.verdict = "Mismatch";
      i.method = "exact";
      i.pass = false;
    } else if (worst_ == Verdict::NonZero) {
      i.verdict = to_string(worst_);
      i.method = "oracle";
      i.pass = false;
    } else if (oracle_) {
      i.verdict = to_string(worst_);
      i.method = "oracle";
    } else if (reduction_) {
      i.verdict = to_string(worst_);
      i.method = "reduction";
    } else {
      i.verdict = "Exact";
      i.method = "exact";
    }
    if (!first_failure_.empty()) i.detail = "first failure: " + first_failure_;
    return i;
  }

 private:
  static int rank(Verdict v) { return v == Verdict::ProvedZero ? 0 : v == Verdict::ProbablyZero ? 1 : 2; }

  std::size_t checked_ = 0;
  int trials_ = 0;
  Verdict worst_ = Verdict::ProvedZero;
  bool oracle_ = false;
  bool reduction_ = false;
  bool mismatch_ = false;
  std::string pending_label_;
  std::string first_failure_;
};

std::string padded(std::size_t k) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "sample-%03zu", k);
  return buf;
}

std::string tuple_name(std::span<const Point> pts) {
  std::string out = "(";
  for (std::size_t k = 0; k < pts.size(); ++k) out += (k ? "," : "") + pts[k].name();
  return out + ")";
}

PairPoly random_poly(std::mt19937_64& rng, const std::vector<PairGen>& gens) {
  std::uniform_int_distribution<int> terms(1, 4);
  std::uniform_int_distribution<int> degree(1, 3);
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  std::uniform_int_distribution<int> coeff(-9, 9);
  PolyAccumulator<PairGen> acc;
  int count = terms(rng);
  for (int k = 0; k < count; ++k) {
    std::vector<Monomial<PairGen>::Factor> factors;
    int d = degree(rng);
    for (int e = 0; e < d; ++e) factors.emplace_back(gens[pick(rng)], 1);
    acc.add(Monomial<PairGen>::from_factors(std::move(factors)), Rational(coeff(rng)));
  }
  return acc.take();
}

std::string pair_key(const CoordSymbol& a, const CoordSymbol& b) { return a.name() + "," + b.name(); }

/// Unordered pairs of distinct coordinates; both sides of every checked identity are
/// antisymmetric, so the remaining ordered pairs carry no extra information.
std::vector<std::pair<CoordSymbol, CoordSymbol>> distinct_pairs(const std::vector<CoordSymbol>& symbols) {
  std::vector<std::pair<CoordSymbol, CoordSymbol>> out;
  for (std::size_t a = 0; a < symbols.size(); ++a) {
    for (std::size_t b = a + 1; b < symbols.size(); ++b) out.emplace_back(symbols[a], symbols[b]);
  }
  return out;
}

}  // namespace

Report campaign_linking(int r) {
  Report rep;
  rep.task = "linking";
  rep.parameters = parameters(std::nullopt, r, nullptr, nullptr, nullptr);
  const auto pts = main_points(r);
  Tally anti;
  Tally cocycle;
  Tally basepoint;
  Tally parallel;
  for (Point a : pts) {
    for (Point b : pts) {
      for (Point c : pts) {
        for (Point d : pts) {
          anti.label(a.name() + b.name() + "," + c.name() + d.name());
          anti.add_exact((linking_number(a, b, c, d).value() + linking_number(c, d, a, b).value()) == 0);
          for (int k = 0; k < r; ++k) {
            auto sigma = [&](Point p) { return static_cast<std::int64_t>(((p.gap_index() - 1 - k) % r + r) % r); };
            basepoint.label(a.name() + b.name() + "," + c.name() + d.name() + " rotation " + std::to_string(k));
            basepoint.add_exact(linking_number_at(sigma(a), sigma(b), sigma(c), sigma(d)) == linking_number(a, b, c, d));
          }
          if (a != b && c != d) {
            parallel.label(a.name() + b.name() + "," + c.name() + d.name());
            parallel.add_exact(parallel_number(a, b, c, d).value() + parallel_number(c, d, a, b).value() == 0);
          }
          for (Point e : pts) {
            cocycle.label(a.name() + b.name() + ";" + c.name() + "," + d.name() + "," + e.name());
            cocycle.add_exact(linking_number(a, b, c, d).value() + linking_number(a, b, d, e).value() +
                                  linking_number(a, b, e, c).value() ==
                              0);
          }
        }
      }
    }
  }
  rep.items = {anti.item("linking-antisymmetry"), basepoint.item("linking-basepoint"), cocycle.item("linking-cocycle"),
               parallel.item("parallel-antisymmetry")};
  rep.canonicalize();
  return rep;
}

Report campaign_jacobi(int r, const BracketParams& p, const CampaignOptions& opt) {
  Report rep;
  rep.task = "jacobi";
  rep.parameters = parameters(std::nullopt, r, nullptr, &p, nullptr);
  const auto gens = all_generators(r);
  const std::size_t g = gens.size();
  std::vector<PairPoly> vars;
  for (const auto& x : gens) vars.push_back(PairPoly::variable(x));
  std::vector<PairPoly> pairwise(g * g);
  for (std::size_t a = 0; a < g; ++a) {
    for (std::size_t b = 0; b < g; ++b) pairwise[a * g + b] = bracket_gen(gens[a], gens[b], p);
  }
  rep.items = run_items(g, opt.jobs, [&](std::size_t a) {
    Tally t;
    for (std::size_t b = 0; b < g; ++b) {
      for (std::size_t c = 0; c < g; ++c) {
        PairPoly jac = bracket_poly(pairwise[a * g + b], vars[c], p) + bracket_poly(pairwise[b * g + c], vars[a], p) +
                       bracket_poly(pairwise[c * g + a], vars[b], p);
        t.label(gens[b].name() + "," + gens[c].name());
        t.add_exact(jac.is_zero());
      }
    }
    return t.item(gens[a].name());
  });
  rep.canonicalize();
  return rep;
}

Report campaign_decomposition(int r, int samples, const CampaignOptions& opt) {
  Report rep;
  rep.task = "decomposition";
  rep.parameters = parameters(std::nullopt, r, nullptr, nullptr, &opt.oracle);
  const auto gens = all_generators(r);
  rep.items = run_items(static_cast<std::size_t>(samples), opt.jobs, [&](std::size_t k) {
    std::mt19937_64 rng(mix_seed(opt.oracle.seed, k));
    PairPoly f = random_poly(rng, gens);
    PairPoly g = random_poly(rng, gens);
    std::uniform_int_distribution<int> coeff(-5, 5);
    BracketParams p{coeff(rng), coeff(rng)};
    PairPoly lhs = bracket_poly(f, g, p);
    PairPoly rhs = p.alpha * bracket_poly(f, g, {1, 0}) + p.beta * bracket_poly(f, g, {0, 1});
    Tally t;
    t.label("alpha " + p.alpha.get_str() + ", beta " + p.beta.get_str());
    t.add_exact(lhs == rhs);
    return t.item(padded(k));
  });
  rep.canonicalize();
  return rep;
}

Report campaign_cross_fractions(int r, int samples, const CampaignOptions& opt) {
  Report rep;
  rep.task = "cross-fractions";
  rep.parameters = parameters(std::nullopt, r, nullptr, nullptr, &opt.oracle);
  const auto pts = main_points(r);
  struct Quad {
    Point x, y, z, t;
  };
  std::vector<Quad> quads;
  for (Point x : pts) {
    for (Point y : pts) {
      for (Point z : pts) {
        for (Point t : pts) {
          if (x != t && y != z && x != z && y != t) quads.push_back({x, y, z, t});
        }
      }
    }
  }
  const auto gens = all_generators(r);
  const BracketParams log_only{0, 1};
  std::vector<ReportItem> zero = run_items(gens.size(), opt.jobs, [&](std::size_t k) {
    Tally t;
    FractionElement g = FractionElement::from_poly(PairPoly::variable(gens[k]));
    for (const Quad& q : quads) {
      t.label("cf" + tuple_name(std::vector<Point>{q.x, q.y, q.z, q.t}));
      t.add_exact(bracket_fraction(g, cross_fraction(q.x, q.y, q.z, q.t), log_only).num().is_zero());
    }
    return t.item("zero-bracket:" + gens[k].name());
  });
  std::vector<ReportItem> scaling = run_items(static_cast<std::size_t>(samples), opt.jobs, [&](std::size_t k) {
    std::mt19937_64 rng(mix_seed(opt.oracle.seed, k));
    std::uniform_int_distribution<std::size_t> pick(0, quads.size() - 1);
    std::uniform_int_distribution<int> coeff(-5, 5);
    const Quad& a = quads[pick(rng)];
    const Quad& b = quads[pick(rng)];
    BracketParams p{coeff(rng), coeff(rng)};
    FractionElement mu = cross_fraction(a.x, a.y, a.z, a.t);
    FractionElement nu = cross_fraction(b.x, b.y, b.z, b.t);
    FractionElement lhs = bracket_fraction(mu, nu, p);
    FractionElement rhs = p.alpha * bracket_fraction(mu, nu, {1, 0});
    Tally t;
    t.label("alpha " + p.alpha.get_str() + ", beta " + p.beta.get_str());
    // Both sides share the denominator (xt yz x't' y'z')^2, so numerators must agree in Z(P).
    t.add_exact(lhs.den() == rhs.den() && lhs.num() == rhs.num());
    return t.item("alpha-scaling:" + padded(k));
  });
  rep.items = std::move(zero);
  rep.items.insert(rep.items.end(), scaling.begin(), scaling.end());
  rep.canonicalize();
  return rep;
}

Report campaign_poisson_ideal(int n, int r, const BracketParams& p, const CampaignOptions& opt) {
  Report rep;
  rep.task = "poisson-ideal";
  rep.parameters = parameters(n, r, nullptr, &p, &opt.oracle);
  RankContext ctx(n, PointSet(r), opt.oracle);
  const auto minors = minor_generators(ctx);
  const auto gens = all_generators(r);
  rep.items = run_items(gens.size(), opt.jobs, [&](std::size_t k) {
    Tally t;
    PairPoly g = PairPoly::variable(gens[k]);
    for (std::size_t m = 0; m < minors.size(); ++m) {
      t.label("minor #" + std::to_string(m));
      t.add(is_zero_rank_n(bracket_poly(g, minors[m], p), ctx));
    }
    return t.item(gens[k].name());
  });
  rep.canonicalize();
  return rep;
}

Report campaign_scaling(int r, int max_m, const CampaignOptions& opt) {
  Report rep;
  rep.task = "scaling";
  rep.parameters = parameters(std::nullopt, r, nullptr, nullptr, nullptr);
  const auto pts = main_points(r);
  std::vector<std::pair<std::vector<Point>, std::vector<Point>>> dets;
  for (int m = 1; m <= max_m; ++m) {
    for (const auto& xs : tuples(pts, static_cast<std::size_t>(m))) {
      for (const auto& ys : tuples(pts, static_cast<std::size_t>(m))) dets.emplace_back(xs, ys);
    }
  }
  const auto gens = all_generators(r);
  rep.items = run_items(gens.size(), opt.jobs, [&](std::size_t k) {
    Tally t;
    const PairGen& ab = gens[k];
    PairPoly g = PairPoly::variable(ab);
    for (const auto& [xs, ys] : dets) {
      PairPoly d = determinant(xs, ys);
      PairPoly lhs = bracket_poly(g, d, {0, 1});
      PairPoly rhs = compute_K(ab.left, ab.right, xs, ys) * (g * d);
      t.label(tuple_name(xs) + tuple_name(ys));
      t.add_exact(lhs == rhs);
    }
    return t.item(ab.name());
  });
  rep.canonicalize();
  return rep;
}

Report campaign_boundary(int n, int r, const CampaignOptions& opt) {
  Report rep;
  rep.task = "boundary-lemma";
  rep.parameters = parameters(n, r, nullptr, nullptr, &opt.oracle);
  RankContext ctx(n, PointSet(r), opt.oracle);
  const auto pts = main_points(r);
  const auto ts = tuples(pts, static_cast<std::size_t>(n));
  const auto gens = all_generators(r);
  std::vector<std::size_t> exact_counts(gens.size(), 0);
  rep.items = run_items(gens.size(), opt.jobs, [&](std::size_t k) {
    Tally t;
    const PairGen& ab = gens[k];
    PairPoly g = PairPoly::variable(ab);
    for (const auto& xs : ts) {
      for (const auto& ys : ts) {
        PairPoly leibniz = bracket_poly(g, determinant(xs, ys), {1, 0});
        PairPoly right = bracket_det_boundary(ab.left, ab.right, xs, ys, Side::Right);
        PairPoly left = bracket_det_boundary(ab.left, ab.right, xs, ys, Side::Left);
        t.label(tuple_name(xs) + tuple_name(ys));
        if (leibniz == right && leibniz == left) {
          ++exact_counts[k];
          t.add_exact(true);
          continue;
        }
        PairPoly d1 = leibniz - right;
        PairPoly d2 = leibniz - left;
        ZeroCertificate c1 = is_zero_rank_n(d1, ctx);
        t.add(c1.is_zero() ? is_zero_rank_n(d2, ctx) : c1);
      }
    }
    ReportItem item = t.item(ab.name());
    std::string exact = "exact in Z(P): " + std::to_string(exact_counts[k]) + "/" + std::to_string(item.checked);
    item.detail = item.detail.empty() ? exact : exact + "; " + item.detail;
    return item;
  });
  rep.canonicalize();
  return rep;
}

Report campaign_cofactor(int n, int r, const CampaignOptions& opt) {
  Report rep;
  rep.task = "cofactor";
  rep.parameters = parameters(n, r, nullptr, nullptr, &opt.oracle);
  RankContext ctx(n, PointSet(r), opt.oracle);
  const auto pts = main_points(r);
  const auto gens = all_generators(r);
  rep.items = run_items(2, opt.jobs, [&](std::size_t k) {
    const std::size_t m = k + 2;
    const auto ts = tuples(pts, m);
    Tally t;
    for (const auto& xs : ts) {
      for (const auto& ys : ts) {
        PairPoly d = determinant(xs, ys);
        for (const auto& b : gens) {
          PairPoly gb = PairPoly::variable(b);
          PairPoly leibniz = bracket_poly(d, gb, {1, 0});
          PairPoly cof = bracket_cofactor(xs, ys, gb);
          t.label(tuple_name(xs) + tuple_name(ys) + " vs " + b.name());
          if (m == 2) {
            t.add_exact(leibniz == cof);
          } else if (leibniz == cof) {
            t.add_exact(true);
          } else {
            t.add(is_zero_rank_n(leibniz - cof, ctx));
          }
        }
      }
    }
    return t.item(std::to_string(m) + "x" + std::to_string(m));
  });
  rep.canonicalize();
  return rep;
}

Report campaign_det_ratio_independence(int n, int r, int samples, const CampaignOptions& opt) {
  Report rep;
  rep.task = "det-ratio-independence";
  rep.parameters = parameters(n, r, nullptr, nullptr, &opt.oracle);
  RankContext ctx(n, PointSet(r), opt.oracle);
  const auto pts = main_points(r);
  rep.items = run_items(static_cast<std::size_t>(samples), opt.jobs, [&](std::size_t k) {
    std::mt19937_64 rng(mix_seed(opt.oracle.seed, k));
    std::vector<Point> shuffled = pts;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    std::vector<Point> left(shuffled.begin(), shuffled.begin() + (n - 1));
    Point y = shuffled[static_cast<std::size_t>(n - 1)];
    Point t = pts[std::uniform_int_distribution<std::size_t>(0, pts.size() - 1)(rng)];
    DeterminantRatio first = det_ratio(left, t, y, ctx);
    // Second realization: n distinct declared points in random order; retried while degenerate.
    std::optional<DeterminantRatio> second;
    for (int attempt = 0; attempt < 32 && !second; ++attempt) {
      std::vector<Point> right = pts;
      std::shuffle(right.begin(), right.end(), rng);
      right.resize(static_cast<std::size_t>(n));
      try {
        second = det_ratio(left, t, y, ctx, right);
      } catch (const ZeroDenominator&) {
      }
    }
    if (!second) throw PreconditionError("no nondegenerate second right tuple found");
    PairGen g{pts[0], pts[1]};
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    g = {shuffled[0], shuffled[1]};
    FractionElement gf = FractionElement::from_poly(PairPoly::variable(g));
    FractionElement b1 = bracket_fraction(gf, first.realized, {1, 0});
    FractionElement b2 = bracket_fraction(gf, second->realized, {1, 0});

    Tally tally;
    tally.label("realizations");
    tally.add(frac_equal(first.realized, second->realized, ctx));
    tally.label("bracket with " + g.name());
    tally.add(frac_equal(b1, b2, ctx));
    ReportItem item = tally.item(padded(k));
    std::string what = "E(" + tuple_name(left) + "|" + t.name() + "," + y.name() + ") right " +
                       tuple_name(first.right) + " vs " + tuple_name(second->right);
    item.detail = item.detail.empty() ? what : what + "; " + item.detail;
    return item;
  });
  rep.canonicalize();
  return rep;
}

Report campaign_lemma01(const SchubertIndex& index, const CampaignOptions& opt) {
  Report rep;
  rep.task = "lemma01";
  rep.parameters = parameters(index.n(), index.r(), &index.subset(), nullptr, &opt.oracle);
  RankContext ctx(index.n(), PointSet(index.r()), opt.oracle);
  const auto pairs = distinct_pairs(coordinates(index));
  rep.items = run_items(pairs.size(), opt.jobs, [&](std::size_t k) {
    const auto& [a, b] = pairs[k];
    return item_from_certificate(pair_key(a, b), verify_lemma_01(a, b, index, ctx));
  });
  rep.canonicalize();
  return rep;
}

Report campaign_main_theorem(const SchubertIndex& index, const BracketParams& p, const CampaignOptions& opt) {
  Report rep;
  rep.task = "main-theorem";
  rep.parameters = parameters(index.n(), index.r(), &index.subset(), &p, &opt.oracle);
  RankContext ctx(index.n(), PointSet(index.r()), opt.oracle);
  const auto pairs = distinct_pairs(coordinates(index));
  rep.items = run_items(pairs.size(), opt.jobs, [&](std::size_t k) {
    const auto& [a, b] = pairs[k];
    return item_from_certificate(pair_key(a, b), verify_theta_pair(a, b, index, p, ctx));
  });
  rep.canonicalize();
  return rep;
}

Report campaign_network(const PlanarNetwork& net, const std::string& name, const BracketParams& p, VertexRule rule) {
  Report rep;
  rep.task = "network " + name + (rule == VertexRule::Literal ? "" : " (mirrored rule)");
  SchubertIndex index = net.schubert_index();
  rep.parameters = parameters(index.n(), index.r(), &index.subset(), &p, nullptr);

  Tally paths;
  NetworkMatrix dp = net.boundary_measurement();
  NetworkMatrix brute = net.boundary_measurement_by_enumeration();
  for (std::size_t i = 0; i < dp.size(); ++i) {
    for (std::size_t j = 0; j < dp[i].size(); ++j) {
      paths.label("entry (" + std::to_string(index.subset()[i]) + "," + std::to_string(j + 1) + ")");
      paths.add_exact(dp[i][j] == brute[i][j]);
    }
  }
  rep.items.push_back(paths.item("path-sums"));

  Tally jacobi;
  const auto vars = net.variables();
  std::vector<NetworkPoly> x;
  for (const auto& v : vars) x.push_back(NetworkPoly::variable(v));
  for (std::size_t a = 0; a < x.size(); ++a) {
    for (std::size_t b = 0; b < x.size(); ++b) {
      NetworkPoly ab = network_bracket(x[a], x[b], net, p, rule);
      for (std::size_t c = 0; c < x.size(); ++c) {
        NetworkPoly jac = network_bracket(ab, x[c], net, p, rule) +
                          network_bracket(network_bracket(x[b], x[c], net, p, rule), x[a], net, p, rule) +
                          network_bracket(network_bracket(x[c], x[a], net, p, rule), x[b], net, p, rule);
        jacobi.label(vars[a].name() + "," + vars[b].name() + "," + vars[c].name());
        jacobi.add_exact(jac.is_zero());
      }
    }
  }
  rep.items.push_back(jacobi.item("jacobi"));

  for (const auto& check : verify_network_vs_formula(net, p, rule)) {
    ReportItem item;
    item.key = "formula:" + pair_key(check.c, check.cp);
    item.verdict = check.match ? "Exact" : "Mismatch";
    item.method = "exact";
    item.pass = check.match;
    if (!check.match) item.detail = "network " + check.network_side.render() + " vs formula " + check.formula_side.render();
    rep.items.push_back(std::move(item));
  }
  rep.canonicalize();
  return rep;
}

Report campaign_injectivity(const SchubertIndex& index, int samples, int max_degree, const CampaignOptions& opt) {
  Report rep;
  rep.task = "injectivity";
  rep.parameters = parameters(index.n(), index.r(), &index.subset(), nullptr, &opt.oracle);
  RankContext ctx(index.n(), PointSet(index.r()), opt.oracle);
  auto results = injectivity_spotcheck(index, ctx, max_degree, samples, opt.oracle.seed);
  for (std::size_t k = 0; k < results.size(); ++k) {
    ReportItem item = item_from_certificate(padded(k), results[k].certificate, false);
    item.detail = results[k].expr.render();
    rep.items.push_back(std::move(item));
  }
  rep.canonicalize();
  return rep;
}

}  // namespace swapalg
