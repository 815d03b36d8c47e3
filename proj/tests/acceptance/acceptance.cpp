// Runs the thirteen acceptance criteria and prints one PASS/FAIL line per criterion on stdout.
// Failing items and diagnostics go to stderr. Exit status is 0 iff every criterion passes.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "swapalg/campaigns.hpp"
#include "swapalg/rank.hpp"

using namespace swapalg;

namespace {

struct Outcome {
  bool pass = true;
  std::size_t items = 0;
  std::size_t identities = 0;
  std::vector<std::string> failures;

  void add(const Report& rep) {
    for (const auto& item : rep.items) {
      ++items;
      identities += item.checked;
      if (!item.pass) {
        pass = false;
        failures.push_back(rep.task + " " + rep.parameters.dump() + " " + item.key + ": " + item.verdict +
                           (item.detail.empty() ? "" : " (" + item.detail + ")"));
      }
    }
  }
};

CampaignOptions options() {
  CampaignOptions opt;
  opt.jobs = std::max(1U, std::thread::hardware_concurrency());
  return opt;
}

int run_criterion(int number, const std::string& title, double budget_s, const std::function<Outcome()>& body) {
  auto start = std::chrono::steady_clock::now();
  Outcome out;
  std::string error;
  try {
    out = body();
  } catch (const std::exception& e) {
    out.pass = false;
    error = e.what();
  }
  double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  bool in_budget = elapsed <= budget_s;
  bool pass = out.pass && in_budget;
  char line[512];
  std::snprintf(line, sizeof line, "criterion %2d  %s  %s: %zu items, %zu identities, %.2f s (budget %.0f s)", number,
                pass ? "PASS" : "FAIL", title.c_str(), out.items, out.identities, elapsed, budget_s);
  std::cout << line << std::endl;
  for (const auto& f : out.failures) std::cerr << "  criterion " << number << " failed item: " << f << "\n";
  if (!error.empty()) std::cerr << "  criterion " << number << " error: " << error << "\n";
  if (!in_budget) std::cerr << "  criterion " << number << " exceeded its runtime budget\n";
  return pass ? 0 : 1;
}

const std::vector<BracketParams> kJacobiParams{{1, 0}, {0, 1}, {1, 1}, {2, -3}};
const std::vector<BracketParams> kMainParams{{1, 0}, {0, 1}, {1, 1}, {2, 5}};
const std::vector<BracketParams> kNetworkParams{{1, 0}, {0, 1}, {1, 1}};

}  // namespace

int main() {
  const CampaignOptions opt = options();
  int failed = 0;

  failed += run_criterion(1, "linking-number axioms, r=6", 10, [] {
    Outcome o;
    o.add(campaign_linking(6));
    return o;
  });

  failed += run_criterion(2, "Jacobi identity, r=5", 120, [&] {
    Outcome o;
    for (const auto& p : kJacobiParams) o.add(campaign_jacobi(5, p, opt));
    return o;
  });

  failed += run_criterion(3, "bracket decomposition, 100 random pairs", 10, [&] {
    Outcome o;
    o.add(campaign_decomposition(5, 100, opt));
    return o;
  });

  failed += run_criterion(4, "cross fractions, r=5, 50 random pairs", 60, [&] {
    Outcome o;
    o.add(campaign_cross_fractions(5, 50, opt));
    return o;
  });

  failed += run_criterion(5, "Poisson ideal, n=2, r=5, 100 minors", 600, [&] {
    Outcome o;
    RankContext ctx(2, PointSet(5), opt.oracle);
    if (minor_generators(ctx).size() != 100) {
      o.pass = false;
      o.failures.push_back("expected 100 minors");
    }
    for (const auto& p : {BracketParams{1, 0}, BracketParams{0, 1}}) o.add(campaign_poisson_ideal(2, 5, p, opt));
    return o;
  });

  failed += run_criterion(6, "scaling lemma, r=6, m<=3", 300, [&] {
    Outcome o;
    o.add(campaign_scaling(6, 3, opt));
    return o;
  });

  failed += run_criterion(7, "boundary formulas, n in {2,3}, r<=6", 600, [&] {
    Outcome o;
    for (int n : {2, 3}) {
      for (int r = n + 1; r <= 6; ++r) o.add(campaign_boundary(n, r, opt));
    }
    return o;
  });

  failed += run_criterion(8, "cofactor lemma, r=5", 300, [&] {
    Outcome o;
    o.add(campaign_cofactor(2, 5, opt));
    return o;
  });

  failed += run_criterion(9, "determinant-ratio independence, r=6, 50 instances", 300, [&] {
    Outcome o;
    for (int n : {2, 3}) o.add(campaign_det_ratio_independence(n, 6, 50, opt));
    return o;
  });

  failed += run_criterion(10, "log-canonical coordinate images", 300, [&] {
    Outcome o;
    o.add(campaign_lemma01(SchubertIndex(4, {1, 2}), opt));
    o.add(campaign_lemma01(SchubertIndex(5, {1, 2}), opt));
    return o;
  });

  failed += run_criterion(11, "main theorem, theta is a Poisson homomorphism", 1800, [&] {
    Outcome o;
    for (const auto& index : {SchubertIndex(4, {1, 2}), SchubertIndex(5, {1, 3}), SchubertIndex(5, {1, 2, 3}),
                              SchubertIndex(6, {1, 2, 4})}) {
      for (const auto& p : kMainParams) o.add(campaign_main_theorem(index, p, opt));
    }
    return o;
  });

  failed += run_criterion(12, "planar networks Gr(1,2) and Gr(2,4), literal vertex rule", 60, [&] {
    Outcome o;
    for (const char* name : {"gr12.net", "gr24.net"}) {
      PlanarNetwork net = PlanarNetwork::load(std::string(SWAPALG_TEST_DATA) + "/" + name);
      net.require_valid();
      for (const auto& p : kNetworkParams) o.add(campaign_network(net, name, p, VertexRule::Literal));
      Outcome mirrored;
      for (const auto& p : kNetworkParams) mirrored.add(campaign_network(net, name, p, VertexRule::Mirrored));
      std::cerr << "  criterion 12 diagnostic: " << name << " with the mirrored vertex rule "
                << (mirrored.pass ? "passes" : "fails") << " (" << mirrored.items << " items)\n";
    }
    return o;
  });

  failed += run_criterion(13, "injectivity spot-check, (n,r)=(2,4), 100 samples", 300, [&] {
    Outcome o;
    o.add(campaign_injectivity(SchubertIndex(4, {1, 2}), 100, 2, opt));
    return o;
  });

  std::cerr << "acceptance: " << (13 - failed) << "/13 criteria passed\n";
  return failed == 0 ? 0 : 1;
}
