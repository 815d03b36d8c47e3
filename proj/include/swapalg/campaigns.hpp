#pragma once

#include <cstdint>
#include <string>

#include "swapalg/bracket.hpp"
#include "swapalg/grassmannian.hpp"
#include "swapalg/networks.hpp"
#include "swapalg/report.hpp"

namespace swapalg {

/// Verification sweeps shared by the CLI and the acceptance suite. Every sweep is
/// deterministic given its arguments; `jobs` only changes wall-clock time.
struct CampaignOptions {
  OracleParams oracle;
  unsigned jobs = 1;
};

/// Linking-number antisymmetry, cocycle identity and basepoint independence, and
/// parallel-number antisymmetry, over every configuration of r points.
Report campaign_linking(int r);

/// Jacobi identity for every ordered triple of generators over r points (exact).
Report campaign_jacobi(int r, const BracketParams& p, const CampaignOptions& opt);

/// {f,g}_{a,b} == a {f,g}_{1,0} + b {f,g}_{0,1} on random polynomial pairs (exact).
Report campaign_decomposition(int r, int samples, const CampaignOptions& opt);

/// {ab, cf}_{0,1} == 0 for every generator and cross fraction, and
/// {mu, nu}_{a,b} == a {mu, nu}_{1,0} on random cross-fraction pairs (exact).
Report campaign_cross_fractions(int r, int samples, const CampaignOptions& opt);

/// {g, M}_{a,b} is zero in Z_n(P) for every generator g and (n+1)-minor M.
Report campaign_poisson_ideal(int n, int r, const BracketParams& p, const CampaignOptions& opt);

/// {ab, Delta}_{0,1} == K ab Delta for every edge and every determinant of size <= max_m (exact).
Report campaign_scaling(int r, int max_m, const CampaignOptions& opt);

/// Leibniz path, right and left boundary expansions agree for every edge and m = n determinant.
Report campaign_boundary(int n, int r, const CampaignOptions& opt);

/// Cofactor expansion against the Leibniz path: exact for 2x2, rank-n for 3x3.
Report campaign_cofactor(int n, int r, const CampaignOptions& opt);

/// Two right-tuple realizations of random determinant ratios are equal, and so are
/// their brackets with a generator.
Report campaign_det_ratio_independence(int n, int r, int samples, const CampaignOptions& opt);

/// {E, E'}_{0,1} == J E E' for every pair of distinct coordinates.
Report campaign_lemma01(const SchubertIndex& index, const CampaignOptions& opt);

/// verify_theta_pair for every pair of distinct coordinates.
Report campaign_main_theorem(const SchubertIndex& index, const BracketParams& p, const CampaignOptions& opt);

/// Path sums against enumeration, Jacobi for the network bracket on all variable triples,
/// and the formula bracket on every coordinate pair.
Report campaign_network(const PlanarNetwork& net, const std::string& name, const BracketParams& p, VertexRule rule);

/// theta of random nonzero coordinate polynomials of degree <= max_degree is NonZero.
Report campaign_injectivity(const SchubertIndex& index, int samples, int max_degree, const CampaignOptions& opt);

}  // namespace swapalg
