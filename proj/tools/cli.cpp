#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include "swapalg/campaigns.hpp"
#include "swapalg/errors.hpp"
#include "swapalg/expr.hpp"

namespace swapalg::cli {

namespace {

/// Raised when an expression names a point outside the declared set.
class ExprNameError : public Error {
 public:
  using Error::Error;
};

/// Flags shared by every command. Unset oracle fields fall back to --config, then the
/// SWAPALG_PRIME / SWAPALG_TRIALS environment variables, then the built-in defaults.
struct Common {
  int points = 4;
  std::optional<int> rank;
  std::string alpha = "1";
  std::string beta = "0";
  std::string subset;
  std::optional<std::uint64_t> prime;
  std::optional<int> trials;
  std::optional<std::uint64_t> seed;
  std::optional<unsigned> jobs;
  std::string format = "text";
  std::string config;
  bool timings = false;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--points", c.points, "Number r of declared points a1..ar")->check(CLI::Range(1, 250));
  cmd->add_option("--rank", c.rank, "Rank n of the quotient Z_n(P)")->check(CLI::Range(2, 64));
  cmd->add_option("--alpha", c.alpha, "Bracket coefficient alpha (rational)");
  cmd->add_option("--beta", c.beta, "Bracket coefficient beta (rational)");
  cmd->add_option("--subset", c.subset, "Schubert index I, 1-based, comma-separated, increasing");
  cmd->add_option("--prime", c.prime, "Oracle prime (> 2^50)");
  cmd->add_option("--trials", c.trials, "Oracle trials")->check(CLI::PositiveNumber);
  cmd->add_option("--seed", c.seed, "Oracle seed");
  cmd->add_option("--jobs", c.jobs, "Worker threads; 0 uses every hardware thread");
  cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--config", c.config, "JSON file with prime, trials, seed, jobs");
  cmd->add_flag("--timings", c.timings, "Include per-item timings");
}

std::optional<std::uint64_t> env_u64(const char* name) {
  const char* v = std::getenv(name);
  if (v == nullptr || *v == '\0') return std::nullopt;
  std::uint64_t out = 0;
  auto [end, ec] = std::from_chars(v, v + std::char_traits<char>::length(v), out);
  if (ec != std::errc() || *end != '\0') throw InvalidInput(std::string(name) + " is not an unsigned integer: " + v);
  return out;
}

struct Resolved {
  CampaignOptions campaign;
  BracketParams bracket;
};

Resolved resolve(const Common& c) {
  Resolved out;
  OracleParams& o = out.campaign.oracle;
  if (auto p = env_u64("SWAPALG_PRIME")) o.prime = *p;
  if (auto t = env_u64("SWAPALG_TRIALS")) o.trials = static_cast<int>(*t);
  unsigned jobs = 1;
  if (!c.config.empty()) {
    std::ifstream in(c.config);
    if (!in) throw InvalidInput("cannot open config file " + c.config);
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      throw InvalidInput("config file " + c.config + ": " + e.what());
    }
    if (!j.is_object()) throw InvalidInput("config file must hold a JSON object");
    for (const auto& [key, value] : j.items()) {
      if (!value.is_number_unsigned()) throw InvalidInput("config key '" + key + "' must be an unsigned integer");
      if (key == "prime") {
        o.prime = value.get<std::uint64_t>();
      } else if (key == "trials") {
        o.trials = value.get<int>();
      } else if (key == "seed") {
        o.seed = value.get<std::uint64_t>();
      } else if (key == "jobs") {
        jobs = value.get<unsigned>();
      } else {
        throw InvalidInput("unknown config key '" + key + "'");
      }
    }
  }
  if (c.prime) o.prime = *c.prime;
  if (c.trials) o.trials = *c.trials;
  if (c.seed) o.seed = *c.seed;
  if (c.jobs) jobs = *c.jobs;
  if (!is_prime_u64(o.prime)) throw InvalidInput("--prime " + std::to_string(o.prime) + " is not prime");
  if (o.trials < 1) throw InvalidInput("--trials must be positive");
  out.campaign.jobs = jobs == 0 ? std::max(1U, std::thread::hardware_concurrency()) : jobs;
  try {
    out.bracket = {parse_rational(c.alpha), parse_rational(c.beta)};
  } catch (const std::exception&) {
    throw InvalidInput("--alpha/--beta must be rationals such as 2, -3 or 1/2");
  }
  return out;
}

std::vector<int> parse_subset(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    int k = 0;
    auto [end, ec] = std::from_chars(part.data(), part.data() + part.size(), k);
    if (ec != std::errc() || end != part.data() + part.size() || part.empty()) {
      throw InvalidInput("--subset must be comma-separated integers, got '" + text + "'");
    }
    if (!out.empty() && k <= out.back()) throw InvalidInput("--subset must be strictly increasing");
    out.push_back(k);
  }
  if (out.empty()) throw InvalidInput("--subset is empty");
  return out;
}

/// The Schubert index from --subset (default 1..n); --rank, when given, must match its size.
SchubertIndex schubert_from(const Common& c) {
  std::vector<int> subset;
  if (c.subset.empty()) {
    for (int k = 1; k <= c.rank.value_or(2); ++k) subset.push_back(k);
  } else {
    subset = parse_subset(c.subset);
  }
  if (c.rank && *c.rank != static_cast<int>(subset.size())) {
    throw InvalidInput("--rank " + std::to_string(*c.rank) + " does not match the size of --subset");
  }
  return SchubertIndex(c.points, subset);
}

ExprPtr parse_checked(const std::string& text, const PointSet& points) {
  try {
    return parse_expr(text, points);
  } catch (const ParseError&) {
    throw;
  } catch (const InvalidInput& e) {
    throw ExprNameError(e.what());
  }
}

Report computed(const std::string& task, const Common& c, const Resolved& r, const std::string& result,
                const std::string& method) {
  Report rep;
  rep.task = task;
  rep.parameters["n"] = c.rank.value_or(2);
  rep.parameters["r"] = c.points;
  rep.parameters["I"] = nullptr;
  rep.parameters["alpha"] = r.bracket.alpha.get_str();
  rep.parameters["beta"] = r.bracket.beta.get_str();
  rep.parameters["prime"] = r.campaign.oracle.prime;
  rep.parameters["trials"] = r.campaign.oracle.trials;
  rep.parameters["seed"] = r.campaign.oracle.seed;
  ReportItem item;
  item.key = "result";
  item.verdict = "Computed";
  item.method = method;
  item.detail = result;
  rep.items.push_back(std::move(item));
  return rep;
}

std::string reduced_render(const FractionElement& f, const RankContext& ctx) {
  PairPoly num = reduce(f.num(), ctx);
  if (num.is_zero()) return "0";
  return FractionElement::unchecked(num, reduce(f.den(), ctx)).render();
}

void emit(const Report& rep, const Common& c, std::ostream& out, bool result_only) {
  if (c.format == "json") {
    out << rep.to_json(c.timings).dump(2) << "\n";
  } else if (result_only) {
    out << rep.items.front().detail << "\n";
  } else {
    out << rep.to_text(c.timings);
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations and verification sweeps in the rank-n swapping algebra", "swapalg"};
  app.require_subcommand(1);
  Common c;
  std::vector<std::string> exprs;
  std::string expr;
  bool reduce_result = false;
  std::string network_file;
  std::string rule = "literal";
  int samples = 0;
  int max_m = 3;
  int max_degree = 2;

  std::function<int()> action;

  auto* bracket_cmd = app.add_subcommand("bracket", "Bracket of two expressions");
  add_common(bracket_cmd, c);
  bracket_cmd->add_option("--expr", exprs, "Expression (give exactly two)")->required()->expected(2);
  bracket_cmd->add_flag("--reduce", reduce_result, "Reduce numerator and denominator modulo the rank-n ideal");

  auto* reduce_cmd = app.add_subcommand("reduce", "Normal form modulo the (n+1)-minor ideal");
  add_common(reduce_cmd, c);
  reduce_cmd->add_option("--expr", expr, "Expression")->required();

  auto* iszero_cmd = app.add_subcommand("iszero", "Zero test in Q_n(P); exit 0 iff zero");
  add_common(iszero_cmd, c);
  iszero_cmd->add_option("--expr", expr, "Expression")->required();

  auto* verify = app.add_subcommand("verify", "Verification sweeps");
  verify->require_subcommand(1);
  auto sweep = [&](const std::string& name, const std::string& help) {
    auto* cmd = verify->add_subcommand(name, help);
    add_common(cmd, c);
    return cmd;
  };
  auto* v_linking = sweep("linking", "Linking-number axioms");
  auto* v_jacobi = sweep("jacobi", "Jacobi identity on all generator triples");
  auto* v_decomp = sweep("decomposition", "Bracket decomposition on random pairs");
  v_decomp->add_option("--samples", samples, "Random pairs")->check(CLI::PositiveNumber);
  auto* v_cross = sweep("cross-fractions", "Cross-fraction brackets");
  v_cross->add_option("--samples", samples, "Random cross-fraction pairs")->check(CLI::PositiveNumber);
  auto* v_ideal = sweep("poisson-ideal", "Minor ideal is a Poisson ideal");
  auto* v_scaling = sweep("scaling", "Determinant scaling lemma");
  v_scaling->add_option("--max-m", max_m, "Largest determinant size")->check(CLI::Range(1, 6));
  auto* v_boundary = sweep("boundary-lemma", "Leibniz, right and left boundary expansions agree");
  auto* v_cofactor = sweep("cofactor", "Cofactor expansion of determinant brackets");
  auto* v_ratio = sweep("det-ratio-independence", "Determinant ratios do not depend on the right tuple");
  v_ratio->add_option("--samples", samples, "Random instances")->check(CLI::PositiveNumber);
  auto* v_lemma = sweep("lemma01", "Log-canonical bracket of coordinate images");
  auto* v_main = sweep("main-theorem", "Coordinate map is a Poisson homomorphism");
  auto* v_network = sweep("network", "Planar network bracket against the formula bracket");
  v_network->add_option("--file", network_file, "Network description")->required()->check(CLI::ExistingFile);
  v_network->add_option("--rule", rule, "Vertex rule")->check(CLI::IsMember({"literal", "mirrored"}));
  auto* v_inject = sweep("injectivity", "Random nonzero coordinate polynomials map to nonzero fractions");
  v_inject->add_option("--samples", samples, "Random polynomials")->check(CLI::PositiveNumber);
  v_inject->add_option("--max-degree", max_degree, "Largest degree")->check(CLI::Range(1, 4));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    Resolved r = resolve(c);
    const int n = c.rank.value_or(2);
    auto verify_report = [&](const Report& rep) {
      emit(rep, c, out, false);
      return rep.pass() ? kOk : kVerificationFailed;
    };
    auto samples_or = [&](int fallback) { return samples > 0 ? samples : fallback; };

    if (bracket_cmd->parsed()) {
      RankContext ctx(n, PointSet(c.points), r.campaign.oracle);
      FractionElement a = evaluate(*parse_checked(exprs[0], ctx.points()), ctx);
      FractionElement b = evaluate(*parse_checked(exprs[1], ctx.points()), ctx);
      FractionElement result = bracket_fraction(a, b, r.bracket);
      std::string text = reduce_result ? reduced_render(result, ctx) : result.render();
      emit(computed("bracket", c, r, text, reduce_result ? "reduction" : "exact"), c, out, true);
      return kOk;
    }
    if (reduce_cmd->parsed()) {
      RankContext ctx(n, PointSet(c.points), r.campaign.oracle);
      FractionElement f = evaluate(*parse_checked(expr, ctx.points()), ctx);
      emit(computed("reduce", c, r, reduced_render(f, ctx), "reduction"), c, out, true);
      return kOk;
    }
    if (iszero_cmd->parsed()) {
      RankContext ctx(n, PointSet(c.points), r.campaign.oracle);
      ExprPtr e = parse_checked(expr, ctx.points());
      Report rep = computed("iszero", c, r, "", "");
      rep.items = {item_from_certificate(render(*e), is_zero(evaluate(*e, ctx), ctx))};
      if (c.format == "json") {
        out << rep.to_json(c.timings).dump(2) << "\n";
      } else {
        const ReportItem& i = rep.items.front();
        out << i.verdict << " (" << i.method << ", " << i.trials << " trials)";
        if (!i.detail.empty()) out << "  " << i.detail;
        out << "\n";
      }
      return rep.pass() ? kOk : kVerificationFailed;
    }
    if (v_linking->parsed()) return verify_report(campaign_linking(c.points));
    if (v_jacobi->parsed()) return verify_report(campaign_jacobi(c.points, r.bracket, r.campaign));
    if (v_decomp->parsed()) return verify_report(campaign_decomposition(c.points, samples_or(100), r.campaign));
    if (v_cross->parsed()) return verify_report(campaign_cross_fractions(c.points, samples_or(50), r.campaign));
    if (v_ideal->parsed()) return verify_report(campaign_poisson_ideal(n, c.points, r.bracket, r.campaign));
    if (v_scaling->parsed()) return verify_report(campaign_scaling(c.points, max_m, r.campaign));
    if (v_boundary->parsed()) return verify_report(campaign_boundary(n, c.points, r.campaign));
    if (v_cofactor->parsed()) return verify_report(campaign_cofactor(n, c.points, r.campaign));
    if (v_ratio->parsed()) {
      return verify_report(campaign_det_ratio_independence(n, c.points, samples_or(50), r.campaign));
    }
    if (v_lemma->parsed()) return verify_report(campaign_lemma01(schubert_from(c), r.campaign));
    if (v_main->parsed()) return verify_report(campaign_main_theorem(schubert_from(c), r.bracket, r.campaign));
    if (v_inject->parsed()) {
      return verify_report(campaign_injectivity(schubert_from(c), samples_or(100), max_degree, r.campaign));
    }
    if (v_network->parsed()) {
      PlanarNetwork net = PlanarNetwork::load(network_file);
      net.require_valid();
      std::string name = network_file.substr(network_file.find_last_of('/') + 1);
      return verify_report(
          campaign_network(net, name, r.bracket, rule == "literal" ? VertexRule::Literal : VertexRule::Mirrored));
    }
    err << "error: no command given\n";
    return kUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const ExprNameError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "precondition failed: " << e.what() << "\n";
    return kPrecondition;
  }
}

}  // namespace swapalg::cli
