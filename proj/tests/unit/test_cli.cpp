#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "helpers.hpp"
#include "swapalg/errors.hpp"
#include "swapalg/expr.hpp"

namespace swapalg {
namespace {

using testing::A;
using testing::G;
using testing::pts;

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = cli::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(Parser, Atoms) {
  PointSet points(4);
  ExprPtr pair = parse_expr("a1.a2", points);
  EXPECT_EQ(pair->kind, Expr::Kind::Pair);
  EXPECT_EQ(pair->points, pts({1, 2}));
  ExprPtr det = parse_expr("det([a1,a2];[a3,a4])", points);
  EXPECT_EQ(det->kind, Expr::Kind::Det);
  EXPECT_EQ(det->split, 2U);
  EXPECT_EQ(det->points, pts({1, 2, 3, 4}));
  EXPECT_EQ(parse_expr("E([a2]; a3, a1)", points)->kind, Expr::Kind::Ratio);
  EXPECT_EQ(parse_expr("cf(a1,a2,a3,a4)", points)->kind, Expr::Kind::Cross);
}

TEST(Parser, MinorEvaluatesToDeterminant) {
  RankContext ctx(2, PointSet(4));
  FractionElement minor = evaluate(*parse_expr("a1.a3*a2.a4 - a1.a4*a2.a3", ctx.points()), ctx);
  EXPECT_EQ(minor.num(), determinant(pts({1, 2}), pts({3, 4})));
  EXPECT_EQ(minor.den(), PairPoly::constant(1));
  EXPECT_EQ(evaluate(*parse_expr("det([a1,a2];[a3,a4])", ctx.points()), ctx).num(), minor.num());
}

TEST(Parser, PrecedenceAndAssociativity) {
  RankContext ctx(2, PointSet(4));
  auto value = [&](const std::string& text) { return evaluate(*parse_expr(text, ctx.points()), ctx).num(); };
  EXPECT_EQ(value("1 - 2 - 3"), PairPoly::constant(-4));
  EXPECT_EQ(value("2 * 3 ^ 2"), PairPoly::constant(18));
  EXPECT_EQ(value("-a1.a2^2"), -(G(1, 2) * G(1, 2)));
  EXPECT_EQ(value("(a1.a2 + a3.a4) * 2"), Rational(2) * (G(1, 2) + G(3, 4)));
  RankContext rank2(2, PointSet(4));
  FractionElement q = evaluate(*parse_expr("8 / 2 / 2", rank2.points()), rank2);
  EXPECT_TRUE(frac_equal(q, FractionElement::constant(2), rank2).is_zero());
}

TEST(Parser, RoundTripCorpus) {
  PointSet points(6);
  for (const char* text : {"a1.a2", "-a1.a2 + 3", "a1.a2 * (a3.a4 - a5.a6) ^ 2", "(a1.a2 - a3.a4) / (a5.a6 + 1)",
                           "det([a1,a2];[a3,a4]) - det([a1];[a6])", "E([a2]; a3, a1)", "E([a2,a4]; a3, a1; [a5,a6,a1])",
                           "cf(a1,a2,a3,a4) * cf(a2,a3,a4,a5)", "1 - (2 - 3)", "a1.a2 / (a3.a4 * a5.a6)",
                           "(a1.a2 ^ 2) ^ 3", "-(a1.a2 + a2.a3)", "2 ^ 3 * 4 / 5 - -6"}) {
    ExprPtr first = parse_expr(text, points);
    std::string rendered = render(*first);
    ExprPtr second = parse_expr(rendered, points);
    EXPECT_TRUE(*first == *second) << text << " -> " << rendered;
    EXPECT_EQ(render(*second), rendered);
  }
  EXPECT_EQ(render(*parse_expr("E([a2];a3,a1)", points)), "E([a2]; a3, a1)");
  EXPECT_EQ(render(*parse_expr("cf( a1 , a2,a3,a4 )", points)), "cf(a1,a2,a3,a4)");
}

TEST(Parser, Errors) {
  PointSet points(4);
  try {
    parse_expr("a1.a2 + * a3.a4", points);
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 8U);
  }
  EXPECT_THROW(parse_expr("a1.a9", points), InvalidInput);
  EXPECT_THROW(parse_expr("det([a1,a2];[a3])", points), ParseError);
  EXPECT_THROW(parse_expr("(a1.a2", points), ParseError);
  EXPECT_THROW(parse_expr("a1.a2 ^ -1", points), ParseError);
  EXPECT_THROW(parse_expr("", points), ParseError);
}

TEST(Cli, JacobiPasses) {
  CliRun r = run({"verify", "jacobi", "--points", "5", "--alpha", "1", "--beta", "0"});
  EXPECT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_NE(r.out.find("PASS: 20 items, 8000 identities"), std::string::npos);
}

TEST(Cli, MainTheoremSixPairs) {
  CliRun r = run({"verify", "main-theorem", "--rank", "2", "--points", "4", "--subset", "1,2", "--alpha", "1", "--beta", "0",
               "--seed", "7", "--format", "json"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["task"], "main-theorem");
  EXPECT_EQ(j["items"].size(), 6U);
  EXPECT_TRUE(j["pass"].get<bool>());
  EXPECT_EQ(j["parameters"]["seed"], 7);
  EXPECT_EQ(j["parameters"]["I"], nlohmann::json::array({1, 2}));
  for (const auto& item : j["items"]) EXPECT_FALSE(item.contains("elapsed_ms"));
}

TEST(Cli, ReduceMinorIsZero) {
  CliRun r = run({"reduce", "--rank", "2", "--points", "4", "--expr", "det([a1,a2,a3];[a2,a3,a4])"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_EQ(r.out, "0\n");
}

TEST(Cli, BracketAndIsZero) {
  CliRun b = run({"bracket", "--points", "4", "--expr", "a1.a3", "--expr", "a2.a4"});
  EXPECT_EQ(b.out, "1 * a1.a4 * a2.a3\n");
  CliRun z = run({"iszero", "--points", "4", "--expr", "a1.a2"});
  EXPECT_EQ(z.code, cli::kVerificationFailed);
  CliRun y = run({"iszero", "--points", "4", "--expr", "det([a1,a2,a3];[a1,a2,a4])"});
  EXPECT_EQ(y.code, cli::kOk);
  EXPECT_EQ(y.out.rfind("ProvedZero", 0), 0U);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"verify", "jacobi", "--bogus"}).code, cli::kUsage);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kUsage);
  EXPECT_EQ(run({"verify", "jacobi", "--format", "xml"}).code, cli::kUsage);
  EXPECT_EQ(run({"verify", "main-theorem", "--subset", "2,1"}).code, cli::kUsage);
  EXPECT_EQ(run({"verify", "main-theorem", "--subset", "1,2", "--rank", "3"}).code, cli::kUsage);
  EXPECT_EQ(run({"verify", "jacobi", "--prime", "1000"}).code, cli::kUsage);
  EXPECT_EQ(run({"reduce", "--points", "4", "--expr", "a1.a2 +"}).code, cli::kParse);
  EXPECT_EQ(run({"reduce", "--points", "4", "--expr", "a1.a7"}).code, cli::kParse);
  EXPECT_EQ(run({"reduce", "--points", "4", "--expr", "a1.a2 / 0"}).code, cli::kPrecondition);
  EXPECT_EQ(run({"reduce", "--points", "4", "--expr", "cf(a1,a2,a3,a1)"}).code, cli::kPrecondition);
  EXPECT_EQ(run({"--help"}).code, cli::kOk);
}

TEST(Cli, ReportsAreDeterministic) {
  std::vector<std::string> args{"verify", "det-ratio-independence", "--rank", "2", "--points", "5", "--samples", "6",
                                "--seed", "3", "--format", "json"};
  CliRun a = run(args);
  CliRun b = run(args);
  args.insert(args.end(), {"--jobs", "3"});
  CliRun c = run(args);
  EXPECT_EQ(a.code, cli::kOk);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out, c.out);
}

TEST(Cli, OracleSettingsPrecedence) {
  auto seed_of = [](const CliRun& r) { return nlohmann::json::parse(r.out)["parameters"]; };
  std::filesystem::path config = std::filesystem::temp_directory_path() / "swapalg_test_config.json";
  std::ofstream(config) << R"({"trials": 7, "seed": 9})";
  ::setenv("SWAPALG_TRIALS", "5", 1);
  std::vector<std::string> base{"verify", "lemma01", "--points", "4", "--subset", "1,2", "--format", "json"};
  EXPECT_EQ(seed_of(run(base))["trials"], 5);
  auto with_config = base;
  with_config.insert(with_config.end(), {"--config", config.string()});
  EXPECT_EQ(seed_of(run(with_config))["trials"], 7);
  EXPECT_EQ(seed_of(run(with_config))["seed"], 9);
  with_config.insert(with_config.end(), {"--trials", "3"});
  EXPECT_EQ(seed_of(run(with_config))["trials"], 3);
  ::unsetenv("SWAPALG_TRIALS");
  std::ofstream(config) << R"({"trials": 7, "colour": 1})";
  EXPECT_EQ(run({"verify", "lemma01", "--points", "4", "--config", config.string()}).code, cli::kUsage);
  std::filesystem::remove(config);
}

TEST(Cli, NetworkFixtures) {
  CliRun mirrored = run({"verify", "network", "--file", testing::data_path("gr24.net"), "--alpha", "1", "--beta", "1",
                      "--rule", "mirrored"});
  EXPECT_EQ(mirrored.code, cli::kOk) << mirrored.out;
  CliRun single = run({"verify", "network", "--file", testing::data_path("gr12.net")});
  EXPECT_EQ(single.code, cli::kOk) << single.out;
  CliRun missing = run({"verify", "network", "--file", "/nonexistent.net"});
  EXPECT_EQ(missing.code, cli::kUsage);
}

}  // namespace
}  // namespace swapalg
