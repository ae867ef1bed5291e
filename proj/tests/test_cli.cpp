#include <gtest/gtest.h>

#include <sstream>
#include <string>
#include <vector>

#include "qaseries/cli.hpp"
#include "qaseries/expr.hpp"
#include "qaseries/io.hpp"

using namespace qaseries;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run_command(args, out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST(Cli, PrepareExample) {
  const CliResult r = run({"prepare", "--vars", "2", "--trunc", "8", "--var", "2",
                     "-e", "x2^2 + x1"});
  EXPECT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_TRUE(contains(r.out, "U = 1\n")) << r.out;
  EXPECT_TRUE(contains(r.out, "a2 = x1\n")) << r.out;
  EXPECT_TRUE(r.err.empty());
}

TEST(Cli, HoloExample) {
  const CliResult r = run({"holo", "--trunc", "12", "-e", "x1^2 + x1^3"});
  EXPECT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_TRUE(contains(r.out, "u = x1^2 + -1*x2^2 + x1^3 + -3*x1*x2^2\n")) << r.out;
  EXPECT_TRUE(contains(r.out, "v = 2*x1*x2 + 3*x1^2*x2 + -1*x2^3\n")) << r.out;
  EXPECT_TRUE(contains(r.out, "CR: PASS\n")) << r.out;
}

TEST(Cli, HoloNormalizesAndAcceptsCoefficientList) {
  const CliResult r = run({"holo", "--trunc", "8", "--coeffs", "5,2,3"});
  EXPECT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_TRUE(contains(r.out, "q = -5 + -2*x1 + -2*x1^2 + x1^3\n")) << r.out;
  EXPECT_TRUE(contains(r.out, "CR: PASS\n"));
}

TEST(Cli, DivideFlatIsPrecondition) {
  const CliResult r = run({"divide", "--vars", "2", "--trunc", "8", "--var", "2",
                     "-g", "1", "-f", "x1"});
  EXPECT_EQ(r.code, cli::kPrecondition);
  EXPECT_TRUE(r.out.empty());
  EXPECT_TRUE(contains(r.err, "FLAT"));
}

TEST(Cli, Divide) {
  const CliResult r = run({"divide", "--var", "2", "-g", "x2^3", "-f", "x2^2 + x1"});
  EXPECT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_TRUE(contains(r.out, "q = x2\n"));
  EXPECT_TRUE(contains(r.out, "r = -1*x1*x2\n"));
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, cli::kUsage);
  EXPECT_EQ(run({"bogus"}).code, cli::kUsage);
  EXPECT_EQ(run({"prepare"}).code, cli::kUsage);
  EXPECT_EQ(run({"prepare", "-e", "x2^"}).code, cli::kUsage);
  EXPECT_EQ(run({"prepare", "-e", "x3"}).code, cli::kUsage);
  EXPECT_EQ(run({"prepare", "--trunc", "abc", "-e", "x2"}).code, cli::kUsage);
  EXPECT_EQ(run({"prepare", "--var", "5", "-e", "x2"}).code, cli::kUsage);
  EXPECT_EQ(run({"--help"}).code, cli::kOk);
}

TEST(Cli, PreconditionErrors) {
  EXPECT_EQ(run({"prepare", "-e", "x1"}).code, cli::kPrecondition);
  EXPECT_EQ(run({"implicit", "-e", "x2^2 + x1"}).code, cli::kPrecondition);
  EXPECT_EQ(run({"lemma", "-e", "x2^2"}).code, cli::kPrecondition);
  EXPECT_EQ(run({"prepare", "-e", "inv(x1)"}).code, cli::kPrecondition);
}

TEST(Cli, CrCheckFailureIsReportedNotFatal) {
  const CliResult r = run({"cr-check", "-f", "x1", "-g", "-1*x2"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_TRUE(contains(r.out, "CR: FAIL\n")) << r.out;
}

TEST(Cli, ImplicitNamesSolutionVariables) {
  const CliResult r = run({"implicit", "--vars", "3", "--var", "2", "--trunc", "3",
                     "-e", "x1 + 2*x2 + x3*x2"});
  EXPECT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_TRUE(contains(r.out, "phi = -1/2*x1 + 1/4*x1*x2 + -1/8*x1*x2^2\n")) << r.out;
  EXPECT_TRUE(contains(r.out, "phi_variables = x1 x3\n")) << r.out;
}

TEST(Cli, JsonSeriesReparse) {
  const CliResult r = run({"lemma", "--json", "-e", "(x1+x2)^2 + (x1+x2)^3"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["command"], "lemma");
  for (const char* key : {"f0", "f1"}) {
    const Series s = series_from_json(doc[key]);
    const Series back = parse_series(doc[key]["canonical"].get<std::string>(),
                                     s.nvars(), s.trunc());
    EXPECT_EQ(back.terms(), s.terms()) << key;
  }
}
