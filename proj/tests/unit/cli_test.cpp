#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "cli.hpp"
#include "flagcert/densities.hpp"
#include "flagcert/model_table.hpp"
#include "flagcert/verifier.hpp"
#include "monte_carlo.hpp"
#include "test_support.hpp"

namespace flagcert::cli {
namespace {

struct Result {
  int code = -1;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  Result r;
  r.code = run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string data(const std::string& name) { return flagcert::testing::data_path(name); }

std::string scratch_file(const std::string& name, const std::string& contents) {
  const auto path = std::filesystem::path(::testing::TempDir()) / name;
  std::ofstream(path) << contents;
  return path.string();
}

std::string mutated_certificate() {
  std::string text = flagcert::testing::read_data("w5.cert");
  const std::string needle = "[matrix M0+]";
  auto at = text.find(needle);
  at = text.find("rows = 4\n", at) + 9;
  at = text.find_first_not_of(' ', at);
  const auto end = text.find(' ', at);
  const long value = std::stol(text.substr(at, end - at));
  text.replace(at, end - at, std::to_string(value + 1));
  return text;
}

std::string zero_matrix(std::string text, const std::string& name) {
  auto at = text.find("[matrix " + name + "]");
  at = text.find("rows =", at);
  at = text.find('\n', at) + 1;
  const auto end = text.find('[', at);
  for (auto i = at; i < end; ++i)
    if (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '-') text[i] = text[i] == '-' ? ' ' : '0';
  return text;
}

TEST(Cli, VerifyShipped) {
  const Result r = run_cli({"verify", data("w5.cert")});
  EXPECT_EQ(r.code, kSuccess);
  EXPECT_NE(r.out.find("PASS: identity holds over 156 models; 7/7 matrices positive definite"), std::string::npos);
}

TEST(Cli, VerifyMutated) {
  const Result r = run_cli({"verify", scratch_file("mutated.cert", mutated_certificate())});
  EXPECT_EQ(r.code, kVerificationFailed);
  EXPECT_NE(r.out.find("FAIL"), std::string::npos);
  EXPECT_NE(r.out.find("first nonzero residual"), std::string::npos);
}

TEST(Cli, VerifyMissingFile) { EXPECT_EQ(run_cli({"verify", data("missing.cert")}).code, kInputError); }

TEST(Cli, VerifyWritesJsonReport) {
  const auto path = (std::filesystem::path(::testing::TempDir()) / "report.json").string();
  const Result r = run_cli({"--output", path, "verify", data("goodman_k3.cert")});
  EXPECT_EQ(r.code, kSuccess);
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  EXPECT_NE(s.str().find("\"verdict\": \"PASS\""), std::string::npos);
}

TEST(Cli, Enumerate) {
  EXPECT_EQ(run_cli({"enumerate", "6"}).out, "156\n");
  EXPECT_EQ(run_cli({"enumerate", "2"}).out, "2\n");
  EXPECT_EQ(run_cli({"enumerate", "5"}).out, "34\n");
  EXPECT_EQ(run_cli({"enumerate", "9"}).code, kInputError);
  const Result listed = run_cli({"enumerate", "3", "--list"});
  EXPECT_EQ(listed.out, "4\n-\n2-3\n1-3,2-3\n1-2,1-3,2-3\n");
}

TEST(Cli, Density) {
  EXPECT_EQ(run_cli({"density", data("graphs/w5.graph"), data("graphs/k6.graph")}).out, "1\n");
  EXPECT_EQ(run_cli({"density", data("graphs/k2.graph"), data("graphs/p3.graph"), "--mode", "induced"}).out, "2/3\n");
  EXPECT_EQ(run_cli({"density", data("graphs/w5.graph"), data("graphs/w5.graph"), "--mode", "injective"}).out, "1/72\n");
  EXPECT_EQ(run_cli({"density", data("graphs/w5.graph"), data("graphs/p3.graph")}).code, kInputError);
  EXPECT_EQ(run_cli({"density", data("graphs/k2.graph"), data("graphs/p3.graph"), "--mode", "other"}).code, kInputError);
  const std::string bad = scratch_file("dup.graph", "3\n1 2\n1 2\n");
  const Result r = run_cli({"density", data("graphs/k2.graph"), bad});
  EXPECT_EQ(r.code, kInputError);
  EXPECT_NE(r.err.find("line 3"), std::string::npos);
}

TEST(Cli, CommonEstimateOnCompleteGraph) {
  const Result r = run_cli({"common-estimate", "--n", "6", "--samples", "1", "--graph", data("graphs/k6.graph")});
  EXPECT_EQ(r.code, kSuccess);
  EXPECT_NE(r.out.find("estimate = 1\n"), std::string::npos);
}

TEST(Cli, CommonEstimateRejectsZeroSamples) {
  EXPECT_EQ(run_cli({"common-estimate", "--n", "40", "--samples", "0"}).code, kInputError);
}

TEST(Cli, CommonEstimateIsSeededAndReproducible) {
  const std::vector<std::string> args{"--seed", "5", "common-estimate", "--n", "20", "--samples", "20000"};
  const Result a = run_cli(args);
  const Result b = run_cli(args);
  EXPECT_EQ(a.code, kSuccess);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("mt19937_64"), std::string::npos);
  const Result c = run_cli({"--seed", "6", "common-estimate", "--n", "20", "--samples", "20000"});
  EXPECT_NE(a.out, c.out);
}

TEST(Cli, InferTypes) {
  const Result one = run_cli({"infer-types", data("w5.template.cert")});
  EXPECT_EQ(one.code, kSuccess);
  EXPECT_NE(one.out.find("assignment 1:"), std::string::npos);
  EXPECT_NE(one.out.find("sigma4: edges = 1-2, 3-4"), std::string::npos);
  const Result two = run_cli({"--jobs", "3", "infer-types", data("w5.template.cert")});
  EXPECT_EQ(one.out, two.out);
}

TEST(Cli, InferTypesZeroedMatrix) {
  const std::string text = zero_matrix(flagcert::testing::read_data("w5.template.cert"), "M2+");
  const Result r = run_cli({"infer-types", scratch_file("zeroed.template.cert", text)});
  EXPECT_EQ(r.code, kVerificationFailed);
  EXPECT_NE(r.out.find("no consistent assignment"), std::string::npos);
}

TEST(Cli, InferTypesMalformed) {
  const Result r = run_cli({"infer-types", scratch_file("bad.cert", "[type s]\nk = x\n")});
  EXPECT_EQ(r.code, kInputError);
}

TEST(Cli, ExportPassing) {
  const auto path = (std::filesystem::path(::testing::TempDir()) / "residual.tsv").string();
  ASSERT_EQ(run_cli({"export", data("w5.cert"), path}).code, kSuccess);
  std::ifstream in(path);
  std::string line;
  int rows = 0;
  while (std::getline(in, line)) {
    if (line.starts_with("#")) continue;
    ++rows;
    EXPECT_TRUE(line.ends_with("\t0")) << line;
  }
  EXPECT_EQ(rows, 156);
}

TEST(Cli, ExportZeroed) {
  std::string text = flagcert::testing::read_data("w5.cert");
  for (const char* m : {"M0+", "M1+", "M2+", "M3+", "M4+", "M1-", "M4-"}) text = zero_matrix(text, m);
  const Result r = run_cli({"export", scratch_file("zeroed.cert", text)});
  EXPECT_EQ(r.code, kSuccess);
  const ModelTable& table = model_table(6);
  const std::string cycle = compact_edge_list(table.model(table.index_of(SmallGraph::cycle(6)))) + "\t";
  std::istringstream in(r.out);
  std::string line;
  int rows = 0;
  bool cycle_row = false;
  while (std::getline(in, line)) {
    if (line.starts_with("#")) continue;
    ++rows;
    if (line.starts_with(cycle)) {
      cycle_row = true;
      EXPECT_TRUE(line.ends_with("\t-1/512")) << line;
    }
  }
  EXPECT_TRUE(cycle_row);
  EXPECT_EQ(rows, 156);
}

TEST(Cli, ExportUnwritable) {
  EXPECT_EQ(run_cli({"export", data("goodman_k3.cert"), "/nonexistent-dir/out.tsv"}).code, kInputError);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run_cli({}).code, kInputError);
  EXPECT_EQ(run_cli({"frobnicate"}).code, kInputError);
  EXPECT_EQ(run_cli({"--bogus", "enumerate", "3"}).code, kInputError);
  EXPECT_EQ(run_cli({"enumerate", "abc"}).code, kInputError);
  EXPECT_EQ(run_cli({"--help"}).code, kSuccess);
}

TEST(Cli, VerifyIsDeterministic) {
  const Result a = run_cli({"verify", data("goodman_k3.cert")});
  const Result b = run_cli({"verify", data("goodman_k3.cert")});
  EXPECT_EQ(a.code, kSuccess);
  EXPECT_EQ(a.out, b.out);
}

TEST(MonteCarlo, UniformBelowStaysInRange) {
  std::mt19937_64 rng(1);
  for (std::uint64_t bound : {1ULL, 2ULL, 3ULL, 40ULL, 1000000007ULL})
    for (int i = 0; i < 1000; ++i) EXPECT_LT(uniform_below(rng, bound), bound);
}

TEST(MonteCarlo, CompleteHostGivesOne) {
  std::mt19937_64 rng(0);
  const auto est = estimate_common(SmallGraph::wheel(5), DenseGraph(SmallGraph::complete(8)), 100, rng);
  EXPECT_EQ(est.mean, 1.0);
  EXPECT_EQ(est.standard_error, 0.0);
}

TEST(MonteCarlo, EstimateAgreesWithExactDensity) {
  std::mt19937 graph_rng(31);
  const SmallGraph wheel = SmallGraph::wheel(5);
  for (int trial = 0; trial < 3; ++trial) {
    const SmallGraph g = flagcert::testing::random_graph(9, graph_rng, 0.6);
    const double exact = (t0(wheel, g).value() + t0(wheel, g.complement()).value()).to_double();
    std::mt19937_64 rng(trial);
    const auto est = estimate_common(wheel, DenseGraph(g), 200000, rng);
    EXPECT_LE(std::abs(est.mean - exact), 5 * est.standard_error + 1e-12) << "trial " << trial;
  }
}

}  // namespace
}  // namespace flagcert::cli
