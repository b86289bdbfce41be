#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = mmetric::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& file) { return std::string(MMETRIC_TEST_DATA) + "/" + file; }

nlohmann::json parse(const Run& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST(Cli, ValidateCorpusSpace) {
  const auto r = run({"validate", "corpus:e2a"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(parse(r)["class"], "m_metric");
  EXPECT_EQ(run({"validate", "corpus:e2a", "--expect", "partial_metric"}).code, 1);
  EXPECT_EQ(run({"validate", data("e2a.json"), "--expect", "m_metric"}).code, 0);
}

TEST(Cli, AsymmetricFileIsInvalidInput) {
  const auto r = run({"validate", data("asymmetric.json")});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("witness: (0,1)"), std::string::npos) << r.err;
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({"validate", "corpus:e2a", "--bogus"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"validate", "corpus:nonesuch"}).code, 2);
  EXPECT_EQ(run({"validate", data("missing.json")}).code, 2);
  EXPECT_EQ(run({"validate", "--help"}).code, 0);
}

TEST(Cli, BanachOnHalving) {
  const auto r = run({"fixpoint", "--system", "corpus:halving", "--mode", "banach", "--k", "0.5"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = parse(r);
  EXPECT_EQ(doc["status"], "fixed_point");
  EXPECT_EQ(doc["point"], 0.0);
  EXPECT_EQ(doc["uniqueness"]["unique"], true);
}

TEST(Cli, KannanPreconditionFailureExitsOne) {
  const auto r = run({"fixpoint", "--system", "corpus:halving", "--mode", "kannan", "--k", "0.2"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("Kannan condition"), std::string::npos) << r.err;
}

TEST(Cli, SolveRejectsAlternatingOrbit) {
  const auto r = run({"fixpoint", "--system", data("swap_system.json")});
  EXPECT_EQ(r.code, 1);
  const auto doc = parse(r);
  EXPECT_EQ(doc["status"], "orbit_not_r_cauchy");
  EXPECT_EQ(doc["branch"], "none");
  EXPECT_TRUE(doc["point"].is_null());
}

TEST(Cli, FiniteSpaceWithInlineMap) {
  const auto r = run({"fixpoint", "--system", "corpus:maxline", "--map", "1:0,2:1,3:2", "--x0", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(parse(r)["point"], "0");
}

TEST(Cli, OutputIsDeterministic) {
  const std::vector<std::string> args{"gen", "--n", "5", "--seed", "17"};
  const auto a = run(args);
  const auto b = run(args);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out, run({"gen", "--n", "5", "--seed", "18"}).out);
  const auto fz = run({"fuzz", "--trials", "20", "--seed", "3"});
  EXPECT_EQ(fz.out, run({"fuzz", "--trials", "20", "--seed", "3"}).out);
  EXPECT_EQ(fz.code, 0) << fz.err;
}

TEST(Cli, SequenceOfAlternatingTerms) {
  const auto r = run({"sequence", "--system", "corpus:e2b_alternating"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(parse(r)["cauchy"]["status"], "not_cauchy");
  const auto ok = run({"sequence", "--space", "corpus:e2b", "--terms",
                       "a,a,a,a,a,a,a,a,a,a,a,a,a,a,a,a,a,a,a,a,a,a,a,a,a,a,a,a,a,a,a,a", "--limit", "a"});
  EXPECT_EQ(ok.code, 0) << ok.err;
}

TEST(Cli, CorpusCommands) {
  const auto list = run({"corpus", "list"});
  ASSERT_EQ(list.code, 0);
  EXPECT_NE(list.out.find("sumline"), std::string::npos);
  const auto verify = run({"corpus", "verify"});
  EXPECT_EQ(verify.code, 0) << verify.out;

  const std::string path = ::testing::TempDir() + "cli_emit.json";
  ASSERT_EQ(run({"corpus", "emit", "e2a", "--out", path}).code, 0);
  const auto back = run({"validate", path});
  EXPECT_EQ(back.code, 0) << back.err;
  EXPECT_EQ(parse(back)["class"], "m_metric");
  std::remove(path.c_str());
}

TEST(Cli, TopologyAndCertify) {
  EXPECT_EQ(run({"topology-compare", "corpus:sumline", "--expect", "left_strictly_coarser"}).code, 0);
  EXPECT_EQ(run({"topology-compare", "corpus:sumline", "--expect", "equal"}).code, 1);
  const auto cert = run({"certify", "--system", "corpus:halving", "--kind", "c_r", "--c", "0.5"});
  EXPECT_EQ(cert.code, 0) << cert.err;
  EXPECT_EQ(run({"certify", "--system", "corpus:e2b_swap", "--kind", "c_r", "--c", "0.5"}).code, 1);
}

TEST(Cli, TextFormat) {
  const auto r = run({"validate", "corpus:e2a", "--format", "text"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("class: m_metric"), std::string::npos) << r.out;
}
