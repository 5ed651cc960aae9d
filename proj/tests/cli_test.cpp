#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "ccl/serialize.hpp"
#include "support/derivations.hpp"

namespace ccl {
namespace {

struct Result {
  int code;
  std::string out;
};

Result run(const std::string& args) {
  std::string cmd = std::string("\"") + CCL_BINARY + "\" " + args + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  std::string out;
  std::array<char, 4096> buf;
  for (std::size_t n; (n = std::fread(buf.data(), 1, buf.size(), p)) > 0;) out.append(buf.data(), n);
  int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

class Cli : public ::testing::Test {
 protected:
  std::filesystem::path dir = std::filesystem::temp_directory_path() /
                              ("ccl_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
                               ::testing::UnitTest::GetInstance()->current_test_info()->name());

  void SetUp() override { std::filesystem::create_directories(dir); }
  void TearDown() override { std::filesystem::remove_all(dir); }

  std::string file(const std::string& name, const std::string& content) {
    std::filesystem::path p = dir / name;
    std::ofstream(p) << content;
    return "\"" + p.string() + "\"";
  }
};

TEST_F(Cli, EvalPrintsTheCanonicalForm) {
  Result r = run("eval " + file("a.ccl", "fst (pair (loop 0) true)\n"));
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "base\n");
}

TEST_F(Cli, EvalReportsStuckTerms) {
  Result r = run("eval " + file("a.ccl", "fst true\n"));
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("error: stuck"), std::string::npos) << r.out;
}

TEST_F(Cli, EvalReportsFuelExhaustion) {
  Result r = run("eval --fuel 1 " + file("a.ccl", "if (b. bool) (if (b. bool) true false true) true false\n"));
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("fuel"), std::string::npos) << r.out;
}

TEST_F(Cli, FuelComesFromTheEnvironment) {
  std::string f = file("a.ccl", "if (b. bool) (if (b. bool) true false true) true false\n");
  setenv("CCL_FUEL", "1", 1);
  Result starved = run("eval " + f);
  unsetenv("CCL_FUEL");
  EXPECT_EQ(starved.code, 1);
  EXPECT_NE(starved.out.find("fuel"), std::string::npos) << starved.out;
  EXPECT_EQ(run("eval " + f).out, "false\n");
}

TEST_F(Cli, ParseErrorsAreUsageErrors) {
  Result r = run("eval " + file("a.ccl", "lam x.\n"));
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("parse error"), std::string::npos) << r.out;
}

TEST_F(Cli, MissingFileIsAUsageError) { EXPECT_EQ(run("eval /nonexistent/file.ccl").code, 2); }

TEST_F(Cli, UnknownSubcommandIsAUsageError) { EXPECT_EQ(run("frobnicate").code, 2); }

TEST_F(Cli, TraceNamesEachRule) {
  Result r = run("trace " + file("a.ccl", "app (lam x. x) true\n"));
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("[fun/beta, stable]"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("1. true"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("after 1 step"), std::string::npos) << r.out;
}

TEST_F(Cli, TraceMarksUnstableSteps) {
  Result r = run("trace " + file("a.ccl", "S1elim (c. bool) (loop x) true (i. true)\n"));
  EXPECT_NE(r.out.find("[circle/elim-loop, unstable]"), std::string::npos) << r.out;
}

TEST_F(Cli, TraceOfAnEmptyGhcom) {
  Result r = run("trace " + file("a.ccl", "ghcom bool 0 ~> 1 true\n"));
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("[kan/ghcom-nil, stable]"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("after 1 step"), std::string::npos) << r.out;
}

TEST_F(Cli, TraceReportsFuelExhaustion) {
  Result r = run("trace --fuel 1 " + file("a.ccl", "if (b. bool) (if (b. bool) true false true) true false\n"));
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("fuel exhausted after 1 step\n"), std::string::npos) << r.out;
}

TEST_F(Cli, TraceJsonParses) {
  Result r = run("trace --json " + file("a.ccl", "app (lam x. x) true\n"));
  ASSERT_EQ(r.code, 0);
  Json j = Json::parse(r.out);
  ASSERT_EQ(j["steps"].size(), 1u);
  EXPECT_EQ(j["steps"][0]["rule"], "fun/beta");
}

TEST_F(Cli, HeaderLinesAreIgnored) {
  Result r = run("eval " + file("a.ccl", "# name: t\n# tags: bool\n# expect: false\nif (b. bool) true false true\n"));
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "false\n");
}

TEST_F(Cli, CheckAcceptsTheCorpus) {
  for (const auto& f : std::filesystem::directory_iterator(CCL_CORPUS_DIR "/derivations")) {
    Result r = run("check \"" + f.path().string() + "\"");
    EXPECT_EQ(r.code, 0) << f.path() << "\n" << r.out;
    EXPECT_EQ(r.out.rfind("ok: ", 0), 0u) << r.out;
  }
}

TEST_F(Cli, CheckReportsTheFailingPath) {
  Derivation d;
  for (auto& [name, x] : testing::derivation_corpus()) {
    if (name == "if-computation") d = x;
  }
  ASSERT_FALSE(d.rule.empty());
  Json j = derivation_to_json(d);
  j["conclusion"]["form"]["rhs"] = {{"tag", "true"}};
  Result r = run("check " + file("d.json", j.dump()));
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out.rfind("error at [", 0), 0u) << r.out;
}

TEST_F(Cli, CheckNamesFalseSideConditions) {
  Derivation d = testing::node("comp/tm",
                               {{"M", testing::T("if (b. bool) true false true")},
                                {"M'", testing::T("true")},
                                {"N", testing::T("true")},
                                {"A", testing::T("bool")}},
                               {testing::node("bool/true", {})});
  Result r = run("check --json " + file("d.json", derivation_to_json(d).dump()));
  EXPECT_EQ(r.code, 1);
  Json rep = Json::parse(r.out);
  EXPECT_FALSE(rep["ok"].get<bool>());
  EXPECT_NE(rep["reason"].get<std::string>().find("steps to false"), std::string::npos) << r.out;
}

TEST_F(Cli, CheckRejectsMalformedJson) { EXPECT_EQ(run("check " + file("d.json", "{\"rule\": ")).code, 2); }

TEST_F(Cli, CanonicityPassesOnTheCorpus) {
  Result r = run("canonicity " CCL_CORPUS_DIR "/canonicity");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos) << r.out;
}

TEST_F(Cli, CanonicityFailsOnAWrongExpectation) {
  file("p.ccl", "# tags: bool\n# expect: true\nif (b. bool) true false true\n");
  Result r = run("canonicity \"" + dir.string() + "\"");
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("FAIL"), std::string::npos) << r.out;
}

TEST_F(Cli, ProptestRunsASuite) {
  Result r = run("proptest exclusivity --n 200 --seed 3 --coverage");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("exclusivity: PASS"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("rules exercised:"), std::string::npos) << r.out;
}

TEST_F(Cli, ProptestRejectsUnknownSuites) { EXPECT_EQ(run("proptest nonsense").code, 2); }

}  // namespace
}  // namespace ccl
