#include <gtest/gtest.h>

#include "ccl/corpus.hpp"
#include "ccl/proptest.hpp"

namespace ccl {
namespace {

SuiteOptions small(std::uint64_t seed, std::size_t n = 500) {
  SuiteOptions o;
  o.n = n;
  o.seed = seed;
  return o;
}

class Suites : public ::testing::TestWithParam<std::string> {};

TEST_P(Suites, PassOnASmallRun) {
  SuiteOptions o = small(1);
  if (GetParam() == "coherence-bool") o.bool_programs = bool_programs(load_corpus(CCL_CORPUS_DIR "/canonicity"));
  SuiteResult r = run_suite(GetParam(), o);
  EXPECT_TRUE(r.ok()) << r.failure->detail << "\nshrunk: " << print(r.failure->shrunk.term);
  EXPECT_EQ(r.cases, o.n);
  EXPECT_GE(r.checks, o.n);
}

INSTANTIATE_TEST_SUITE_P(All, Suites, ::testing::ValuesIn(suite_names()),
                         [](const auto& info) {
                           std::string s = info.param;
                           for (auto& c : s) c = c == '-' ? '_' : c;
                           return s;
                         });

TEST(Suites, ResultsDoNotDependOnThreadCount) {
  SuiteOptions one = small(5, 300);
  one.threads = 1;
  SuiteOptions four = one;
  four.threads = 4;
  SuiteResult a = run_suite("stability", one);
  SuiteResult b = run_suite("stability", four);
  EXPECT_EQ(a.checks, b.checks);
  EXPECT_EQ(a.rule_hits, b.rule_hits);
}

TEST(Suites, UnknownSuiteIsRejected) {
  EXPECT_THROW(run_suite("nope", small(0)), std::invalid_argument);
  EXPECT_THROW(run_suite("coherence-bool", small(0)), std::invalid_argument);
}

TEST(Oracle, MatchesExactlyOneRule) {
  auto chain = [](const char* s) {
    auto m = matching_rules(parse(s));
    return m.size() == 1 ? m[0].chain : std::vector<std::string>{"<" + std::to_string(m.size()) + ">"};
  };
  using V = std::vector<std::string>;
  EXPECT_EQ(chain("app (lam a. a) zero"), V{"fun/beta"});
  EXPECT_EQ(chain("fst (app (lam a. a) (pair true zero))"), (V{"pair/fst-cong", "fun/beta"}));
  EXPECT_EQ(chain("loop x"), V{"circle/loop-val"});
  EXPECT_EQ(chain("fcom 0 ~> 1 true [0=0 y. false]"), V{"kan/fcom-tube"});
  EXPECT_EQ(chain("fcom x ~> x true [0=0 y. false]"), V{"kan/fcom-eq"});
  EXPECT_EQ(chain("coe x.(V x bool bool e) 0 ~> 1 true"), V{"ua/coe-0"});
  EXPECT_EQ(chain("coe x.(V y bool bool e) 0 ~> 1 true"), V{"ua/coe-other"});
  EXPECT_EQ(chain("cap 0 ~> x (box 0 ~> x true [x=0 false]) [x=0 y. bool]"), V{"univ/cap-box"});
  EXPECT_TRUE(matching_rules(parse("fst true")).empty());
  EXPECT_TRUE(matching_rules(parse("a")).empty());
}

TEST(Oracle, FreeDimensions) {
  EXPECT_EQ(free_dim_names(parse("hcom S1 x ~> y (loop z) [w=0 v. loop v]")),
            (std::set<std::string>{"w", "x", "y", "z"}));
  EXPECT_TRUE(free_dim_names(parse("dlam i. loop i")).empty());
}

TEST(Shrink, ChildrenFirstAndDeterministic) {
  Term big = parse("if (b. bool) (app (lam a. a) (fst (pair true zero))) (suc zero) false");
  auto has_suc = [](const Term& t) {
    std::function<bool(const Term&)> go = [&](const Term& u) {
      if (u.tag() == Tag::Suc) return true;
      for (const auto& a : u.node().args)
        if (go(a.body)) return true;
      return false;
    };
    return go(t);
  };
  Term s1 = shrink(big, has_suc);
  Term s2 = shrink(big, has_suc);
  EXPECT_EQ(s1, s2);
  EXPECT_EQ(s1, parse("suc zero"));
  EXPECT_EQ(shrink(big, [](const Term&) { return false; }), big);
}

TEST(Shrink, ReportsAShrunkCounterexample) {
  // A suite failure is forced by a program that is not boolean.
  SuiteOptions o = small(2, 5);
  o.bool_programs = {Sample{{}, parse("suc zero")}};
  SuiteResult r = run_suite("coherence-bool", o);
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.failure->index, 0u);
  EXPECT_NE(r.failure->detail.find("non-boolean"), std::string::npos) << r.failure->detail;
}

}  // namespace
}  // namespace ccl
