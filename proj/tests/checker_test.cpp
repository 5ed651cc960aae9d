#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <set>

#include "ccl/checker.hpp"
#include "ccl/serialize.hpp"
#include "support/derivations.hpp"

namespace ccl {
namespace {

using namespace ccl::testing;

std::size_t count_premises_under(const Instance& inst, const std::string& y, std::size_t eqs) {
  std::size_t k = 0;
  for (const auto& p : inst.premises) k += p.psi.contains(y) && p.xi.size() == eqs;
  return k;
}

TEST(Catalog, IdsAreUniqueAndComplete) {
  std::set<std::string> ids;
  for (const auto& r : rule_catalog()) {
    EXPECT_TRUE(ids.insert(r.id).second) << r.id;
    EXPECT_FALSE(r.paragraph.empty()) << r.id;
    EXPECT_FALSE(r.conclusion.empty()) << r.id;
    EXPECT_TRUE(r.build) << r.id;
  }
  EXPECT_EQ(ids.size(), 109u);
  for (const char* id : {"struct/hyp", "restrict/eps-neq", "comp/tm", "kan/hcom", "kan/com-tube", "fun/eta", "sg/eta",
                         "path/eta", "eq/eta", "void/elim", "nat/beta-suc", "bool/elim", "wbool/elim", "circle/elim",
                         "ua/eta", "univ/cumulativity", "univ/box-eta"}) {
    EXPECT_NE(find_rule(id), nullptr) << id;
  }
}

TEST(Catalog, BoolFormationHasNoPremises) {
  const RuleSchema* r = find_rule("bool/form-kan");
  ASSERT_NE(r, nullptr);
  EXPECT_TRUE(r->premises.empty());
  Instance i = instantiate_rule("bool/form-kan", {});
  EXPECT_TRUE(i.premises.empty());
  EXPECT_TRUE(same_judgment(i.conclusion, eq_type(Kind::Kan, parse("bool"), parse("bool"))));
}

TEST(Catalog, HcomWithTwoTubesHasFourAdjacencyPremises) {
  Instance i = instantiate_rule(
      "kan/hcom", {{"Psi", Ctx({"x"})}, {"A", T("bool")}, {"A'", T("bool")}, {"r", D("0")}, {"r'", D("1")},
                   {"M", T("true")}, {"M'", T("true")}, {"y", Name("y")},
                   {"N", Tubes({{"x=0", "true"}, {"x=1", "false"}})}, {"N'", Tubes({{"x=0", "true"}, {"x=1", "false"}})}});
  EXPECT_EQ(count_premises_under(i, "y", 2), 4u);
  EXPECT_EQ(i.premises.size(), 3u + 4u + 2u);
  EXPECT_EQ(i.premises[0].form.kind, FormKind::WfShape);
  EXPECT_EQ(i.premises[0].form.shape, parse_equations("x=0, x=1"));
  // The (i=0, j=1) adjacency premise sits under both equations with y bound.
  const Judgment& adj = i.premises[4];
  EXPECT_EQ(adj.xi, parse_equations("x=0, x=1"));
  EXPECT_EQ(adj.form.lhs, parse("true"));
  EXPECT_EQ(adj.form.rhs, parse("false"));
  // Cap premises substitute r for y.
  EXPECT_EQ(i.premises[7].xi, parse_equations("x=0"));
}

TEST(Catalog, CumulativityComparesLevels) {
  const RuleSchema* r = find_rule("univ/cumulativity");
  ASSERT_NE(r, nullptr);
  ASSERT_EQ(r->side_conditions.size(), 1u);
  EXPECT_EQ(r->side_conditions[0], "i ≤ j");
  auto inst = [](unsigned i, unsigned j) {
    return instantiate_rule("univ/cumulativity",
                            {{"k", Kan()}, {"i", Lvl(i)}, {"j", Lvl(j)}, {"A", T("bool")}, {"A'", T("bool")}});
  };
  EXPECT_TRUE(inst(0, 0).side_conditions[0].holds);
  EXPECT_TRUE(inst(0, 3).side_conditions[0].holds);
  EXPECT_FALSE(inst(2, 1).side_conditions[0].holds);
}

TEST(Catalog, FunctionIntroductionExtendsTheContext) {
  Instance i = instantiate_rule("fun/intro", {{"a", Name("a")}, {"A", T("bool")}, {"B", T("nat")}, {"M", T("zero")},
                                              {"M'", T("zero")}});
  ASSERT_EQ(i.premises.size(), 1u);
  ASSERT_EQ(i.premises[0].gamma.size(), 1u);
  EXPECT_EQ(i.premises[0].gamma[0].var, "a");
  EXPECT_EQ(i.premises[0].gamma[0].type, parse("bool"));
  EXPECT_EQ(i.conclusion.form.type, parse("pi (a : bool) nat"));
}

TEST(Catalog, ContradictoryRestrictionNeedsNoPremises) {
  Instance i = instantiate_rule("restrict/eps-neq", {{"J", J(tm("true", "false", "bool"))}, {"eps", D("1")}});
  EXPECT_TRUE(i.premises.empty());
  EXPECT_TRUE(std::holds_alternative<Vacuous>(expand_restriction(i.conclusion)));
}

TEST(Catalog, InstantiationErrors) {
  EXPECT_THROW(instantiate_rule("no/such-rule", {}), InstantiationError);
  EXPECT_THROW(instantiate_rule("nat/suc", {{"M", T("zero")}}), InstantiationError);
  EXPECT_THROW(instantiate_rule("nat/suc", {{"M", T("zero")}, {"M'", T("zero")}, {"Q", T("zero")}}),
               InstantiationError);
  EXPECT_THROW(instantiate_rule("nat/suc", {{"M", D("0")}, {"M'", T("zero")}}), InstantiationError);
  EXPECT_THROW(instantiate_rule("circle/loop-eps", {{"eps", D("x")}}), InstantiationError);
  EXPECT_THROW(instantiate_rule("kan/hcom", {{"A", T("bool")}, {"A'", T("bool")}, {"r", D("0")}, {"r'", D("1")},
                                             {"M", T("true")}, {"M'", T("true")}, {"y", Name("y")},
                                             {"N", Tubes({{"0=0", "true"}})}, {"N'", Tubes({{"1=1", "true"}})}}),
               InstantiationError);
}

TEST(Restriction, Expansion) {
  Judgment j = in_ctx(tm("loop x", "loop y", "S1"), {"x", "y"}, "x=y, y=0");
  auto e = expand_restriction(j);
  ASSERT_TRUE(std::holds_alternative<Plain>(e));
  const Judgment& out = std::get<Plain>(e).judgments.at(0);
  EXPECT_TRUE(out.psi.empty());
  EXPECT_TRUE(out.xi.empty());
  EXPECT_EQ(out.form.lhs, parse("loop 0"));
  EXPECT_EQ(out.form.rhs, parse("loop 0"));

  EXPECT_TRUE(std::holds_alternative<Vacuous>(expand_restriction(in_ctx(tm("true", "true", "bool"), {"x"}, "x=0, x=1"))));
  EXPECT_TRUE(std::holds_alternative<Vacuous>(expand_restriction(in_ctx(tm("true", "true", "bool"), {}, "1=0"))));
  auto refl = expand_restriction(in_ctx(tm("true", "true", "bool"), {"x"}, "x=x, 0=0"));
  ASSERT_TRUE(std::holds_alternative<Plain>(refl));
  EXPECT_EQ(std::get<Plain>(refl).judgments.at(0).psi, DimCtx{"x"});
  EXPECT_THROW(expand_restriction(in_ctx(tm("true", "true", "bool"), {}, "z=0")), ScopeError);
}

TEST(Restriction, NameEquationsKeepTheSmallerName) {
  auto e = expand_restriction(in_ctx(tm("loop y", "loop x", "S1"), {"x", "y"}, "y=x"));
  const Judgment& out = std::get<Plain>(e).judgments.at(0);
  EXPECT_EQ(out.psi, DimCtx{"x"});
  EXPECT_EQ(out.form.lhs, parse("loop x"));
}

TEST(Restriction, OrderDoesNotMatter) {
  const char* lists[] = {"x=y, y=0", "x=y, y=z, z=1", "x=0, y=x, y=1", "z=y, x=z", "x=x, y=1, 0=0", "x=y, y=x"};
  for (const char* xi : lists) {
    Judgment j = in_ctx(tm("dapp (dlam w. loop w) x", "loop y", "S1"), {"x", "y", "z"}, xi);
    auto l = expand_restriction(j, ExpansionOrder::LeftToRight);
    auto r = expand_restriction(j, ExpansionOrder::RightToLeft);
    ASSERT_EQ(l.index(), r.index()) << xi;
    if (std::holds_alternative<Plain>(l)) {
      EXPECT_TRUE(same_judgment(std::get<Plain>(l).judgments.at(0), std::get<Plain>(r).judgments.at(0))) << xi;
    }
  }
}

TEST(Check, ComputationRuleDerivation) {
  Derivation ok = node("comp/tm",
                       {{"M", T("if (b. bool) true false true")}, {"M'", T("false")}, {"N", T("false")},
                        {"A", T("bool")}},
                       {node("bool/false", {})});
  CheckReport r = check_derivation(ok);
  EXPECT_TRUE(r.ok) << r.reason;

  Derivation bad = ok;
  bad.conclusion = tm("if (b. bool) true false true", "true", "bool");
  CheckReport e = check_derivation(bad);
  EXPECT_FALSE(e.ok);
  EXPECT_TRUE(e.path.empty());
  EXPECT_NE(e.reason.find("conclusion"), std::string::npos) << e.reason;
}

TEST(Check, CorpusDerivationsAreAccepted) {
  auto corpus = derivation_corpus();
  EXPECT_GE(corpus.size(), 20u);
  for (const auto& [name, d] : corpus) {
    CheckReport r = check_derivation(d);
    EXPECT_TRUE(r.ok) << name << ": " << r.reason;
  }
}

TEST(Check, ReportsThePathToTheFailingPremise) {
  Derivation d = node("sg/intro",
                      {{"a", Name("a")}, {"A", T("bool")}, {"B", T("nat")}, {"M", T("true")}, {"M'", T("true")},
                       {"N", T("zero")}, {"N'", T("zero")}},
                      {node("bool/true", {}), node("bool/true", {})});
  CheckReport r = check_derivation(d);
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.path, std::vector<std::size_t>{1});

  Derivation deep = node("wbool/bool", {{"M", T("true")}, {"M'", T("true")}}, {node("bool/true", {})});
  deep.children[0].inst["Psi"] = Ctx({"x"});
  CheckReport r2 = check_derivation(deep);
  EXPECT_FALSE(r2.ok);
  EXPECT_EQ(r2.path, std::vector<std::size_t>{0});
}

TEST(Check, WrongNumberOfChildren) {
  Derivation d = node("nat/suc", {{"M", T("zero")}, {"M'", T("zero")}});
  CheckReport r = check_derivation(d);
  EXPECT_FALSE(r.ok);
  EXPECT_NE(r.reason.find("premises"), std::string::npos);
}

TEST(Check, SideConditionsAreEnforced) {
  Derivation d = node("univ/cumulativity",
                      {{"k", Kan()}, {"i", Lvl(2)}, {"j", Lvl(1)}, {"A", T("bool")}, {"A'", T("bool")}},
                      {node("univ/bool", {{"k", Kan()}, {"i", Lvl(2)}})});
  CheckReport r = check_derivation(d);
  EXPECT_FALSE(r.ok);
  EXPECT_NE(r.reason.find("i ≤ j"), std::string::npos) << r.reason;
}

TEST(Check, ComputationRequiresAStableStep) {
  Derivation d = node("comp/tm",
                      {{"Psi", Ctx({"x"})}, {"M", T("S1elim (c. S1) (loop x) base (z. loop z)")}, {"M'", T("loop x")},
                       {"N", T("loop x")}, {"A", T("S1")}},
                      {node("circle/loop", {{"Psi", Ctx({"x"})}, {"r", D("x")}})});
  CheckReport r = check_derivation(d);
  EXPECT_FALSE(r.ok);
  EXPECT_NE(r.reason.find("not cubically stable"), std::string::npos) << r.reason;

  Derivation wrong = node("comp/tm", {{"M", T("if (b. bool) true false true")}, {"M'", T("true")}, {"N", T("true")},
                                      {"A", T("bool")}},
                          {node("bool/true", {})});
  CheckReport r2 = check_derivation(wrong);
  EXPECT_FALSE(r2.ok);
  EXPECT_NE(r2.reason.find("steps to false"), std::string::npos) << r2.reason;
}

TEST(Check, IllScopedConclusionIsRejected) {
  Derivation d = node("circle/loop", {{"r", D("x")}});
  CheckReport r = check_derivation(d);
  EXPECT_FALSE(r.ok);
  EXPECT_NE(r.reason.find("outside Ψ"), std::string::npos) << r.reason;
}

TEST(Check, FreshnessOfBinders) {
  Derivation d = node("fun/intro",
                      {{"Gamma", MetaValue(std::vector<Hyp>{{"a", parse("nat")}})}, {"a", Name("a")},
                       {"A", T("bool")}, {"B", T("bool")}, {"M", T("a")}, {"M'", T("a")}},
                      {assume(tm("a", "a", "bool"))});
  CheckOptions opts;
  opts.assume = [](const Judgment&) { return true; };
  CheckReport r = check_derivation(d, opts);
  EXPECT_FALSE(r.ok);
  EXPECT_NE(r.reason.find("∉ dom Γ"), std::string::npos) << r.reason;
}

TEST(Check, AssumptionsNeedAnOracle) {
  Derivation d = node("nat/suc", {{"M", T("zero")}, {"M'", T("zero")}}, {assume(tm("zero", "zero", "nat"))});
  EXPECT_FALSE(check_derivation(d).ok);
  CheckOptions opts;
  opts.assume = [](const Judgment& j) { return j.form.lhs == parse("zero"); };
  EXPECT_TRUE(check_derivation(d, opts).ok);
  opts.assume = [](const Judgment&) { return false; };
  EXPECT_FALSE(check_derivation(d, opts).ok);
}

TEST(Check, EveryCorpusNodeIsSoundWithAssumedPremises) {
  CheckOptions opts;
  opts.assume = [](const Judgment&) { return true; };
  std::function<void(const Derivation&)> visit = [&](const Derivation& d) {
    Derivation shallow = d;
    for (auto& c : shallow.children) c = assume(c.conclusion);
    CheckReport r = check_derivation(shallow, opts);
    EXPECT_TRUE(r.ok) << d.rule << ": " << r.reason;
    for (const auto& c : d.children) visit(c);
  };
  for (const auto& [name, d] : derivation_corpus()) visit(d);
}

TEST(Check, JsonRoundTrip) {
  for (const auto& [name, d] : derivation_corpus()) {
    Json j = derivation_to_json(d);
    Derivation back = derivation_from_json(Json::parse(j.dump()));
    EXPECT_TRUE(same_judgment(back.conclusion, d.conclusion)) << name;
    CheckReport r = check_derivation(back);
    EXPECT_TRUE(r.ok) << name << ": " << r.reason;
    EXPECT_EQ(derivation_to_json(back), j) << name;
  }
}

TEST(Check, ConcreteSyntaxInJson) {
  Json j = Json::parse(R"({
    "rule": "comp/tm",
    "conclusion": {"form": {"kind": "eqtm", "lhs": "if (b. bool) true false true", "rhs": "false", "type": "bool"}},
    "inst": {"M": "if (b. bool) true false true", "M'": "false", "N": "false", "A": "bool"},
    "children": [{"rule": "bool/false", "conclusion": {"form": {"kind": "eqtm", "lhs": "false", "rhs": "false", "type": "bool"}}, "inst": {}}]
  })");
  EXPECT_TRUE(check_derivation(derivation_from_json(j)).ok);
  j["inst"]["Q"] = "zero";
  EXPECT_THROW(derivation_from_json(j), FormatError);
}

TEST(Serialize, TermAstRoundTrip) {
  for (const char* s : {"lam a. app a (lam a. a)", "natrec (suc zero) zero (n a. suc a)",
                        "hcom S1 x ~> y (loop x) [x=0 z. loop z] [y=1 w. base]", "box 0 ~> x true [x=0 false]",
                        "S1elim (c. S1) base base (x. loop x)", "U kan 3", "pi (a : bool) (path (x. bool) a a)"}) {
    Term t = parse(s);
    Json j = term_to_json(t);
    EXPECT_EQ(term_from_json(Json::parse(j.dump())), t) << s << " -> " << j.dump();
  }
  Json lam = term_to_json(parse("lam a. a"));
  EXPECT_EQ(lam["tag"], "lam");
  EXPECT_EQ(lam["args"][0]["bind"][0], "a");
  EXPECT_THROW(term_from_json(Json::parse(R"({"tag": "nope"})")), FormatError);
  EXPECT_THROW(term_from_json(Json::parse(R"({"tag": "loop", "dims": []})")), FormatError);
}

TEST(Corpus, CheckedInFilesMatchTheBuilders) {
  std::size_t files = 0;
  for (const auto& f : std::filesystem::directory_iterator(CCL_CORPUS_DIR "/derivations")) files += f.path().extension() == ".json";
  auto corpus = derivation_corpus();
  EXPECT_EQ(files, corpus.size());
  for (const auto& [name, d] : corpus) {
    std::ifstream in(std::string(CCL_CORPUS_DIR "/derivations/") + name + ".json");
    ASSERT_TRUE(in) << name;
    EXPECT_EQ(Json::parse(in), derivation_to_json(d)) << name << " is stale; rerun make_derivations";
  }
}

}  // namespace
}  // namespace ccl
