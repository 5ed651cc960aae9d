#include <gtest/gtest.h>

#include "ccl/syntax.hpp"

namespace ccl {
namespace {

using namespace mk;

Dim X() { return Dim::name("x"); }
Dim Y() { return Dim::name("y"); }

TEST(Syntax, FreeDimensions) {
  EXPECT_EQ(fd(loop(X())), (std::set<std::string>{"x"}));
  EXPECT_TRUE(fd(dlam("x", loop(X()))).empty());
  Term h = hcom(bool_(), X(), Y(), tt(), {tube(Dim::name("z"), Dim::zero(), "w", tt())});
  EXPECT_EQ(fd(h), (std::set<std::string>{"x", "y", "z"}));
  Term t = hcom(bool_(), X(), Y(), tt(), {tube(Dim::name("z"), Dim::zero(), "w", loop(Dim::name("w")))});
  EXPECT_EQ(fd(t), (std::set<std::string>{"x", "y", "z"}));
}

TEST(Syntax, FreeVariables) {
  EXPECT_EQ(free_vars(app(var("f"), lam("a", var("a")))), (std::set<std::string>{"f"}));
  EXPECT_TRUE(free_vars(natrec(zero(), zero(), "n", "a", suc(var("a")))).empty());
}

TEST(Syntax, DimensionSubstitution) {
  EXPECT_EQ(dsubst(loop(X()), Dim::zero(), "x"), loop(Dim::zero()));
  Term p = dlam("y", dapp(var("p"), X()));
  Term out = dsubst(p, Y(), "x");
  EXPECT_EQ(out, dlam("w", dapp(var("p"), Y())));
  EXPECT_NE(out, dlam("y", dapp(var("p"), Dim::name("w"))));
  Term v = V(X(), var("A"), var("B"), var("E"));
  EXPECT_EQ(dsubst(v, Dim::zero(), "x"), V(Dim::zero(), var("A"), var("B"), var("E")));
  Term under = V(X(), loop(X()), var("B"), var("E"));
  EXPECT_EQ(dsubst(under, Dim::one(), "x"), V(Dim::one(), loop(Dim::one()), var("B"), var("E")));
}

TEST(Syntax, DimensionSubstitutionIntoTubes) {
  Term h = hcom(bool_(), X(), Y(), tt(), {tube(X(), Dim::zero(), "y", loop(Dim::name("y")))});
  Term out = dsubst(h, Dim::one(), "x");
  EXPECT_EQ(out, hcom(bool_(), Dim::one(), Y(), tt(), {tube(Dim::one(), Dim::zero(), "q", loop(Dim::name("q")))}));
}

TEST(Syntax, SelfSubstitutionIsIdentity) {
  Term m = parse("dlam y. hcom S1 x ~> y (loop x) [x=0 z. loop z]");
  EXPECT_EQ(dsubst(m, X(), "x"), m);
}

TEST(Syntax, TermSubstitution) {
  EXPECT_EQ(tsubst(var("a"), var("z"), "a"), var("z"));
  EXPECT_EQ(tsubst(lam("a", var("a")), var("z"), "a"), lam("a", var("a")));
  EXPECT_EQ(tsubst(suc(var("a")), var("z"), "a"), suc(var("z")));
  Term cap = lam("b", app(var("a"), var("b")));
  EXPECT_EQ(tsubst(cap, var("b"), "a"), lam("c", app(var("b"), var("c"))));
}

TEST(Syntax, ApplySubstitution) {
  DimSubst to_zero({"x"}, {}, {{"x", Dim::zero()}});
  EXPECT_EQ(apply_subst(loop(X()), to_zero), loop(Dim::zero()));
  Term m = parse("dapp p x");
  EXPECT_EQ(apply_subst(m, DimSubst::identity({"x"})), m);
  DimSubst rename({"x"}, {"y"}, {{"x", Y()}});
  EXPECT_EQ(apply_subst(m, rename), dapp(var("p"), Y()));
}

TEST(Syntax, ApplySubstitutionIsSimultaneous) {
  Term m = pair(loop(X()), loop(Y()));
  DimSubst swap({"x", "y"}, {"x", "y"}, {{"x", Y()}, {"y", X()}});
  EXPECT_EQ(apply_subst(m, swap), pair(loop(Y()), loop(X())));
}

TEST(Syntax, ApplySubstitutionRejectsIllScopedTerms) {
  DimSubst to_zero({"x"}, {}, {{"x", Dim::zero()}});
  EXPECT_THROW(apply_subst(loop(Y()), to_zero), ScopeError);
}

TEST(Syntax, SubstitutionFunctoriality) {
  Term m = parse("hcom S1 x ~> y (loop z) [x=y w. loop w] [z=0 w. loop x]");
  DimSubst p1({"x", "y", "z"}, {"u", "v"}, {{"x", Dim::name("u")}, {"y", Dim::name("v")}, {"z", Dim::name("u")}});
  DimSubst p2({"u", "v"}, {}, {{"u", Dim::one()}, {"v", Dim::zero()}});
  EXPECT_EQ(apply_subst(apply_subst(m, p1), p2), apply_subst(m, compose_subst(p1, p2)));
}

TEST(Syntax, AlphaEquality) {
  EXPECT_TRUE(alpha_eq(parse("lam a. a"), parse("lam b. b")));
  EXPECT_TRUE(alpha_eq(parse("dlam x. loop x"), parse("dlam y. loop y")));
  EXPECT_FALSE(alpha_eq(parse("loop x"), parse("loop y")));
  EXPECT_FALSE(alpha_eq(parse("lam a. lam b. a"), parse("lam a. lam b. b")));
  EXPECT_TRUE(alpha_eq(parse("natrec zero zero (n a. suc a)"), parse("natrec zero zero (m r. suc r)")));
  EXPECT_FALSE(alpha_eq(parse("natrec zero zero (n a. suc a)"), parse("natrec zero zero (n a. suc n)")));
}

TEST(Syntax, ParsesSpecimenTerms) {
  EXPECT_EQ(parse("lam a. a"), lam("a", var("a")));
  EXPECT_EQ(parse("hcom bool 0~>1 true [x=0 y. true] [x=1 y. true]"),
            hcom(bool_(), Dim::zero(), Dim::one(), tt(),
                 {tube_const(X(), Dim::zero(), tt()), tube_const(X(), Dim::one(), tt())}));
  EXPECT_EQ(parse("coe x.bool 0~>1 true"), coe("x", bool_(), Dim::zero(), Dim::one(), tt()));
  EXPECT_EQ(parse("coe (x. bool) 0 ~> 1 true"), coe("x", bool_(), Dim::zero(), Dim::one(), tt()));
  EXPECT_EQ(parse("U kan 3"), ukan(3));
  EXPECT_EQ(parse("-- a comment\nfst (pair true false)"), fst(pair(tt(), ff())));
}

TEST(Syntax, ParsesEveryConstructor) {
  const char* cases[] = {
      "pi (a : bool) bool",
      "sg (a : nat) (path (x. nat) a a)",
      "eq bool true false",
      "void",
      "wbool",
      "S1",
      "U pre 0",
      "V x bool bool e",
      "Vin x true false",
      "Vproj x m f",
      "app f true",
      "snd p",
      "dapp p 1",
      "*",
      "natrec (suc zero) zero (n a. suc (suc a))",
      "if (b. bool) true false true",
      "S1elim (c. S1) base base (x. loop x)",
      "com (y. bool) 0 ~> 1 true [x=0 y. true]",
      "fcom 0 ~> 1 true [x=0 y. true] [x=1 y. true]",
      "ghcom bool 0 ~> 1 true [x=0 y. true]",
      "gcom (y. bool) 0 ~> 1 true",
      "box 0 ~> x true [x=0 false]",
      "cap 0 ~> x m [x=0 y. bool]",
  };
  for (const char* c : cases) {
    Term t = parse(c);
    EXPECT_EQ(parse(print(t)), t) << c << " printed as " << print(t);
  }
}

TEST(Syntax, PrintsCanonicalForms) {
  EXPECT_EQ(print(lam("a", var("a"))), "lam a. a");
  EXPECT_EQ(print(loop(Dim::zero())), "loop 0");
  EXPECT_EQ(print(star()), "*");
  EXPECT_EQ(print(parse("app (lam a. a) zero")), "app (lam a. a) zero");
  EXPECT_EQ(print(parse("hcom bool 0~>1 true [x=0 y. true]")), "hcom bool 0 ~> 1 true [x=0 y. true]");
}

TEST(Syntax, PrinterAvoidsCapture) {
  Term m = lam("a", app(var("a"), var("a1")));
  Term shadow = Term::make([&] {
    Node n = m.node();
    n.args[0].binders[0].hint = "a1";
    return n;
  }());
  EXPECT_EQ(parse(print(shadow)), shadow);
  Term d = dlam("x", pair(loop(X()), loop(Dim::name("x1"))));
  EXPECT_EQ(parse(print(dsubst(d, Dim::name("x"), "x1"))), dsubst(d, Dim::name("x"), "x1"));
}

TEST(Syntax, ParseErrorsCarryPositions) {
  try {
    parse("app (lam a. a");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1u);
    EXPECT_GT(e.column(), 1u);
  }
  EXPECT_THROW(parse("lam . a"), ParseError);
  EXPECT_THROW(parse("true false"), ParseError);
  EXPECT_THROW(parse("loop"), ParseError);
  EXPECT_THROW(parse("U kan"), ParseError);
}

TEST(Syntax, ParsesDimensionsAndEquations) {
  EXPECT_EQ(parse_dim("0"), Dim::zero());
  EXPECT_EQ(parse_dim("x"), X());
  EquationList eqs = parse_equations("x=0, y=z");
  ASSERT_EQ(eqs.size(), 2u);
  EXPECT_EQ(eqs[1], (Equation{Y(), Dim::name("z")}));
}

TEST(Syntax, ShapeValidation) {
  Node bad;
  bad.tag = Tag::App;
  bad.args = {Scope{{}, tt()}};
  EXPECT_THROW(Term::make(bad), std::logic_error);
}

TEST(Syntax, EquivalenceBuilder) {
  Term e = equiv(bool_(), bool_());
  EXPECT_EQ(e.tag(), Tag::Sigma);
  EXPECT_TRUE(free_vars(e).empty());
  EXPECT_TRUE(fd(e).empty());
  EXPECT_TRUE(locally_closed(e));
}

TEST(Syntax, FreshAvoidsEverything) {
  Fresh f(parse("pair (loop x) (dlam x1. a)"));
  EXPECT_EQ(f.dim("x"), "x1");
  EXPECT_EQ(f.dim("x"), "x2");
  EXPECT_EQ(f.var("a"), "a1");
}

}  // namespace
}  // namespace ccl
