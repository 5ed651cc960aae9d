#include <gtest/gtest.h>

#include "ccl/cube.hpp"

namespace ccl {
namespace {

Dim x() { return Dim::name("x"); }
Dim y() { return Dim::name("y"); }
Dim z() { return Dim::name("z"); }

TEST(Cube, ApplyDimMapsNamesAndFixesConstants) {
  DimSubst to_zero({"x"}, {}, {{"x", Dim::zero()}});
  EXPECT_EQ(apply_dim(to_zero, x()), Dim::zero());

  DimSubst to_y({"x"}, {"y"}, {{"x", y()}});
  EXPECT_EQ(apply_dim(to_y, Dim::one()), Dim::one());

  DimSubst merge({"x", "y"}, {"z"}, {{"x", z()}, {"y", z()}});
  EXPECT_EQ(apply_dim(merge, y()), z());
}

TEST(Cube, ApplyDimRejectsNamesOutsideSource) {
  DimSubst to_zero({"x"}, {}, {{"x", Dim::zero()}});
  EXPECT_THROW(apply_dim(to_zero, y()), ScopeError);
}

TEST(Cube, SubstitutionMustBeTotalAndLandInTarget) {
  EXPECT_THROW(DimSubst({"x", "y"}, {}, {{"x", Dim::zero()}}), ScopeError);
  EXPECT_THROW(DimSubst({"x"}, {"y"}, {{"x", z()}}), ScopeError);
  EXPECT_THROW(DimSubst({"x"}, {}, {{"x", Dim::zero()}, {"w", Dim::one()}}), ScopeError);
}

TEST(Cube, DimCtxRejectsDuplicates) {
  DimCtx ctx{"x"};
  EXPECT_THROW(ctx.insert("x"), ScopeError);
  EXPECT_TRUE(ctx.contains(Dim::one()));
  EXPECT_FALSE(ctx.contains(y()));
}

TEST(Cube, Composition) {
  DimSubst p1({"x"}, {"y"}, {{"x", y()}});
  DimSubst p2({"y"}, {}, {{"y", Dim::zero()}});
  DimSubst c = compose_subst(p1, p2);
  EXPECT_EQ(c.source(), DimCtx{"x"});
  EXPECT_TRUE(c.target().empty());
  EXPECT_EQ(apply_dim(c, x()), Dim::zero());

  DimSubst id = DimSubst::identity({"x"});
  DimSubst psi({"x"}, {"z"}, {{"x", z()}});
  EXPECT_EQ(compose_subst(id, psi), psi);

  DimSubst to_one({"x"}, {"z"}, {{"x", Dim::one()}});
  DimSubst idz = DimSubst::identity({"z"});
  EXPECT_EQ(apply_dim(compose_subst(to_one, idz), x()), Dim::one());
}

TEST(Cube, CompositionRejectsMismatchedContexts) {
  DimSubst p1({"x"}, {"y"}, {{"x", y()}});
  DimSubst p2({"z"}, {}, {{"z", Dim::zero()}});
  EXPECT_THROW(compose_subst(p1, p2), ScopeError);
}

TEST(Cube, Satisfies) {
  EXPECT_TRUE(satisfies(DimSubst({"x"}, {}, {{"x", Dim::zero()}}), {{x(), Dim::zero()}}));
  EXPECT_FALSE(satisfies(DimSubst::identity({"x", "y"}), {{x(), y()}}));
  EXPECT_TRUE(satisfies(DimSubst({"x", "y"}, {"z"}, {{"x", z()}, {"y", z()}}), {{x(), y()}}));
  EXPECT_TRUE(satisfies(DimSubst::identity({"x"}), {}));
}

TEST(Cube, SatisfiesIsUnoriented) {
  DimSubst psi({"x"}, {}, {{"x", Dim::one()}});
  EXPECT_TRUE(satisfies(psi, {{x(), Dim::one()}}));
  EXPECT_TRUE(satisfies(psi, {{Dim::one(), x()}}));
}

TEST(Cube, Valid) {
  EXPECT_TRUE(valid({{x(), Dim::zero()}, {x(), Dim::one()}}));
  EXPECT_TRUE(valid({{Dim::zero(), Dim::zero()}}));
  EXPECT_FALSE(valid({{x(), y()}}));
  EXPECT_FALSE(valid({}));
  EXPECT_FALSE(valid({{x(), Dim::zero()}, {y(), Dim::one()}}));
  EXPECT_TRUE(valid({{x(), Dim::one()}, {y(), Dim::zero()}, {x(), Dim::zero()}}));
}

TEST(Cube, ValidIgnoresWitnessOrder) {
  EquationList a{{x(), Dim::one()}, {y(), y()}, {x(), Dim::zero()}};
  EquationList b(a.rbegin(), a.rend());
  EXPECT_EQ(valid(a), valid(b));
}

TEST(Cube, Printing) {
  EXPECT_EQ(to_string({{x(), Dim::zero()}, {y(), z()}}), "x=0, y=z");
  EXPECT_EQ(Dim::one().str(), "1");
}

TEST(Cube, FreshNamesAreDeterministic) {
  EXPECT_EQ(fresh_name("x", {}), "x");
  EXPECT_EQ(fresh_name("x", {"x"}), "x1");
  EXPECT_EQ(fresh_name("x", {"x", "x1", "x7"}), "x8");
  EXPECT_EQ(fresh_name("x3", {"x3"}), "x4");
  EXPECT_EQ(fresh_name("", {}), "x");
}

}  // namespace
}  // namespace ccl
