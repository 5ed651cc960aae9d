#include <sstream>

#include "ccl/checker.hpp"

namespace ccl {

namespace {

using B = RuleBuilder;
using Tubes = std::vector<TubeInst>;

constexpr Kind kKan = Kind::Kan;
constexpr Kind kPre = Kind::Pre;

std::vector<MetaVar> parse_metavars(const std::string& spec) {
  static const std::map<std::string, MetaSort> sorts = {
      {"term", MetaSort::Term},       {"dim", MetaSort::Dim},       {"const", MetaSort::Const},
      {"dimvar", MetaSort::DimVar},   {"termvar", MetaSort::TermVar}, {"level", MetaSort::Level},
      {"index", MetaSort::Index},     {"kind", MetaSort::KindSort}, {"eqs", MetaSort::Eqs},
      {"tubes", MetaSort::Tubes},     {"caps", MetaSort::Caps},     {"judgment", MetaSort::Judg},
      {"subst", MetaSort::Subst},
  };
  std::vector<MetaVar> out;
  std::istringstream in(spec);
  std::string item;
  while (in >> item) {
    auto colon = item.find(':');
    out.push_back({item.substr(0, colon), sorts.at(item.substr(colon + 1))});
  }
  return out;
}

Dim zero() { return Dim::zero(); }
Dim one() { return Dim::one(); }

EquationList eqs_of(const Tubes& ts) {
  EquationList out;
  for (const auto& t : ts) out.push_back(t.eq);
  return out;
}

void same_eqs(const Tubes& a, const Tubes& b, const std::string& na, const std::string& nb) {
  if (eqs_of(a) != eqs_of(b)) {
    throw InstantiationError("tube lists " + na + " and " + nb + " disagree on their equations");
  }
}

System bind_tubes(const Tubes& ts, const std::string& y) {
  System out;
  for (const auto& t : ts) out.push_back(mk::tube(t.eq.lhs, t.eq.rhs, y, t.body));
  return out;
}

System cap_faces(const Tubes& ts) {
  System out;
  for (const auto& t : ts) out.push_back(mk::cap_face(t.eq.lhs, t.eq.rhs, t.body));
  return out;
}

/// Requires index i to name a tube whose equation is reflexive.
bool tube_side(B& b, const Tubes& ts, std::size_t i) {
  if (i >= ts.size()) {
    b.side("tube index i is in range", false, std::to_string(i) + " >= " + std::to_string(ts.size()));
    return false;
  }
  b.side("r_i = r_i'", ts[i].eq.reflexive(), ts[i].eq.str());
  return ts[i].eq.reflexive();
}

// ∀i,j: Ψ,y ⊢ N_i = N'_j : A ⟨r_i=r_i', r_j=r_j'⟩
void adjacent_tubes(B& b, const Tubes& n, const Tubes& n2, const std::string& y, const Term& a) {
  for (std::size_t i = 0; i < n.size(); ++i) {
    for (std::size_t j = 0; j < n2.size(); ++j) {
      b.premise(B::with_dim(B::under(b.tm_eq(n[i].body, n2[j].body, a), {n[i].eq, n2[j].eq}), y));
    }
  }
}

// ∀i: Ψ ⊢ N_i⟨r/y⟩ = M : A ⟨r_i=r_i'⟩
void cap_tubes(B& b, const Tubes& n, const std::string& y, const Dim& r, const Term& m, const Term& a) {
  for (const auto& t : n) b.premise(B::under(b.tm_eq(dsubst(t.body, r, y), m, a), {t.eq}));
}

// ∀i,j: Ψ,y ⊢ B_i = B'_j type Kan ⟨r_i=r_i', r_j=r_j'⟩
void adjacent_types(B& b, const Tubes& bs, const Tubes& bs2, const std::string& y) {
  for (std::size_t i = 0; i < bs.size(); ++i) {
    for (std::size_t j = 0; j < bs2.size(); ++j) {
      b.premise(B::with_dim(B::under(b.type_eq(kKan, bs[i].body, bs2[j].body), {bs[i].eq, bs2[j].eq}), y));
    }
  }
}

// ∀i: Ψ ⊢ B_i⟨r/y⟩ = A type Kan ⟨r_i=r_i'⟩
void base_types(B& b, const Tubes& bs, const std::string& y, const Dim& r, const Term& a) {
  for (const auto& t : bs) b.premise(B::under(b.type_eq(kKan, dsubst(t.body, r, y), a), {t.eq}));
}

// ∀i,j: Ψ ⊢ N_i = N'_j : B_i⟨r'/y⟩ ⟨r_i=r_i', r_j=r_j'⟩
void adjacent_caps(B& b, const Tubes& n, const Tubes& n2, const Tubes& bs, const std::string& y, const Dim& r2) {
  for (std::size_t i = 0; i < n.size(); ++i) {
    for (std::size_t j = 0; j < n2.size(); ++j) {
      b.premise(B::under(b.tm_eq(n[i].body, n2[j].body, dsubst(bs[i].body, r2, y)), {n[i].eq, n2[j].eq}));
    }
  }
}

// ∀i: Ψ ⊢ coe y.B_i r'~>r N_i = M : A ⟨r_i=r_i'⟩
void coherent_caps(B& b, const Tubes& n, const Tubes& bs, const std::string& y, const Dim& r, const Dim& r2,
                   const Term& m, const Term& a) {
  for (std::size_t i = 0; i < n.size(); ++i) {
    b.premise(B::under(b.tm_eq(mk::coe(y, bs[i].body, r2, r, n[i].body), m, a), {n[i].eq}));
  }
}

Term hcom_u(unsigned j, const Dim& r, const Dim& r2, const Term& a, const Tubes& bs, const std::string& y) {
  return mk::hcom(mk::ukan(j), r, r2, a, bind_tubes(bs, y));
}

Term fst_e(const Term& e) { return mk::fst(e); }

struct Def {
  const char* id;
  const char* paragraph;
  const char* metavars;
  std::vector<std::string> premises;
  std::string conclusion;
  std::vector<std::string> sides;
  std::function<void(B&)> build;
};

std::vector<Def> structural() {
  return {
      {"struct/hyp", "Structural", "k:kind a:termvar A:term", {"Ψ ⊢ A type κ"}, "Ψ | a:A ⊢ a ∈ A", {"a fresh"},
       [](B& b) {
         Kind k = b.kind("k");
         std::string a = b.term_var("a");
         Term ty = b.term("A");
         b.premise(b.type_wf(k, ty));
         b.conclude(B::with_hyp(b.tm_of(mk::var(a), ty), a, ty));
       }},
      {"struct/weaken", "Structural", "J:judgment k:kind a:termvar A:term pos:index",
       {"Γ ⊢ J", "Γ₁ ⊢ A type κ"}, "Γ₁, a:A, Γ₂ ⊢ J", {"a fresh for Γ", "pos ≤ |Γ|"},
       [](B& b) {
         Judgment j = b.judgment("J");
         Kind k = b.kind("k");
         std::string a = b.term_var("a");
         Term ty = b.term("A");
         std::size_t pos = b.index("pos");
         bool fresh = std::none_of(j.gamma.begin(), j.gamma.end(), [&](const Hyp& h) { return h.var == a; });
         b.side(a + " ∉ dom Γ", fresh);
         b.side("pos ≤ |Γ|", pos <= j.gamma.size());
         pos = std::min(pos, j.gamma.size());
         Judgment prefix = eq_type(k, ty, ty);
         prefix.psi = j.psi;
         prefix.xi = j.xi;
         prefix.gamma.assign(j.gamma.begin(), j.gamma.begin() + static_cast<std::ptrdiff_t>(pos));
         b.premise(j);
         b.premise(prefix);
         Judgment c = j;
         c.gamma.insert(c.gamma.begin() + static_cast<std::ptrdiff_t>(pos), Hyp{a, ty});
         b.conclude(c);
       }},
      {"struct/dsubst", "Structural", "J:judgment psi:subst", {"Ψ ⊢ J"}, "Ψ' ⊢ Jψ", {"ψ : Ψ' → Ψ"},
       [](B& b) {
         Judgment j = b.judgment("J");
         DimSubst psi = b.subst("psi");
         bool ok = j.psi == psi.source();
         b.side("the substitution's source is Ψ", ok, psi.source().str() + " vs " + j.psi.str());
         b.premise(j);
         b.conclude(ok ? apply_subst(j, psi) : j);
       }},
      {"struct/kan-pre", "Structural", "A:term A':term", {"A ≐ A' type Kan"}, "A ≐ A' type pre", {},
       [](B& b) {
         b.premise(b.type_eq(kKan, b.term("A"), b.term("A'")));
         b.conclude(b.type_eq(kPre, b.term("A"), b.term("A'")));
       }},
      {"struct/type-sym", "Structural", "k:kind A:term A':term", {"A ≐ A' type κ"}, "A' ≐ A type κ", {},
       [](B& b) {
         b.premise(b.type_eq(b.kind("k"), b.term("A"), b.term("A'")));
         b.conclude(b.type_eq(b.kind("k"), b.term("A'"), b.term("A")));
       }},
      {"struct/type-trans", "Structural", "k:kind A:term A':term A'':term", {"A ≐ A' type κ", "A' ≐ A'' type κ"},
       "A ≐ A'' type κ", {},
       [](B& b) {
         Kind k = b.kind("k");
         b.premise(b.type_eq(k, b.term("A"), b.term("A'")));
         b.premise(b.type_eq(k, b.term("A'"), b.term("A''")));
         b.conclude(b.type_eq(k, b.term("A"), b.term("A''")));
       }},
      {"struct/tm-sym", "Structural", "M:term M':term A:term", {"M' ≐ M ∈ A"}, "M ≐ M' ∈ A", {},
       [](B& b) {
         b.premise(b.tm_eq(b.term("M'"), b.term("M"), b.term("A")));
         b.conclude(b.tm_eq(b.term("M"), b.term("M'"), b.term("A")));
       }},
      {"struct/tm-trans", "Structural", "M:term M':term M'':term A:term", {"M ≐ M' ∈ A", "M' ≐ M'' ∈ A"},
       "M ≐ M'' ∈ A", {},
       [](B& b) {
         Term a = b.term("A");
         b.premise(b.tm_eq(b.term("M"), b.term("M'"), a));
         b.premise(b.tm_eq(b.term("M'"), b.term("M''"), a));
         b.conclude(b.tm_eq(b.term("M"), b.term("M''"), a));
       }},
      {"struct/conv", "Structural", "k:kind M:term M':term A:term A':term", {"M ≐ M' ∈ A", "A ≐ A' type κ"},
       "M ≐ M' ∈ A'", {},
       [](B& b) {
         b.premise(b.tm_eq(b.term("M"), b.term("M'"), b.term("A")));
         b.premise(b.type_eq(b.kind("k"), b.term("A"), b.term("A'")));
         b.conclude(b.tm_eq(b.term("M"), b.term("M'"), b.term("A'")));
       }},
      {"struct/subst-type", "Structural", "k:kind a:termvar A:term B:term B':term N:term N':term",
       {"a:A ⊢ B ≐ B' type κ", "N ≐ N' ∈ A"}, "B[N/a] ≐ B'[N'/a] type κ", {"a fresh"},
       [](B& b) {
         Kind k = b.kind("k");
         std::string a = b.term_var("a");
         Term ty = b.term("A"), bb = b.term("B"), bb2 = b.term("B'"), n = b.term("N"), n2 = b.term("N'");
         b.premise(B::with_hyp(b.type_eq(k, bb, bb2), a, ty));
         b.premise(b.tm_eq(n, n2, ty));
         b.conclude(b.type_eq(k, tsubst(bb, n, a), tsubst(bb2, n2, a)));
       }},
      {"struct/subst-tm", "Structural", "a:termvar A:term B:term M:term M':term N:term N':term",
       {"a:A ⊢ M ≐ M' ∈ B", "N ≐ N' ∈ A"}, "M[N/a] ≐ M'[N'/a] ∈ B[N/a]", {"a fresh"},
       [](B& b) {
         std::string a = b.term_var("a");
         Term ty = b.term("A"), bb = b.term("B"), m = b.term("M"), m2 = b.term("M'"), n = b.term("N"),
              n2 = b.term("N'");
         b.premise(B::with_hyp(b.tm_eq(m, m2, bb), a, ty));
         b.premise(b.tm_eq(n, n2, ty));
         b.conclude(b.tm_eq(tsubst(m, n, a), tsubst(m2, n2, a), tsubst(bb, n, a)));
       }},
  };
}

std::vector<Def> restriction() {
  return {
      {"restrict/empty", "Restriction", "J:judgment", {"Ψ ⊢ J"}, "Ψ ⊢ J ⟨·⟩", {"Ξ is empty"},
       [](B& b) {
         Judgment j = b.judgment("J");
         b.side("the restriction is empty", j.xi.empty(), to_string(j.xi));
         b.premise(j);
         b.conclude(j);
       }},
      {"restrict/eps-eq", "Restriction", "J:judgment eps:const", {"Ψ ⊢ J ⟨Ξ⟩"}, "Ψ ⊢ J ⟨Ξ, ε=ε⟩", {},
       [](B& b) {
         Judgment j = b.judgment("J");
         Dim e = b.constant("eps");
         b.premise(j);
         b.conclude(B::under(j, {{e, e}}));
       }},
      {"restrict/eps-neq", "Restriction", "J:judgment eps:const", {}, "Ψ ⊢ J ⟨Ξ, ε=ε̄⟩", {},
       [](B& b) {
         Judgment j = b.judgment("J");
         Dim e = b.constant("eps");
         b.conclude(B::under(j, {{e, e.flipped()}}));
       }},
      {"restrict/subst", "Restriction", "J:judgment x:dimvar r:dim", {"Ψ ⊢ J⟨r/x⟩ ⟨Ξ⟨r/x⟩⟩"},
       "Ψ,x ⊢ J ⟨Ξ, x=r⟩", {"x ∈ Ψ", "r ≠ x and r ∈ Ψ∖x"},
       [](B& b) {
         Judgment j = b.judgment("J");
         std::string x = b.dim_var("x");
         Dim r = b.dim("r");
         bool in = j.psi.contains(x);
         bool other = !(r.is_name() && r.name() == x) && j.psi.contains(r);
         b.side(x + " ∈ Ψ", in, j.psi.str());
         b.side(r.str() + " ∈ Ψ∖" + x, other, j.psi.str());
         b.premise(in && other ? dsubst(j, r, x) : j);
         b.conclude(B::under(j, {{Dim::name(x), r}}));
       }},
  };
}

std::vector<Def> computation() {
  return {
      {"comp/type", "Computation", "k:kind A:term A':term B:term", {"A' ≐ B type κ"}, "A ≐ B type κ",
       {"A ↦ A' stably"},
       [](B& b) {
         Term a = b.term("A"), a2 = b.term("A'"), bb = b.term("B");
         b.stable_step(a, a2);
         b.premise(b.type_eq(b.kind("k"), a2, bb));
         b.conclude(b.type_eq(b.kind("k"), a, bb));
       }},
      {"comp/tm", "Computation", "M:term M':term N:term A:term", {"M' ≐ N ∈ A"}, "M ≐ N ∈ A", {"M ↦ M' stably"},
       [](B& b) {
         Term m = b.term("M"), m2 = b.term("M'"), n = b.term("N"), a = b.term("A");
         b.stable_step(m, m2);
         b.premise(b.tm_eq(m2, n, a));
         b.conclude(b.tm_eq(m, n, a));
       }},
  };
}

std::vector<Def> kan() {
  return {
      {"kan/wfshape-opposite", "Kan", "shape:eqs i:index j:index", {}, "wfshape(r_i=r_i')",
       {"r_i = r_j", "r_i' = 0", "r_j' = 1"},
       [](B& b) {
         EquationList s = b.eqs("shape");
         std::size_t i = b.index("i"), j = b.index("j");
         bool range = i < s.size() && j < s.size();
         b.side("indices in range", range);
         if (range) {
           b.side("r_i = r_j", s[i].lhs == s[j].lhs, s[i].lhs.str() + " vs " + s[j].lhs.str());
           b.side("r_i' = 0", s[i].rhs == zero(), s[i].rhs.str());
           b.side("r_j' = 1", s[j].rhs == one(), s[j].rhs.str());
         }
         b.conclude(b.shape(s));
       }},
      {"kan/wfshape-refl", "Kan", "shape:eqs i:index", {}, "wfshape(r_i=r_i')", {"r_i = r_i'"},
       [](B& b) {
         EquationList s = b.eqs("shape");
         std::size_t i = b.index("i");
         b.side("index in range", i < s.size());
         if (i < s.size()) b.side("r_i = r_i'", s[i].reflexive(), s[i].str());
         b.conclude(b.shape(s));
       }},
      {"kan/hcom", "Kan", "A:term A':term r:dim r':dim M:term M':term y:dimvar N:tubes N':tubes",
       {"wfshape(r_i=r_i')", "A ≐ A' type Kan", "M ≐ M' ∈ A", "∀i,j. Ψ,y ⊢ N_i ≐ N'_j ∈ A ⟨r_i=r_i', r_j=r_j'⟩",
        "∀i. N_i⟨r/y⟩ ≐ M ∈ A ⟨r_i=r_i'⟩"},
       "hcom A r~>r' M [y.N] ≐ hcom A' r~>r' M' [y.N'] ∈ A", {"y fresh"},
       [](B& b) {
         Term a = b.term("A"), a2 = b.term("A'"), m = b.term("M"), m2 = b.term("M'");
         Dim r = b.dim("r"), r2 = b.dim("r'");
         std::string y = b.dim_var("y");
         Tubes n = b.tubes("N"), n2 = b.tubes("N'");
         same_eqs(n, n2, "N", "N'");
         b.premise(b.shape(eqs_of(n)));
         b.premise(b.type_eq(kKan, a, a2));
         b.premise(b.tm_eq(m, m2, a));
         adjacent_tubes(b, n, n2, y, a);
         cap_tubes(b, n, y, r, m, a);
         b.conclude(b.tm_eq(mk::hcom(a, r, r2, m, bind_tubes(n, y)), mk::hcom(a2, r, r2, m2, bind_tubes(n2, y)), a));
       }},
      {"kan/hcom-cap", "Kan", "A:term r:dim M:term y:dimvar N:tubes",
       {"wfshape(r_i=r_i')", "A type Kan", "M ∈ A", "∀i,j. Ψ,y ⊢ N_i ≐ N_j ∈ A ⟨r_i=r_i', r_j=r_j'⟩",
        "∀i. N_i⟨r/y⟩ ≐ M ∈ A ⟨r_i=r_i'⟩"},
       "hcom A r~>r M [y.N] ≐ M ∈ A", {"y fresh"},
       [](B& b) {
         Term a = b.term("A"), m = b.term("M");
         Dim r = b.dim("r");
         std::string y = b.dim_var("y");
         Tubes n = b.tubes("N");
         b.premise(b.shape(eqs_of(n)));
         b.premise(b.type_wf(kKan, a));
         b.premise(b.tm_of(m, a));
         adjacent_tubes(b, n, n, y, a);
         cap_tubes(b, n, y, r, m, a);
         b.conclude(b.tm_eq(mk::hcom(a, r, r, m, bind_tubes(n, y)), m, a));
       }},
      {"kan/hcom-tube", "Kan", "A:term r:dim r':dim M:term y:dimvar N:tubes i:index",
       {"A type Kan", "M ∈ A", "∀i,j. Ψ,y ⊢ N_i ≐ N_j ∈ A ⟨r_i=r_i', r_j=r_j'⟩", "∀i. N_i⟨r/y⟩ ≐ M ∈ A ⟨r_i=r_i'⟩"},
       "hcom A r~>r' M [y.N] ≐ N_i⟨r'/y⟩ ∈ A", {"r_i = r_i'", "y fresh"},
       [](B& b) {
         Term a = b.term("A"), m = b.term("M");
         Dim r = b.dim("r"), r2 = b.dim("r'");
         std::string y = b.dim_var("y");
         Tubes n = b.tubes("N");
         std::size_t i = b.index("i");
         bool ok = tube_side(b, n, i);
         b.premise(b.type_wf(kKan, a));
         b.premise(b.tm_of(m, a));
         adjacent_tubes(b, n, n, y, a);
         cap_tubes(b, n, y, r, m, a);
         Term rhs = ok ? dsubst(n[i].body, r2, y) : m;
         b.conclude(b.tm_eq(mk::hcom(a, r, r2, m, bind_tubes(n, y)), rhs, a));
       }},
      {"kan/coe", "Kan", "x:dimvar A:term A':term r:dim r':dim M:term M':term",
       {"Ψ,x ⊢ A ≐ A' type Kan", "M ≐ M' ∈ A⟨r/x⟩"}, "coe x.A r~>r' M ≐ coe x.A' r~>r' M' ∈ A⟨r'/x⟩", {"x fresh"},
       [](B& b) {
         std::string x = b.dim_var("x");
         Term a = b.term("A"), a2 = b.term("A'"), m = b.term("M"), m2 = b.term("M'");
         Dim r = b.dim("r"), r2 = b.dim("r'");
         b.premise(B::with_dim(b.type_eq(kKan, a, a2), x));
         b.premise(b.tm_eq(m, m2, dsubst(a, r, x)));
         b.conclude(b.tm_eq(mk::coe(x, a, r, r2, m), mk::coe(x, a2, r, r2, m2), dsubst(a, r2, x)));
       }},
      {"kan/coe-id", "Kan", "x:dimvar A:term r:dim M:term", {"Ψ,x ⊢ A type Kan", "M ∈ A⟨r/x⟩"},
       "coe x.A r~>r M ≐ M ∈ A⟨r/x⟩", {"x fresh"},
       [](B& b) {
         std::string x = b.dim_var("x");
         Term a = b.term("A"), m = b.term("M");
         Dim r = b.dim("r");
         b.premise(B::with_dim(b.type_wf(kKan, a), x));
         b.premise(b.tm_of(m, dsubst(a, r, x)));
         b.conclude(b.tm_eq(mk::coe(x, a, r, r, m), m, dsubst(a, r, x)));
       }},
      {"kan/com", "Kan", "y:dimvar A:term A':term r:dim r':dim M:term M':term N:tubes N':tubes",
       {"wfshape(r_i=r_i')", "Ψ,y ⊢ A ≐ A' type Kan", "M ≐ M' ∈ A⟨r/y⟩",
        "∀i,j. Ψ,y ⊢ N_i ≐ N'_j ∈ A ⟨r_i=r_i', r_j=r_j'⟩", "∀i. N_i⟨r/y⟩ ≐ M ∈ A⟨r/y⟩ ⟨r_i=r_i'⟩"},
       "com y.A r~>r' M [y.N] ≐ com y.A' r~>r' M' [y.N'] ∈ A⟨r'/y⟩", {"y fresh"},
       [](B& b) {
         std::string y = b.dim_var("y");
         Term a = b.term("A"), a2 = b.term("A'"), m = b.term("M"), m2 = b.term("M'");
         Dim r = b.dim("r"), r2 = b.dim("r'");
         Tubes n = b.tubes("N"), n2 = b.tubes("N'");
         same_eqs(n, n2, "N", "N'");
         b.premise(b.shape(eqs_of(n)));
         b.premise(B::with_dim(b.type_eq(kKan, a, a2), y));
         b.premise(b.tm_eq(m, m2, dsubst(a, r, y)));
         adjacent_tubes(b, n, n2, y, a);
         cap_tubes(b, n, y, r, m, dsubst(a, r, y));
         b.conclude(b.tm_eq(mk::com(y, a, r, r2, m, bind_tubes(n, y)), mk::com(y, a2, r, r2, m2, bind_tubes(n2, y)),
                            dsubst(a, r2, y)));
       }},
      {"kan/com-cap", "Kan", "y:dimvar A:term r:dim M:term N:tubes",
       {"wfshape(r_i=r_i')", "Ψ,y ⊢ A type Kan", "M ∈ A⟨r/y⟩", "∀i,j. Ψ,y ⊢ N_i ≐ N_j ∈ A ⟨r_i=r_i', r_j=r_j'⟩",
        "∀i. N_i⟨r/y⟩ ≐ M ∈ A⟨r/y⟩ ⟨r_i=r_i'⟩"},
       "com y.A r~>r M [y.N] ≐ M ∈ A⟨r/y⟩", {"y fresh"},
       [](B& b) {
         std::string y = b.dim_var("y");
         Term a = b.term("A"), m = b.term("M");
         Dim r = b.dim("r");
         Tubes n = b.tubes("N");
         b.premise(b.shape(eqs_of(n)));
         b.premise(B::with_dim(b.type_wf(kKan, a), y));
         b.premise(b.tm_of(m, dsubst(a, r, y)));
         adjacent_tubes(b, n, n, y, a);
         cap_tubes(b, n, y, r, m, dsubst(a, r, y));
         b.conclude(b.tm_eq(mk::com(y, a, r, r, m, bind_tubes(n, y)), m, dsubst(a, r, y)));
       }},
      {"kan/com-tube", "Kan", "y:dimvar A:term r:dim r':dim M:term N:tubes i:index",
       {"Ψ,y ⊢ A type Kan", "M ∈ A⟨r/y⟩", "∀i,j. Ψ,y ⊢ N_i ≐ N_j ∈ A ⟨r_i=r_i', r_j=r_j'⟩",
        "∀i. N_i⟨r/y⟩ ≐ M ∈ A⟨r/y⟩ ⟨r_i=r_i'⟩"},
       "com y.A r~>r' M [y.N] ≐ N_i⟨r'/y⟩ ∈ A⟨r'/y⟩", {"r_i = r_i'", "y fresh"},
       [](B& b) {
         std::string y = b.dim_var("y");
         Term a = b.term("A"), m = b.term("M");
         Dim r = b.dim("r"), r2 = b.dim("r'");
         Tubes n = b.tubes("N");
         std::size_t i = b.index("i");
         bool ok = tube_side(b, n, i);
         b.premise(B::with_dim(b.type_wf(kKan, a), y));
         b.premise(b.tm_of(m, dsubst(a, r, y)));
         adjacent_tubes(b, n, n, y, a);
         cap_tubes(b, n, y, r, m, dsubst(a, r, y));
         Term rhs = ok ? dsubst(n[i].body, r2, y) : m;
         b.conclude(b.tm_eq(mk::com(y, a, r, r2, m, bind_tubes(n, y)), rhs, dsubst(a, r2, y)));
       }},
  };
}

std::vector<Def> functions() {
  return {
      {"fun/form", "Dependent functions", "k:kind a:termvar A:term A':term B:term B':term",
       {"A ≐ A' type κ", "a:A ⊢ B ≐ B' type κ"}, "(a:A) → B ≐ (a:A') → B' type κ", {"a fresh"},
       [](B& b) {
         Kind k = b.kind("k");
         std::string a = b.term_var("a");
         Term ta = b.term("A"), ta2 = b.term("A'"), tb = b.term("B"), tb2 = b.term("B'");
         b.premise(b.type_eq(k, ta, ta2));
         b.premise(B::with_hyp(b.type_eq(k, tb, tb2), a, ta));
         b.conclude(b.type_eq(k, mk::pi(a, ta, tb), mk::pi(a, ta2, tb2)));
       }},
      {"fun/intro", "Dependent functions", "a:termvar A:term B:term M:term M':term", {"a:A ⊢ M ≐ M' ∈ B"},
       "λa.M ≐ λa.M' ∈ (a:A) → B", {"a fresh"},
       [](B& b) {
         std::string a = b.term_var("a");
         Term ta = b.term("A"), tb = b.term("B"), m = b.term("M"), m2 = b.term("M'");
         b.premise(B::with_hyp(b.tm_eq(m, m2, tb), a, ta));
         b.conclude(b.tm_eq(mk::lam(a, m), mk::lam(a, m2), mk::pi(a, ta, tb)));
       }},
      {"fun/elim", "Dependent functions", "a:termvar A:term B:term M:term M':term N:term N':term",
       {"M ≐ M' ∈ (a:A) → B", "N ≐ N' ∈ A"}, "M N ≐ M' N' ∈ B[N/a]", {"a fresh"},
       [](B& b) {
         std::string a = b.term_var("a");
         Term ta = b.term("A"), tb = b.term("B"), m = b.term("M"), m2 = b.term("M'"), n = b.term("N"),
              n2 = b.term("N'");
         b.premise(b.tm_eq(m, m2, mk::pi(a, ta, tb)));
         b.premise(b.tm_eq(n, n2, ta));
         b.conclude(b.tm_eq(mk::app(m, n), mk::app(m2, n2), tsubst(tb, n, a)));
       }},
      {"fun/beta", "Dependent functions", "a:termvar A:term B:term M:term N:term", {"a:A ⊢ M ∈ B", "N ∈ A"},
       "(λa.M) N ≐ M[N/a] ∈ B[N/a]", {"a fresh"},
       [](B& b) {
         std::string a = b.term_var("a");
         Term ta = b.term("A"), tb = b.term("B"), m = b.term("M"), n = b.term("N");
         b.premise(B::with_hyp(b.tm_of(m, tb), a, ta));
         b.premise(b.tm_of(n, ta));
         b.conclude(b.tm_eq(mk::app(mk::lam(a, m), n), tsubst(m, n, a), tsubst(tb, n, a)));
       }},
      {"fun/eta", "Dependent functions", "a:termvar A:term B:term M:term", {"M ∈ (a:A) → B"},
       "M ≐ λa. M a ∈ (a:A) → B", {"a fresh"},
       [](B& b) {
         std::string a = b.term_var("a");
         Term ta = b.term("A"), tb = b.term("B"), m = b.term("M");
         b.premise(b.tm_of(m, mk::pi(a, ta, tb)));
         b.conclude(b.tm_eq(m, mk::lam(a, mk::app(m, mk::var(a))), mk::pi(a, ta, tb)));
       }},
  };
}

std::vector<Def> pairs() {
  return {
      {"sg/form", "Dependent pairs", "k:kind a:termvar A:term A':term B:term B':term",
       {"A ≐ A' type κ", "a:A ⊢ B ≐ B' type κ"}, "(a:A) × B ≐ (a:A') × B' type κ", {"a fresh"},
       [](B& b) {
         Kind k = b.kind("k");
         std::string a = b.term_var("a");
         Term ta = b.term("A"), ta2 = b.term("A'"), tb = b.term("B"), tb2 = b.term("B'");
         b.premise(b.type_eq(k, ta, ta2));
         b.premise(B::with_hyp(b.type_eq(k, tb, tb2), a, ta));
         b.conclude(b.type_eq(k, mk::sigma(a, ta, tb), mk::sigma(a, ta2, tb2)));
       }},
      {"sg/intro", "Dependent pairs", "a:termvar A:term B:term M:term M':term N:term N':term",
       {"M ≐ M' ∈ A", "N ≐ N' ∈ B[M/a]"}, "⟨M,N⟩ ≐ ⟨M',N'⟩ ∈ (a:A) × B", {"a fresh"},
       [](B& b) {
         std::string a = b.term_var("a");
         Term ta = b.term("A"), tb = b.term("B"), m = b.term("M"), m2 = b.term("M'"), n = b.term("N"),
              n2 = b.term("N'");
         b.premise(b.tm_eq(m, m2, ta));
         b.premise(b.tm_eq(n, n2, tsubst(tb, m, a)));
         b.conclude(b.tm_eq(mk::pair(m, n), mk::pair(m2, n2), mk::sigma(a, ta, tb)));
       }},
      {"sg/fst", "Dependent pairs", "a:termvar A:term B:term P:term P':term", {"P ≐ P' ∈ (a:A) × B"},
       "fst P ≐ fst P' ∈ A", {"a fresh"},
       [](B& b) {
         std::string a = b.term_var("a");
         Term ta = b.term("A"), tb = b.term("B"), p = b.term("P"), p2 = b.term("P'");
         b.premise(b.tm_eq(p, p2, mk::sigma(a, ta, tb)));
         b.conclude(b.tm_eq(mk::fst(p), mk::fst(p2), ta));
       }},
      {"sg/snd", "Dependent pairs", "a:termvar A:term B:term P:term P':term", {"P ≐ P' ∈ (a:A) × B"},
       "snd P ≐ snd P' ∈ B[fst P/a]", {"a fresh"},
       [](B& b) {
         std::string a = b.term_var("a");
         Term ta = b.term("A"), tb = b.term("B"), p = b.term("P"), p2 = b.term("P'");
         b.premise(b.tm_eq(p, p2, mk::sigma(a, ta, tb)));
         b.conclude(b.tm_eq(mk::snd(p), mk::snd(p2), tsubst(tb, mk::fst(p), a)));
       }},
      {"sg/fst-beta", "Dependent pairs", "M:term N:term A:term", {"M ∈ A"}, "fst ⟨M,N⟩ ≐ M ∈ A", {},
       [](B& b) {
         Term m = b.term("M"), n = b.term("N"), a = b.term("A");
         b.premise(b.tm_of(m, a));
         b.conclude(b.tm_eq(mk::fst(mk::pair(m, n)), m, a));
       }},
      {"sg/snd-beta", "Dependent pairs", "M:term N:term B:term", {"N ∈ B"}, "snd ⟨M,N⟩ ≐ N ∈ B", {},
       [](B& b) {
         Term m = b.term("M"), n = b.term("N"), tb = b.term("B");
         b.premise(b.tm_of(n, tb));
         b.conclude(b.tm_eq(mk::snd(mk::pair(m, n)), n, tb));
       }},
      {"sg/eta", "Dependent pairs", "a:termvar A:term B:term P:term", {"P ∈ (a:A) × B"},
       "P ≐ ⟨fst P, snd P⟩ ∈ (a:A) × B", {"a fresh"},
       [](B& b) {
         std::string a = b.term_var("a");
         Term ta = b.term("A"), tb = b.term("B"), p = b.term("P");
         Term sg = mk::sigma(a, ta, tb);
         b.premise(b.tm_of(p, sg));
         b.conclude(b.tm_eq(p, mk::pair(mk::fst(p), mk::snd(p)), sg));
       }},
  };
}

std::vector<Def> paths() {
  return {
      {"path/form", "Paths", "k:kind x:dimvar A:term A':term P0:term P0':term P1:term P1':term",
       {"Ψ,x ⊢ A ≐ A' type κ", "P0 ≐ P0' ∈ A⟨0/x⟩", "P1 ≐ P1' ∈ A⟨1/x⟩"},
       "Path(x.A, P0, P1) ≐ Path(x.A', P0', P1') type κ", {"x fresh"},
       [](B& b) {
         Kind k = b.kind("k");
         std::string x = b.dim_var("x");
         Term a = b.term("A"), a2 = b.term("A'"), p0 = b.term("P0"), p02 = b.term("P0'"), p1 = b.term("P1"),
              p12 = b.term("P1'");
         b.premise(B::with_dim(b.type_eq(k, a, a2), x));
         b.premise(b.tm_eq(p0, p02, dsubst(a, zero(), x)));
         b.premise(b.tm_eq(p1, p12, dsubst(a, one(), x)));
         b.conclude(b.type_eq(k, mk::path(x, a, p0, p1), mk::path(x, a2, p02, p12)));
       }},
      {"path/intro", "Paths", "x:dimvar A:term M:term M':term P0:term P1:term",
       {"Ψ,x ⊢ M ≐ M' ∈ A", "M⟨0/x⟩ ≐ P0 ∈ A⟨0/x⟩", "M⟨1/x⟩ ≐ P1 ∈ A⟨1/x⟩"},
       "λx.M ≐ λx.M' ∈ Path(x.A, P0, P1)", {"x fresh"},
       [](B& b) {
         std::string x = b.dim_var("x");
         Term a = b.term("A"), m = b.term("M"), m2 = b.term("M'"), p0 = b.term("P0"), p1 = b.term("P1");
         b.premise(B::with_dim(b.tm_eq(m, m2, a), x));
         b.premise(b.tm_eq(dsubst(m, zero(), x), p0, dsubst(a, zero(), x)));
         b.premise(b.tm_eq(dsubst(m, one(), x), p1, dsubst(a, one(), x)));
         b.conclude(b.tm_eq(mk::dlam(x, m), mk::dlam(x, m2), mk::path(x, a, p0, p1)));
       }},
      {"path/elim", "Paths", "x:dimvar A:term P0:term P1:term M:term M':term r:dim",
       {"M ≐ M' ∈ Path(x.A, P0, P1)"}, "M @ r ≐ M' @ r ∈ A⟨r/x⟩", {"x fresh"},
       [](B& b) {
         std::string x = b.dim_var("x");
         Term a = b.term("A"), p0 = b.term("P0"), p1 = b.term("P1"), m = b.term("M"), m2 = b.term("M'");
         Dim r = b.dim("r");
         b.premise(b.tm_eq(m, m2, mk::path(x, a, p0, p1)));
         b.conclude(b.tm_eq(mk::dapp(m, r), mk::dapp(m2, r), dsubst(a, r, x)));
       }},
      {"path/boundary", "Paths", "x:dimvar A:term P0:term P1:term M:term eps:const", {"M ∈ Path(x.A, P0, P1)"},
       "M @ ε ≐ P_ε ∈ A⟨ε/x⟩", {"x fresh"},
       [](B& b) {
         std::string x = b.dim_var("x");
         Term a = b.term("A"), p0 = b.term("P0"), p1 = b.term("P1"), m = b.term("M");
         Dim e = b.constant("eps");
         b.premise(b.tm_of(m, mk::path(x, a, p0, p1)));
         b.conclude(b.tm_eq(mk::dapp(m, e), e == zero() ? p0 : p1, dsubst(a, e, x)));
       }},
      {"path/beta", "Paths", "x:dimvar A:term M:term r:dim", {"Ψ,x ⊢ M ∈ A"}, "(λx.M) @ r ≐ M⟨r/x⟩ ∈ A⟨r/x⟩",
       {"x fresh"},
       [](B& b) {
         std::string x = b.dim_var("x");
         Term a = b.term("A"), m = b.term("M");
         Dim r = b.dim("r");
         b.premise(B::with_dim(b.tm_of(m, a), x));
         b.conclude(b.tm_eq(mk::dapp(mk::dlam(x, m), r), dsubst(m, r, x), dsubst(a, r, x)));
       }},
      {"path/eta", "Paths", "x:dimvar A:term P0:term P1:term M:term", {"M ∈ Path(x.A, P0, P1)"},
       "M ≐ λx. M @ x ∈ Path(x.A, P0, P1)", {"x fresh"},
       [](B& b) {
         std::string x = b.dim_var("x");
         Term a = b.term("A"), p0 = b.term("P0"), p1 = b.term("P1"), m = b.term("M");
         Term ty = mk::path(x, a, p0, p1);
         b.premise(b.tm_of(m, ty));
         b.conclude(b.tm_eq(m, mk::dlam(x, mk::dapp(m, Dim::name(x))), ty));
       }},
  };
}

std::vector<Def> equality() {
  return {
      {"eq/form", "Equality pretypes", "A:term A':term M:term M':term N:term N':term",
       {"A ≐ A' type pre", "M ≐ M' ∈ A", "N ≐ N' ∈ A"}, "Eq(A, M, N) ≐ Eq(A', M', N') type pre", {},
       [](B& b) {
         Term a = b.term("A"), a2 = b.term("A'"), m = b.term("M"), m2 = b.term("M'"), n = b.term("N"),
              n2 = b.term("N'");
         b.premise(b.type_eq(kPre, a, a2));
         b.premise(b.tm_eq(m, m2, a));
         b.premise(b.tm_eq(n, n2, a));
         b.conclude(b.type_eq(kPre, mk::eq(a, m, n), mk::eq(a2, m2, n2)));
       }},
      {"eq/intro", "Equality pretypes", "A:term M:term N:term", {"M ≐ N ∈ A"}, "★ ∈ Eq(A, M, N)", {},
       [](B& b) {
         Term a = b.term("A"), m = b.term("M"), n = b.term("N");
         b.premise(b.tm_eq(m, n, a));
         b.conclude(b.tm_of(mk::star(), mk::eq(a, m, n)));
       }},
      {"eq/elim", "Equality pretypes", "A:term M:term N:term E:term", {"E ∈ Eq(A, M, N)"}, "M ≐ N ∈ A", {},
       [](B& b) {
         Term a = b.term("A"), m = b.term("M"), n = b.term("N"), e = b.term("E");
         b.premise(b.tm_of(e, mk::eq(a, m, n)));
         b.conclude(b.tm_eq(m, n, a));
       }},
      {"eq/eta", "Equality pretypes", "A:term M:term N:term E:term", {"E ∈ Eq(A, M, N)"}, "E ≐ ★ ∈ Eq(A, M, N)", {},
       [](B& b) {
         Term a = b.term("A"), m = b.term("M"), n = b.term("N"), e = b.term("E");
         b.premise(b.tm_of(e, mk::eq(a, m, n)));
         b.conclude(b.tm_eq(e, mk::star(), mk::eq(a, m, n)));
       }},
  };
}

std::vector<Def> voids() {
  return {
      {"void/form", "Void", "", {}, "void type Kan", {}, [](B& b) { b.conclude(b.type_wf(kKan, mk::void_())); }},
      {"void/elim", "Void", "M:term J:judgment", {"M ∈ void"}, "J", {},
       [](B& b) {
         Judgment j = b.judgment("J");
         Judgment p = eq_tm(b.term("M"), b.term("M"), mk::void_());
         p.psi = j.psi;
         p.xi = j.xi;
         p.gamma = j.gamma;
         b.premise(p);
         b.conclude(j);
       }},
  };
}

std::vector<Def> naturals() {
  return {
      {"nat/form-kan", "Natural numbers", "", {}, "nat type Kan", {},
       [](B& b) { b.conclude(b.type_wf(kKan, mk::nat())); }},
      {"nat/zero", "Natural numbers", "", {}, "zero ∈ nat", {},
       [](B& b) { b.conclude(b.tm_of(mk::zero(), mk::nat())); }},
      {"nat/suc", "Natural numbers", "M:term M':term", {"M ≐ M' ∈ nat"}, "suc M ≐ suc M' ∈ nat", {},
       [](B& b) {
         b.premise(b.tm_eq(b.term("M"), b.term("M'"), mk::nat()));
         b.conclude(b.tm_eq(mk::suc(b.term("M")), mk::suc(b.term("M'")), mk::nat()));
       }},
      {"nat/elim", "Natural numbers",
       "k:kind n:termvar a:termvar A:term M:term M':term Z:term Z':term S:term S':term",
       {"n:nat ⊢ A type κ", "M ≐ M' ∈ nat", "Z ≐ Z' ∈ A[zero/n]", "n:nat, a:A ⊢ S ≐ S' ∈ A[suc n/n]"},
       "natrec M Z (n a.S) ≐ natrec M' Z' (n a.S') ∈ A[M/n]", {"n, a fresh and distinct"},
       [](B& b) {
         Kind k = b.kind("k");
         std::string n = b.term_var("n"), a = b.term_var("a");
         b.side(n + " ≠ " + a, n != a);
         Term ta = b.term("A"), m = b.term("M"), m2 = b.term("M'"), z = b.term("Z"), z2 = b.term("Z'"),
              s = b.term("S"), s2 = b.term("S'");
         b.premise(B::with_hyp(b.type_wf(k, ta), n, mk::nat()));
         b.premise(b.tm_eq(m, m2, mk::nat()));
         b.premise(b.tm_eq(z, z2, tsubst(ta, mk::zero(), n)));
         b.premise(B::with_hyp(B::with_hyp(b.tm_eq(s, s2, tsubst(ta, mk::suc(mk::var(n)), n)), n, mk::nat()), a, ta));
         b.conclude(
             b.tm_eq(mk::natrec(m, z, n, a, s), mk::natrec(m2, z2, n, a, s2), tsubst(ta, m, n)));
       }},
      {"nat/beta-zero", "Natural numbers", "n:termvar a:termvar Z:term S:term A:term", {"Z ∈ A"},
       "natrec zero Z (n a.S) ≐ Z ∈ A", {"n, a fresh and distinct"},
       [](B& b) {
         std::string n = b.term_var("n"), a = b.term_var("a");
         b.side(n + " ≠ " + a, n != a);
         Term z = b.term("Z"), s = b.term("S"), ta = b.term("A");
         b.premise(b.tm_of(z, ta));
         b.conclude(b.tm_eq(mk::natrec(mk::zero(), z, n, a, s), z, ta));
       }},
      {"nat/beta-suc", "Natural numbers", "k:kind n:termvar a:termvar A:term M:term Z:term S:term",
       {"n:nat ⊢ A type κ", "M ∈ nat", "Z ∈ A[zero/n]", "n:nat, a:A ⊢ S ∈ A[suc n/n]"},
       "natrec (suc M) Z (n a.S) ≐ S[M/n][natrec M Z (n a.S)/a] ∈ A[suc M/n]", {"n, a fresh and distinct"},
       [](B& b) {
         Kind k = b.kind("k");
         std::string n = b.term_var("n"), a = b.term_var("a");
         b.side(n + " ≠ " + a, n != a);
         Term ta = b.term("A"), m = b.term("M"), z = b.term("Z"), s = b.term("S");
         b.premise(B::with_hyp(b.type_wf(k, ta), n, mk::nat()));
         b.premise(b.tm_of(m, mk::nat()));
         b.premise(b.tm_of(z, tsubst(ta, mk::zero(), n)));
         b.premise(B::with_hyp(B::with_hyp(b.tm_of(s, tsubst(ta, mk::suc(mk::var(n)), n)), n, mk::nat()), a, ta));
         Term rec = mk::natrec(m, z, n, a, s);
         b.conclude(b.tm_eq(mk::natrec(mk::suc(m), z, n, a, s), tsubst(tsubst(s, m, n), rec, a),
                            tsubst(ta, mk::suc(m), n)));
       }},
  };
}

std::vector<Def> booleans() {
  return {
      {"bool/form-kan", "Booleans", "", {}, "bool type Kan", {},
       [](B& b) { b.conclude(b.type_wf(kKan, mk::bool_())); }},
      {"bool/true", "Booleans", "", {}, "true ∈ bool", {}, [](B& b) { b.conclude(b.tm_of(mk::tt(), mk::bool_())); }},
      {"bool/false", "Booleans", "", {}, "false ∈ bool", {},
       [](B& b) { b.conclude(b.tm_of(mk::ff(), mk::bool_())); }},
      {"bool/elim", "Booleans", "b:termvar C:term A:term A':term M:term M':term T:term T':term F:term F':term",
       {"b:bool ⊢ C type pre", "M ≐ M' ∈ bool", "T ≐ T' ∈ C[true/b]", "F ≐ F' ∈ C[false/b]"},
       "if (b.A) M T F ≐ if (b.A') M' T' F' ∈ C[M/b]", {"b fresh"},
       [](B& b) {
         std::string v = b.term_var("b");
         Term c = b.term("C"), a = b.term("A"), a2 = b.term("A'"), m = b.term("M"), m2 = b.term("M'"),
              t = b.term("T"), t2 = b.term("T'"), f = b.term("F"), f2 = b.term("F'");
         b.premise(B::with_hyp(b.type_wf(kPre, c), v, mk::bool_()));
         b.premise(b.tm_eq(m, m2, mk::bool_()));
         b.premise(b.tm_eq(t, t2, tsubst(c, mk::tt(), v)));
         b.premise(b.tm_eq(f, f2, tsubst(c, mk::ff(), v)));
         b.conclude(b.tm_eq(mk::if_(v, a, m, t, f), mk::if_(v, a2, m2, t2, f2), tsubst(c, m, v)));
       }},
      {"bool/beta-true", "Booleans", "b:termvar A:term T:term F:term B:term", {"T ∈ B"},
       "if (b.A) true T F ≐ T ∈ B", {"b fresh"},
       [](B& b) {
         std::string v = b.term_var("b");
         Term a = b.term("A"), t = b.term("T"), f = b.term("F"), ty = b.term("B");
         b.premise(b.tm_of(t, ty));
         b.conclude(b.tm_eq(mk::if_(v, a, mk::tt(), t, f), t, ty));
       }},
      {"bool/beta-false", "Booleans", "b:termvar A:term T:term F:term B:term", {"F ∈ B"},
       "if (b.A) false T F ≐ F ∈ B", {"b fresh"},
       [](B& b) {
         std::string v = b.term_var("b");
         Term a = b.term("A"), t = b.term("T"), f = b.term("F"), ty = b.term("B");
         b.premise(b.tm_of(f, ty));
         b.conclude(b.tm_eq(mk::if_(v, a, mk::ff(), t, f), f, ty));
       }},
  };
}

std::vector<Def> weak_booleans() {
  return {
      {"wbool/form-kan", "Weak booleans", "", {}, "wbool type Kan", {},
       [](B& b) { b.conclude(b.type_wf(kKan, mk::wbool())); }},
      {"wbool/bool", "Weak booleans", "M:term M':term", {"M ≐ M' ∈ bool"}, "M ≐ M' ∈ wbool", {},
       [](B& b) {
         b.premise(b.tm_eq(b.term("M"), b.term("M'"), mk::bool_()));
         b.conclude(b.tm_eq(b.term("M"), b.term("M'"), mk::wbool()));
       }},
      {"wbool/elim", "Weak booleans", "b:termvar A:term A':term M:term M':term T:term T':term F:term F':term",
       {"b:wbool ⊢ A ≐ A' type Kan", "M ≐ M' ∈ wbool", "T ≐ T' ∈ A[true/b]", "F ≐ F' ∈ A[false/b]"},
       "if (b.A) M T F ≐ if (b.A') M' T' F' ∈ A[M/b]", {"b fresh"},
       [](B& b) {
         std::string v = b.term_var("b");
         Term a = b.term("A"), a2 = b.term("A'"), m = b.term("M"), m2 = b.term("M'"), t = b.term("T"),
              t2 = b.term("T'"), f = b.term("F"), f2 = b.term("F'");
         b.premise(B::with_hyp(b.type_eq(kKan, a, a2), v, mk::wbool()));
         b.premise(b.tm_eq(m, m2, mk::wbool()));
         b.premise(b.tm_eq(t, t2, tsubst(a, mk::tt(), v)));
         b.premise(b.tm_eq(f, f2, tsubst(a, mk::ff(), v)));
         b.conclude(b.tm_eq(mk::if_(v, a, m, t, f), mk::if_(v, a2, m2, t2, f2), tsubst(a, m, v)));
       }},
  };
}

std::vector<Def> circle() {
  return {
      {"circle/form-kan", "Circle", "", {}, "S1 type Kan", {},
       [](B& b) { b.conclude(b.type_wf(kKan, mk::circle())); }},
      {"circle/base", "Circle", "", {}, "base ∈ S1", {}, [](B& b) { b.conclude(b.tm_of(mk::base(), mk::circle())); }},
      {"circle/loop", "Circle", "r:dim", {}, "loop r ∈ S1", {},
       [](B& b) { b.conclude(b.tm_of(mk::loop(b.dim("r")), mk::circle())); }},
      {"circle/loop-eps", "Circle", "eps:const", {}, "loop ε ≐ base ∈ S1", {},
       [](B& b) { b.conclude(b.tm_eq(mk::loop(b.constant("eps")), mk::base(), mk::circle())); }},
      {"circle/elim", "Circle", "c:termvar x:dimvar A:term A':term M:term M':term P:term P':term L:term L':term",
       {"c:S1 ⊢ A ≐ A' type Kan", "M ≐ M' ∈ S1", "P ≐ P' ∈ A[base/c]", "Ψ,x ⊢ L ≐ L' ∈ A[loop x/c]",
        "L⟨0/x⟩ ≐ P ∈ A[base/c]", "L⟨1/x⟩ ≐ P ∈ A[base/c]"},
       "S1elim (c.A) M P (x.L) ≐ S1elim (c.A') M' P' (x.L') ∈ A[M/c]", {"c, x fresh"},
       [](B& b) {
         std::string c = b.term_var("c");
         std::string x = b.dim_var("x");
         Term a = b.term("A"), a2 = b.term("A'"), m = b.term("M"), m2 = b.term("M'"), p = b.term("P"),
              p2 = b.term("P'"), l = b.term("L"), l2 = b.term("L'");
         Term at_base = tsubst(a, mk::base(), c);
         b.premise(B::with_hyp(b.type_eq(kKan, a, a2), c, mk::circle()));
         b.premise(b.tm_eq(m, m2, mk::circle()));
         b.premise(b.tm_eq(p, p2, at_base));
         b.premise(B::with_dim(b.tm_eq(l, l2, tsubst(a, mk::loop(Dim::name(x)), c)), x));
         b.premise(b.tm_eq(dsubst(l, zero(), x), p, at_base));
         b.premise(b.tm_eq(dsubst(l, one(), x), p, at_base));
         b.conclude(b.tm_eq(mk::s1elim(c, a, m, p, x, l), mk::s1elim(c, a2, m2, p2, x, l2), tsubst(a, m, c)));
       }},
      {"circle/beta-base", "Circle", "c:termvar x:dimvar A:term P:term L:term B:term", {"P ∈ B"},
       "S1elim (c.A) base P (x.L) ≐ P ∈ B", {"c, x fresh"},
       [](B& b) {
         std::string c = b.term_var("c");
         std::string x = b.dim_var("x");
         Term a = b.term("A"), p = b.term("P"), l = b.term("L"), ty = b.term("B");
         b.premise(b.tm_of(p, ty));
         b.conclude(b.tm_eq(mk::s1elim(c, a, mk::base(), p, x, l), p, ty));
       }},
      {"circle/beta-loop", "Circle", "c:termvar x:dimvar A:term P:term L:term B:term r:dim",
       {"Ψ,x ⊢ L ∈ B", "L⟨0/x⟩ ≐ P ∈ B⟨0/x⟩", "L⟨1/x⟩ ≐ P ∈ B⟨1/x⟩"},
       "S1elim (c.A) (loop r) P (x.L) ≐ L⟨r/x⟩ ∈ B⟨r/x⟩", {"c, x fresh"},
       [](B& b) {
         std::string c = b.term_var("c");
         std::string x = b.dim_var("x");
         Term a = b.term("A"), p = b.term("P"), l = b.term("L"), ty = b.term("B");
         Dim r = b.dim("r");
         b.premise(B::with_dim(b.tm_of(l, ty), x));
         b.premise(b.tm_eq(dsubst(l, zero(), x), p, dsubst(ty, zero(), x)));
         b.premise(b.tm_eq(dsubst(l, one(), x), p, dsubst(ty, one(), x)));
         b.conclude(b.tm_eq(mk::s1elim(c, a, mk::loop(r), p, x, l), dsubst(l, r, x), dsubst(ty, r, x)));
       }},
  };
}

std::vector<Def> univalence() {
  return {
      {"ua/form", "Univalence", "k:kind r:dim A:term A':term B:term B':term E:term E':term",
       {"A ≐ A' type κ ⟨r=0⟩", "B ≐ B' type κ", "E ≐ E' ∈ Equiv(A, B) ⟨r=0⟩"},
       "V(r, A, B, E) ≐ V(r, A', B', E') type κ", {},
       [](B& b) {
         Kind k = b.kind("k");
         Dim r = b.dim("r");
         Term a = b.term("A"), a2 = b.term("A'"), tb = b.term("B"), tb2 = b.term("B'"), e = b.term("E"),
              e2 = b.term("E'");
         b.premise(B::under(b.type_eq(k, a, a2), {{r, zero()}}));
         b.premise(b.type_eq(k, tb, tb2));
         b.premise(B::under(b.tm_eq(e, e2, mk::equiv(a, tb)), {{r, zero()}}));
         b.conclude(b.type_eq(k, mk::V(r, a, tb, e), mk::V(r, a2, tb2, e2)));
       }},
      {"ua/form-0", "Univalence", "k:kind A:term B:term E:term", {"A type κ"}, "V(0, A, B, E) ≐ A type κ", {},
       [](B& b) {
         Term a = b.term("A");
         b.premise(b.type_wf(b.kind("k"), a));
         b.conclude(b.type_eq(b.kind("k"), mk::V(zero(), a, b.term("B"), b.term("E")), a));
       }},
      {"ua/form-1", "Univalence", "k:kind A:term B:term E:term", {"B type κ"}, "V(1, A, B, E) ≐ B type κ", {},
       [](B& b) {
         Term tb = b.term("B");
         b.premise(b.type_wf(b.kind("k"), tb));
         b.conclude(b.type_eq(b.kind("k"), mk::V(one(), b.term("A"), tb, b.term("E")), tb));
       }},
      {"ua/intro", "Univalence", "r:dim A:term B:term E:term M:term M':term N:term N':term",
       {"M ≐ M' ∈ A ⟨r=0⟩", "N ≐ N' ∈ B", "E ∈ Equiv(A, B) ⟨r=0⟩", "fst E M ≐ N ∈ B ⟨r=0⟩"},
       "Vin(r, M, N) ≐ Vin(r, M', N') ∈ V(r, A, B, E)", {},
       [](B& b) {
         Dim r = b.dim("r");
         Term a = b.term("A"), tb = b.term("B"), e = b.term("E"), m = b.term("M"), m2 = b.term("M'"),
              n = b.term("N"), n2 = b.term("N'");
         b.premise(B::under(b.tm_eq(m, m2, a), {{r, zero()}}));
         b.premise(b.tm_eq(n, n2, tb));
         b.premise(B::under(b.tm_of(e, mk::equiv(a, tb)), {{r, zero()}}));
         b.premise(B::under(b.tm_eq(mk::app(fst_e(e), m), n, tb), {{r, zero()}}));
         b.conclude(b.tm_eq(mk::vin(r, m, n), mk::vin(r, m2, n2), mk::V(r, a, tb, e)));
       }},
      {"ua/intro-0", "Univalence", "M:term N:term A:term", {"M ∈ A"}, "Vin(0, M, N) ≐ M ∈ A", {},
       [](B& b) {
         Term m = b.term("M"), a = b.term("A");
         b.premise(b.tm_of(m, a));
         b.conclude(b.tm_eq(mk::vin(zero(), m, b.term("N")), m, a));
       }},
      {"ua/intro-1", "Univalence", "M:term N:term B:term", {"N ∈ B"}, "Vin(1, M, N) ≐ N ∈ B", {},
       [](B& b) {
         Term n = b.term("N"), tb = b.term("B");
         b.premise(b.tm_of(n, tb));
         b.conclude(b.tm_eq(mk::vin(one(), b.term("M"), n), n, tb));
       }},
      {"ua/proj", "Univalence", "r:dim A:term B:term E:term M:term M':term F:term",
       {"M ≐ M' ∈ V(r, A, B, E)", "F ≐ fst E ∈ A → B ⟨r=0⟩"}, "Vproj(r, M, F) ≐ Vproj(r, M', fst E) ∈ B", {},
       [](B& b) {
         Dim r = b.dim("r");
         Term a = b.term("A"), tb = b.term("B"), e = b.term("E"), m = b.term("M"), m2 = b.term("M'"),
              f = b.term("F");
         b.premise(b.tm_eq(m, m2, mk::V(r, a, tb, e)));
         b.premise(B::under(b.tm_eq(f, fst_e(e), mk::arr(a, tb)), {{r, zero()}}));
         b.conclude(b.tm_eq(mk::vproj(r, m, f), mk::vproj(r, m2, fst_e(e)), tb));
       }},
      {"ua/proj-0", "Univalence", "M:term F:term A:term B:term", {"M ∈ A", "F ∈ A → B"},
       "Vproj(0, M, F) ≐ F M ∈ B", {},
       [](B& b) {
         Term m = b.term("M"), f = b.term("F"), a = b.term("A"), tb = b.term("B");
         b.premise(b.tm_of(m, a));
         b.premise(b.tm_of(f, mk::arr(a, tb)));
         b.conclude(b.tm_eq(mk::vproj(zero(), m, f), mk::app(f, m), tb));
       }},
      {"ua/proj-1", "Univalence", "M:term F:term B:term", {"M ∈ B"}, "Vproj(1, M, F) ≐ M ∈ B", {},
       [](B& b) {
         Term m = b.term("M"), tb = b.term("B");
         b.premise(b.tm_of(m, tb));
         b.conclude(b.tm_eq(mk::vproj(one(), m, b.term("F")), m, tb));
       }},
      {"ua/proj-beta", "Univalence", "r:dim M:term N:term F:term A:term B:term",
       {"M ∈ A ⟨r=0⟩", "N ∈ B", "F ∈ A → B ⟨r=0⟩", "F M ≐ N ∈ B ⟨r=0⟩"}, "Vproj(r, Vin(r, M, N), F) ≐ N ∈ B", {},
       [](B& b) {
         Dim r = b.dim("r");
         Term m = b.term("M"), n = b.term("N"), f = b.term("F"), a = b.term("A"), tb = b.term("B");
         b.premise(B::under(b.tm_of(m, a), {{r, zero()}}));
         b.premise(b.tm_of(n, tb));
         b.premise(B::under(b.tm_of(f, mk::arr(a, tb)), {{r, zero()}}));
         b.premise(B::under(b.tm_eq(mk::app(f, m), n, tb), {{r, zero()}}));
         b.conclude(b.tm_eq(mk::vproj(r, mk::vin(r, m, n), f), n, tb));
       }},
      {"ua/eta", "Univalence", "r:dim A:term B:term E:term M:term N:term",
       {"N ∈ V(r, A, B, E)", "M ≐ N ∈ A ⟨r=0⟩"}, "Vin(r, M, Vproj(r, N, fst E)) ≐ N ∈ V(r, A, B, E)", {},
       [](B& b) {
         Dim r = b.dim("r");
         Term a = b.term("A"), tb = b.term("B"), e = b.term("E"), m = b.term("M"), n = b.term("N");
         Term v = mk::V(r, a, tb, e);
         b.premise(b.tm_of(n, v));
         b.premise(B::under(b.tm_eq(m, n, a), {{r, zero()}}));
         b.conclude(b.tm_eq(mk::vin(r, m, mk::vproj(r, n, fst_e(e))), n, v));
       }},
  };
}

Term universe(Kind k, unsigned i) { return mk::universe(k == kKan, i); }

Def closed_code(const char* id, const char* ty, Term (*code)()) {
  return {id, "Universes", "k:kind i:level", {}, std::string(ty) + " ∈ U^κ_i", {},
          [code](B& b) { b.conclude(b.tm_of(code(), universe(b.kind("k"), b.level("i")))); }};
}

std::vector<Def> universes() {
  std::vector<Def> out = {
      {"univ/form-pre", "Universes", "i:level", {}, "U^pre_i type pre", {},
       [](B& b) { b.conclude(b.type_wf(kPre, mk::upre(b.level("i")))); }},
      {"univ/form-kan", "Universes", "i:level", {}, "U^Kan_i type Kan", {},
       [](B& b) { b.conclude(b.type_wf(kKan, mk::ukan(b.level("i")))); }},
      {"univ/el", "Universes", "k:kind i:level A:term A':term", {"A ≐ A' ∈ U^κ_i"}, "A ≐ A' type κ", {},
       [](B& b) {
         Kind k = b.kind("k");
         Term a = b.term("A"), a2 = b.term("A'");
         b.premise(b.tm_eq(a, a2, universe(k, b.level("i"))));
         b.conclude(b.type_eq(k, a, a2));
       }},
      {"univ/cumulativity", "Universes", "k:kind i:level j:level A:term A':term", {"A ≐ A' ∈ U^κ_i"},
       "A ≐ A' ∈ U^κ_j", {"i ≤ j"},
       [](B& b) {
         Kind k = b.kind("k");
         unsigned i = b.level("i"), j = b.level("j");
         Term a = b.term("A"), a2 = b.term("A'");
         b.side("i ≤ j", i <= j, std::to_string(i) + " > " + std::to_string(j));
         b.premise(b.tm_eq(a, a2, universe(k, i)));
         b.conclude(b.tm_eq(a, a2, universe(k, j)));
       }},
      {"univ/kan-pre", "Universes", "i:level A:term A':term", {"A ≐ A' ∈ U^Kan_i"}, "A ≐ A' ∈ U^pre_i", {},
       [](B& b) {
         unsigned i = b.level("i");
         Term a = b.term("A"), a2 = b.term("A'");
         b.premise(b.tm_eq(a, a2, mk::ukan(i)));
         b.conclude(b.tm_eq(a, a2, mk::upre(i)));
       }},
      {"univ/pi", "Universes", "k:kind i:level a:termvar A:term A':term B:term B':term",
       {"A ≐ A' ∈ U^κ_i", "a:A ⊢ B ≐ B' ∈ U^κ_i"}, "(a:A) → B ≐ (a:A') → B' ∈ U^κ_i", {"a fresh"},
       [](B& b) {
         Term u = universe(b.kind("k"), b.level("i"));
         std::string a = b.term_var("a");
         Term ta = b.term("A"), ta2 = b.term("A'"), tb = b.term("B"), tb2 = b.term("B'");
         b.premise(b.tm_eq(ta, ta2, u));
         b.premise(B::with_hyp(b.tm_eq(tb, tb2, u), a, ta));
         b.conclude(b.tm_eq(mk::pi(a, ta, tb), mk::pi(a, ta2, tb2), u));
       }},
      {"univ/sg", "Universes", "k:kind i:level a:termvar A:term A':term B:term B':term",
       {"A ≐ A' ∈ U^κ_i", "a:A ⊢ B ≐ B' ∈ U^κ_i"}, "(a:A) × B ≐ (a:A') × B' ∈ U^κ_i", {"a fresh"},
       [](B& b) {
         Term u = universe(b.kind("k"), b.level("i"));
         std::string a = b.term_var("a");
         Term ta = b.term("A"), ta2 = b.term("A'"), tb = b.term("B"), tb2 = b.term("B'");
         b.premise(b.tm_eq(ta, ta2, u));
         b.premise(B::with_hyp(b.tm_eq(tb, tb2, u), a, ta));
         b.conclude(b.tm_eq(mk::sigma(a, ta, tb), mk::sigma(a, ta2, tb2), u));
       }},
      {"univ/path", "Universes", "k:kind i:level x:dimvar A:term A':term P0:term P0':term P1:term P1':term",
       {"Ψ,x ⊢ A ≐ A' ∈ U^κ_i", "P0 ≐ P0' ∈ A⟨0/x⟩", "P1 ≐ P1' ∈ A⟨1/x⟩"},
       "Path(x.A, P0, P1) ≐ Path(x.A', P0', P1') ∈ U^κ_i", {"x fresh"},
       [](B& b) {
         Term u = universe(b.kind("k"), b.level("i"));
         std::string x = b.dim_var("x");
         Term a = b.term("A"), a2 = b.term("A'"), p0 = b.term("P0"), p02 = b.term("P0'"), p1 = b.term("P1"),
              p12 = b.term("P1'");
         b.premise(B::with_dim(b.tm_eq(a, a2, u), x));
         b.premise(b.tm_eq(p0, p02, dsubst(a, zero(), x)));
         b.premise(b.tm_eq(p1, p12, dsubst(a, one(), x)));
         b.conclude(b.tm_eq(mk::path(x, a, p0, p1), mk::path(x, a2, p02, p12), u));
       }},
      {"univ/eq", "Universes", "i:level A:term A':term M:term M':term N:term N':term",
       {"A ≐ A' ∈ U^pre_i", "M ≐ M' ∈ A", "N ≐ N' ∈ A"}, "Eq(A, M, N) ≐ Eq(A', M', N') ∈ U^pre_i", {},
       [](B& b) {
         Term u = mk::upre(b.level("i"));
         Term a = b.term("A"), a2 = b.term("A'"), m = b.term("M"), m2 = b.term("M'"), n = b.term("N"),
              n2 = b.term("N'");
         b.premise(b.tm_eq(a, a2, u));
         b.premise(b.tm_eq(m, m2, a));
         b.premise(b.tm_eq(n, n2, a));
         b.conclude(b.tm_eq(mk::eq(a, m, n), mk::eq(a2, m2, n2), u));
       }},
  };
  out.push_back(closed_code("univ/void", "void", mk::void_));
  out.push_back(closed_code("univ/nat", "nat", mk::nat));
  out.push_back(closed_code("univ/bool", "bool", mk::bool_));
  out.push_back(closed_code("univ/wbool", "wbool", mk::wbool));
  out.push_back(closed_code("univ/S1", "S1", mk::circle));
  std::vector<Def> rest = {
      {"univ/ua", "Universes", "k:kind i:level r:dim A:term A':term B:term B':term E:term E':term",
       {"A ≐ A' ∈ U^κ_i ⟨r=0⟩", "B ≐ B' ∈ U^κ_i", "E ≐ E' ∈ Equiv(A, B) ⟨r=0⟩"},
       "V(r, A, B, E) ≐ V(r, A', B', E') ∈ U^κ_i", {},
       [](B& b) {
         Term u = universe(b.kind("k"), b.level("i"));
         Dim r = b.dim("r");
         Term a = b.term("A"), a2 = b.term("A'"), tb = b.term("B"), tb2 = b.term("B'"), e = b.term("E"),
              e2 = b.term("E'");
         b.premise(B::under(b.tm_eq(a, a2, u), {{r, zero()}}));
         b.premise(b.tm_eq(tb, tb2, u));
         b.premise(B::under(b.tm_eq(e, e2, mk::equiv(a, tb)), {{r, zero()}}));
         b.conclude(b.tm_eq(mk::V(r, a, tb, e), mk::V(r, a2, tb2, e2), u));
       }},
      {"univ/in-pre", "Universes", "k:kind i:level j:level", {}, "U^κ_i ∈ U^pre_j", {"i < j"},
       [](B& b) {
         unsigned i = b.level("i"), j = b.level("j");
         b.side("i < j", i < j, std::to_string(i) + " >= " + std::to_string(j));
         b.conclude(b.tm_of(universe(b.kind("k"), i), mk::upre(j)));
       }},
      {"univ/in-kan", "Universes", "i:level j:level", {}, "U^Kan_i ∈ U^Kan_j", {"i < j"},
       [](B& b) {
         unsigned i = b.level("i"), j = b.level("j");
         b.side("i < j", i < j, std::to_string(i) + " >= " + std::to_string(j));
         b.conclude(b.tm_of(mk::ukan(i), mk::ukan(j)));
       }},
      {"univ/box", "Universes", "j:level r:dim r':dim y:dimvar A:term M:term M':term B:tubes N:caps N':caps",
       {"wfshape(r_i=r_i')", "A type Kan", "M ≐ M' ∈ A", "∀i,j. Ψ,y ⊢ B_i ≐ B_j type Kan ⟨r_i=r_i', r_j=r_j'⟩",
        "∀i,j. N_i ≐ N'_j ∈ B_i⟨r'/y⟩ ⟨r_i=r_i', r_j=r_j'⟩", "∀i. B_i⟨r/y⟩ ≐ A type Kan ⟨r_i=r_i'⟩",
        "∀i. coe y.B_i r'~>r N_i ≐ M ∈ A ⟨r_i=r_i'⟩"},
       "box r~>r' M [N] ≐ box r~>r' M' [N'] ∈ hcom U^Kan_j r~>r' A [y.B]", {"y fresh"},
       [](B& b) {
         unsigned j = b.level("j");
         Dim r = b.dim("r"), r2 = b.dim("r'");
         std::string y = b.dim_var("y");
         Term a = b.term("A"), m = b.term("M"), m2 = b.term("M'");
         Tubes bs = b.tubes("B"), n = b.caps("N"), n2 = b.caps("N'");
         same_eqs(bs, n, "B", "N");
         same_eqs(bs, n2, "B", "N'");
         b.premise(b.shape(eqs_of(bs)));
         b.premise(b.type_wf(kKan, a));
         b.premise(b.tm_eq(m, m2, a));
         adjacent_types(b, bs, bs, y);
         adjacent_caps(b, n, n2, bs, y, r2);
         base_types(b, bs, y, r, a);
         coherent_caps(b, n, bs, y, r, r2, m, a);
         b.conclude(b.tm_eq(mk::box(r, r2, m, cap_faces(n)), mk::box(r, r2, m2, cap_faces(n2)), hcom_u(j, r, r2, a, bs, y)));
       }},
      {"univ/box-eq", "Universes", "r:dim M:term N:caps A:term", {"M ∈ A"}, "box r~>r M [N] ≐ M ∈ A", {},
       [](B& b) {
         Dim r = b.dim("r");
         Term m = b.term("M"), a = b.term("A");
         Tubes n = b.caps("N");
         b.premise(b.tm_of(m, a));
         b.conclude(b.tm_eq(mk::box(r, r, m, cap_faces(n)), m, a));
       }},
      {"univ/box-tube", "Universes", "r:dim r':dim y:dimvar A:term M:term B:tubes N:caps i:index",
       {"A type Kan", "M ∈ A", "∀i,j. Ψ,y ⊢ B_i ≐ B_j type Kan ⟨r_i=r_i', r_j=r_j'⟩",
        "∀i,j. N_i ≐ N_j ∈ B_i⟨r'/y⟩ ⟨r_i=r_i', r_j=r_j'⟩", "∀i. B_i⟨r/y⟩ ≐ A type Kan ⟨r_i=r_i'⟩",
        "∀i. coe y.B_i r'~>r N_i ≐ M ∈ A ⟨r_i=r_i'⟩"},
       "box r~>r' M [N] ≐ N_i ∈ B_i⟨r'/y⟩", {"r_i = r_i'", "y fresh"},
       [](B& b) {
         Dim r = b.dim("r"), r2 = b.dim("r'");
         std::string y = b.dim_var("y");
         Term a = b.term("A"), m = b.term("M");
         Tubes bs = b.tubes("B"), n = b.caps("N");
         std::size_t i = b.index("i");
         same_eqs(bs, n, "B", "N");
         bool ok = tube_side(b, n, i);
         b.premise(b.type_wf(kKan, a));
         b.premise(b.tm_of(m, a));
         adjacent_types(b, bs, bs, y);
         adjacent_caps(b, n, n, bs, y, r2);
         base_types(b, bs, y, r, a);
         coherent_caps(b, n, bs, y, r, r2, m, a);
         b.conclude(ok ? b.tm_eq(mk::box(r, r2, m, cap_faces(n)), n[i].body, dsubst(bs[i].body, r2, y))
                       : b.tm_of(m, a));
       }},
      {"univ/cap", "Universes", "j:level r:dim r':dim y:dimvar A:term M:term M':term B:tubes B':tubes",
       {"wfshape(r_i=r_i')", "A type Kan", "∀i,j. Ψ,y ⊢ B_i ≐ B'_j type Kan ⟨r_i=r_i', r_j=r_j'⟩",
        "∀i. B_i⟨r/y⟩ ≐ A type Kan ⟨r_i=r_i'⟩", "M ≐ M' ∈ hcom U^Kan_j r~>r' A [y.B]"},
       "cap r~>r' M [y.B] ≐ cap r~>r' M' [y.B'] ∈ A", {"y fresh"},
       [](B& b) {
         unsigned j = b.level("j");
         Dim r = b.dim("r"), r2 = b.dim("r'");
         std::string y = b.dim_var("y");
         Term a = b.term("A"), m = b.term("M"), m2 = b.term("M'");
         Tubes bs = b.tubes("B"), bs2 = b.tubes("B'");
         same_eqs(bs, bs2, "B", "B'");
         b.premise(b.shape(eqs_of(bs)));
         b.premise(b.type_wf(kKan, a));
         adjacent_types(b, bs, bs2, y);
         base_types(b, bs, y, r, a);
         b.premise(b.tm_eq(m, m2, hcom_u(j, r, r2, a, bs, y)));
         b.conclude(b.tm_eq(mk::cap(r, r2, m, bind_tubes(bs, y)), mk::cap(r, r2, m2, bind_tubes(bs2, y)), a));
       }},
      {"univ/cap-eq", "Universes", "r:dim M:term y:dimvar B:tubes A:term", {"M ∈ A"}, "cap r~>r M [y.B] ≐ M ∈ A",
       {"y fresh"},
       [](B& b) {
         Dim r = b.dim("r");
         std::string y = b.dim_var("y");
         Term m = b.term("M"), a = b.term("A");
         Tubes bs = b.tubes("B");
         b.premise(b.tm_of(m, a));
         b.conclude(b.tm_eq(mk::cap(r, r, m, bind_tubes(bs, y)), m, a));
       }},
      {"univ/cap-tube", "Universes", "j:level r:dim r':dim y:dimvar A:term M:term M':term B:tubes B':tubes i:index",
       {"A type Kan", "∀i,j. Ψ,y ⊢ B_i ≐ B'_j type Kan ⟨r_i=r_i', r_j=r_j'⟩", "∀i. B_i⟨r/y⟩ ≐ A type Kan ⟨r_i=r_i'⟩",
        "M ≐ M' ∈ hcom U^Kan_j r~>r' A [y.B]"},
       "cap r~>r' M [y.B] ≐ coe y.B_i r'~>r M ∈ A", {"r_i = r_i'", "y fresh"},
       [](B& b) {
         unsigned j = b.level("j");
         Dim r = b.dim("r"), r2 = b.dim("r'");
         std::string y = b.dim_var("y");
         Term a = b.term("A"), m = b.term("M"), m2 = b.term("M'");
         Tubes bs = b.tubes("B"), bs2 = b.tubes("B'");
         std::size_t i = b.index("i");
         same_eqs(bs, bs2, "B", "B'");
         bool ok = tube_side(b, bs, i);
         b.premise(b.type_wf(kKan, a));
         adjacent_types(b, bs, bs2, y);
         base_types(b, bs, y, r, a);
         b.premise(b.tm_eq(m, m2, hcom_u(j, r, r2, a, bs, y)));
         Term rhs = ok ? mk::coe(y, bs[i].body, r2, r, m) : m;
         b.conclude(b.tm_eq(mk::cap(r, r2, m, bind_tubes(bs, y)), rhs, a));
       }},
      {"univ/cap-box", "Universes", "r:dim r':dim y:dimvar A:term M:term M':term B:tubes N:caps N':caps",
       {"wfshape(r_i=r_i')", "A type Kan", "M ≐ M' ∈ A", "∀i,j. Ψ,y ⊢ B_i ≐ B_j type Kan ⟨r_i=r_i', r_j=r_j'⟩",
        "∀i,j. N_i ≐ N'_j ∈ B_i⟨r'/y⟩ ⟨r_i=r_i', r_j=r_j'⟩", "∀i. B_i⟨r/y⟩ ≐ A type Kan ⟨r_i=r_i'⟩",
        "∀i. coe y.B_i r'~>r N_i ≐ M ∈ A ⟨r_i=r_i'⟩"},
       "cap r~>r' (box r~>r' M [N]) [y.B] ≐ M ∈ A", {"y fresh"},
       [](B& b) {
         Dim r = b.dim("r"), r2 = b.dim("r'");
         std::string y = b.dim_var("y");
         Term a = b.term("A"), m = b.term("M"), m2 = b.term("M'");
         Tubes bs = b.tubes("B"), n = b.caps("N"), n2 = b.caps("N'");
         same_eqs(bs, n, "B", "N");
         same_eqs(bs, n2, "B", "N'");
         b.premise(b.shape(eqs_of(bs)));
         b.premise(b.type_wf(kKan, a));
         b.premise(b.tm_eq(m, m2, a));
         adjacent_types(b, bs, bs, y);
         adjacent_caps(b, n, n2, bs, y, r2);
         base_types(b, bs, y, r, a);
         coherent_caps(b, n, bs, y, r, r2, m, a);
         b.conclude(b.tm_eq(mk::cap(r, r2, mk::box(r, r2, m, cap_faces(n)), bind_tubes(bs, y)), m, a));
       }},
      {"univ/box-eta", "Universes", "j:level r:dim r':dim y:dimvar A:term B:tubes M:term",
       {"wfshape(r_i=r_i')", "A type Kan", "∀i,j. Ψ,y ⊢ B_i ≐ B_j type Kan ⟨r_i=r_i', r_j=r_j'⟩",
        "∀i. B_i⟨r/y⟩ ≐ A type Kan ⟨r_i=r_i'⟩", "M ∈ hcom U^Kan_j r~>r' A [y.B]"},
       "box r~>r' (cap r~>r' M [y.B]) [r_i=r_i' M] ≐ M ∈ hcom U^Kan_j r~>r' A [y.B]", {"y fresh"},
       [](B& b) {
         unsigned j = b.level("j");
         Dim r = b.dim("r"), r2 = b.dim("r'");
         std::string y = b.dim_var("y");
         Term a = b.term("A"), m = b.term("M");
         Tubes bs = b.tubes("B");
         Term ty = hcom_u(j, r, r2, a, bs, y);
         b.premise(b.shape(eqs_of(bs)));
         b.premise(b.type_wf(kKan, a));
         adjacent_types(b, bs, bs, y);
         base_types(b, bs, y, r, a);
         b.premise(b.tm_of(m, ty));
         System ms;
         for (const auto& t : bs) ms.push_back(mk::cap_face(t.eq.lhs, t.eq.rhs, m));
         b.conclude(b.tm_eq(mk::box(r, r2, mk::cap(r, r2, m, bind_tubes(bs, y)), ms), m, ty));
       }},
  };
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

std::vector<RuleSchema> build_catalog() {
  std::vector<RuleSchema> out;
  for (auto group : {structural, restriction, computation, kan, functions, pairs, paths, equality, voids, naturals,
                     booleans, weak_booleans, circle, univalence, universes}) {
    for (auto& d : group()) {
      out.push_back({d.id, d.paragraph, parse_metavars(d.metavars), std::move(d.premises), d.conclusion,
                     std::move(d.sides), std::move(d.build)});
    }
  }
  return out;
}

}  // namespace

const std::vector<RuleSchema>& rule_catalog() {
  static const std::vector<RuleSchema> catalog = build_catalog();
  return catalog;
}

}  // namespace ccl
