#include "ccl/gen.hpp"

#include <vector>

namespace ccl {

namespace {

using namespace mk;

// The target types the generator aims at. FcomU is an fcom type code built
// over bool; V is a univalence type over bool.
enum class Ty { Bool, WBool, Nat, S1, Fun, Pair, Path, V, Univ, Eq, FcomU };
constexpr int kTyCount = static_cast<int>(Ty::FcomU) + 1;

const char* kNotEquiv =
    "pair (lam a. if (b. bool) a false true)"
    " (lam b. pair (pair (if (c. bool) b false true) (dlam i. b))"
    " (lam p. lam q. dlam j. p))";

const char* kIdEquiv =
    "pair (lam a. a)"
    " (lam b. pair (pair b (dlam i. b))"
    " (lam p. lam q. dlam j. p))";

class TermGen {
 public:
  TermGen(Generator& g, const GenConfig& cfg, std::vector<std::string> psi) : g_(g), cfg_(cfg), dims_(std::move(psi)) {}

  Term tm(Ty t, unsigned depth) {
    if (depth == 0) return leaf(t);
    const GenWeights& w = cfg_.weights;
    unsigned var_w = has_var(t) ? w.variable : 0;
    unsigned total = w.intro + w.elim + w.kan + var_w + w.junk;
    std::uint64_t pick = g_.below(total == 0 ? 1 : total);
    if (pick < w.intro) return intro(t, depth);
    pick -= w.intro;
    if (pick < w.elim) return elim(t, depth);
    pick -= w.elim;
    if (pick < w.kan) return kan(t, depth);
    pick -= w.kan;
    if (pick < var_w) return variable(t);
    return tm(static_cast<Ty>(g_.below(kTyCount)), depth - 1);
  }

  Ty any_type() { return static_cast<Ty>(g_.below(kTyCount)); }

 private:
  // -------------------------------------------------------------------------
  // Names and dimensions

  std::string fresh(const char* stem) { return stem + std::to_string(counter_++); }

  Dim dim() {
    if (dims_.empty() || g_.chance(30)) return Dim::constant(g_.chance(50));
    return Dim::name(dims_[g_.below(dims_.size())]);
  }

  Dim name_or_const() {
    if (dims_.empty()) return Dim::constant(g_.chance(50));
    return g_.chance(75) ? Dim::name(dims_[g_.below(dims_.size())]) : Dim::constant(g_.chance(50));
  }

  Equation equation() {
    Dim lhs = name_or_const();
    Dim rhs = g_.chance(70) ? Dim::constant(g_.chance(50)) : dim();
    return {lhs, rhs};
  }

  template <class F>
  auto with_dim(const std::string& x, F f) {
    dims_.push_back(x);
    auto out = f();
    dims_.pop_back();
    return out;
  }

  template <class F>
  auto with_var(const std::string& a, Ty t, F f) {
    vars_.push_back({a, t});
    auto out = f();
    vars_.pop_back();
    return out;
  }

  bool has_var(Ty t) const {
    for (const auto& v : vars_) {
      if (v.second == t) return true;
    }
    return false;
  }

  Term variable(Ty t) {
    std::vector<std::string> c;
    for (const auto& v : vars_) {
      if (v.second == t) c.push_back(v.first);
    }
    return var(c[g_.below(c.size())]);
  }

  System tubes(Ty t, unsigned depth) {
    System out;
    std::uint64_t n = g_.below(3);
    for (std::uint64_t i = 0; i < n; ++i) {
      Equation e = equation();
      std::string y = fresh("y");
      Term body = with_dim(y, [&] { return tm(t, depth); });
      out.push_back(tube(e.lhs, e.rhs, y, body));
    }
    return out;
  }

  // -------------------------------------------------------------------------
  // Types

  Term equiv_term() { return parse(g_.chance(50) ? kNotEquiv : kIdEquiv); }

  Term fcom_code(const Dim& r, const Dim& r2) {
    System ts;
    std::uint64_t n = 1 + g_.below(2);
    for (std::uint64_t i = 0; i < n; ++i) {
      Equation e = equation();
      std::string y = fresh("y");
      ts.push_back(tube(e.lhs, e.rhs, y, g_.chance(70) ? bool_() : V(Dim::name(y), bool_(), bool_(), equiv_term())));
    }
    return fcom(r, r2, bool_(), std::move(ts));
  }

  /// A type term for `t`. When `line` is non-empty the type may vary along it.
  Term type(Ty t, const std::string& line = "") {
    auto d = [&] { return !line.empty() && g_.chance(60) ? Dim::name(line) : name_or_const(); };
    switch (t) {
      case Ty::Bool:
        return bool_();
      case Ty::WBool:
        return wbool();
      case Ty::Nat:
        return nat();
      case Ty::S1:
        return circle();
      case Ty::Fun: {
        std::string a = fresh("a");
        return pi(a, g_.chance(80) ? bool_() : nat(), bool_());
      }
      case Ty::Pair: {
        std::string a = fresh("a");
        return sigma(a, bool_(), nat());
      }
      case Ty::Path: {
        std::string x = fresh("i");
        return path(x, circle(), base(), base());
      }
      case Ty::V:
        return V(d(), bool_(), bool_(), equiv_term());
      case Ty::Univ:
        return ukan(0);
      case Ty::Eq:
        return eq(bool_(), tt(), tt());
      case Ty::FcomU: {
        Dim r = d();
        Dim r2 = d();
        return fcom_code(r, r2);
      }
    }
    return bool_();
  }

  // -------------------------------------------------------------------------
  // Terms

  Term leaf(Ty t) {
    switch (t) {
      case Ty::Bool:
      case Ty::WBool:
        return g_.chance(50) ? tt() : ff();
      case Ty::Nat:
        return g_.chance(70) ? zero() : suc(zero());
      case Ty::S1:
        return g_.chance(40) ? base() : loop(dim());
      case Ty::Fun: {
        std::string a = fresh("a");
        return lam(a, g_.chance(50) ? var(a) : tt());
      }
      case Ty::Pair:
        return pair(g_.chance(50) ? tt() : ff(), zero());
      case Ty::Path: {
        std::string i = fresh("i");
        return dlam(i, g_.chance(70) ? loop(Dim::name(i)) : base());
      }
      case Ty::V:
        return vin(name_or_const(), g_.chance(50) ? tt() : ff(), g_.chance(50) ? tt() : ff());
      case Ty::Univ:
        return g_.chance(50) ? bool_() : circle();
      case Ty::Eq:
        return star();
      case Ty::FcomU: {
        Equation e = equation();
        return box(name_or_const(), name_or_const(), tt(), {cap_face(e.lhs, e.rhs, ff())});
      }
    }
    return tt();
  }

  Term intro(Ty t, unsigned depth) {
    unsigned d = depth - 1;
    switch (t) {
      case Ty::Nat:
        return g_.chance(60) ? suc(tm(Ty::Nat, d)) : zero();
      case Ty::S1:
        return g_.chance(30) ? base() : loop(dim());
      case Ty::Fun: {
        std::string a = fresh("a");
        return lam(a, with_var(a, Ty::Bool, [&] { return tm(Ty::Bool, d); }));
      }
      case Ty::Pair:
        return pair(tm(Ty::Bool, d), tm(Ty::Nat, d));
      case Ty::Path: {
        std::string i = fresh("i");
        return dlam(i, with_dim(i, [&] { return tm(Ty::S1, d); }));
      }
      case Ty::V:
        return vin(name_or_const(), tm(Ty::Bool, d), tm(Ty::Bool, d));
      case Ty::Univ:
        switch (g_.below(11)) {
          case 0:
            return type(Ty::V);
          case 1:
            return type(Ty::FcomU);
          case 2:
            return type(Ty::Fun);
          case 3:
            return wbool();
          case 4:
            return type(Ty::Pair);
          case 5:
            return type(Ty::Path);
          case 6:
            return type(Ty::Eq);
          case 7:
            return void_();
          case 8:
            return upre(static_cast<unsigned>(g_.below(2)));
          case 9:
            return ukan(static_cast<unsigned>(g_.below(2)));
          default:
            return nat();
        }
      case Ty::FcomU: {
        Dim r = name_or_const();
        Dim r2 = name_or_const();
        System caps;
        std::uint64_t n = 1 + g_.below(2);
        for (std::uint64_t i = 0; i < n; ++i) {
          Equation e = equation();
          caps.push_back(cap_face(e.lhs, e.rhs, tm(Ty::Bool, d)));
        }
        return box(r, r2, tm(Ty::Bool, d), std::move(caps));
      }
      default:
        return leaf(t);
    }
  }

  Term elim(Ty t, unsigned depth) {
    unsigned d = depth - 1;
    switch (g_.below(t == Ty::Bool ? 11 : 7)) {
      case 0: {
        std::string b = fresh("b");
        Ty scrut = g_.chance(60) ? Ty::Bool : Ty::WBool;
        return if_(b, type(t), tm(scrut, d), tm(t, d), tm(t, d));
      }
      case 1: {
        std::string n = fresh("n");
        std::string a = fresh("a");
        Term s = with_var(n, Ty::Nat, [&] { return with_var(a, t, [&] { return tm(t, d); }); });
        return natrec(tm(Ty::Nat, d), tm(t, d), n, a, s);
      }
      case 2: {
        std::string c = fresh("c");
        std::string x = fresh("i");
        Term p = tm(t, d);
        Term l = g_.chance(50) ? p : with_dim(x, [&] { return tm(t, d); });
        return s1elim(c, type(t), tm(Ty::S1, d), p, x, l);
      }
      case 3: {
        std::string a = fresh("a");
        return app(lam(a, with_var(a, Ty::Bool, [&] { return tm(t, d); })), tm(Ty::Bool, d));
      }
      case 4:
        return g_.chance(50) ? fst(pair(tm(t, d), tm(Ty::Nat, d))) : snd(pair(tm(Ty::Bool, d), tm(t, d)));
      case 5: {
        std::string i = fresh("i");
        return dapp(dlam(i, with_dim(i, [&] { return tm(t, d); })), dim());
      }
      case 6: {
        Term e = equiv_term();
        Dim r = dim();
        return vproj(r, t == Ty::Bool ? tm(Ty::V, d) : vin(r, tm(t, d), tm(t, d)), fst(e));
      }
      case 7:
        return app(tm(Ty::Fun, d), tm(Ty::Bool, d));
      case 8:
        return fst(tm(Ty::Pair, d));
      case 9: {
        Dim r = name_or_const();
        Dim r2 = name_or_const();
        Equation e = equation();
        System caps{cap_face(e.lhs, e.rhs, tm(Ty::Bool, d))};
        std::string y = fresh("y");
        System ts{tube(e.lhs, e.rhs, y, bool_())};
        Term m = g_.chance(60) ? box(r, r2, tm(Ty::Bool, d), std::move(caps)) : tm(Ty::FcomU, d);
        return cap(r, r2, m, std::move(ts));
      }
      default: {
        std::string x = fresh("i");
        Term ty = with_dim(x, [&] { return type(Ty::V, x); });
        Dim r = name_or_const();
        Term src = g_.chance(50) ? tm(Ty::Bool, d) : tm(Ty::V, d);
        return coe(x, ty, r, dim(), src);
      }
    }
  }

  Term kan(Ty t, unsigned depth) {
    unsigned d = depth - 1;
    Dim r = dim();
    Dim r2 = dim();
    switch (g_.below(5)) {
      case 0:
        return hcom(type(t), r, r2, tm(t, d), tubes(t, d));
      case 1: {
        std::string x = fresh("i");
        Term ty = with_dim(x, [&] { return type(t, x); });
        return coe(x, ty, r, r2, tm(t, d));
      }
      case 2: {
        std::string x = fresh("i");
        Term ty = with_dim(x, [&] { return type(t, x); });
        return com(x, ty, r, r2, tm(t, d), tubes(t, d));
      }
      case 3:
        return ghcom(type(t), r, r2, tm(t, d), tubes(t, d));
      default: {
        std::string x = fresh("i");
        Term ty = with_dim(x, [&] { return type(t, x); });
        return gcom(x, ty, r, r2, tm(t, d), tubes(t, d));
      }
    }
  }

  Generator& g_;
  const GenConfig& cfg_;
  std::vector<std::string> dims_;
  std::vector<std::pair<std::string, Ty>> vars_;
  unsigned counter_ = 0;
};

}  // namespace

std::vector<std::string> dim_pool_names(unsigned size) {
  static const char* base_names[] = {"x", "y", "z", "w"};
  std::vector<std::string> out;
  for (unsigned i = 0; i < size; ++i) out.push_back(i < 4 ? base_names[i] : "x" + std::to_string(i));
  return out;
}

std::uint64_t case_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Sample Generator::sample() {
  std::vector<std::string> pool = dim_pool_names(config_.dim_pool);
  std::vector<std::string> psi;
  for (const auto& n : pool) {
    if (chance(70)) psi.push_back(n);
  }
  TermGen tg(*this, config_, psi);
  unsigned depth = 1 + static_cast<unsigned>(below(config_.max_depth == 0 ? 1 : config_.max_depth));
  Term t = tg.tm(tg.any_type(), depth);
  return {DimCtx(psi), std::move(t)};
}

DimSubst Generator::substitution(const DimCtx& source) {
  std::vector<std::string> pool = dim_pool_names(config_.dim_pool == 0 ? 1 : config_.dim_pool);
  std::vector<std::string> target;
  for (const auto& n : pool) {
    if (chance(60)) target.push_back(n);
  }
  std::map<std::string, Dim> map;
  for (const auto& n : source) {
    if (target.empty() || chance(35)) {
      map.emplace(n, Dim::constant(chance(50)));
    } else {
      map.emplace(n, Dim::name(target[below(target.size())]));
    }
  }
  return DimSubst(source, DimCtx(target), std::move(map));
}

}  // namespace ccl
