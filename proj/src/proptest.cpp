#include "ccl/proptest.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "ccl/serialize.hpp"

namespace ccl {

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"exclusivity", "dim-preservation", "stability",
                                                 "subst-functoriality", "roundtrip", "coherence-bool"};
  return names;
}

// ---------------------------------------------------------------------------
// Rule-matching oracle

namespace {

bool reflexive_tube(const System& sys) {
  return std::any_of(sys.begin(), sys.end(), [](const Tube& t) { return t.eq.reflexive(); });
}

bool matches_value(const Term& m) {
  for (const auto& c : matching_rules(m)) {
    if (c.value) return true;
  }
  return false;
}

std::vector<RuleMatch> one(const char* rule, bool value = false) { return {RuleMatch{{rule}, value}}; }

void add(std::vector<RuleMatch>& out, const char* rule, bool value = false) { out.push_back({{rule}, value}); }

/// The congruence rule applies whenever the principal argument steps.
void add_congruence(std::vector<RuleMatch>& out, const char* rule, const Term& principal) {
  for (auto c : matching_rules(principal)) {
    if (c.value) continue;
    c.chain.insert(c.chain.begin(), rule);
    out.push_back(std::move(c));
  }
}

void hcom_rules(std::vector<RuleMatch>& out, const Term& ty) {
  if (!matches_value(ty)) return;
  switch (ty.tag()) {
    case Tag::Pi: return add(out, "fun/hcom");
    case Tag::Sigma: return add(out, "pair/hcom");
    case Tag::Path: return add(out, "path/hcom");
    case Tag::Eq: return add(out, "eq/hcom");
    case Tag::Nat: return add(out, "nat/hcom");
    case Tag::Bool: return add(out, "bool/hcom");
    case Tag::WBool: return add(out, "wbool/hcom");
    case Tag::Circle: return add(out, "circle/hcom");
    case Tag::UKan: return add(out, "univ/hcom");
    case Tag::V: return add(out, "ua/hcom");
    case Tag::Fcom: return add(out, "univ/hcom-fcom");
    default: return;
  }
}

void coe_rules(std::vector<RuleMatch>& out, const Term& m) {
  Fresh f(m);
  const Scope& line = m.node().args[0];
  std::string x = f.dim(line.binders[0].hint);
  Term ty = line.open_dim(Dim::name(x));
  add_congruence(out, "kan/coe-cong", ty);
  if (!matches_value(ty)) return;
  const Dim& r = m.dim(0);
  switch (ty.tag()) {
    case Tag::Pi: return add(out, "fun/coe");
    case Tag::Sigma: return add(out, "pair/coe");
    case Tag::Path: return add(out, "path/coe");
    case Tag::Nat: return add(out, "nat/coe");
    case Tag::Bool: return add(out, "bool/coe");
    case Tag::WBool: return add(out, "wbool/coe");
    case Tag::Circle: return add(out, "circle/coe");
    case Tag::UPre:
    case Tag::UKan: return add(out, "univ/coe");
    case Tag::Fcom: return add(out, "univ/coe-fcom");
    case Tag::V: {
      const Dim& d = ty.dim(0);
      bool along = d.is_name() && d.name() == x;
      if (along && r == Dim::zero()) add(out, "ua/coe-0");
      if (along && r == Dim::one()) add(out, "ua/coe-1");
      if (along && r.is_name()) add(out, "ua/coe-name");
      if (d.is_name() && d.name() != x) add(out, "ua/coe-other");
      return;
    }
    default: return;
  }
}

bool same_faces(const System& a, const System& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!(a[i].eq == b[i].eq)) return false;
  }
  return true;
}

}  // namespace

std::vector<RuleMatch> matching_rules(const Term& m) {
  std::vector<RuleMatch> out;
  auto dim_is = [&](std::size_t i, const Dim& d) { return m.dim(i) == d; };
  auto dim_name = [&](std::size_t i) { return m.dim(i).is_name(); };
  switch (m.tag()) {
    case Tag::Var:
    case Tag::BVar: return out;
    case Tag::Pi: return one("types/pi-val", true);
    case Tag::Sigma: return one("types/sg-val", true);
    case Tag::Path: return one("types/path-val", true);
    case Tag::Eq: return one("types/eq-val", true);
    case Tag::Void: return one("types/void-val", true);
    case Tag::Nat: return one("types/nat-val", true);
    case Tag::Bool: return one("types/bool-val", true);
    case Tag::WBool: return one("types/wbool-val", true);
    case Tag::Circle: return one("types/S1-val", true);
    case Tag::UPre: return one("types/upre-val", true);
    case Tag::UKan: return one("types/ukan-val", true);
    case Tag::Lam: return one("fun/lam-val", true);
    case Tag::Pair: return one("pair/pair-val", true);
    case Tag::DLam: return one("path/dlam-val", true);
    case Tag::Star: return one("eq/star-val", true);
    case Tag::Zero: return one("nat/zero-val", true);
    case Tag::Suc: return one("nat/suc-val", true);
    case Tag::True: return one("bool/true-val", true);
    case Tag::False: return one("bool/false-val", true);
    case Tag::Base: return one("circle/base-val", true);
    case Tag::V:
      if (dim_name(0)) add(out, "types/V-val", true);
      if (dim_is(0, Dim::zero())) add(out, "types/V-0");
      if (dim_is(0, Dim::one())) add(out, "types/V-1");
      return out;
    case Tag::Loop:
      if (dim_name(0)) add(out, "circle/loop-val", true);
      if (m.dim(0).is_const()) add(out, "circle/loop-eps");
      return out;
    case Tag::Vin:
      if (dim_name(0)) add(out, "ua/vin-val", true);
      if (dim_is(0, Dim::zero())) add(out, "ua/vin-0");
      if (dim_is(0, Dim::one())) add(out, "ua/vin-1");
      return out;
    case Tag::Fcom:
    case Tag::Box: {
      bool fcom = m.tag() == Tag::Fcom;
      bool same = m.dim(0) == m.dim(1);
      bool refl = reflexive_tube(m.node().tubes);
      if (same) add(out, fcom ? "kan/fcom-eq" : "univ/box-eq");
      if (!same && refl) add(out, fcom ? "kan/fcom-tube" : "univ/box-tube");
      if (!same && !refl) add(out, fcom ? "kan/fcom-val" : "univ/box-val", true);
      return out;
    }
    case Tag::Cap: {
      bool same = m.dim(0) == m.dim(1);
      bool refl = reflexive_tube(m.node().tubes);
      if (same) add(out, "univ/cap-eq");
      if (!same && refl) add(out, "univ/cap-tube");
      if (!same && !refl) {
        const Term& b = m.body(0);
        add_congruence(out, "univ/cap-cong", b);
        if (b.tag() == Tag::Box && matches_value(b) && b.dim(0) == m.dim(0) && b.dim(1) == m.dim(1) &&
            same_faces(b.node().tubes, m.node().tubes)) {
          add(out, "univ/cap-box");
        }
      }
      return out;
    }
    case Tag::Hcom:
      add_congruence(out, "kan/hcom-cong", m.body(0));
      hcom_rules(out, m.body(0));
      return out;
    case Tag::Coe:
      coe_rules(out, m);
      return out;
    case Tag::Com: return one("kan/com");
    case Tag::Gcom: return one("kan/gcom");
    case Tag::Ghcom: return one(m.node().tubes.empty() ? "kan/ghcom-nil" : "kan/ghcom-cons");
    case Tag::App:
      add_congruence(out, "fun/app-cong", m.body(0));
      if (m.body(0).tag() == Tag::Lam) add(out, "fun/beta");
      return out;
    case Tag::Fst:
      add_congruence(out, "pair/fst-cong", m.body(0));
      if (m.body(0).tag() == Tag::Pair) add(out, "pair/fst-beta");
      return out;
    case Tag::Snd:
      add_congruence(out, "pair/snd-cong", m.body(0));
      if (m.body(0).tag() == Tag::Pair) add(out, "pair/snd-beta");
      return out;
    case Tag::DApp:
      add_congruence(out, "path/dapp-cong", m.body(0));
      if (m.body(0).tag() == Tag::DLam) add(out, "path/beta");
      return out;
    case Tag::NatRec:
      add_congruence(out, "nat/natrec-cong", m.body(0));
      if (m.body(0).tag() == Tag::Zero) add(out, "nat/natrec-zero");
      if (m.body(0).tag() == Tag::Suc) add(out, "nat/natrec-suc");
      return out;
    case Tag::If: {
      const Term& b = m.body(1);
      add_congruence(out, "bool/if-cong", b);
      if (b.tag() == Tag::True) add(out, "bool/if-true");
      if (b.tag() == Tag::False) add(out, "bool/if-false");
      if (b.tag() == Tag::Fcom && matches_value(b)) add(out, "wbool/if-fcom");
      return out;
    }
    case Tag::CircElim: {
      const Term& c = m.body(1);
      add_congruence(out, "circle/elim-cong", c);
      if (c.tag() == Tag::Base) add(out, "circle/elim-base");
      if (c.tag() == Tag::Loop && matches_value(c)) add(out, "circle/elim-loop");
      if (c.tag() == Tag::Fcom && matches_value(c)) add(out, "circle/elim-fcom");
      return out;
    }
    case Tag::Vproj: {
      if (dim_is(0, Dim::zero())) add(out, "ua/vproj-0");
      if (dim_is(0, Dim::one())) add(out, "ua/vproj-1");
      if (dim_name(0)) {
        const Term& v = m.body(0);
        add_congruence(out, "ua/vproj-cong", v);
        if (v.tag() == Tag::Vin && v.dim(0) == m.dim(0)) add(out, "ua/vproj-vin");
      }
      return out;
    }
  }
  return out;
}

std::set<std::string> free_dim_names(const Term& m) {
  std::set<std::string> out;
  auto dim = [&](const Dim& d) {
    if (d.is_name()) out.insert(d.name());
  };
  auto visit = [&](auto& self, const Term& t) -> void {
    const Node& n = t.node();
    for (const auto& d : n.dims) dim(d);
    for (const auto& a : n.args) self(self, a.body);
    for (const auto& tb : n.tubes) {
      dim(tb.eq.lhs);
      dim(tb.eq.rhs);
      self(self, tb.body);
    }
  };
  visit(visit, m);
  return out;
}

// ---------------------------------------------------------------------------
// Shrinking

namespace {

Term with_child(const Term& m, bool tube, std::size_t i, const Term& body) {
  Node n = m.node();
  (tube ? n.tubes[i].body : n.args[i].body) = body;
  return Term::make(std::move(n));
}

std::vector<Term> direct_candidates(const Term& m) {
  std::vector<Term> out;
  const Node& n = m.node();
  for (const auto& a : n.args) {
    if (a.binders.empty()) out.push_back(a.body);
  }
  for (const auto& t : n.tubes) {
    if (!t.binds) out.push_back(t.body);
  }
  for (std::size_t j = 0; j < n.tubes.size(); ++j) {
    Node drop = n;
    drop.tubes.erase(drop.tubes.begin() + static_cast<std::ptrdiff_t>(j));
    out.push_back(Term::make(std::move(drop)));
  }
  for (const Term& leaf : {mk::tt(), mk::ff(), mk::zero(), mk::base(), mk::bool_()}) out.push_back(leaf);
  return out;
}

}  // namespace

Term shrink(const Term& start, const std::function<bool(const Term&)>& fails, std::size_t budget) {
  std::size_t calls = 0;
  auto go = [&](auto& self, Term m, const std::function<bool(const Term&)>& pred) -> Term {
    bool changed = true;
    while (changed && calls < budget) {
      changed = false;
      std::size_t size = term_size(m);
      for (const Term& c : direct_candidates(m)) {
        if (term_size(c) >= size || calls >= budget) continue;
        ++calls;
        if (pred(c)) {
          m = c;
          changed = true;
          break;
        }
      }
      if (changed) continue;
      const Node& n = m.node();
      std::vector<std::pair<bool, std::size_t>> positions;
      for (std::size_t i = 0; i < n.args.size(); ++i) positions.push_back({false, i});
      for (std::size_t i = 0; i < n.tubes.size(); ++i) positions.push_back({true, i});
      for (auto [tube, i] : positions) {
        const Term& child = tube ? m.node().tubes[i].body : m.node().args[i].body;
        Term parent = m;
        Term smaller = self(self, child, [&](const Term& c) { return pred(with_child(parent, tube, i, c)); });
        if (!(smaller.same(child)) && term_size(smaller) < term_size(child)) {
          m = with_child(parent, tube, i, smaller);
          changed = true;
          break;
        }
      }
    }
    return m;
  };
  return go(go, start, fails);
}

// ---------------------------------------------------------------------------
// Suites

namespace {

using Failure = std::optional<std::string>;

struct Stats {
  std::size_t checks = 0;
  std::map<std::string, std::size_t> hits;

  void hit(const StepOutcome& o) {
    for (const auto& r : o.rules) ++hits[r];
  }
};

std::string show(const std::set<std::string>& s) {
  std::string out = "{";
  for (const auto& n : s) out += (out.size() > 1 ? ", " : "") + n;
  return out + "}";
}

std::string show(const std::vector<std::string>& chain) {
  std::string out;
  for (const auto& r : chain) out += (out.empty() ? "" : " > ") + r;
  return out;
}

class Suite {
 public:
  Suite(const SuiteOptions& opts, std::string name) : opts_(opts), name_(std::move(name)) {}
  virtual ~Suite() = default;

  /// Draws the case's sample. Suites may retry until the sample is useful.
  virtual Sample draw(Generator& g, std::size_t index) const {
    (void)index;
    return g.sample();
  }
  virtual Failure check(const Sample& s, std::uint64_t aux, Stats& st) const = 0;
  virtual bool shrinkable() const { return true; }

 protected:
  /// Visits the term and up to `walk` reducts, stopping at a value, a stuck
  /// term or an oversized term.
  template <class F>
  Failure walk(const Term& start, Stats& st, F f) const {
    Term t = start;
    for (std::size_t k = 0; k <= opts_.walk; ++k) {
      StepOutcome o = step(t);
      st.hit(o);
      if (Failure fl = f(t, o)) return fl;
      if (!o.steps() || term_size(o.next) > opts_.max_size) break;
      t = o.next;
    }
    return std::nullopt;
  }

  const SuiteOptions& opts_;
  std::string name_;
};

Failure well_scoped(const Sample& s) {
  if (!free_vars(s.term).empty()) return "generated term has free term variables";
  for (const auto& n : free_dim_names(s.term)) {
    if (!s.psi.contains(n)) return "generated term mentions dimension " + n + " outside Ψ " + s.psi.str();
  }
  return std::nullopt;
}

class Exclusivity : public Suite {
 public:
  using Suite::Suite;
  Failure check(const Sample& s, std::uint64_t, Stats& st) const override {
    return walk(s.term, st, [&](const Term& t, const StepOutcome& o) -> Failure {
      ++st.checks;
      std::vector<RuleMatch> matches = matching_rules(t);
      std::string at = " at `" + print(t) + "`";
      if (o.stuck()) {
        if (!matches.empty()) return "stuck, yet rule " + show(matches[0].chain) + " applies" + at;
      } else {
        if (matches.size() != 1) {
          std::string list;
          for (const auto& m : matches) list += " [" + show(m.chain) + "]";
          return std::to_string(matches.size()) + " rule chains apply:" + list + at;
        }
        if (matches[0].value != o.is_value()) return "value judgment disagrees with the oracle" + at;
        if (matches[0].chain != o.rules) {
          return "fired " + show(o.rules) + " but the oracle expects " + show(matches[0].chain) + at;
        }
        bool stable = true;
        for (const auto& r : o.rules) {
          const StepRule* rule = find_step_rule(r);
          if (!rule) return "unknown rule " + r + at;
          stable = stable && rule->stable;
        }
        if (stable != o.stable) return "stability flag disagrees with the rule table" + at;
      }
      if (is_val(t).value != o.is_value()) return "val and step disagree" + at;
      StepOutcome again = step(parse(print(t)));
      if (again.kind != o.kind || again.rules != o.rules || (o.steps() && !(again.next == o.next))) {
        return "stepping an alpha-equivalent copy gives a different outcome" + at;
      }
      return std::nullopt;
    });
  }
};

class DimPreservation : public Suite {
 public:
  using Suite::Suite;
  Sample draw(Generator& g, std::size_t) const override {
    Sample s = g.sample();
    for (int tries = 0; tries < 50 && !step(s.term).steps(); ++tries) s = g.sample();
    return s;
  }
  Failure check(const Sample& s, std::uint64_t, Stats& st) const override {
    if (Failure f = well_scoped(s)) return f;
    return walk(s.term, st, [&](const Term& t, const StepOutcome& o) -> Failure {
      std::set<std::string> before = free_dim_names(t);
      if (before != fd(t)) return "fd disagrees with direct traversal at `" + print(t) + "`";
      if (!o.steps()) return std::nullopt;
      ++st.checks;
      std::set<std::string> after = free_dim_names(o.next);
      for (const auto& n : after) {
        if (!before.contains(n)) {
          return "step " + o.rule_chain() + " introduces " + n + ": fd(M) = " + show(before) + ", fd(M') = " +
                 show(after) + " at `" + print(t) + "`";
        }
      }
      return std::nullopt;
    });
  }
};

class Stability : public Suite {
 public:
  using Suite::Suite;
  Sample draw(Generator& g, std::size_t) const override {
    Sample s = g.sample();
    for (int tries = 0; tries < 50; ++tries) {
      StepOutcome o = step(s.term);
      if (!o.stuck() && o.stable) break;
      s = g.sample();
    }
    return s;
  }
  Failure check(const Sample& s, std::uint64_t aux, Stats& st) const override {
    if (Failure f = well_scoped(s)) return f;
    Generator g(opts_.gen, aux);
    return walk(s.term, st, [&](const Term& t, const StepOutcome& o) -> Failure {
      if (o.stuck() || !o.stable) return std::nullopt;
      ++st.checks;
      DimSubst psi = g.substitution(s.psi);
      Term moved = apply_subst(t, psi);
      std::string at = " at `" + print(t) + "` under " + psi.str();
      if (o.is_value()) {
        if (!is_val(moved).value) return "stable value " + o.rule() + " is not a value after substitution" + at;
        return std::nullopt;
      }
      StepOutcome after = step(moved);
      if (!after.steps()) return "stable step " + o.rule_chain() + " does not step after substitution" + at;
      Term expected = apply_subst(o.next, psi);
      if (!(after.next == expected)) {
        return "stable step " + o.rule_chain() + ": substitute-then-step gives `" + print(after.next) +
               "`, step-then-substitute gives `" + print(expected) + "`" + at;
      }
      return std::nullopt;
    });
  }
};

class Functoriality : public Suite {
 public:
  using Suite::Suite;
  Failure check(const Sample& s, std::uint64_t aux, Stats& st) const override {
    if (Failure f = well_scoped(s)) return f;
    Generator g(opts_.gen, aux);
    const Term& m = s.term;
    ++st.checks;
    DimSubst p1 = g.substitution(s.psi);
    DimSubst p2 = g.substitution(p1.target());
    Term step_by_step = apply_subst(apply_subst(m, p1), p2);
    Term composed = apply_subst(m, compose_subst(p1, p2));
    if (!(step_by_step == composed)) {
      return "M" + p1.str() + p2.str() + " = `" + print(step_by_step) + "` but M(" + p1.str() + ";" + p2.str() +
             ") = `" + print(composed) + "`";
    }
    if (!(apply_subst(m, DimSubst::identity(s.psi)) == m)) return "identity substitution changes the term";
    std::set<std::string> image;
    for (const auto& n : free_dim_names(m)) {
      Dim d = apply_dim(p1, Dim::name(n));
      if (d.is_name()) image.insert(d.name());
    }
    std::set<std::string> got = free_dim_names(apply_subst(m, p1));
    if (got != image) return "fd(M" + p1.str() + ") = " + show(got) + ", expected " + show(image);
    for (const auto& x : s.psi) {
      Dim r = apply_dim(p1, Dim::name(x));
      if (r.is_name() && !s.psi.contains(r.name())) r = Dim::name(x);
      std::map<std::string, Dim> map;
      for (const auto& y : s.psi) map.emplace(y, y == x ? r : Dim::name(y));
      Term single = dsubst(m, r, x);
      Term total = apply_subst(m, DimSubst(s.psi, s.psi, map));
      if (!(single == total)) return "M<" + r.str() + "/" + x + "> disagrees with the total substitution";
    }
    return std::nullopt;
  }
};

class Roundtrip : public Suite {
 public:
  using Suite::Suite;
  Failure check(const Sample& s, std::uint64_t, Stats& st) const override {
    if (Failure f = well_scoped(s)) return f;
    ++st.checks;
    std::string text = print(s.term);
    Term back;
    try {
      back = parse(text);
    } catch (const ParseError& e) {
      return "printed form does not parse: " + std::string(e.what()) + " in `" + text + "`";
    }
    if (!(back == s.term)) return "parse(print(M)) differs from M for `" + text + "`";
    if (print(back) != text) return "print is not stable under parse for `" + text + "`";
    Term from_json = term_from_json(Json::parse(term_to_json(s.term).dump()));
    if (!(from_json == s.term)) return "JSON round trip differs for `" + text + "`";
    return std::nullopt;
  }
};

class CoherenceBool : public Suite {
 public:
  using Suite::Suite;
  Sample draw(Generator&, std::size_t index) const override {
    return opts_.bool_programs[index % opts_.bool_programs.size()];
  }
  bool shrinkable() const override { return false; }
  Failure check(const Sample& s, std::uint64_t aux, Stats& st) const override {
    Generator g(opts_.gen, aux);
    ++st.checks;
    DimSubst p1 = g.substitution(s.psi);
    DimSubst p2 = g.substitution(p1.target());
    auto canonical = [](const Term& t) { return t.tag() == Tag::True || t.tag() == Tag::False; };
    try {
      Term direct = eval(apply_subst(apply_subst(s.term, p1), p2)).value;
      Term first = eval(apply_subst(s.term, p1)).value;
      Term later = eval(apply_subst(first, p2)).value;
      Term whole = eval(apply_subst(apply_subst(eval(s.term).value, p1), p2)).value;
      std::string at = " under " + p1.str() + " then " + p2.str();
      if (!canonical(direct)) return "substitute-then-eval gives non-boolean `" + print(direct) + "`" + at;
      if (!(later == direct)) {
        return "eval, substitute, eval gives " + print(later) + " but substitute-then-eval gives " + print(direct) + at;
      }
      if (!(whole == direct)) {
        return "eval first gives " + print(whole) + " but substitute-then-eval gives " + print(direct) + at;
      }
    } catch (const EvalError& e) {
      return std::string("evaluation failed: ") + e.what();
    }
    return std::nullopt;
  }
};

std::unique_ptr<Suite> make_suite(const std::string& name, const SuiteOptions& opts) {
  if (name == "exclusivity") return std::make_unique<Exclusivity>(opts, name);
  if (name == "dim-preservation") return std::make_unique<DimPreservation>(opts, name);
  if (name == "stability") return std::make_unique<Stability>(opts, name);
  if (name == "subst-functoriality") return std::make_unique<Functoriality>(opts, name);
  if (name == "roundtrip") return std::make_unique<Roundtrip>(opts, name);
  if (name == "coherence-bool") {
    if (opts.bool_programs.empty()) throw std::invalid_argument("coherence-bool needs boolean programs");
    return std::make_unique<CoherenceBool>(opts, name);
  }
  throw std::invalid_argument("unknown suite `" + name + "`");
}

Failure guarded(const Suite& suite, const Sample& s, std::uint64_t aux, Stats& st) {
  try {
    return suite.check(s, aux, st);
  } catch (const std::exception& e) {
    return std::string("exception: ") + e.what();
  }
}

}  // namespace

SuiteResult run_suite(const std::string& name, const SuiteOptions& options) {
  auto started = std::chrono::steady_clock::now();
  std::unique_ptr<Suite> suite = make_suite(name, options);
  unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(options.n, 1)));

  std::atomic<std::size_t> first_failure{std::numeric_limits<std::size_t>::max()};
  std::vector<Stats> stats(threads);
  std::mutex mu;
  std::map<std::size_t, std::pair<Sample, std::string>> failures;

  auto worker = [&](unsigned t) {
    for (std::size_t i = t; i < options.n; i += threads) {
      if (i > first_failure.load()) break;
      Generator g(options.gen, case_seed(options.seed, i));
      Sample s = suite->draw(g, i);
      if (Failure f = guarded(*suite, s, case_seed(~options.seed, i), stats[t])) {
        std::lock_guard<std::mutex> lock(mu);
        failures.emplace(i, std::make_pair(s, *f));
        std::size_t cur = first_failure.load();
        while (i < cur && !first_failure.compare_exchange_weak(cur, i)) {
        }
        break;
      }
    }
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t);
    for (auto& th : pool) th.join();
  }

  SuiteResult result;
  result.suite = name;
  for (const auto& st : stats) {
    result.checks += st.checks;
    for (const auto& [r, k] : st.hits) result.rule_hits[r] += k;
  }
  if (failures.empty()) {
    result.cases = options.n;
  } else {
    auto& [index, fail] = *failures.begin();
    result.cases = index + 1;
    Counterexample cx;
    cx.index = index;
    cx.original = fail.first;
    cx.shrunk = fail.first;
    cx.detail = fail.second;
    std::uint64_t aux = case_seed(~options.seed, index);
    if (suite->shrinkable()) {
      auto fails = [&](const Term& t) {
        Stats scratch;
        return guarded(*suite, Sample{cx.original.psi, t}, aux, scratch).has_value();
      };
      cx.shrunk.term = shrink(cx.original.term, fails);
      Stats scratch;
      if (Failure f = guarded(*suite, cx.shrunk, aux, scratch)) cx.detail = *f;
    }
    result.failure = std::move(cx);
  }
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return result;
}

}  // namespace ccl
