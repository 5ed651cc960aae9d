#include "ccl/checker.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "ccl/opsem.hpp"

namespace ccl {

const char* kind_name(Kind k) { return k == Kind::Kan ? "kan" : "pre"; }

const char* sort_name(MetaSort s) {
  switch (s) {
    case MetaSort::Term: return "term";
    case MetaSort::Dim: return "dim";
    case MetaSort::Const: return "const";
    case MetaSort::DimVar: return "dimvar";
    case MetaSort::TermVar: return "termvar";
    case MetaSort::Level: return "level";
    case MetaSort::Index: return "index";
    case MetaSort::KindSort: return "kind";
    case MetaSort::Eqs: return "eqs";
    case MetaSort::Tubes: return "tubes";
    case MetaSort::Caps: return "caps";
    case MetaSort::Judg: return "judgment";
    case MetaSort::Subst: return "subst";
    case MetaSort::Ctx: return "ctx";
    case MetaSort::Hyps: return "hyps";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Judgments

Judgment eq_type(Kind k, const Term& a, const Term& b) {
  Judgment j;
  j.form.kind = k == Kind::Kan ? FormKind::EqTypeKan : FormKind::EqTypePre;
  j.form.lhs = a;
  j.form.rhs = b;
  return j;
}

Judgment eq_tm(const Term& m, const Term& n, const Term& a) {
  Judgment j;
  j.form.kind = FormKind::EqTm;
  j.form.lhs = m;
  j.form.rhs = n;
  j.form.type = a;
  return j;
}

Judgment wf_shape(EquationList shape) {
  Judgment j;
  j.form.kind = FormKind::WfShape;
  j.form.shape = std::move(shape);
  return j;
}

namespace {

bool same_form(const Form& a, const Form& b) {
  if (a.kind != b.kind) return false;
  if (a.kind == FormKind::WfShape) return a.shape == b.shape;
  if (!(a.lhs == b.lhs) || !(a.rhs == b.rhs)) return false;
  return a.kind != FormKind::EqTm || a.type == b.type;
}

template <class F>
Form map_form(const Form& f, F&& term_fn, const std::function<Dim(const Dim&)>& dim_fn) {
  Form out = f;
  if (f.kind == FormKind::WfShape) {
    for (auto& e : out.shape) e = {dim_fn(e.lhs), dim_fn(e.rhs)};
    return out;
  }
  out.lhs = term_fn(f.lhs);
  out.rhs = term_fn(f.rhs);
  if (f.kind == FormKind::EqTm) out.type = term_fn(f.type);
  return out;
}

template <class F>
Judgment map_judgment(const Judgment& j, F&& term_fn, const std::function<Dim(const Dim&)>& dim_fn) {
  Judgment out = j;
  for (auto& e : out.xi) e = {dim_fn(e.lhs), dim_fn(e.rhs)};
  for (auto& h : out.gamma) h.type = term_fn(h.type);
  out.form = map_form(j.form, term_fn, dim_fn);
  return out;
}

std::string gamma_str(const std::vector<Hyp>& gamma) {
  std::string s;
  for (std::size_t i = 0; i < gamma.size(); ++i) {
    if (i) s += ", ";
    s += gamma[i].var + " : " + print(gamma[i].type);
  }
  return s;
}

}  // namespace

bool same_judgment(const Judgment& a, const Judgment& b) {
  if (!(a.psi == b.psi) || a.xi != b.xi || a.gamma.size() != b.gamma.size()) return false;
  for (std::size_t i = 0; i < a.gamma.size(); ++i) {
    if (a.gamma[i].var != b.gamma[i].var || !(a.gamma[i].type == b.gamma[i].type)) return false;
  }
  return same_form(a.form, b.form);
}

std::string to_string(const Judgment& j) {
  std::string s = j.psi.str();
  if (!j.xi.empty()) s += (s.empty() ? "<" : " <") + to_string(j.xi) + ">";
  if (!j.gamma.empty()) s += (s.empty() ? "" : " ") + gamma_str(j.gamma);
  s += s.empty() ? "|- " : " |- ";
  switch (j.form.kind) {
    case FormKind::EqTypePre:
    case FormKind::EqTypeKan:
      s += print(j.form.lhs) + " = " + print(j.form.rhs) + " type " +
           (j.form.kind == FormKind::EqTypeKan ? "kan" : "pre");
      break;
    case FormKind::EqTm:
      s += print(j.form.lhs) + " = " + print(j.form.rhs) + " : " + print(j.form.type);
      break;
    case FormKind::WfShape:
      s += "wfshape(" + to_string(j.form.shape) + ")";
      break;
  }
  return s;
}

std::optional<std::string> scope_problem(const Judgment& j) {
  auto dim_ok = [&](const Dim& d) { return !d.is_bound() && j.psi.contains(d); };
  for (const auto& e : j.xi) {
    if (!dim_ok(e.lhs) || !dim_ok(e.rhs)) return "restriction " + e.str() + " mentions a name outside Ψ";
  }
  std::set<std::string> vars;
  auto term_ok = [&](const Term& t, const std::string& what) -> std::optional<std::string> {
    if (!t.valid()) return what + " is missing";
    if (!locally_closed(t)) return what + " is not locally closed";
    for (const auto& x : fd(t)) {
      if (!j.psi.contains(x)) return what + " mentions dimension " + x + " outside Ψ";
    }
    for (const auto& a : free_vars(t)) {
      if (!vars.contains(a)) return what + " mentions variable " + a + " outside Γ";
    }
    return std::nullopt;
  };
  for (const auto& h : j.gamma) {
    if (h.var.empty() || vars.contains(h.var)) return "hypothesis variable '" + h.var + "' is not distinct";
    if (auto p = term_ok(h.type, "the type of " + h.var)) return p;
    vars.insert(h.var);
  }
  if (j.form.kind == FormKind::WfShape) {
    for (const auto& e : j.form.shape) {
      if (!dim_ok(e.lhs) || !dim_ok(e.rhs)) return "shape equation " + e.str() + " mentions a name outside Ψ";
    }
    return std::nullopt;
  }
  if (auto p = term_ok(j.form.lhs, "the left side")) return p;
  if (auto p = term_ok(j.form.rhs, "the right side")) return p;
  if (j.form.kind == FormKind::EqTm) {
    if (auto p = term_ok(j.form.type, "the type")) return p;
  }
  return std::nullopt;
}

Judgment dsubst(const Judgment& j, const Dim& r, const std::string& x) {
  Judgment out = map_judgment(
      j, [&](const Term& t) { return dsubst(t, r, x); },
      [&](const Dim& d) { return d.is_name() && d.name() == x ? r : d; });
  out.psi.erase(x);
  return out;
}

Judgment apply_subst(const Judgment& j, const DimSubst& psi) {
  Judgment out = map_judgment(
      j, [&](const Term& t) { return apply_subst(t, psi); }, [&](const Dim& d) { return apply_dim(psi, d); });
  out.psi = psi.target();
  return out;
}

Expansion expand_restriction(const Judgment& j, ExpansionOrder order) {
  for (const auto& e : j.xi) {
    for (const Dim* d : {&e.lhs, &e.rhs}) {
      if (d->is_bound() || !j.psi.contains(*d)) {
        throw ScopeError("restriction " + e.str() + " mentions a name outside " + j.psi.str());
      }
    }
  }
  std::deque<Equation> pending(j.xi.begin(), j.xi.end());
  if (order == ExpansionOrder::RightToLeft) std::reverse(pending.begin(), pending.end());
  Judgment cur = j;
  cur.xi.clear();
  while (!pending.empty()) {
    Equation e = pending.front();
    pending.pop_front();
    if (e.reflexive()) continue;
    if (e.lhs.is_const() && e.rhs.is_const()) return Vacuous{};
    std::string x;
    Dim r;
    if (e.lhs.is_const()) {
      x = e.rhs.name();
      r = e.lhs;
    } else if (e.rhs.is_const()) {
      x = e.lhs.name();
      r = e.rhs;
    } else {
      x = std::max(e.lhs.name(), e.rhs.name());
      r = Dim::name(std::min(e.lhs.name(), e.rhs.name()));
    }
    cur = dsubst(cur, r, x);
    auto sub = [&](const Dim& d) { return d.is_name() && d.name() == x ? r : d; };
    for (auto& p : pending) p = {sub(p.lhs), sub(p.rhs)};
  }
  return Plain{{std::move(cur)}};
}

bool equivalent_judgments(const Judgment& a, const Judgment& b) {
  try {
    Expansion ea = expand_restriction(a);
    Expansion eb = expand_restriction(b);
    if (std::holds_alternative<Vacuous>(ea) || std::holds_alternative<Vacuous>(eb)) {
      return std::holds_alternative<Vacuous>(ea) && std::holds_alternative<Vacuous>(eb);
    }
    const auto& ja = std::get<Plain>(ea).judgments;
    const auto& jb = std::get<Plain>(eb).judgments;
    if (ja.size() != jb.size()) return false;
    for (std::size_t i = 0; i < ja.size(); ++i) {
      if (!same_judgment(ja[i], jb[i])) return false;
    }
    return true;
  } catch (const ScopeError&) {
    return false;
  }
}

// ---------------------------------------------------------------------------
// Rule builder

const MetaVar* RuleSchema::find(const std::string& name) const {
  for (const auto& m : metavars) {
    if (m.name == name) return &m;
  }
  return nullptr;
}

namespace {

const std::set<std::string> kAmbient = {"Psi", "Xi", "Gamma"};

template <class T>
const T& ambient(const Instantiation& inst, const std::string& key, const T& fallback) {
  auto it = inst.find(key);
  if (it == inst.end()) return fallback;
  if (const T* v = std::get_if<T>(&it->second)) return *v;
  throw InstantiationError("metavariable " + key + " has the wrong sort");
}

bool sort_matches(MetaSort sort, const MetaValue& v) {
  switch (sort) {
    case MetaSort::Term: return std::holds_alternative<Term>(v);
    case MetaSort::Dim:
    case MetaSort::Const: return std::holds_alternative<Dim>(v);
    case MetaSort::DimVar:
    case MetaSort::TermVar: return std::holds_alternative<std::string>(v);
    case MetaSort::Level:
    case MetaSort::Index: return std::holds_alternative<unsigned>(v);
    case MetaSort::KindSort: return std::holds_alternative<Kind>(v);
    case MetaSort::Eqs: return std::holds_alternative<EquationList>(v);
    case MetaSort::Tubes:
    case MetaSort::Caps: return std::holds_alternative<std::vector<TubeInst>>(v);
    case MetaSort::Judg: return std::holds_alternative<Judgment>(v);
    case MetaSort::Subst: return std::holds_alternative<DimSubst>(v);
    case MetaSort::Ctx: return std::holds_alternative<DimCtx>(v);
    case MetaSort::Hyps: return std::holds_alternative<std::vector<Hyp>>(v);
  }
  return false;
}

void require_term(const Term& t, const std::string& n) {
  if (!t.valid()) throw InstantiationError("metavariable " + n + " is empty");
  if (!locally_closed(t)) throw InstantiationError("metavariable " + n + " is not locally closed");
}

void require_dim(const Dim& d, const std::string& n) {
  if (d.is_bound()) throw InstantiationError("metavariable " + n + " holds a bound dimension");
}

}  // namespace

RuleBuilder::RuleBuilder(const RuleSchema& schema, const Instantiation& inst)
    : schema_(schema), inst_(inst) {
  static const DimCtx kNoDims;
  static const EquationList kNoEqs;
  static const std::vector<Hyp> kNoHyps;
  psi_ = ambient(inst, "Psi", kNoDims);
  xi_ = ambient(inst, "Xi", kNoEqs);
  gamma_ = ambient(inst, "Gamma", kNoHyps);
}

const MetaValue& RuleBuilder::get(const std::string& n, MetaSort sort) const {
  const MetaVar* mv = schema_.find(n);
  if (!mv || mv->sort != sort) {
    throw std::logic_error("rule " + schema_.id + " reads undeclared metavariable " + n);
  }
  auto it = inst_.find(n);
  if (it == inst_.end()) throw InstantiationError("missing metavariable " + n);
  if (!sort_matches(sort, it->second)) {
    throw InstantiationError("metavariable " + n + " should have sort " + sort_name(sort));
  }
  return it->second;
}

Term RuleBuilder::term(const std::string& n) const {
  const Term& t = std::get<Term>(get(n, MetaSort::Term));
  require_term(t, n);
  return t;
}

Dim RuleBuilder::dim(const std::string& n) const {
  const Dim& d = std::get<Dim>(get(n, MetaSort::Dim));
  require_dim(d, n);
  return d;
}

Dim RuleBuilder::constant(const std::string& n) const {
  const Dim& d = std::get<Dim>(get(n, MetaSort::Const));
  if (!d.is_const()) throw InstantiationError("metavariable " + n + " should be 0 or 1");
  return d;
}

std::string RuleBuilder::dim_var(const std::string& n) {
  const std::string& x = std::get<std::string>(get(n, MetaSort::DimVar));
  if (x.empty()) throw InstantiationError("metavariable " + n + " is an empty name");
  side(x + " ∉ Ψ", !psi_.contains(x));
  return x;
}

std::string RuleBuilder::term_var(const std::string& n) {
  const std::string& a = std::get<std::string>(get(n, MetaSort::TermVar));
  if (a.empty()) throw InstantiationError("metavariable " + n + " is an empty name");
  bool fresh = std::none_of(gamma_.begin(), gamma_.end(), [&](const Hyp& h) { return h.var == a; });
  side(a + " ∉ dom Γ", fresh);
  return a;
}

unsigned RuleBuilder::level(const std::string& n) const { return std::get<unsigned>(get(n, MetaSort::Level)); }

std::size_t RuleBuilder::index(const std::string& n) const { return std::get<unsigned>(get(n, MetaSort::Index)); }

Kind RuleBuilder::kind(const std::string& n) const { return std::get<Kind>(get(n, MetaSort::KindSort)); }

EquationList RuleBuilder::eqs(const std::string& n) const {
  const auto& e = std::get<EquationList>(get(n, MetaSort::Eqs));
  for (const auto& q : e) {
    require_dim(q.lhs, n);
    require_dim(q.rhs, n);
  }
  return e;
}

std::vector<TubeInst> RuleBuilder::tubes(const std::string& n) const {
  const auto& ts = std::get<std::vector<TubeInst>>(get(n, MetaSort::Tubes));
  for (const auto& t : ts) {
    require_dim(t.eq.lhs, n);
    require_dim(t.eq.rhs, n);
    require_term(t.body, n);
  }
  return ts;
}

std::vector<TubeInst> RuleBuilder::caps(const std::string& n) const {
  const auto& ts = std::get<std::vector<TubeInst>>(get(n, MetaSort::Caps));
  for (const auto& t : ts) {
    require_dim(t.eq.lhs, n);
    require_dim(t.eq.rhs, n);
    require_term(t.body, n);
  }
  return ts;
}

Judgment RuleBuilder::judgment(const std::string& n) const {
  const Judgment& j = std::get<Judgment>(get(n, MetaSort::Judg));
  if (auto p = scope_problem(j)) throw InstantiationError("metavariable " + n + ": " + *p);
  return j;
}

DimSubst RuleBuilder::subst(const std::string& n) const { return std::get<DimSubst>(get(n, MetaSort::Subst)); }

Judgment RuleBuilder::type_eq(Kind k, const Term& a, const Term& b) const {
  Judgment j = eq_type(k, a, b);
  j.psi = psi_;
  j.xi = xi_;
  j.gamma = gamma_;
  return j;
}

Judgment RuleBuilder::tm_eq(const Term& m, const Term& n, const Term& a) const {
  Judgment j = eq_tm(m, n, a);
  j.psi = psi_;
  j.xi = xi_;
  j.gamma = gamma_;
  return j;
}

Judgment RuleBuilder::shape(const EquationList& eqs) const {
  Judgment j = wf_shape(eqs);
  j.psi = psi_;
  j.xi = xi_;
  j.gamma = gamma_;
  return j;
}

Judgment RuleBuilder::under(Judgment j, std::initializer_list<Equation> eqs) {
  j.xi.insert(j.xi.end(), eqs.begin(), eqs.end());
  return j;
}

Judgment RuleBuilder::with_dim(Judgment j, const std::string& y) {
  j.psi.insert(y);
  return j;
}

Judgment RuleBuilder::with_hyp(Judgment j, const std::string& a, const Term& type) {
  j.gamma.push_back({a, type});
  return j;
}

void RuleBuilder::side(std::string description, bool holds, std::string detail) {
  out_.side_conditions.push_back({std::move(description), holds, std::move(detail)});
}

void RuleBuilder::stable_step(const Term& m, const Term& m2) {
  StepOutcome s = step(m);
  std::string desc = print(m) + " ↦ " + print(m2) + " stably";
  if (!s.steps()) {
    side(desc, false, s.stuck() ? "stuck: " + s.reason : "the term is a value");
  } else if (!(s.next == m2)) {
    side(desc, false, "it steps to " + print(s.next) + " by " + s.rule_chain());
  } else {
    side(desc, s.stable, s.stable ? "" : "the step " + s.rule_chain() + " is not cubically stable");
  }
}

Instance RuleBuilder::finish() {
  for (const auto& mv : schema_.metavars) {
    if (!inst_.contains(mv.name)) throw InstantiationError("missing metavariable " + mv.name);
  }
  for (const auto& [key, value] : inst_) {
    if (kAmbient.contains(key)) continue;
    const MetaVar* mv = schema_.find(key);
    if (!mv) throw InstantiationError("unknown metavariable " + key + " for rule " + schema_.id);
    if (!sort_matches(mv->sort, value)) {
      throw InstantiationError("metavariable " + key + " should have sort " + sort_name(mv->sort));
    }
  }
  return std::move(out_);
}

// ---------------------------------------------------------------------------
// Instantiation and checking

const RuleSchema* find_rule(const std::string& id) {
  for (const auto& r : rule_catalog()) {
    if (r.id == id) return &r;
  }
  return nullptr;
}

namespace {

Instance instantiate(const RuleSchema& schema, const Instantiation& inst) {
  RuleBuilder b(schema, inst);
  schema.build(b);
  return b.finish();
}

struct Checker {
  const CheckOptions& options;

  CheckReport fail(const std::vector<std::size_t>& path, std::string reason) const {
    return {false, path, std::move(reason)};
  }

  CheckReport check(const Derivation& d, std::vector<std::size_t>& path) const {
    if (auto p = scope_problem(d.conclusion)) return fail(path, "ill-scoped conclusion: " + *p);
    if (d.rule == "assume") {
      if (options.assume && d.children.empty() && options.assume(d.conclusion)) return {};
      return fail(path, "assumption not permitted: " + to_string(d.conclusion));
    }
    const RuleSchema* schema = find_rule(d.rule);
    if (!schema) return fail(path, "unknown rule " + d.rule);
    Instance inst;
    try {
      inst = instantiate(*schema, d.inst);
    } catch (const InstantiationError& e) {
      return fail(path, std::string("bad instantiation of ") + d.rule + ": " + e.what());
    } catch (const ScopeError& e) {
      return fail(path, std::string("bad instantiation of ") + d.rule + ": " + e.what());
    }
    for (const auto& sc : inst.side_conditions) {
      if (!sc.holds) {
        std::string r = "side condition failed: " + sc.description;
        if (!sc.detail.empty()) r += " (" + sc.detail + ")";
        return fail(path, r);
      }
    }
    if (!equivalent_judgments(d.conclusion, inst.conclusion)) {
      return fail(path, "conclusion does not match rule " + d.rule + ": expected " + to_string(inst.conclusion) +
                            ", found " + to_string(d.conclusion));
    }
    if (d.children.size() != inst.premises.size()) {
      return fail(path, "rule " + d.rule + " has " + std::to_string(inst.premises.size()) + " premises, found " +
                            std::to_string(d.children.size()) + " subderivations");
    }
    for (std::size_t k = 0; k < d.children.size(); ++k) {
      path.push_back(k);
      if (!equivalent_judgments(d.children[k].conclusion, inst.premises[k])) {
        CheckReport r = fail(path, "premise " + std::to_string(k) + " of " + d.rule + " expects " +
                                       to_string(inst.premises[k]) + ", found " +
                                       to_string(d.children[k].conclusion));
        path.pop_back();
        return r;
      }
      CheckReport r = check(d.children[k], path);
      path.pop_back();
      if (!r.ok) return r;
    }
    return {};
  }
};

}  // namespace

Instance instantiate_rule(const std::string& rule, const Instantiation& inst) {
  const RuleSchema* schema = find_rule(rule);
  if (!schema) throw InstantiationError("unknown rule " + rule);
  return instantiate(*schema, inst);
}

CheckReport check_derivation(const Derivation& d, const CheckOptions& options) {
  Checker c{options};
  std::vector<std::size_t> path;
  return c.check(d, path);
}

}  // namespace ccl
