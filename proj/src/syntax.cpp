#include "ccl/syntax.hpp"

#include <array>
#include <unordered_map>

namespace ccl {

namespace {

using S = Sort;

const std::array<Shape, kTagCount>& shapes() {
  static const std::array<Shape, kTagCount> table = {{
      {"<var>", 0, {}, TubeKind::None, false},
      {"<bvar>", 0, {}, TubeKind::None, false},
      {"pi", 0, {{}, {S::Term}}, TubeKind::None, false},
      {"sg", 0, {{}, {S::Term}}, TubeKind::None, false},
      {"path", 0, {{S::Dim}, {}, {}}, TubeKind::None, false},
      {"eq", 0, {{}, {}, {}}, TubeKind::None, false},
      {"void", 0, {}, TubeKind::None, false},
      {"nat", 0, {}, TubeKind::None, false},
      {"bool", 0, {}, TubeKind::None, false},
      {"wbool", 0, {}, TubeKind::None, false},
      {"S1", 0, {}, TubeKind::None, false},
      {"U pre", 0, {}, TubeKind::None, true},
      {"U kan", 0, {}, TubeKind::None, true},
      {"V", 1, {{}, {}, {}}, TubeKind::None, false},
      {"Vin", 1, {{}, {}}, TubeKind::None, false},
      {"Vproj", 1, {{}, {}}, TubeKind::None, false},
      {"lam", 0, {{S::Term}}, TubeKind::None, false},
      {"app", 0, {{}, {}}, TubeKind::None, false},
      {"pair", 0, {{}, {}}, TubeKind::None, false},
      {"fst", 0, {{}}, TubeKind::None, false},
      {"snd", 0, {{}}, TubeKind::None, false},
      {"dlam", 0, {{S::Dim}}, TubeKind::None, false},
      {"dapp", 1, {{}}, TubeKind::None, false},
      {"*", 0, {}, TubeKind::None, false},
      {"zero", 0, {}, TubeKind::None, false},
      {"suc", 0, {{}}, TubeKind::None, false},
      {"natrec", 0, {{}, {}, {S::Term, S::Term}}, TubeKind::None, false},
      {"true", 0, {}, TubeKind::None, false},
      {"false", 0, {}, TubeKind::None, false},
      {"if", 0, {{S::Term}, {}, {}, {}}, TubeKind::None, false},
      {"base", 0, {}, TubeKind::None, false},
      {"loop", 1, {}, TubeKind::None, false},
      {"S1elim", 0, {{S::Term}, {}, {}, {S::Dim}}, TubeKind::None, false},
      {"coe", 2, {{S::Dim}, {}}, TubeKind::None, false},
      {"hcom", 2, {{}, {}}, TubeKind::Bound, false},
      {"com", 2, {{S::Dim}, {}}, TubeKind::Bound, false},
      {"fcom", 2, {{}}, TubeKind::Bound, false},
      {"ghcom", 2, {{}, {}}, TubeKind::Bound, false},
      {"gcom", 2, {{S::Dim}, {}}, TubeKind::Bound, false},
      {"box", 2, {{}}, TubeKind::Caps, false},
      {"cap", 2, {{}}, TubeKind::Bound, false},
  }};
  return table;
}

const std::array<const char*, kTagCount> kTagNames = {
    "var",  "bvar",  "pi",     "sg",     "path", "eq",    "void",   "nat",  "bool",  "wbool", "S1",
    "Upre", "Ukan",  "V",      "Vin",    "Vproj", "lam",  "app",    "pair", "fst",   "snd",   "dlam",
    "dapp", "star",  "zero",   "suc",    "natrec", "true", "false", "if",   "base",  "loop",  "S1elim",
    "coe",  "hcom",  "com",    "fcom",   "ghcom", "gcom",  "box",    "cap",
};

// Structural rewriting. `on_var` sees Var/BVar nodes with the current term
// binder depth and may return a replacement; `on_dim` maps every dimension
// occurrence at the current dimension binder depth. Unchanged subterms are
// shared with the input.
template <class OnVar, class OnDim>
Term rewrite(const Term& t, unsigned td, unsigned dd, const OnVar& on_var, const OnDim& on_dim) {
  const Node& n = t.node();
  if (n.tag == Tag::Var || n.tag == Tag::BVar) {
    if (auto r = on_var(n, td)) return *r;
    return t;
  }
  bool changed = false;
  Node out;
  out.tag = n.tag;
  out.level = n.level;
  out.dims.reserve(n.dims.size());
  for (const auto& d : n.dims) {
    Dim nd = on_dim(d, dd);
    changed |= !(nd == d);
    out.dims.push_back(std::move(nd));
  }
  out.args.reserve(n.args.size());
  for (const auto& sc : n.args) {
    unsigned ntd = td, ndd = dd;
    for (const auto& b : sc.binders) (b.sort == Sort::Term ? ntd : ndd) += 1;
    Term body = rewrite(sc.body, ntd, ndd, on_var, on_dim);
    changed |= !body.same(sc.body);
    out.args.push_back(Scope{sc.binders, std::move(body)});
  }
  out.tubes.reserve(n.tubes.size());
  for (const auto& tb : n.tubes) {
    Tube nt;
    nt.binds = tb.binds;
    nt.hint = tb.hint;
    nt.eq = Equation{on_dim(tb.eq.lhs, dd), on_dim(tb.eq.rhs, dd)};
    nt.body = rewrite(tb.body, td, tb.binds ? dd + 1 : dd, on_var, on_dim);
    changed |= !(nt.eq == tb.eq) || !nt.body.same(tb.body);
    out.tubes.push_back(std::move(nt));
  }
  if (!changed) return t;
  return Term::make(std::move(out));
}

template <class OnVar, class OnDim>
void visit(const Term& t, unsigned td, unsigned dd, const OnVar& on_var, const OnDim& on_dim) {
  const Node& n = t.node();
  if (n.tag == Tag::Var || n.tag == Tag::BVar) {
    on_var(n, td);
    return;
  }
  for (const auto& d : n.dims) on_dim(d, dd);
  for (const auto& sc : n.args) {
    unsigned ntd = td, ndd = dd;
    for (const auto& b : sc.binders) (b.sort == Sort::Term ? ntd : ndd) += 1;
    visit(sc.body, ntd, ndd, on_var, on_dim);
  }
  for (const auto& tb : n.tubes) {
    on_dim(tb.eq.lhs, dd);
    on_dim(tb.eq.rhs, dd);
    visit(tb.body, td, tb.binds ? dd + 1 : dd, on_var, on_dim);
  }
}

auto keep_var = [](const Node&, unsigned) -> std::optional<Term> { return std::nullopt; };
auto keep_dim = [](const Dim& d, unsigned) { return d; };

Term mk_var_node(const std::string& a) {
  Node n;
  n.tag = Tag::Var;
  n.name = a;
  return Term::make(std::move(n));
}

Term mk_bvar(std::uint32_t i) {
  Node n;
  n.tag = Tag::BVar;
  n.index = i;
  return Term::make(std::move(n));
}

}  // namespace

const Shape& shape_of(Tag tag) { return shapes()[static_cast<int>(tag)]; }

const char* tag_name(Tag tag) { return kTagNames[static_cast<int>(tag)]; }

std::optional<Tag> tag_from_name(std::string_view name) {
  for (int i = 0; i < kTagCount; ++i) {
    if (name == kTagNames[i]) return static_cast<Tag>(i);
  }
  return std::nullopt;
}

Tag Term::tag() const { return node_->tag; }
const Dim& Term::dim(std::size_t i) const { return node_->dims.at(i); }
const Term& Term::body(std::size_t i) const { return node_->args.at(i).body; }
const std::string& Term::name() const { return node_->name; }
unsigned Term::level() const { return node_->level; }

Term Term::make(Node node) {
  const Shape& sh = shape_of(node.tag);
  if (node.tag != Tag::Var && node.tag != Tag::BVar) {
    if (static_cast<int>(node.dims.size()) != sh.dims || node.args.size() != sh.args.size())
      throw std::logic_error(std::string("arity mismatch building ") + tag_name(node.tag));
    for (std::size_t i = 0; i < node.args.size(); ++i) {
      const auto& want = sh.args[i];
      const auto& have = node.args[i].binders;
      if (want.size() != have.size()) throw std::logic_error(std::string("binder mismatch in ") + tag_name(node.tag));
      for (std::size_t k = 0; k < want.size(); ++k) {
        if (want[k] != have[k].sort) throw std::logic_error(std::string("binder sort mismatch in ") + tag_name(node.tag));
      }
      if (!node.args[i].body.valid()) throw std::logic_error("empty term");
    }
    if (sh.tubes == TubeKind::None && !node.tubes.empty())
      throw std::logic_error(std::string(tag_name(node.tag)) + " takes no tubes");
    for (auto& tb : node.tubes) tb.binds = sh.tubes == TubeKind::Bound;
  }
  return Term(std::make_shared<const Node>(std::move(node)));
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (!a.node_ || !b.node_) return false;
  const Node& x = *a.node_;
  const Node& y = *b.node_;
  if (x.tag != y.tag) return false;
  switch (x.tag) {
    case Tag::Var:
      return x.name == y.name;
    case Tag::BVar:
      return x.index == y.index;
    default:
      break;
  }
  if (x.level != y.level || x.dims != y.dims || x.args.size() != y.args.size() || x.tubes.size() != y.tubes.size())
    return false;
  for (std::size_t i = 0; i < x.args.size(); ++i) {
    if (!(x.args[i].body == y.args[i].body)) return false;
  }
  for (std::size_t i = 0; i < x.tubes.size(); ++i) {
    if (!(x.tubes[i].eq == y.tubes[i].eq) || !(x.tubes[i].body == y.tubes[i].body)) return false;
  }
  return true;
}

std::size_t Scope::count(Sort s) const {
  std::size_t k = 0;
  for (const auto& b : binders) k += b.sort == s;
  return k;
}

Term Scope::open(const std::vector<Term>& terms, const std::vector<Dim>& dims) const {
  const auto mt = static_cast<unsigned>(terms.size());
  const auto md = static_cast<unsigned>(dims.size());
  if (mt != count(Sort::Term) || md != count(Sort::Dim)) throw std::logic_error("wrong number of values to open a scope");
  if (mt == 0 && md == 0) return body;
  return rewrite(
      body, 0, 0,
      [&](const Node& n, unsigned td) -> std::optional<Term> {
        if (n.tag != Tag::BVar || n.index < td) return std::nullopt;
        if (n.index < td + mt) return terms[mt - 1 - (n.index - td)];
        return mk_bvar(n.index - mt);
      },
      [&](const Dim& d, unsigned dd) -> Dim {
        if (!d.is_bound() || d.index() < dd) return d;
        if (d.index() < dd + md) return dims[md - 1 - (d.index() - dd)];
        return Dim::bound(d.index() - md);
      });
}

Term Tube::at(const Dim& d) const {
  if (!binds) return body;
  return Scope{{Binder{Sort::Dim, hint}}, body}.open_dim(d);
}

Term close(const Term& body, const std::vector<std::string>& term_names, const std::vector<std::string>& dim_names) {
  const auto mt = static_cast<std::uint32_t>(term_names.size());
  const auto md = static_cast<std::uint32_t>(dim_names.size());
  return rewrite(
      body, 0, 0,
      [&](const Node& n, unsigned td) -> std::optional<Term> {
        if (n.tag != Tag::Var) return std::nullopt;
        for (std::uint32_t j = mt; j-- > 0;) {
          if (term_names[j] == n.name) return mk_bvar(td + mt - 1 - j);
        }
        return std::nullopt;
      },
      [&](const Dim& d, unsigned dd) -> Dim {
        if (!d.is_name()) return d;
        for (std::uint32_t j = md; j-- > 0;) {
          if (dim_names[j] == d.name()) return Dim::bound(dd + md - 1 - j);
        }
        return d;
      });
}

std::set<std::string> fd(const Term& m) {
  std::set<std::string> out;
  visit(
      m, 0, 0, [](const Node&, unsigned) {},
      [&](const Dim& d, unsigned) {
        if (d.is_name()) out.insert(d.name());
      });
  return out;
}

std::set<std::string> free_vars(const Term& m) {
  std::set<std::string> out;
  visit(
      m, 0, 0,
      [&](const Node& n, unsigned) {
        if (n.tag == Tag::Var) out.insert(n.name);
      },
      [](const Dim&, unsigned) {});
  return out;
}

bool locally_closed(const Term& m) {
  bool ok = true;
  visit(
      m, 0, 0,
      [&](const Node& n, unsigned td) {
        if (n.tag == Tag::BVar && n.index >= td) ok = false;
      },
      [&](const Dim& d, unsigned dd) {
        if (d.is_bound() && d.index() >= dd) ok = false;
      });
  return ok;
}

Term dsubst(const Term& m, const Dim& r, const std::string& x) {
  if (r.is_bound()) throw std::logic_error("dsubst with a bound index");
  return rewrite(m, 0, 0, keep_var, [&](const Dim& d, unsigned) {
    return d.is_name() && d.name() == x ? r : d;
  });
}

Term tsubst(const Term& m, const Term& n, const std::string& a) {
  return rewrite(
      m, 0, 0,
      [&](const Node& v, unsigned) -> std::optional<Term> {
        if (v.tag == Tag::Var && v.name == a) return n;
        return std::nullopt;
      },
      keep_dim);
}

Term apply_subst(const Term& m, const DimSubst& psi) {
  return rewrite(m, 0, 0, keep_var, [&](const Dim& d, unsigned) { return d.is_name() ? apply_dim(psi, d) : d; });
}

Term rename_dims(const Term& m, const std::map<std::string, Dim>& map) {
  if (map.empty()) return m;
  return rewrite(m, 0, 0, keep_var, [&](const Dim& d, unsigned) {
    if (!d.is_name()) return d;
    auto it = map.find(d.name());
    return it == map.end() ? d : it->second;
  });
}

void Fresh::avoid(const Term& t) {
  visit(
      t, 0, 0,
      [&](const Node& n, unsigned) {
        if (n.tag == Tag::Var) vars_.insert(n.name);
      },
      [&](const Dim& d, unsigned) {
        if (d.is_name()) dims_.insert(d.name());
      });
}

std::string Fresh::dim(const std::string& hint) {
  std::string n = fresh_name(hint, dims_);
  dims_.insert(n);
  return n;
}

std::string Fresh::var(const std::string& hint) {
  std::string n = fresh_name(hint, vars_);
  vars_.insert(n);
  return n;
}

std::size_t term_size(const Term& m) {
  std::size_t interior = 0;
  std::vector<const Term*> stack{&m};
  while (!stack.empty()) {
    const Term* t = stack.back();
    stack.pop_back();
    ++interior;
    for (const auto& sc : t->node().args) stack.push_back(&sc.body);
    for (const auto& tb : t->node().tubes) stack.push_back(&tb.body);
  }
  return interior;
}

// ---------------------------------------------------------------------------

namespace mk {

namespace {

Scope plain(const Term& t) { return Scope{{}, t}; }

Scope bind_term(const std::string& a, const Term& body) { return Scope{{Binder{Sort::Term, a}}, close(body, {a}, {})}; }

Scope bind_dim(const std::string& x, const Term& body) { return Scope{{Binder{Sort::Dim, x}}, close(body, {}, {x})}; }

Term node(Tag tag, std::vector<Dim> dims, std::vector<Scope> args, System tubes = {}) {
  Node n;
  n.tag = tag;
  n.dims = std::move(dims);
  n.args = std::move(args);
  n.tubes = std::move(tubes);
  return Term::make(std::move(n));
}

Term atom(Tag tag) { return node(tag, {}, {}); }

}  // namespace

Term var(const std::string& a) { return mk_var_node(a); }
Term pi(const std::string& a, const Term& dom, const Term& cod) {
  return node(Tag::Pi, {}, {plain(dom), bind_term(a, cod)});
}
Term sigma(const std::string& a, const Term& fst, const Term& snd) {
  return node(Tag::Sigma, {}, {plain(fst), bind_term(a, snd)});
}
Term arr(const Term& dom, const Term& cod) { return node(Tag::Pi, {}, {plain(dom), Scope{{Binder{Sort::Term, "_"}}, cod}}); }
Term prod(const Term& fst, const Term& snd) {
  return node(Tag::Sigma, {}, {plain(fst), Scope{{Binder{Sort::Term, "_"}}, snd}});
}
Term path(const std::string& x, const Term& ty, const Term& p0, const Term& p1) {
  return node(Tag::Path, {}, {bind_dim(x, ty), plain(p0), plain(p1)});
}
Term eq(const Term& ty, const Term& m, const Term& n) { return node(Tag::Eq, {}, {plain(ty), plain(m), plain(n)}); }
Term void_() { return atom(Tag::Void); }
Term nat() { return atom(Tag::Nat); }
Term bool_() { return atom(Tag::Bool); }
Term wbool() { return atom(Tag::WBool); }
Term circle() { return atom(Tag::Circle); }
Term universe(bool kan, unsigned level) {
  Node n;
  n.tag = kan ? Tag::UKan : Tag::UPre;
  n.level = level;
  return Term::make(std::move(n));
}
Term upre(unsigned level) { return universe(false, level); }
Term ukan(unsigned level) { return universe(true, level); }
Term V(const Dim& r, const Term& a, const Term& b, const Term& e) {
  return node(Tag::V, {r}, {plain(a), plain(b), plain(e)});
}
Term vin(const Dim& r, const Term& m, const Term& n) { return node(Tag::Vin, {r}, {plain(m), plain(n)}); }
Term vproj(const Dim& r, const Term& m, const Term& f) { return node(Tag::Vproj, {r}, {plain(m), plain(f)}); }
Term lam(const std::string& a, const Term& body) { return node(Tag::Lam, {}, {bind_term(a, body)}); }
Term app(const Term& m, const Term& n) { return node(Tag::App, {}, {plain(m), plain(n)}); }
Term app(const Term& m, const Term& n1, const Term& n2) { return app(app(m, n1), n2); }
Term pair(const Term& m, const Term& n) { return node(Tag::Pair, {}, {plain(m), plain(n)}); }
Term fst(const Term& m) { return node(Tag::Fst, {}, {plain(m)}); }
Term snd(const Term& m) { return node(Tag::Snd, {}, {plain(m)}); }
Term dlam(const std::string& x, const Term& body) { return node(Tag::DLam, {}, {bind_dim(x, body)}); }
Term dapp(const Term& m, const Dim& r) { return node(Tag::DApp, {r}, {plain(m)}); }
Term star() { return atom(Tag::Star); }
Term zero() { return atom(Tag::Zero); }
Term suc(const Term& m) { return node(Tag::Suc, {}, {plain(m)}); }
Term numeral(unsigned k) {
  Term t = zero();
  for (unsigned i = 0; i < k; ++i) t = suc(t);
  return t;
}
Term natrec(const Term& m, const Term& z, const std::string& n, const std::string& a, const Term& s) {
  return node(Tag::NatRec, {},
              {plain(m), plain(z), Scope{{Binder{Sort::Term, n}, Binder{Sort::Term, a}}, close(s, {n, a}, {})}});
}
Term tt() { return atom(Tag::True); }
Term ff() { return atom(Tag::False); }
Term if_(const std::string& b, const Term& motive, const Term& m, const Term& t, const Term& f) {
  return node(Tag::If, {}, {bind_term(b, motive), plain(m), plain(t), plain(f)});
}
Term base() { return atom(Tag::Base); }
Term loop(const Dim& r) { return node(Tag::Loop, {r}, {}); }
Term s1elim(const std::string& c, const Term& motive, const Term& m, const Term& p, const std::string& x,
            const Term& l) {
  return node(Tag::CircElim, {}, {bind_term(c, motive), plain(m), plain(p), bind_dim(x, l)});
}

Tube tube(const Dim& lhs, const Dim& rhs, const std::string& y, const Term& body) {
  return Tube{Equation{lhs, rhs}, true, y, close(body, {}, {y})};
}
Tube tube_const(const Dim& lhs, const Dim& rhs, const Term& body) { return Tube{Equation{lhs, rhs}, true, "_", body}; }
Tube cap_face(const Dim& lhs, const Dim& rhs, const Term& body) { return Tube{Equation{lhs, rhs}, false, "", body}; }

Term coe(const std::string& x, const Term& ty, const Dim& r, const Dim& r2, const Term& m) {
  return node(Tag::Coe, {r, r2}, {bind_dim(x, ty), plain(m)});
}
Term coe(const Scope& ty, const Dim& r, const Dim& r2, const Term& m) { return node(Tag::Coe, {r, r2}, {ty, plain(m)}); }
Term hcom(const Term& ty, const Dim& r, const Dim& r2, const Term& m, System tubes) {
  return node(Tag::Hcom, {r, r2}, {plain(ty), plain(m)}, std::move(tubes));
}
Term com(const std::string& y, const Term& ty, const Dim& r, const Dim& r2, const Term& m, System tubes) {
  return node(Tag::Com, {r, r2}, {bind_dim(y, ty), plain(m)}, std::move(tubes));
}
Term com(const Scope& ty, const Dim& r, const Dim& r2, const Term& m, System tubes) {
  return node(Tag::Com, {r, r2}, {ty, plain(m)}, std::move(tubes));
}
Term fcom(const Dim& r, const Dim& r2, const Term& m, System tubes) {
  return node(Tag::Fcom, {r, r2}, {plain(m)}, std::move(tubes));
}
Term ghcom(const Term& ty, const Dim& r, const Dim& r2, const Term& m, System tubes) {
  return node(Tag::Ghcom, {r, r2}, {plain(ty), plain(m)}, std::move(tubes));
}
Term gcom(const std::string& y, const Term& ty, const Dim& r, const Dim& r2, const Term& m, System tubes) {
  return node(Tag::Gcom, {r, r2}, {bind_dim(y, ty), plain(m)}, std::move(tubes));
}
Term gcom(const Scope& ty, const Dim& r, const Dim& r2, const Term& m, System tubes) {
  return node(Tag::Gcom, {r, r2}, {ty, plain(m)}, std::move(tubes));
}
Term box(const Dim& r, const Dim& r2, const Term& m, System caps) {
  return node(Tag::Box, {r, r2}, {plain(m)}, std::move(caps));
}
Term cap(const Dim& r, const Dim& r2, const Term& m, System tubes) {
  return node(Tag::Cap, {r, r2}, {plain(m)}, std::move(tubes));
}

Term is_contr(const Term& c) {
  Fresh f(c);
  std::string x = f.var("c");
  std::string y = f.var("c'");
  std::string d = f.dim("_");
  return prod(c, pi(x, c, pi(y, c, path(d, c, var(x), var(y)))));
}

Term equiv(const Term& a, const Term& b) {
  Fresh fr(a);
  fr.avoid(b);
  std::string f = fr.var("f");
  std::string bv = fr.var("b");
  std::string av = fr.var("a");
  std::string d = fr.dim("_");
  Term fiber = sigma(av, a, path(d, b, app(var(f), var(av)), var(bv)));
  return sigma(f, arr(a, b), pi(bv, b, is_contr(fiber)));
}

}  // namespace mk

}  // namespace ccl
