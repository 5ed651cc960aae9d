#include "ccl/opsem.hpp"

#include <cstdlib>
#include <optional>
#include <unordered_map>

namespace ccl {

namespace {

using namespace mk;

Dim N(const std::string& n) { return Dim::name(n); }

// ---------------------------------------------------------------------------
// Outcome constructors

StepOutcome value_outcome(const ValueInfo& v) {
  StepOutcome o;
  o.kind = StepOutcome::Kind::Value;
  o.stable = v.stable;
  o.rules = {v.rule};
  return o;
}

StepOutcome steps_to(Term next, bool stable, const char* rule) {
  StepOutcome o;
  o.kind = StepOutcome::Kind::Steps;
  o.next = std::move(next);
  o.stable = stable;
  o.rules = {rule};
  return o;
}

StepOutcome stable_step(Term next, const char* rule) { return steps_to(std::move(next), true, rule); }
StepOutcome unstable_step(Term next, const char* rule) { return steps_to(std::move(next), false, rule); }

StepOutcome stuck(std::string reason) {
  StepOutcome o;
  o.kind = StepOutcome::Kind::Stuck;
  o.reason = std::move(reason);
  return o;
}

StepOutcome no_rule(const Term& m) { return stuck("no rule applies to `" + print(m) + "`"); }

// ---------------------------------------------------------------------------
// Helpers on nodes

Scope tube_scope(const Tube& t) { return Scope{{Binder{Sort::Dim, t.hint}}, t.body}; }

Term with_arg(const Term& m, std::size_t i, Term body) {
  Node n = m.node();
  n.args[i].body = std::move(body);
  return Term::make(std::move(n));
}

std::optional<std::size_t> first_reflexive(const System& sys) {
  for (std::size_t i = 0; i < sys.size(); ++i) {
    if (sys[i].eq.reflexive()) return i;
  }
  return std::nullopt;
}

bool all_apart(const Term& m) { return m.dim(0) != m.dim(1) && !first_reflexive(m.node().tubes); }

/// Applies `f` to every tube body opened at a fresh name and re-closes it.
template <class F>
System map_tubes(const System& sys, Fresh& fresh, F f) {
  System out;
  out.reserve(sys.size());
  for (const auto& t : sys) {
    std::string y = fresh.dim(t.hint.empty() || t.hint == "_" ? "y" : t.hint);
    out.push_back(tube(t.eq.lhs, t.eq.rhs, y, f(t.at(N(y)), y)));
  }
  return out;
}

System concat(System a, const System& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

bool mentions(const Dim& d, const std::string& x) { return d.is_name() && d.name() == x; }

Dim dsubst_dim(const Dim& d, const Dim& r, const std::string& x) { return mentions(d, x) ? r : d; }

// ---------------------------------------------------------------------------
// Congruence and elimination scaffolding

template <class Wrap>
StepOutcome congruence(StepOutcome inner, int pos, const char* rule, bool marked, Wrap wrap) {
  if (inner.stuck()) {
    inner.path.insert(inner.path.begin(), pos);
    return inner;
  }
  StepOutcome out;
  out.kind = StepOutcome::Kind::Steps;
  out.next = wrap(inner.next);
  out.stable = marked && inner.stable;
  out.rules.reserve(inner.rules.size() + 1);
  out.rules.push_back(rule);
  out.rules.insert(out.rules.end(), inner.rules.begin(), inner.rules.end());
  return out;
}

/// Evaluates the principal argument `pos` of an eliminator: a value is handed
/// to `on_value`, anything else steps under the congruence rule.
template <class OnValue>
StepOutcome eliminate(const Term& m, std::size_t pos, const char* cong_rule, bool marked, OnValue on_value) {
  const Term& head = m.body(pos);
  if (is_val(head).value) return on_value(head);
  return congruence(step(head), static_cast<int>(pos), cong_rule, marked,
                    [&](const Term& h) { return with_arg(m, pos, h); });
}

// ---------------------------------------------------------------------------
// Homogeneous composition, dispatched on the (evaluated) type

StepOutcome hcom_at(const Term& m, const Term& ty) {
  const Dim& r = m.dim(0);
  const Dim& r2 = m.dim(1);
  const Term& M = m.body(1);
  const System& tubes = m.node().tubes;
  Fresh f(m);

  switch (ty.tag()) {
    case Tag::Pi: {
      std::string a = f.var(ty.node().args[1].binders[0].hint);
      Term cod = ty.node().args[1].open_term(var(a));
      System ts = map_tubes(tubes, f, [&](const Term& n, const std::string&) { return app(n, var(a)); });
      return stable_step(lam(a, hcom(cod, r, r2, app(M, var(a)), std::move(ts))), "fun/hcom");
    }
    case Tag::Sigma: {
      const Term& dom = ty.body(0);
      std::string z = f.dim("z");
      System fsts = map_tubes(tubes, f, [](const Term& n, const std::string&) { return fst(n); });
      System snds = map_tubes(tubes, f, [](const Term& n, const std::string&) { return snd(n); });
      Term filler = hcom(dom, r, N(z), fst(M), fsts);
      Term cod = ty.node().args[1].open_term(filler);
      return stable_step(pair(hcom(dom, r, r2, fst(M), fsts), com(z, cod, r, r2, snd(M), std::move(snds))),
                         "pair/hcom");
    }
    case Tag::Path: {
      std::string x = f.dim(ty.node().args[0].binders[0].hint);
      Term a = ty.node().args[0].open_dim(N(x));
      System ts{tube_const(N(x), Dim::zero(), ty.body(1)), tube_const(N(x), Dim::one(), ty.body(2))};
      for (auto& t : map_tubes(tubes, f, [&](const Term& n, const std::string&) { return dapp(n, N(x)); }))
        ts.push_back(std::move(t));
      return stable_step(dlam(x, hcom(a, r, r2, dapp(M, N(x)), std::move(ts))), "path/hcom");
    }
    case Tag::Eq:
      return stable_step(star(), "eq/hcom");
    case Tag::Nat:
      return stable_step(M, "nat/hcom");
    case Tag::Bool:
      return stable_step(M, "bool/hcom");
    case Tag::WBool:
      return stable_step(fcom(r, r2, M, tubes), "wbool/hcom");
    case Tag::Circle:
      return stable_step(fcom(r, r2, M, tubes), "circle/hcom");
    case Tag::UKan:
      return stable_step(fcom(r, r2, M, tubes), "univ/hcom");
    case Tag::V: {
      const Dim& x = ty.dim(0);
      const Term& A = ty.body(0);
      const Term& B = ty.body(1);
      const Term& E = ty.body(2);
      std::string y = f.dim("y");
      auto O = [&](const Dim& d) { return hcom(A, r, d, M, tubes); };
      System ts = map_tubes(tubes, f, [&](const Term& n, const std::string&) { return vproj(x, n, fst(E)); });
      ts.push_back(tube(x, Dim::zero(), y, app(fst(E), O(N(y)))));
      ts.push_back(tube(x, Dim::one(), y, hcom(B, r, N(y), M, tubes)));
      return unstable_step(vin(x, O(r2), hcom(B, r, r2, vproj(x, M, fst(E)), std::move(ts))), "ua/hcom");
    }
    case Tag::Fcom: {
      const Dim& s = ty.dim(0);
      const Dim& s2 = ty.dim(1);
      const Term& A = ty.body(0);
      const System& bt = ty.node().tubes;
      auto P = [&](std::size_t j, const Dim& zv) {
        Scope bj = tube_scope(bt[j]);
        System ts = map_tubes(tubes, f, [&](const Term& n, const std::string&) { return coe(bj, s2, zv, n); });
        return hcom(bt[j].at(zv), r, r2, coe(bj, s2, zv, M), std::move(ts));
      };
      auto F = [&](const Term& c, const Dim& zv) {
        System ts;
        for (const auto& b : bt) {
          std::string z1 = f.dim("z");
          Scope bj = tube_scope(b);
          ts.push_back(tube(b.eq.lhs, b.eq.rhs, z1, coe(bj, N(z1), s, coe(bj, s2, N(z1), c))));
        }
        return hcom(A, s2, zv, cap(s, s2, c, bt), std::move(ts));
      };
      System ots = map_tubes(tubes, f, [&](const Term& n, const std::string&) { return F(n, s); });
      Term O = hcom(A, r, r2, F(M, s), std::move(ots));
      System qts;
      for (const auto& t : tubes) {
        std::string z = f.dim("z");
        qts.push_back(tube(t.eq.lhs, t.eq.rhs, z, F(t.at(r2), N(z))));
      }
      for (std::size_t j = 0; j < bt.size(); ++j) {
        std::string z = f.dim("z");
        qts.push_back(tube(bt[j].eq.lhs, bt[j].eq.rhs, z, coe(tube_scope(bt[j]), N(z), s, P(j, N(z)))));
      }
      {
        std::string z = f.dim("z");
        qts.push_back(tube(r, r2, z, F(M, N(z))));
      }
      Term Q = hcom(A, s, s2, O, std::move(qts));
      System caps;
      for (std::size_t j = 0; j < bt.size(); ++j) caps.push_back(cap_face(bt[j].eq.lhs, bt[j].eq.rhs, P(j, s2)));
      return unstable_step(box(s, s2, Q, std::move(caps)), "univ/hcom-fcom");
    }
    default:
      return no_rule(m);
  }
}

// ---------------------------------------------------------------------------
// Coercion, dispatched on the type line opened at `x`

StepOutcome coe_at(const Term& m, const std::string& x, const Term& ty, Fresh& f) {
  const Scope& line = m.node().args[0];
  const Dim& r = m.dim(0);
  const Dim& r2 = m.dim(1);
  const Term& M = m.body(1);

  switch (ty.tag()) {
    case Tag::Pi: {
      const Term& dom = ty.body(0);
      const Scope& cod = ty.node().args[1];
      std::string a = f.var(cod.binders[0].hint);
      Term back = coe(x, dom, r2, N(x), var(a));
      Term arg = coe(x, dom, r2, r, var(a));
      return stable_step(lam(a, coe(x, cod.open_term(back), r, r2, app(M, arg))), "fun/coe");
    }
    case Tag::Sigma: {
      const Term& dom = ty.body(0);
      const Scope& cod = ty.node().args[1];
      Term filler = coe(x, dom, r, N(x), fst(M));
      return stable_step(pair(coe(x, dom, r, r2, fst(M)), coe(x, cod.open_term(filler), r, r2, snd(M))),
                         "pair/coe");
    }
    case Tag::Path: {
      std::string xp = f.dim(ty.node().args[0].binders[0].hint);
      Term a = ty.node().args[0].open_dim(N(xp));
      System ts{tube(N(xp), Dim::zero(), x, ty.body(1)), tube(N(xp), Dim::one(), x, ty.body(2))};
      return stable_step(dlam(xp, com(x, a, r, r2, dapp(M, N(xp)), std::move(ts))), "path/coe");
    }
    case Tag::Nat:
      return stable_step(M, "nat/coe");
    case Tag::Bool:
      return stable_step(M, "bool/coe");
    case Tag::WBool:
      return stable_step(M, "wbool/coe");
    case Tag::Circle:
      return stable_step(M, "circle/coe");
    case Tag::UPre:
    case Tag::UKan:
      return stable_step(M, "univ/coe");
    case Tag::V: {
      const Dim& d = ty.dim(0);
      const Term& A = ty.body(0);
      const Term& B = ty.body(1);
      const Term& E = ty.body(2);
      if (!mentions(d, x)) {
        System ts{tube(d, Dim::zero(), x, app(fst(E), coe(x, A, r, N(x), M))),
                  tube(d, Dim::one(), x, coe(x, B, r, N(x), M))};
        return unstable_step(
            vin(d, coe(x, A, r, r2, M), com(x, B, r, r2, vproj(d, M, fst(dsubst(E, r, x))), std::move(ts))),
            "ua/coe-other");
      }
      if (r == Dim::zero()) {
        Term n = coe(x, B, Dim::zero(), r2, app(fst(dsubst(E, Dim::zero(), x)), M));
        return stable_step(vin(r2, M, n), "ua/coe-0");
      }
      if (r == Dim::one()) {
        Term cn = coe(x, B, Dim::one(), r2, M);
        Term O = fst(app(snd(dsubst(E, r2, x)), cn));
        std::string y = f.dim("y");
        System ts{tube(r2, Dim::zero(), y, dapp(snd(O), N(y))), tube_const(r2, Dim::one(), cn)};
        Term P = hcom(dsubst(B, r2, x), Dim::one(), Dim::zero(), cn, std::move(ts));
        return stable_step(vin(r2, fst(O), P), "ua/coe-1");
      }
      const std::string y = r.name();
      auto O = [&](const Dim& eps, const Dim& w) {
        return vproj(w, coe(line, eps, w, M), fst(dsubst(E, w, x)));
      };
      std::string w = f.dim("w");
      Term P = com(x, B, r, N(x), vproj(r, M, fst(dsubst(E, r, x))),
                   {tube(r, Dim::zero(), w, O(Dim::zero(), N(w))), tube(r, Dim::one(), w, O(Dim::one(), N(w)))});
      Term P0 = dsubst(P, Dim::zero(), x);
      Term A0 = dsubst(A, Dim::zero(), x);
      Term B0 = dsubst(B, Dim::zero(), x);
      Term E0 = dsubst(E, Dim::zero(), x);
      auto Q = [&](const Dim& eps, const Term& a) {
        std::string z = f.dim("z");
        Term back = coe(y, A0, eps, N(y), a);
        System u{tube(N(z), Dim::zero(), y, app(fst(E0), back)), tube(N(z), Dim::one(), y, P0)};
        return pair(back, dlam(z, com(y, B0, eps, N(y), dsubst(P0, eps, y), std::move(u))));
      };
      Term fib = app(snd(E0), P0);
      Term R = dapp(app(app(snd(fib), Q(Dim::zero(), dsubst(M, Dim::zero(), y))),
                        Q(Dim::one(), dsubst(coe(line, Dim::one(), Dim::zero(), M), Dim::one(), y))),
                    r);
      std::string z = f.dim("z");
      System ts{tube_const(r, Dim::zero(), O(Dim::zero(), r2)), tube_const(r, Dim::one(), O(Dim::one(), r2)),
                tube_const(r, r2, vproj(r2, M, fst(dsubst(E, r2, x)))),
                tube(r2, Dim::zero(), z, dapp(snd(R), N(z)))};
      return unstable_step(vin(r2, fst(R), hcom(dsubst(B, r2, x), Dim::one(), Dim::zero(), dsubst(P, r2, x),
                                                std::move(ts))),
                           "ua/coe-name");
    }
    case Tag::Fcom: {
      const Dim& s = ty.dim(0);
      const Dim& s2 = ty.dim(1);
      const Term& A = ty.body(0);
      const System& bt = ty.node().tubes;
      auto apart = [&](const Equation& e) { return !mentions(e.lhs, x) && !mentions(e.rhs, x); };
      auto Ni = [&](std::size_t i, const Dim& zv) {
        return coe(tube_scope(bt[i]), s2, zv, coe(x, bt[i].at(s2), r, N(x), M));
      };
      auto O = [&](const Dim& zv) {
        System ts;
        for (std::size_t i = 0; i < bt.size(); ++i) {
          std::string z1 = f.dim("z");
          ts.push_back(tube(bt[i].eq.lhs, bt[i].eq.rhs, z1, coe(tube_scope(bt[i]), N(z1), s, Ni(i, N(z1)))));
        }
        return dsubst(hcom(A, s2, zv, cap(s, s2, M, bt), std::move(ts)), r, x);
      };
      System pts;
      for (std::size_t i = 0; i < bt.size(); ++i) {
        if (apart(bt[i].eq)) pts.push_back(tube(bt[i].eq.lhs, bt[i].eq.rhs, x, Ni(i, s)));
      }
      if (apart(Equation{s, s2})) pts.push_back(tube(s, s2, x, coe(x, A, r, N(x), M)));
      Term P = gcom(x, A, r, r2, O(dsubst_dim(s, r, x)), std::move(pts));
      auto Q = [&](std::size_t k, const Dim& zv) {
        std::string zb = f.dim("z");
        System ts;
        for (std::size_t i = 0; i < bt.size(); ++i) {
          if (!apart(bt[i].eq)) continue;
          std::string z1 = f.dim("z");
          ts.push_back(tube(bt[i].eq.lhs, bt[i].eq.rhs, z1, dsubst(Ni(i, N(z1)), r2, x)));
        }
        std::string z1 = f.dim("z");
        ts.push_back(tube(r, r2, z1, dsubst(Ni(k, N(z1)), r2, x)));
        return gcom(zb, dsubst(bt[k].at(N(zb)), r2, x), dsubst_dim(s, r2, x), zv, P, std::move(ts));
      };
      System hts;
      for (std::size_t i = 0; i < bt.size(); ++i) {
        std::string z = f.dim("z");
        hts.push_back(tube(bt[i].eq.lhs, bt[i].eq.rhs, z, coe(tube_scope(bt[i]), N(z), s, Q(i, N(z)))));
      }
      {
        std::string z = f.dim("z");
        hts.push_back(tube(r, r2, z, O(N(z))));
      }
      System caps;
      for (std::size_t i = 0; i < bt.size(); ++i) caps.push_back(cap_face(bt[i].eq.lhs, bt[i].eq.rhs, Q(i, s2)));
      Term result = box(s, s2, hcom(A, s, s2, P, std::move(hts)), std::move(caps));
      return unstable_step(dsubst(result, r2, x), "univ/coe-fcom");
    }
    default:
      return no_rule(m);
  }
}

// ---------------------------------------------------------------------------
// Per-constructor transitions

StepOutcome step_hcom(const Term& m) {
  return eliminate(m, 0, "kan/hcom-cong", true, [&](const Term& ty) { return hcom_at(m, ty); });
}

StepOutcome step_coe(const Term& m) {
  Fresh f(m);
  const Scope& line = m.node().args[0];
  std::string x = f.dim(line.binders[0].hint);
  Term ty = line.open_dim(N(x));
  if (is_val(ty).value) return coe_at(m, x, ty, f);
  return congruence(step(ty), 0, "kan/coe-cong", true, [&](const Term& t) {
    return coe(x, t, m.dim(0), m.dim(1), m.body(1));
  });
}

StepOutcome step_com(const Term& m) {
  const Scope& line = m.node().args[0];
  const Dim& r = m.dim(0);
  const Dim& r2 = m.dim(1);
  Fresh f(m);
  System ts = map_tubes(m.node().tubes, f, [&](const Term& n, const std::string& y) {
    return coe(line, N(y), r2, n);
  });
  return stable_step(hcom(line.open_dim(r2), r, r2, coe(line, r, r2, m.body(1)), std::move(ts)), "kan/com");
}

StepOutcome step_gcom(const Term& m) {
  const Scope& line = m.node().args[0];
  const Dim& r = m.dim(0);
  const Dim& r2 = m.dim(1);
  Fresh f(m);
  System ts = map_tubes(m.node().tubes, f, [&](const Term& n, const std::string& y) {
    return coe(line, N(y), r2, n);
  });
  return stable_step(ghcom(line.open_dim(r2), r, r2, coe(line, r, r2, m.body(1)), std::move(ts)), "kan/gcom");
}

StepOutcome step_ghcom(const Term& m) {
  const System& tubes = m.node().tubes;
  const Term& A = m.body(0);
  const Dim& r = m.dim(0);
  const Dim& r2 = m.dim(1);
  const Term& M = m.body(1);
  if (tubes.empty()) return stable_step(M, "kan/ghcom-nil");
  const Tube& first = tubes[0];
  const Dim& s = first.eq.lhs;
  const Dim& s2 = first.eq.rhs;
  System rest(tubes.begin() + 1, tubes.end());
  Fresh f(m);
  auto T = [&](const Dim& eps, const Dim& zv) {
    Tube own = first;
    own.eq = Equation{s2, eps};
    std::string y = f.dim("y");
    System ts{own, tube(s2, eps.flipped(), y, ghcom(A, r, N(y), M, rest))};
    return hcom(A, r, zv, M, concat(std::move(ts), rest));
  };
  std::string z0 = f.dim("z");
  std::string z1 = f.dim("z");
  System ts{tube(s, Dim::zero(), z0, T(Dim::zero(), N(z0))), tube(s, Dim::one(), z1, T(Dim::one(), N(z1))), first};
  return stable_step(hcom(A, r, r2, M, concat(std::move(ts), rest)), "kan/ghcom-cons");
}

StepOutcome step_fcom(const Term& m) {
  if (m.dim(0) == m.dim(1)) return stable_step(m.body(0), "kan/fcom-eq");
  if (auto j = first_reflexive(m.node().tubes)) return unstable_step(m.node().tubes[*j].at(m.dim(1)), "kan/fcom-tube");
  return value_outcome(is_val(m));
}

StepOutcome step_box(const Term& m) {
  if (m.dim(0) == m.dim(1)) return stable_step(m.body(0), "univ/box-eq");
  if (auto j = first_reflexive(m.node().tubes)) return unstable_step(m.node().tubes[*j].body, "univ/box-tube");
  return value_outcome(is_val(m));
}

StepOutcome step_cap(const Term& m) {
  const Dim& r = m.dim(0);
  const Dim& r2 = m.dim(1);
  const System& tubes = m.node().tubes;
  if (r == r2) return stable_step(m.body(0), "univ/cap-eq");
  if (auto j = first_reflexive(tubes)) return unstable_step(coe(tube_scope(tubes[*j]), r2, r, m.body(0)), "univ/cap-tube");
  return eliminate(m, 0, "univ/cap-cong", false, [&](const Term& b) {
    if (b.tag() != Tag::Box || b.dim(0) != r || b.dim(1) != r2) return no_rule(m);
    const System& caps = b.node().tubes;
    if (caps.size() != tubes.size()) return no_rule(m);
    for (std::size_t i = 0; i < caps.size(); ++i) {
      if (!(caps[i].eq == tubes[i].eq)) return no_rule(m);
    }
    return unstable_step(b.body(0), "univ/cap-box");
  });
}

StepOutcome step_if(const Term& m) {
  return eliminate(m, 1, "bool/if-cong", true, [&](const Term& b) {
    switch (b.tag()) {
      case Tag::True:
        return stable_step(m.body(2), "bool/if-true");
      case Tag::False:
        return stable_step(m.body(3), "bool/if-false");
      case Tag::Fcom: {
        Fresh f(m);
        const Dim& r = b.dim(0);
        const Dim& r2 = b.dim(1);
        const System& tubes = b.node().tubes;
        std::string z = f.dim("z");
        Term motive = m.node().args[0].open_term(fcom(r, N(z), b.body(0), tubes));
        System ts = map_tubes(tubes, f, [&](const Term& n, const std::string&) { return with_arg(m, 1, n); });
        return unstable_step(com(z, motive, r, r2, with_arg(m, 1, b.body(0)), std::move(ts)), "wbool/if-fcom");
      }
      default:
        return no_rule(m);
    }
  });
}

StepOutcome step_circ_elim(const Term& m) {
  return eliminate(m, 1, "circle/elim-cong", true, [&](const Term& c) {
    switch (c.tag()) {
      case Tag::Base:
        return stable_step(m.body(2), "circle/elim-base");
      case Tag::Loop:
        return unstable_step(m.node().args[3].open_dim(c.dim(0)), "circle/elim-loop");
      case Tag::Fcom: {
        Fresh f(m);
        const Dim& r = c.dim(0);
        const Dim& r2 = c.dim(1);
        const System& tubes = c.node().tubes;
        std::string z = f.dim("z");
        Term motive = m.node().args[0].open_term(fcom(r, N(z), c.body(0), tubes));
        System ts = map_tubes(tubes, f, [&](const Term& n, const std::string&) { return with_arg(m, 1, n); });
        return unstable_step(com(z, motive, r, r2, with_arg(m, 1, c.body(0)), std::move(ts)), "circle/elim-fcom");
      }
      default:
        return no_rule(m);
    }
  });
}

StepOutcome step_vproj(const Term& m) {
  const Dim& r = m.dim(0);
  if (r == Dim::zero()) return stable_step(app(m.body(1), m.body(0)), "ua/vproj-0");
  if (r == Dim::one()) return stable_step(m.body(0), "ua/vproj-1");
  return eliminate(m, 0, "ua/vproj-cong", false, [&](const Term& v) {
    if (v.tag() == Tag::Vin && v.dim(0) == r) return unstable_step(v.body(1), "ua/vproj-vin");
    return no_rule(m);
  });
}

}  // namespace

// ---------------------------------------------------------------------------

const std::vector<StepRule>& step_rules() {
  static const std::vector<StepRule> rules = {
      {"types/pi-val", true, true, "pi (a : A) B is a value"},
      {"types/sg-val", true, true, "sg (a : A) B is a value"},
      {"types/path-val", true, true, "path (x. A) M N is a value"},
      {"types/eq-val", true, true, "eq A M N is a value"},
      {"types/void-val", true, true, "void is a value"},
      {"types/nat-val", true, true, "nat is a value"},
      {"types/bool-val", true, true, "bool is a value"},
      {"types/wbool-val", true, true, "wbool is a value"},
      {"types/S1-val", true, true, "S1 is a value"},
      {"types/upre-val", true, true, "U pre j is a value"},
      {"types/ukan-val", true, true, "U kan j is a value"},
      {"types/V-val", true, false, "V x A B E is a value"},
      {"types/V-0", false, true, "V 0 A B E ~> A"},
      {"types/V-1", false, true, "V 1 A B E ~> B"},
      {"kan/hcom-cong", false, true, "hcom A r~>r' M [..] steps with A"},
      {"kan/coe-cong", false, true, "coe (x. A) r~>r' M steps with A"},
      {"kan/com", false, true, "com (y. A) r~>r' M [..] ~> hcom A<r'/y> r~>r' (coe ..) [.. coe ..]"},
      {"kan/fcom-eq", false, true, "fcom r~>r M [..] ~> M"},
      {"kan/fcom-tube", false, false, "fcom r~>r' M [..] ~> N_j<r'/y> for the least j with r_j=r_j'"},
      {"kan/fcom-val", true, false, "fcom r~>r' M [..] is a value when r/=r' and every r_i/=r_i'"},
      {"kan/ghcom-nil", false, true, "ghcom A r~>r' M [] ~> M"},
      {"kan/ghcom-cons", false, true, "ghcom A r~>r' M [s=s' y. N, ..] ~> hcom with the s=0 and s=1 faces"},
      {"kan/gcom", false, true, "gcom (y. A) r~>r' M [..] ~> ghcom A<r'/y> r~>r' (coe ..) [.. coe ..]"},
      {"fun/lam-val", true, true, "lam a. M is a value"},
      {"fun/app-cong", false, true, "app M N steps with M"},
      {"fun/beta", false, true, "app (lam a. M) N ~> M[N/a]"},
      {"fun/hcom", false, true, "hcom at pi ~> lam a. hcom B (app M a) [.. app N_i a]"},
      {"fun/coe", false, true, "coe at pi ~> lam a. coe (x. B[coe x.A r'~>x a/a]) (app M (coe x.A r'~>r a))"},
      {"pair/pair-val", true, true, "pair M N is a value"},
      {"pair/fst-cong", false, true, "fst M steps with M"},
      {"pair/snd-cong", false, true, "snd M steps with M"},
      {"pair/fst-beta", false, true, "fst (pair M N) ~> M"},
      {"pair/snd-beta", false, true, "snd (pair M N) ~> N"},
      {"pair/hcom", false, true, "hcom at sg ~> pair (hcom A ..) (com (z. B[F/a]) ..)"},
      {"pair/coe", false, true, "coe at sg ~> pair (coe x.A ..) (coe x.B[coe x.A r~>x (fst M)/a] ..)"},
      {"path/dlam-val", true, true, "dlam x. M is a value"},
      {"path/dapp-cong", false, true, "dapp M r steps with M"},
      {"path/beta", false, true, "dapp (dlam x. M) r ~> M<r/x>"},
      {"path/hcom", false, true, "hcom at path ~> dlam x. hcom A (dapp M x) [x=0 P0, x=1 P1, ..]"},
      {"path/coe", false, true, "coe at path ~> dlam x. com (y. A) (dapp M x) [x=0 y.P0, x=1 y.P1]"},
      {"eq/star-val", true, true, "* is a value"},
      {"eq/hcom", false, true, "hcom at eq ~> *"},
      {"nat/zero-val", true, true, "zero is a value"},
      {"nat/suc-val", true, true, "suc M is a value"},
      {"nat/natrec-cong", false, true, "natrec M Z S steps with M"},
      {"nat/natrec-zero", false, true, "natrec zero Z S ~> Z"},
      {"nat/natrec-suc", false, true, "natrec (suc M) Z (n a. S) ~> S[M/n][natrec M Z S/a]"},
      {"nat/hcom", false, true, "hcom at nat ~> M"},
      {"nat/coe", false, true, "coe at nat ~> M"},
      {"bool/true-val", true, true, "true is a value"},
      {"bool/false-val", true, true, "false is a value"},
      {"bool/if-cong", false, true, "if (b. A) M T F steps with M"},
      {"bool/if-true", false, true, "if (b. A) true T F ~> T"},
      {"bool/if-false", false, true, "if (b. A) false T F ~> F"},
      {"bool/hcom", false, true, "hcom at bool ~> M"},
      {"bool/coe", false, true, "coe at bool ~> M"},
      {"wbool/hcom", false, true, "hcom at wbool ~> fcom"},
      {"wbool/coe", false, true, "coe at wbool ~> M"},
      {"wbool/if-fcom", false, false, "if over an fcom value ~> com (z. A[fcom r~>z ..]) (if M) [.. if N_i]"},
      {"circle/base-val", true, true, "base is a value"},
      {"circle/loop-val", true, false, "loop x is a value"},
      {"circle/loop-eps", false, true, "loop 0 ~> base and loop 1 ~> base"},
      {"circle/hcom", false, true, "hcom at S1 ~> fcom"},
      {"circle/coe", false, true, "coe at S1 ~> M"},
      {"circle/elim-cong", false, true, "S1elim (c. A) M P (x. L) steps with M"},
      {"circle/elim-base", false, true, "S1elim over base ~> P"},
      {"circle/elim-loop", false, false, "S1elim over loop w ~> L<w/x>"},
      {"circle/elim-fcom", false, false, "S1elim over an fcom value ~> com (z. A[fcom r~>z ..]) .."},
      {"ua/vin-val", true, false, "Vin x M N is a value"},
      {"ua/vin-0", false, true, "Vin 0 M N ~> M"},
      {"ua/vin-1", false, true, "Vin 1 M N ~> N"},
      {"ua/vproj-0", false, true, "Vproj 0 M F ~> app F M"},
      {"ua/vproj-1", false, true, "Vproj 1 M F ~> M"},
      {"ua/vproj-cong", false, false, "Vproj x M F steps with M"},
      {"ua/vproj-vin", false, false, "Vproj x (Vin x M N) F ~> N"},
      {"ua/hcom", false, false, "hcom at V x A B E ~> Vin x (hcom A ..) (hcom B ..)"},
      {"ua/coe-0", false, true, "coe (x. V x A B E) 0~>r' M ~> Vin r' M (coe x.B 0~>r' (app (fst E<0/x>) M))"},
      {"ua/coe-1", false, true, "coe (x. V x A B E) 1~>r' N ~> Vin r' (fst O) (hcom B<r'/x> 1~>0 ..)"},
      {"ua/coe-name", false, false, "coe (x. V x A B E) y~>r' M for a name y"},
      {"ua/coe-other", false, false, "coe (y. V x A B E) r~>r' M for x other than y"},
      {"univ/hcom", false, true, "hcom at U kan j ~> fcom"},
      {"univ/coe", false, true, "coe at a universe ~> M"},
      {"univ/box-eq", false, true, "box r~>r M [..] ~> M"},
      {"univ/box-tube", false, false, "box r~>r' M [..] ~> N_j for the least j with r_j=r_j'"},
      {"univ/box-val", true, false, "box r~>r' M [..] is a value when r/=r' and every r_i/=r_i'"},
      {"univ/cap-eq", false, true, "cap r~>r M [..] ~> M"},
      {"univ/cap-tube", false, false, "cap r~>r' M [..] ~> coe (y. B_j) r'~>r M for the least j with r_j=r_j'"},
      {"univ/cap-cong", false, false, "cap r~>r' M [..] steps with M"},
      {"univ/cap-box", false, false, "cap r~>r' (box r~>r' M [..]) [..] ~> M"},
      {"univ/hcom-fcom", false, false, "hcom at an fcom type ~> box"},
      {"univ/coe-fcom", false, false, "coe at an fcom type ~> box"},
  };
  return rules;
}

const StepRule* find_step_rule(const std::string& id) {
  static const std::unordered_map<std::string, const StepRule*> index = [] {
    std::unordered_map<std::string, const StepRule*> out;
    for (const auto& r : step_rules()) out.emplace(r.id, &r);
    return out;
  }();
  auto it = index.find(id);
  return it == index.end() ? nullptr : it->second;
}

ValueInfo is_val(const Term& m) {
  auto stable = [](const char* rule) { return ValueInfo{true, true, rule}; };
  auto unstable = [](const char* rule) { return ValueInfo{true, false, rule}; };
  switch (m.tag()) {
    case Tag::Pi:
      return stable("types/pi-val");
    case Tag::Sigma:
      return stable("types/sg-val");
    case Tag::Path:
      return stable("types/path-val");
    case Tag::Eq:
      return stable("types/eq-val");
    case Tag::Void:
      return stable("types/void-val");
    case Tag::Nat:
      return stable("types/nat-val");
    case Tag::Bool:
      return stable("types/bool-val");
    case Tag::WBool:
      return stable("types/wbool-val");
    case Tag::Circle:
      return stable("types/S1-val");
    case Tag::UPre:
      return stable("types/upre-val");
    case Tag::UKan:
      return stable("types/ukan-val");
    case Tag::V:
      return m.dim(0).is_name() ? unstable("types/V-val") : ValueInfo{};
    case Tag::Lam:
      return stable("fun/lam-val");
    case Tag::Pair:
      return stable("pair/pair-val");
    case Tag::DLam:
      return stable("path/dlam-val");
    case Tag::Star:
      return stable("eq/star-val");
    case Tag::Zero:
      return stable("nat/zero-val");
    case Tag::Suc:
      return stable("nat/suc-val");
    case Tag::True:
      return stable("bool/true-val");
    case Tag::False:
      return stable("bool/false-val");
    case Tag::Base:
      return stable("circle/base-val");
    case Tag::Loop:
      return m.dim(0).is_name() ? unstable("circle/loop-val") : ValueInfo{};
    case Tag::Vin:
      return m.dim(0).is_name() ? unstable("ua/vin-val") : ValueInfo{};
    case Tag::Fcom:
      return all_apart(m) ? unstable("kan/fcom-val") : ValueInfo{};
    case Tag::Box:
      return all_apart(m) ? unstable("univ/box-val") : ValueInfo{};
    default:
      return {};
  }
}

std::string StepOutcome::rule_chain() const {
  std::string out;
  for (const auto& r : rules) {
    if (!out.empty()) out += " > ";
    out += r;
  }
  return out;
}

StepOutcome step(const Term& m) {
  if (auto v = is_val(m); v.value) return value_outcome(v);
  switch (m.tag()) {
    case Tag::Var:
      return stuck("free term variable `" + m.name() + "`");
    case Tag::BVar:
      return stuck("dangling bound variable");
    case Tag::V:
      return stable_step(m.dim(0) == Dim::zero() ? m.body(0) : m.body(1),
                         m.dim(0) == Dim::zero() ? "types/V-0" : "types/V-1");
    case Tag::Hcom:
      return step_hcom(m);
    case Tag::Coe:
      return step_coe(m);
    case Tag::Com:
      return step_com(m);
    case Tag::Fcom:
      return step_fcom(m);
    case Tag::Ghcom:
      return step_ghcom(m);
    case Tag::Gcom:
      return step_gcom(m);
    case Tag::Box:
      return step_box(m);
    case Tag::Cap:
      return step_cap(m);
    case Tag::App:
      return eliminate(m, 0, "fun/app-cong", true, [&](const Term& h) {
        if (h.tag() != Tag::Lam) return no_rule(m);
        return stable_step(h.node().args[0].open_term(m.body(1)), "fun/beta");
      });
    case Tag::Fst:
      return eliminate(m, 0, "pair/fst-cong", true, [&](const Term& h) {
        if (h.tag() != Tag::Pair) return no_rule(m);
        return stable_step(h.body(0), "pair/fst-beta");
      });
    case Tag::Snd:
      return eliminate(m, 0, "pair/snd-cong", true, [&](const Term& h) {
        if (h.tag() != Tag::Pair) return no_rule(m);
        return stable_step(h.body(1), "pair/snd-beta");
      });
    case Tag::DApp:
      return eliminate(m, 0, "path/dapp-cong", true, [&](const Term& h) {
        if (h.tag() != Tag::DLam) return no_rule(m);
        return stable_step(h.node().args[0].open_dim(m.dim(0)), "path/beta");
      });
    case Tag::NatRec:
      return eliminate(m, 0, "nat/natrec-cong", true, [&](const Term& h) {
        if (h.tag() == Tag::Zero) return stable_step(m.body(1), "nat/natrec-zero");
        if (h.tag() != Tag::Suc) return no_rule(m);
        const Term& pred = h.body(0);
        return stable_step(m.node().args[2].open({pred, with_arg(m, 0, pred)}, {}), "nat/natrec-suc");
      });
    case Tag::If:
      return step_if(m);
    case Tag::Loop:
      return stable_step(base(), "circle/loop-eps");
    case Tag::CircElim:
      return step_circ_elim(m);
    case Tag::Vin:
      return m.dim(0) == Dim::zero() ? stable_step(m.body(0), "ua/vin-0") : stable_step(m.body(1), "ua/vin-1");
    case Tag::Vproj:
      return step_vproj(m);
    default:
      return no_rule(m);
  }
}

std::size_t default_fuel() {
  if (const char* env = std::getenv("CCL_FUEL")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultFuel;
}

namespace {

std::string path_suffix(const std::vector<int>& path) {
  if (path.empty()) return "";
  std::string out = " (at argument path ";
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i) out += ".";
    out += std::to_string(path[i]);
  }
  return out + ")";
}

}  // namespace

EvalResult eval(const Term& m, std::size_t fuel) {
  EvalResult res;
  Term cur = m;
  for (;;) {
    StepOutcome o = step(cur);
    if (o.is_value()) {
      res.value = cur;
      res.stable = res.stable && o.stable;
      return res;
    }
    if (o.stuck()) {
      throw EvalError(EvalError::Kind::Stuck, cur, "stuck: " + o.reason + path_suffix(o.path), res.steps);
    }
    if (res.steps == fuel) {
      throw EvalError(EvalError::Kind::FuelExhausted, cur,
                      "fuel exhausted after " + std::to_string(fuel) + " steps", res.steps);
    }
    res.stable = res.stable && o.stable;
    ++res.steps;
    cur = std::move(o.next);
  }
}

EvalResult eval_canonical(const Term& m, std::size_t fuel) {
  EvalResult head = eval(m, fuel);
  unsigned sucs = 0;
  while (head.value.tag() == Tag::Suc) {
    ++sucs;
    EvalResult inner;
    try {
      inner = eval(head.value.body(0), fuel - head.steps);
    } catch (const EvalError& e) {
      throw EvalError(e.kind(), e.at(), e.what(), head.steps + e.fuel_used());
    }
    head.value = inner.value;
    head.steps += inner.steps;
    head.stable = head.stable && inner.stable;
  }
  for (unsigned i = 0; i < sucs; ++i) head.value = mk::suc(head.value);
  return head;
}

Trace trace(const Term& m, std::size_t fuel) {
  Trace t;
  Term cur = m;
  for (;;) {
    StepOutcome o = step(cur);
    if (o.is_value()) {
      t.final = Trace::Final::Value;
      t.last = cur;
      t.stable = o.stable;
      t.value_rule = o.rule();
      return t;
    }
    if (o.stuck()) {
      t.final = Trace::Final::Stuck;
      t.last = cur;
      t.reason = o.reason + path_suffix(o.path);
      return t;
    }
    if (t.fuel_used == fuel) {
      t.final = Trace::Final::FuelExhausted;
      t.last = cur;
      return t;
    }
    t.steps.push_back(TraceEntry{cur, o.rule_chain(), o.stable});
    ++t.fuel_used;
    cur = std::move(o.next);
  }
}

}  // namespace ccl
