#include "ccl/serialize.hpp"

namespace ccl {

namespace {

std::string at(const std::string& where, const std::string& key) { return where + "/" + key; }
std::string at(const std::string& where, std::size_t i) { return where + "/" + std::to_string(i); }

const Json& field(const Json& j, const std::string& key, const std::string& where) {
  if (!j.is_object()) throw FormatError(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw FormatError(where, "missing field \"" + key + "\"");
  return *it;
}

std::string string_of(const Json& j, const std::string& where) {
  if (!j.is_string()) throw FormatError(where, "expected a string");
  return j.get<std::string>();
}

unsigned unsigned_of(const Json& j, const std::string& where) {
  if (!j.is_number_unsigned()) throw FormatError(where, "expected a non-negative integer");
  return j.get<unsigned>();
}

const Json& array_of(const Json& j, const std::string& where) {
  if (!j.is_array()) throw FormatError(where, "expected an array");
  return j;
}

Dim dim_of(const Json& j, const std::string& where) {
  try {
    return parse_dim(string_of(j, where));
  } catch (const ParseError& e) {
    throw FormatError(where, e.what());
  }
}

Equation equation_of(const Json& j, const std::string& where) {
  EquationList eqs;
  try {
    eqs = parse_equations(string_of(j, where));
  } catch (const ParseError& e) {
    throw FormatError(where, e.what());
  }
  if (eqs.size() != 1) throw FormatError(where, "expected exactly one equation");
  return eqs[0];
}

Json eqs_to_json(const EquationList& eqs) {
  Json out = Json::array();
  for (const auto& e : eqs) out.push_back(e.str());
  return out;
}

EquationList eqs_from_json(const Json& j, const std::string& where) {
  EquationList out;
  const Json& arr = array_of(j, where);
  for (std::size_t i = 0; i < arr.size(); ++i) out.push_back(equation_of(arr[i], at(where, i)));
  return out;
}

Json ctx_to_json(const DimCtx& psi) {
  Json out = Json::array();
  for (const auto& n : psi) out.push_back(n);
  return out;
}

DimCtx ctx_from_json(const Json& j, const std::string& where) {
  DimCtx out;
  const Json& arr = array_of(j, where);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    std::string n = string_of(arr[i], at(where, i));
    Dim d = dim_of(arr[i], at(where, i));
    if (!d.is_name()) throw FormatError(at(where, i), "expected a dimension name, found " + n);
    out.insert(n);
  }
  return out;
}

Json hyps_to_json(const std::vector<Hyp>& gamma) {
  Json out = Json::array();
  for (const auto& h : gamma) out.push_back({{"var", h.var}, {"type", term_to_json(h.type)}});
  return out;
}

std::vector<Hyp> hyps_from_json(const Json& j, const std::string& where) {
  std::vector<Hyp> out;
  const Json& arr = array_of(j, where);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    std::string w = at(where, i);
    out.push_back({string_of(field(arr[i], "var", w), at(w, "var")), term_from_json(field(arr[i], "type", w), at(w, "type"))});
  }
  return out;
}

Json tubes_to_json(const std::vector<TubeInst>& ts) {
  Json out = Json::array();
  for (const auto& t : ts) out.push_back({{"eq", t.eq.str()}, {"body", term_to_json(t.body)}});
  return out;
}

std::vector<TubeInst> tubes_from_json(const Json& j, const std::string& where) {
  std::vector<TubeInst> out;
  const Json& arr = array_of(j, where);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    std::string w = at(where, i);
    out.push_back({equation_of(field(arr[i], "eq", w), at(w, "eq")), term_from_json(field(arr[i], "body", w), at(w, "body"))});
  }
  return out;
}

Json subst_to_json(const DimSubst& psi) {
  Json map = Json::object();
  for (const auto& [k, v] : psi.map()) map[k] = v.str();
  return {{"source", ctx_to_json(psi.source())}, {"target", ctx_to_json(psi.target())}, {"map", map}};
}

DimSubst subst_from_json(const Json& j, const std::string& where) {
  DimCtx source = ctx_from_json(field(j, "source", where), at(where, "source"));
  DimCtx target = ctx_from_json(field(j, "target", where), at(where, "target"));
  const Json& map = field(j, "map", where);
  if (!map.is_object()) throw FormatError(at(where, "map"), "expected an object");
  std::map<std::string, Dim> m;
  for (auto it = map.begin(); it != map.end(); ++it) m[it.key()] = dim_of(it.value(), at(at(where, "map"), it.key()));
  try {
    return DimSubst(source, target, m);
  } catch (const ScopeError& e) {
    throw FormatError(where, e.what());
  }
}

/// Names bound variables apart from everything free in the whole term.
struct Namer {
  Fresh fresh;

  Json term(const Term& m) {
    const Node& n = m.node();
    Json out = {{"tag", tag_name(n.tag)}};
    if (n.tag == Tag::Var) {
      out["name"] = n.name;
      return out;
    }
    if (n.tag == Tag::BVar) throw std::logic_error("cannot serialize a term that is not locally closed");
    const Shape& sh = shape_of(n.tag);
    if (sh.has_level) out["level"] = n.level;
    if (!n.dims.empty()) {
      Json dims = Json::array();
      for (const auto& d : n.dims) dims.push_back(d.str());
      out["dims"] = dims;
    }
    if (!n.args.empty()) {
      Json args = Json::array();
      for (const auto& sc : n.args) {
        if (sc.binders.empty()) {
          args.push_back(term(sc.body));
          continue;
        }
        std::vector<Term> terms;
        std::vector<Dim> dims;
        Json names = Json::array();
        for (const auto& b : sc.binders) {
          if (b.sort == Sort::Term) {
            std::string v = fresh.var(b.hint.empty() ? "a" : b.hint);
            terms.push_back(mk::var(v));
            names.push_back(v);
          } else {
            std::string x = fresh.dim(b.hint.empty() || b.hint == "_" ? "x" : b.hint);
            dims.push_back(Dim::name(x));
            names.push_back(x);
          }
        }
        args.push_back({{"bind", names}, {"body", term(sc.open(terms, dims))}});
      }
      out["args"] = args;
    }
    if (sh.tubes != TubeKind::None) {
      Json tubes = Json::array();
      for (const auto& t : n.tubes) {
        Json tj = {{"eq", t.eq.str()}};
        if (t.binds) {
          std::string y = fresh.dim(t.hint.empty() || t.hint == "_" ? "y" : t.hint);
          tj["bind"] = y;
          tj["body"] = term(t.at(Dim::name(y)));
        } else {
          tj["body"] = term(t.body);
        }
        tubes.push_back(tj);
      }
      out["tubes"] = tubes;
    }
    return out;
  }
};

Term ast_from_json(const Json& j, const std::string& where) {
  if (j.is_string()) {
    try {
      return parse(j.get<std::string>());
    } catch (const ParseError& e) {
      throw FormatError(where, e.what());
    }
  }
  std::string tag_s = string_of(field(j, "tag", where), at(where, "tag"));
  auto tag = tag_from_name(tag_s);
  if (!tag || *tag == Tag::BVar) throw FormatError(at(where, "tag"), "unknown constructor " + tag_s);
  if (*tag == Tag::Var) return mk::var(string_of(field(j, "name", where), at(where, "name")));
  const Shape& sh = shape_of(*tag);
  Node n;
  n.tag = *tag;
  if (sh.has_level) n.level = unsigned_of(field(j, "level", where), at(where, "level"));
  if (sh.dims > 0) {
    const Json& dims = array_of(field(j, "dims", where), at(where, "dims"));
    if (static_cast<int>(dims.size()) != sh.dims) throw FormatError(at(where, "dims"), "wrong number of dimensions");
    for (std::size_t i = 0; i < dims.size(); ++i) n.dims.push_back(dim_of(dims[i], at(at(where, "dims"), i)));
  }
  if (!sh.args.empty()) {
    const Json& args = array_of(field(j, "args", where), at(where, "args"));
    if (args.size() != sh.args.size()) throw FormatError(at(where, "args"), "wrong number of arguments");
    for (std::size_t i = 0; i < args.size(); ++i) {
      std::string w = at(at(where, "args"), i);
      const auto& sorts = sh.args[i];
      if (sorts.empty()) {
        n.args.push_back(Scope{{}, ast_from_json(args[i], w)});
        continue;
      }
      const Json& names = array_of(field(args[i], "bind", w), at(w, "bind"));
      if (names.size() != sorts.size()) throw FormatError(at(w, "bind"), "wrong number of binders");
      Scope sc;
      std::vector<std::string> tn, dn;
      for (std::size_t k = 0; k < sorts.size(); ++k) {
        std::string nm = string_of(names[k], at(at(w, "bind"), k));
        sc.binders.push_back(Binder{sorts[k], nm});
        (sorts[k] == Sort::Term ? tn : dn).push_back(nm);
      }
      sc.body = close(ast_from_json(field(args[i], "body", w), at(w, "body")), tn, dn);
      n.args.push_back(std::move(sc));
    }
  }
  if (sh.tubes != TubeKind::None) {
    auto it = j.find("tubes");
    if (it != j.end()) {
      const Json& tubes = array_of(*it, at(where, "tubes"));
      for (std::size_t i = 0; i < tubes.size(); ++i) {
        std::string w = at(at(where, "tubes"), i);
        Equation eq = equation_of(field(tubes[i], "eq", w), at(w, "eq"));
        Term body = ast_from_json(field(tubes[i], "body", w), at(w, "body"));
        if (sh.tubes == TubeKind::Bound) {
          n.tubes.push_back(mk::tube(eq.lhs, eq.rhs, string_of(field(tubes[i], "bind", w), at(w, "bind")), body));
        } else {
          n.tubes.push_back(mk::cap_face(eq.lhs, eq.rhs, body));
        }
      }
    }
  }
  return Term::make(std::move(n));
}

const char* form_name(FormKind k) {
  switch (k) {
    case FormKind::EqTypePre: return "eqtype-pre";
    case FormKind::EqTypeKan: return "eqtype-kan";
    case FormKind::EqTm: return "eqtm";
    case FormKind::WfShape: return "wfshape";
  }
  return "?";
}

Kind kind_from_json(const Json& j, const std::string& where) {
  std::string s = string_of(j, where);
  if (s == "pre") return Kind::Pre;
  if (s == "kan") return Kind::Kan;
  throw FormatError(where, "expected \"pre\" or \"kan\"");
}

}  // namespace

Json term_to_json(const Term& m) {
  Namer namer;
  namer.fresh.avoid(m);
  return namer.term(m);
}

Term term_from_json(const Json& j, const std::string& where) { return ast_from_json(j, where); }

Json judgment_to_json(const Judgment& j) {
  Json form = {{"kind", form_name(j.form.kind)}};
  if (j.form.kind == FormKind::WfShape) {
    form["shape"] = eqs_to_json(j.form.shape);
  } else {
    form["lhs"] = term_to_json(j.form.lhs);
    form["rhs"] = term_to_json(j.form.rhs);
    if (j.form.kind == FormKind::EqTm) form["type"] = term_to_json(j.form.type);
  }
  return {{"psi", ctx_to_json(j.psi)}, {"xi", eqs_to_json(j.xi)}, {"gamma", hyps_to_json(j.gamma)}, {"form", form}};
}

Judgment judgment_from_json(const Json& j, const std::string& where) {
  Judgment out;
  if (!j.is_object()) throw FormatError(where, "expected an object");
  if (j.contains("psi")) out.psi = ctx_from_json(j["psi"], at(where, "psi"));
  if (j.contains("xi")) out.xi = eqs_from_json(j["xi"], at(where, "xi"));
  if (j.contains("gamma")) out.gamma = hyps_from_json(j["gamma"], at(where, "gamma"));
  std::string fw = at(where, "form");
  const Json& form = field(j, "form", where);
  std::string kind = string_of(field(form, "kind", fw), at(fw, "kind"));
  if (kind == "wfshape") {
    out.form.kind = FormKind::WfShape;
    out.form.shape = eqs_from_json(field(form, "shape", fw), at(fw, "shape"));
    return out;
  }
  if (kind == "eqtype-pre") {
    out.form.kind = FormKind::EqTypePre;
  } else if (kind == "eqtype-kan") {
    out.form.kind = FormKind::EqTypeKan;
  } else if (kind == "eqtm") {
    out.form.kind = FormKind::EqTm;
    out.form.type = term_from_json(field(form, "type", fw), at(fw, "type"));
  } else {
    throw FormatError(at(fw, "kind"), "unknown judgment form " + kind);
  }
  out.form.lhs = term_from_json(field(form, "lhs", fw), at(fw, "lhs"));
  out.form.rhs = term_from_json(field(form, "rhs", fw), at(fw, "rhs"));
  return out;
}

Json instantiation_to_json(const Instantiation& inst) {
  Json out = Json::object();
  for (const auto& [key, value] : inst) {
    out[key] = std::visit(
        [](const auto& v) -> Json {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, Term>) return term_to_json(v);
          if constexpr (std::is_same_v<T, Dim>) return v.str();
          if constexpr (std::is_same_v<T, std::string>) return v;
          if constexpr (std::is_same_v<T, unsigned>) return v;
          if constexpr (std::is_same_v<T, Kind>) return kind_name(v);
          if constexpr (std::is_same_v<T, EquationList>) return eqs_to_json(v);
          if constexpr (std::is_same_v<T, std::vector<TubeInst>>) return tubes_to_json(v);
          if constexpr (std::is_same_v<T, Judgment>) return judgment_to_json(v);
          if constexpr (std::is_same_v<T, DimSubst>) return subst_to_json(v);
          if constexpr (std::is_same_v<T, DimCtx>) return ctx_to_json(v);
          if constexpr (std::is_same_v<T, std::vector<Hyp>>) return hyps_to_json(v);
        },
        value);
  }
  return out;
}

Instantiation instantiation_from_json(const RuleSchema& schema, const Json& j, const std::string& where) {
  if (!j.is_object()) throw FormatError(where, "expected an object");
  Instantiation out;
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string& key = it.key();
    const Json& v = it.value();
    std::string w = at(where, key);
    if (key == "Psi") {
      out[key] = ctx_from_json(v, w);
      continue;
    }
    if (key == "Xi") {
      out[key] = eqs_from_json(v, w);
      continue;
    }
    if (key == "Gamma") {
      out[key] = hyps_from_json(v, w);
      continue;
    }
    const MetaVar* mv = schema.find(key);
    if (!mv) throw FormatError(w, "rule " + schema.id + " has no metavariable " + key);
    switch (mv->sort) {
      case MetaSort::Term: out[key] = term_from_json(v, w); break;
      case MetaSort::Dim:
      case MetaSort::Const: out[key] = dim_of(v, w); break;
      case MetaSort::DimVar:
      case MetaSort::TermVar: out[key] = string_of(v, w); break;
      case MetaSort::Level:
      case MetaSort::Index: out[key] = unsigned_of(v, w); break;
      case MetaSort::KindSort: out[key] = kind_from_json(v, w); break;
      case MetaSort::Eqs: out[key] = eqs_from_json(v, w); break;
      case MetaSort::Tubes:
      case MetaSort::Caps: out[key] = tubes_from_json(v, w); break;
      case MetaSort::Judg: out[key] = judgment_from_json(v, w); break;
      case MetaSort::Subst: out[key] = subst_from_json(v, w); break;
      case MetaSort::Ctx: out[key] = ctx_from_json(v, w); break;
      case MetaSort::Hyps: out[key] = hyps_from_json(v, w); break;
    }
  }
  return out;
}

Json derivation_to_json(const Derivation& d) {
  Json out = {{"rule", d.rule}, {"conclusion", judgment_to_json(d.conclusion)}};
  if (d.rule != "assume") out["inst"] = instantiation_to_json(d.inst);
  Json children = Json::array();
  for (const auto& c : d.children) children.push_back(derivation_to_json(c));
  out["children"] = children;
  return out;
}

Derivation derivation_from_json(const Json& j, const std::string& where) {
  Derivation d;
  d.rule = string_of(field(j, "rule", where), at(where, "rule"));
  d.conclusion = judgment_from_json(field(j, "conclusion", where), at(where, "conclusion"));
  if (d.rule != "assume") {
    const RuleSchema* schema = find_rule(d.rule);
    if (schema && j.contains("inst")) d.inst = instantiation_from_json(*schema, j["inst"], at(where, "inst"));
  }
  if (j.contains("children")) {
    const Json& children = array_of(j["children"], at(where, "children"));
    for (std::size_t i = 0; i < children.size(); ++i) {
      d.children.push_back(derivation_from_json(children[i], at(at(where, "children"), i)));
    }
  }
  return d;
}

Json trace_to_json(const Trace& t) {
  Json steps = Json::array();
  for (const auto& s : t.steps) {
    steps.push_back({{"term", term_to_json(s.term)}, {"rule", s.rule}, {"stable", s.stable}});
  }
  Json final = {{"term", term_to_json(t.last)}};
  switch (t.final) {
    case Trace::Final::Value:
      final["kind"] = "value";
      final["rule"] = t.value_rule;
      final["stable"] = t.stable;
      break;
    case Trace::Final::Stuck:
      final["kind"] = "stuck";
      final["reason"] = t.reason;
      break;
    case Trace::Final::FuelExhausted:
      final["kind"] = "fuel-exhausted";
      break;
  }
  return {{"steps", steps}, {"final", final}, {"fuel_used", t.fuel_used}};
}

Json report_to_json(const CheckReport& r) {
  if (r.ok) return {{"ok", true}};
  return {{"ok", false}, {"path", r.path}, {"reason", r.reason}};
}

}  // namespace ccl
