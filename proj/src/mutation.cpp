#include "ccl/mutation.hpp"

#include <functional>

namespace ccl {

namespace {

const char* kStray = "q";

std::vector<std::pair<std::string, Dim>> dim_mutants(const Dim& d) {
  std::vector<std::pair<std::string, Dim>> out;
  if (d.is_const()) {
    out.push_back({"flip " + d.str(), d.flipped()});
    out.push_back({"rename " + d.str() + " to " + kStray, Dim::name(kStray)});
  } else if (d.is_name()) {
    out.push_back({"rename " + d.str() + " to " + kStray, Dim::name(kStray)});
    out.push_back({"replace " + d.str() + " by 0", Dim::zero()});
  }
  return out;
}

std::vector<std::pair<std::string, Equation>> equation_mutants(const Equation& e) {
  std::vector<std::pair<std::string, Equation>> out;
  for (auto& [desc, d] : dim_mutants(e.lhs)) out.push_back({desc + " in " + e.str(), Equation{d, e.rhs}});
  for (auto& [desc, d] : dim_mutants(e.rhs)) out.push_back({desc + " in " + e.str(), Equation{e.lhs, d}});
  return out;
}

std::vector<std::pair<std::string, EquationList>> eqs_mutants(const EquationList& eqs) {
  std::vector<std::pair<std::string, EquationList>> out;
  for (std::size_t i = 0; i < eqs.size(); ++i) {
    for (auto& [desc, e] : equation_mutants(eqs[i])) {
      EquationList copy = eqs;
      copy[i] = e;
      out.push_back({desc, std::move(copy)});
    }
  }
  if (!eqs.empty()) {
    EquationList copy = eqs;
    copy.pop_back();
    out.push_back({"drop equation " + eqs.back().str(), std::move(copy)});
  }
  return out;
}

std::vector<std::pair<std::string, Term>> local_mutants(const Term& m) {
  using namespace mk;
  std::vector<std::pair<std::string, Term>> out;
  switch (m.tag()) {
    case Tag::True: out.push_back({"true to false", ff()}); break;
    case Tag::False: out.push_back({"false to true", tt()}); break;
    case Tag::Zero: out.push_back({"zero to suc zero", suc(zero())}); break;
    case Tag::Suc: out.push_back({"drop suc", m.body(0)}); break;
    case Tag::Bool: out.push_back({"bool to nat", nat()}); break;
    case Tag::Nat: out.push_back({"nat to bool", bool_()}); break;
    case Tag::WBool: out.push_back({"wbool to bool", bool_()}); break;
    case Tag::Circle: out.push_back({"S1 to nat", nat()}); break;
    case Tag::Var: out.push_back({"rename " + m.name() + " to " + kStray, var(kStray)}); break;
    case Tag::UPre:
    case Tag::UKan: {
      bool kan = m.tag() == Tag::UKan;
      out.push_back({"raise level", universe(kan, m.level() + 1)});
      if (m.level() > 0) out.push_back({"lower level", universe(kan, m.level() - 1)});
      out.push_back({"swap universe kind", universe(!kan, m.level())});
      break;
    }
    default: break;
  }
  const Node& n = m.node();
  for (std::size_t i = 0; i < n.dims.size(); ++i) {
    for (auto& [desc, d] : dim_mutants(n.dims[i])) {
      Node copy = n;
      copy.dims[i] = d;
      out.push_back({desc, Term::make(std::move(copy))});
    }
  }
  for (std::size_t i = 0; i < n.tubes.size(); ++i) {
    for (auto& [desc, e] : equation_mutants(n.tubes[i].eq)) {
      Node copy = n;
      copy.tubes[i].eq = e;
      out.push_back({desc, Term::make(std::move(copy))});
    }
  }
  return out;
}

template <class T>
using Variants = std::vector<std::pair<std::string, T>>;

Variants<Judgment> judgment_mutants(const Judgment& j) {
  Variants<Judgment> out;
  auto add = [&](std::string desc, auto edit) {
    Judgment copy = j;
    edit(copy);
    out.push_back({std::move(desc), std::move(copy)});
  };
  add("add q to Ψ", [](Judgment& c) { c.psi.insert(kStray); });
  if (!j.psi.empty()) {
    std::string first = *j.psi.begin();
    add("remove " + first + " from Ψ", [&](Judgment& c) { c.psi.erase(first); });
  }
  for (auto& [desc, xi] : eqs_mutants(j.xi)) add(desc + " in Ξ", [&](Judgment& c) { c.xi = xi; });
  if (!j.gamma.empty()) add("drop last hypothesis", [](Judgment& c) { c.gamma.pop_back(); });
  for (std::size_t i = 0; i < j.gamma.size(); ++i) {
    for (auto& [desc, t] : term_mutants(j.gamma[i].type)) {
      add(desc + " in the type of " + j.gamma[i].var, [&](Judgment& c) { c.gamma[i].type = t; });
    }
  }
  switch (j.form.kind) {
    case FormKind::EqTypePre: add("pre to kan", [](Judgment& c) { c.form.kind = FormKind::EqTypeKan; }); break;
    case FormKind::EqTypeKan: add("kan to pre", [](Judgment& c) { c.form.kind = FormKind::EqTypePre; }); break;
    default: break;
  }
  if (j.form.kind == FormKind::WfShape) {
    for (auto& [desc, s] : eqs_mutants(j.form.shape)) add(desc + " in the shape", [&](Judgment& c) { c.form.shape = s; });
    return out;
  }
  for (auto& [desc, t] : term_mutants(j.form.lhs)) add(desc + " on the left", [&](Judgment& c) { c.form.lhs = t; });
  for (auto& [desc, t] : term_mutants(j.form.rhs)) add(desc + " on the right", [&](Judgment& c) { c.form.rhs = t; });
  if (j.form.kind == FormKind::EqTm) {
    for (auto& [desc, t] : term_mutants(j.form.type)) add(desc + " in the type", [&](Judgment& c) { c.form.type = t; });
  }
  return out;
}

Variants<MetaValue> value_mutants(const MetaValue& v) {
  Variants<MetaValue> out;
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Term>) {
          for (auto& [d, t] : term_mutants(x)) out.push_back({d, t});
        } else if constexpr (std::is_same_v<T, Dim>) {
          for (auto& [d, t] : dim_mutants(x)) out.push_back({d, t});
        } else if constexpr (std::is_same_v<T, std::string>) {
          out.push_back({"rename " + x + " to " + kStray, std::string(kStray)});
        } else if constexpr (std::is_same_v<T, unsigned>) {
          out.push_back({"increment", x + 1});
          if (x > 0) out.push_back({"decrement", x - 1});
        } else if constexpr (std::is_same_v<T, Kind>) {
          out.push_back({"swap kind", x == Kind::Kan ? Kind::Pre : Kind::Kan});
        } else if constexpr (std::is_same_v<T, EquationList>) {
          for (auto& [d, e] : eqs_mutants(x)) out.push_back({d, e});
        } else if constexpr (std::is_same_v<T, std::vector<TubeInst>>) {
          for (std::size_t i = 0; i < x.size(); ++i) {
            for (auto& [d, e] : equation_mutants(x[i].eq)) {
              auto copy = x;
              copy[i].eq = e;
              out.push_back({d, copy});
            }
            for (auto& [d, t] : term_mutants(x[i].body)) {
              auto copy = x;
              copy[i].body = t;
              out.push_back({d + " in tube " + std::to_string(i), copy});
            }
          }
          if (!x.empty()) {
            auto copy = x;
            copy.pop_back();
            out.push_back({"drop last tube", copy});
          }
        } else if constexpr (std::is_same_v<T, Judgment>) {
          for (auto& [d, j] : judgment_mutants(x)) out.push_back({d, j});
        } else if constexpr (std::is_same_v<T, DimSubst>) {
          for (const auto& [name, image] : x.map()) {
            for (auto& [d, img] : dim_mutants(image)) {
              auto map = x.map();
              map[name] = img;
              try {
                out.push_back({d + " in the image of " + name, DimSubst(x.source(), x.target(), map)});
              } catch (const ScopeError&) {
              }
            }
          }
        } else if constexpr (std::is_same_v<T, DimCtx>) {
          DimCtx more = x;
          more.insert(kStray);
          out.push_back({"add q", more});
          if (!x.empty()) {
            DimCtx less = x;
            less.erase(*x.begin());
            out.push_back({"remove " + *x.begin(), less});
          }
        } else if constexpr (std::is_same_v<T, std::vector<Hyp>>) {
          if (!x.empty()) {
            auto copy = x;
            copy.pop_back();
            out.push_back({"drop last hypothesis", copy});
          }
          for (std::size_t i = 0; i < x.size(); ++i) {
            for (auto& [d, t] : term_mutants(x[i].type)) {
              auto copy = x;
              copy[i].type = t;
              out.push_back({d + " in the type of " + x[i].var, copy});
            }
          }
        }
      },
      v);
  return out;
}

std::vector<std::string> sibling_rules(const std::string& id) {
  const auto& cat = rule_catalog();
  std::string group = id.substr(0, id.find('/'));
  std::vector<std::string> same;
  for (const auto& r : cat) {
    if (r.id.substr(0, r.id.find('/')) == group) same.push_back(r.id);
  }
  std::vector<std::string> out;
  for (std::size_t i = 0; i < same.size(); ++i) {
    if (same[i] != id) continue;
    if (i > 0) out.push_back(same[i - 1]);
    if (i + 1 < same.size()) out.push_back(same[i + 1]);
  }
  if (id != "assume") out.push_back("assume");
  return out;
}

void collect(const Derivation& root, const Derivation& node, std::vector<std::size_t>& path,
             const std::function<Derivation&(Derivation&)>& locate, std::vector<Mutant>& out) {
  auto emit = [&](std::string desc, auto edit) {
    Derivation copy = root;
    edit(locate(copy));
    out.push_back({path, std::move(desc), std::move(copy)});
  };
  for (const auto& other : sibling_rules(node.rule)) {
    emit("rule " + node.rule + " to " + other, [&](Derivation& d) { d.rule = other; });
  }
  for (auto& [desc, j] : judgment_mutants(node.conclusion)) {
    emit("conclusion: " + desc, [&](Derivation& d) { d.conclusion = j; });
  }
  for (const auto& [key, value] : node.inst) {
    for (auto& [desc, v] : value_mutants(value)) {
      emit(key + ": " + desc, [&](Derivation& d) { d.inst[key] = v; });
    }
    emit("drop " + key, [&](Derivation& d) { d.inst.erase(key); });
  }
  if (!node.children.empty()) {
    emit("drop last premise", [](Derivation& d) { d.children.pop_back(); });
  }
  for (std::size_t i = 0; i < node.children.size(); ++i) {
    path.push_back(i);
    auto child_locate = [&locate, i](Derivation& d) -> Derivation& { return locate(d).children[i]; };
    collect(root, node.children[i], path, child_locate, out);
    path.pop_back();
  }
}

}  // namespace

std::vector<std::pair<std::string, Term>> term_mutants(const Term& m) {
  std::vector<std::pair<std::string, Term>> out = local_mutants(m);
  const Node& n = m.node();
  for (std::size_t i = 0; i < n.args.size(); ++i) {
    for (auto& [desc, t] : term_mutants(n.args[i].body)) {
      Node copy = n;
      copy.args[i].body = t;
      out.push_back({desc, Term::make(std::move(copy))});
    }
  }
  for (std::size_t i = 0; i < n.tubes.size(); ++i) {
    for (auto& [desc, t] : term_mutants(n.tubes[i].body)) {
      Node copy = n;
      copy.tubes[i].body = t;
      out.push_back({desc, Term::make(std::move(copy))});
    }
  }
  return out;
}

std::vector<Mutant> mutants(const Derivation& d) {
  std::vector<Mutant> out;
  std::vector<std::size_t> path;
  collect(d, d, path, [](Derivation& x) -> Derivation& { return x; }, out);
  return out;
}

bool equivalent_derivations(const Derivation& a, const Derivation& b) {
  if (a.rule != b.rule || a.children.size() != b.children.size()) return false;
  try {
    if (!equivalent_judgments(a.conclusion, b.conclusion)) return false;
  } catch (const std::exception&) {
    return false;
  }
  for (std::size_t i = 0; i < a.children.size(); ++i) {
    if (!equivalent_derivations(a.children[i], b.children[i])) return false;
  }
  return true;
}

FuzzResult fuzz_derivations(const std::vector<std::pair<std::string, Derivation>>& corpus) {
  FuzzResult result;
  for (const auto& [name, d] : corpus) {
    for (const auto& m : mutants(d)) {
      ++result.mutants;
      CheckReport r;
      try {
        r = check_derivation(m.derivation);
      } catch (const std::exception&) {
        r.ok = false;
      }
      if (!r.ok) {
        ++result.rejected;
      } else if (equivalent_derivations(d, m.derivation)) {
        ++result.equivalent;
      } else {
        result.false_accepts.push_back({name, m.description, m.path});
      }
    }
  }
  return result;
}

}  // namespace ccl
