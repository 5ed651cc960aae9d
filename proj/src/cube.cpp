#include "ccl/cube.hpp"

#include <cctype>
#include <sstream>

namespace ccl {

std::string Dim::str() const {
  switch (kind_) {
    case Kind::Zero:
      return "0";
    case Kind::One:
      return "1";
    case Kind::Name:
      return name_;
    case Kind::Bound:
      return "#" + std::to_string(index_);
  }
  return "?";
}

DimCtx::DimCtx(std::initializer_list<std::string> names) {
  for (const auto& n : names) insert(n);
}

DimCtx::DimCtx(const std::vector<std::string>& names) {
  for (const auto& n : names) insert(n);
}

void DimCtx::insert(const std::string& n) {
  if (!names_.insert(n).second) throw ScopeError("duplicate dimension name '" + n + "'");
}

std::string DimCtx::str() const {
  std::string out;
  for (const auto& n : names_) {
    if (!out.empty()) out += ", ";
    out += n;
  }
  return out;
}

DimSubst::DimSubst(DimCtx source, DimCtx target, std::map<std::string, Dim> map)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {
  for (const auto& n : source_) {
    auto it = map_.find(n);
    if (it == map_.end()) throw ScopeError("substitution does not map '" + n + "'");
    if (it->second.is_bound()) throw ScopeError("substitution image is a bound index");
    if (!target_.contains(it->second))
      throw ScopeError("image '" + it->second.str() + "' of '" + n + "' is not in the target context");
  }
  for (const auto& [n, _] : map_) {
    if (!source_.contains(n)) throw ScopeError("substitution maps '" + n + "' outside its source");
  }
}

DimSubst DimSubst::identity(const DimCtx& ctx) {
  std::map<std::string, Dim> m;
  for (const auto& n : ctx) m.emplace(n, Dim::name(n));
  return DimSubst(ctx, ctx, std::move(m));
}

std::string DimSubst::str() const {
  std::string out = "{";
  bool first = true;
  for (const auto& [n, d] : map_) {
    if (!first) out += ", ";
    first = false;
    out += n + "->" + d.str();
  }
  return out + "}";
}

Dim apply_dim(const DimSubst& psi, const Dim& r) {
  switch (r.kind()) {
    case Dim::Kind::Zero:
    case Dim::Kind::One:
      return r;
    case Dim::Kind::Name: {
      auto it = psi.map().find(r.name());
      if (it == psi.map().end()) throw ScopeError("dimension '" + r.name() + "' is not in the substitution source");
      return it->second;
    }
    case Dim::Kind::Bound:
      break;
  }
  throw ScopeError("cannot substitute into a bound dimension index");
}

DimSubst compose_subst(const DimSubst& psi1, const DimSubst& psi2) {
  if (!(psi2.source() == psi1.target()))
    throw ScopeError("composition mismatch: {" + psi1.target().str() + "} vs {" + psi2.source().str() + "}");
  std::map<std::string, Dim> m;
  for (const auto& [n, d] : psi1.map()) m.emplace(n, apply_dim(psi2, d));
  return DimSubst(psi1.source(), psi2.target(), std::move(m));
}

bool satisfies(const DimSubst& psi, const EquationList& xi) {
  for (const auto& eq : xi) {
    if (apply_dim(psi, eq.lhs) != apply_dim(psi, eq.rhs)) return false;
  }
  return true;
}

bool valid(const EquationList& eqs) {
  for (const auto& eq : eqs) {
    if (eq.reflexive()) return true;
  }
  for (const auto& ei : eqs) {
    if (ei.rhs != Dim::zero()) continue;
    for (const auto& ej : eqs) {
      if (ej.rhs == Dim::one() && ei.lhs == ej.lhs) return true;
    }
  }
  return false;
}

std::string to_string(const EquationList& eqs) {
  std::string out;
  for (const auto& eq : eqs) {
    if (!out.empty()) out += ", ";
    out += eq.str();
  }
  return out;
}

namespace {

// Splits "x12" into ("x", 12); names without a numeric tail get suffix 0.
std::pair<std::string, long> split_suffix(const std::string& n) {
  std::size_t cut = n.size();
  while (cut > 0 && std::isdigit(static_cast<unsigned char>(n[cut - 1]))) --cut;
  if (cut == 0 || cut == n.size() || cut + 9 < n.size()) return {n, 0};
  return {n.substr(0, cut), std::stol(n.substr(cut))};
}

}  // namespace

std::string fresh_name(const std::string& hint, const std::set<std::string>& avoid) {
  std::string base = hint.empty() ? std::string("x") : hint;
  if (!avoid.contains(base)) return base;
  auto [stem, _] = split_suffix(base);
  long top = 0;
  for (const auto& n : avoid) {
    auto [s, k] = split_suffix(n);
    if (s == stem && k > top) top = k;
  }
  std::string candidate = stem + std::to_string(top + 1);
  while (avoid.contains(candidate)) candidate = stem + std::to_string(++top + 1);
  return candidate;
}

}  // namespace ccl
