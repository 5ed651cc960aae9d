#ifndef CCL_CUBE_HPP
#define CCL_CUBE_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace ccl {

/// Raised when a name is used outside the context that is supposed to bind it.
class ScopeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A dimension expression: the constants 0 and 1, or a dimension name.
///
/// The fourth kind, `Bound`, is a locally-nameless index used only for
/// occurrences under a dimension binder inside a term body. A locally-closed
/// term never exposes one, and none of the operations in this header accept it.
class Dim {
 public:
  enum class Kind : std::uint8_t { Zero, One, Name, Bound };

  Dim() = default;
  static Dim zero() { return Dim(Kind::Zero, {}, 0); }
  static Dim one() { return Dim(Kind::One, {}, 0); }
  static Dim constant(bool one_side) { return one_side ? one() : zero(); }
  static Dim name(std::string n) { return Dim(Kind::Name, std::move(n), 0); }
  static Dim bound(std::uint32_t index) { return Dim(Kind::Bound, {}, index); }

  Kind kind() const { return kind_; }
  bool is_const() const { return kind_ == Kind::Zero || kind_ == Kind::One; }
  bool is_name() const { return kind_ == Kind::Name; }
  bool is_bound() const { return kind_ == Kind::Bound; }
  const std::string& name() const { return name_; }
  std::uint32_t index() const { return index_; }

  /// The opposite constant. Only meaningful for constants.
  Dim flipped() const { return kind_ == Kind::Zero ? one() : zero(); }

  std::string str() const;

  friend bool operator==(const Dim&, const Dim&) = default;
  friend auto operator<=>(const Dim&, const Dim&) = default;

 private:
  Dim(Kind k, std::string n, std::uint32_t i) : kind_(k), name_(std::move(n)), index_(i) {}

  Kind kind_ = Kind::Zero;
  std::string name_;
  std::uint32_t index_ = 0;
};

/// A finite set of dimension names (the context Psi).
class DimCtx {
 public:
  DimCtx() = default;
  DimCtx(std::initializer_list<std::string> names);
  explicit DimCtx(const std::vector<std::string>& names);

  bool contains(const std::string& n) const { return names_.contains(n); }
  bool contains(const Dim& d) const { return !d.is_name() || contains(d.name()); }
  void insert(const std::string& n);
  void erase(const std::string& n) { names_.erase(n); }
  std::size_t size() const { return names_.size(); }
  bool empty() const { return names_.empty(); }
  const std::set<std::string>& names() const { return names_; }
  auto begin() const { return names_.begin(); }
  auto end() const { return names_.end(); }

  std::string str() const;

  friend bool operator==(const DimCtx&, const DimCtx&) = default;

 private:
  std::set<std::string> names_;
};

/// A total dimension substitution from `source` to `target`.
class DimSubst {
 public:
  DimSubst() = default;
  /// Throws ScopeError unless every source name is mapped and every image
  /// name lies in target.
  DimSubst(DimCtx source, DimCtx target, std::map<std::string, Dim> map);

  static DimSubst identity(const DimCtx& ctx);

  const DimCtx& source() const { return source_; }
  const DimCtx& target() const { return target_; }
  const std::map<std::string, Dim>& map() const { return map_; }

  std::string str() const;

  friend bool operator==(const DimSubst&, const DimSubst&) = default;

 private:
  DimCtx source_;
  DimCtx target_;
  std::map<std::string, Dim> map_;
};

struct Equation {
  Dim lhs;
  Dim rhs;

  bool reflexive() const { return lhs == rhs; }
  std::string str() const { return lhs.str() + "=" + rhs.str(); }

  friend bool operator==(const Equation&, const Equation&) = default;
};

/// Ordered: operational rules pick the least index whose equation holds.
using EquationList = std::vector<Equation>;

Dim apply_dim(const DimSubst& psi, const Dim& r);
/// First psi1, then psi2. Requires psi2.source() == psi1.target().
DimSubst compose_subst(const DimSubst& psi1, const DimSubst& psi2);
bool satisfies(const DimSubst& psi, const EquationList& xi);
/// Some equation is reflexive, or two equations r_i=0 and r_j=1 share r_i = r_j.
bool valid(const EquationList& eqs);

std::string to_string(const EquationList& eqs);

/// Deterministic fresh name: `hint` if unused, otherwise the hint's stem with
/// a numeric suffix one past the largest suffix already used for that stem.
std::string fresh_name(const std::string& hint, const std::set<std::string>& avoid);

}  // namespace ccl

#endif  // CCL_CUBE_HPP
