#ifndef CCL_SYNTAX_HPP
#define CCL_SYNTAX_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ccl/cube.hpp"

namespace ccl {

// Terms are locally nameless. Free term variables and free dimension names are
// named; variables bound inside a term are de Bruijn indices (`BVar` for terms,
// `Dim::bound` for dimensions), with separate index spaces for the two sorts.
// Binder names survive only as printing hints, so structural equality is
// alpha-equality.

enum class Tag : std::uint8_t {
  Var, BVar,
  Pi, Sigma, Path, Eq, Void, Nat, Bool, WBool, Circle, UPre, UKan,
  V, Vin, Vproj,
  Lam, App, Pair, Fst, Snd, DLam, DApp, Star,
  Zero, Suc, NatRec, True, False, If, Base, Loop, CircElim,
  Coe, Hcom, Com, Fcom, Ghcom, Gcom, Box, Cap,
};

inline constexpr int kTagCount = static_cast<int>(Tag::Cap) + 1;

enum class Sort : std::uint8_t { Term, Dim };

enum class TubeKind : std::uint8_t { None, Bound, Caps };

/// Fixed arity of each constructor.
struct Shape {
  const char* keyword;
  int dims;
  std::vector<std::vector<Sort>> args;  // binder sorts per argument
  TubeKind tubes;
  bool has_level;
};

const Shape& shape_of(Tag tag);
const char* tag_name(Tag tag);
std::optional<Tag> tag_from_name(std::string_view name);

struct Node;

class Term {
 public:
  Term() = default;

  Tag tag() const;
  const Node& node() const { return *node_; }
  bool valid() const { return static_cast<bool>(node_); }
  bool same(const Term& o) const { return node_ == o.node_; }

  // Convenience accessors; see Node for the fields.
  const Dim& dim(std::size_t i) const;
  const Term& body(std::size_t i) const;  // argument body, binders not opened
  const std::string& name() const;
  unsigned level() const;

  static Term make(Node node);

  /// Alpha-equality: binder hints are ignored.
  friend bool operator==(const Term& a, const Term& b);

 private:
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct Binder {
  Sort sort = Sort::Term;
  std::string hint;
};

/// An argument position together with the variables it binds.
struct Scope {
  std::vector<Binder> binders;
  Term body;

  std::size_t count(Sort s) const;
  /// Substitutes the given values for the bound variables, in binder order.
  Term open(const std::vector<Term>& terms, const std::vector<Dim>& dims) const;
  Term open_dim(const Dim& d) const { return open({}, {d}); }
  Term open_term(const Term& t) const { return open({t}, {}); }
};

/// One face `lhs=rhs ↪ y.body` of a composition system. Box caps do not bind.
struct Tube {
  Equation eq;
  bool binds = true;
  std::string hint;
  Term body;

  /// body⟨d/y⟩ for binding tubes; the body itself for caps.
  Term at(const Dim& d) const;
};

using System = std::vector<Tube>;

struct Node {
  Tag tag = Tag::Star;
  std::string name;         // Var
  std::uint32_t index = 0;  // BVar
  unsigned level = 0;       // universes
  std::vector<Dim> dims;
  std::vector<Scope> args;
  System tubes;
};

// ---------------------------------------------------------------------------
// Variables and substitution

std::set<std::string> fd(const Term& m);
std::set<std::string> free_vars(const Term& m);
bool locally_closed(const Term& m);

/// M⟨r/x⟩
Term dsubst(const Term& m, const Dim& r, const std::string& x);
/// M[N/a]
Term tsubst(const Term& m, const Term& n, const std::string& a);
/// Simultaneous dimension substitution; requires fd(m) ⊆ psi.source().
Term apply_subst(const Term& m, const DimSubst& psi);
/// Applies psi only to the names it maps, leaving other names alone.
Term rename_dims(const Term& m, const std::map<std::string, Dim>& map);

inline bool alpha_eq(const Term& a, const Term& b) { return a == b; }

/// Abstracts the named variables; the inverse of Scope::open.
Term close(const Term& body, const std::vector<std::string>& term_names,
           const std::vector<std::string>& dim_names);

/// Supplies names that do not occur free in any term registered with it.
class Fresh {
 public:
  Fresh() = default;
  explicit Fresh(const Term& t) { avoid(t); }
  void avoid(const Term& t);
  void avoid_dim(const std::string& n) { dims_.insert(n); }
  void avoid_var(const std::string& n) { vars_.insert(n); }
  std::string dim(const std::string& hint);
  std::string var(const std::string& hint);
  const std::set<std::string>& dims() const { return dims_; }

 private:
  std::set<std::string> dims_;
  std::set<std::string> vars_;
};

std::size_t term_size(const Term& m);

// ---------------------------------------------------------------------------
// Constructors. Binder-taking builders abstract the given name in the body.

namespace mk {

Term var(const std::string& a);
Term pi(const std::string& a, const Term& dom, const Term& cod);
Term sigma(const std::string& a, const Term& fst, const Term& snd);
Term arr(const Term& dom, const Term& cod);
Term prod(const Term& fst, const Term& snd);
Term path(const std::string& x, const Term& ty, const Term& p0, const Term& p1);
Term eq(const Term& ty, const Term& m, const Term& n);
Term void_();
Term nat();
Term bool_();
Term wbool();
Term circle();
Term upre(unsigned level);
Term ukan(unsigned level);
Term universe(bool kan, unsigned level);
Term V(const Dim& r, const Term& a, const Term& b, const Term& e);
Term vin(const Dim& r, const Term& m, const Term& n);
Term vproj(const Dim& r, const Term& m, const Term& f);
Term lam(const std::string& a, const Term& body);
Term app(const Term& m, const Term& n);
Term app(const Term& m, const Term& n1, const Term& n2);
Term pair(const Term& m, const Term& n);
Term fst(const Term& m);
Term snd(const Term& m);
Term dlam(const std::string& x, const Term& body);
Term dapp(const Term& m, const Dim& r);
Term star();
Term zero();
Term suc(const Term& m);
Term numeral(unsigned k);
Term natrec(const Term& m, const Term& z, const std::string& n, const std::string& a, const Term& s);
Term tt();
Term ff();
Term if_(const std::string& b, const Term& motive, const Term& m, const Term& t, const Term& f);
Term base();
Term loop(const Dim& r);
Term s1elim(const std::string& c, const Term& motive, const Term& m, const Term& p,
            const std::string& x, const Term& l);

Tube tube(const Dim& lhs, const Dim& rhs, const std::string& y, const Term& body);
/// A binding tube whose body ignores its dimension.
Tube tube_const(const Dim& lhs, const Dim& rhs, const Term& body);
Tube cap_face(const Dim& lhs, const Dim& rhs, const Term& body);

Term coe(const std::string& x, const Term& ty, const Dim& r, const Dim& r2, const Term& m);
Term coe(const Scope& ty, const Dim& r, const Dim& r2, const Term& m);
Term hcom(const Term& ty, const Dim& r, const Dim& r2, const Term& m, System tubes);
Term com(const std::string& y, const Term& ty, const Dim& r, const Dim& r2, const Term& m, System tubes);
Term com(const Scope& ty, const Dim& r, const Dim& r2, const Term& m, System tubes);
Term fcom(const Dim& r, const Dim& r2, const Term& m, System tubes);
Term ghcom(const Term& ty, const Dim& r, const Dim& r2, const Term& m, System tubes);
Term gcom(const std::string& y, const Term& ty, const Dim& r, const Dim& r2, const Term& m, System tubes);
Term gcom(const Scope& ty, const Dim& r, const Dim& r2, const Term& m, System tubes);
Term box(const Dim& r, const Dim& r2, const Term& m, System caps);
Term cap(const Dim& r, const Dim& r2, const Term& m, System tubes);

/// isContr C := C × Π c:C. Π c':C. Path(_.C) c c'
Term is_contr(const Term& c);
/// Equiv A B := Σ f:A→B. Π b:B. isContr(Σ a:A. Path(_.B) (f a) b)
Term equiv(const Term& a, const Term& b);

}  // namespace mk

// ---------------------------------------------------------------------------
// Concrete syntax

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, std::size_t line, std::size_t column, const std::string& msg);
  std::size_t offset() const { return offset_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t offset_, line_, column_;
};

/// Identifiers in term positions that are not bound become free variables;
/// identifiers in dimension positions that are not bound become free names.
/// `--` starts a comment that runs to the end of the line.
Term parse(std::string_view text);
Dim parse_dim(std::string_view text);
EquationList parse_equations(std::string_view text);

std::string print(const Term& m);

}  // namespace ccl

#endif  // CCL_SYNTAX_HPP
