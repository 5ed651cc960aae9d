#ifndef CCL_CHECKER_HPP
#define CCL_CHECKER_HPP

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "ccl/cube.hpp"
#include "ccl/syntax.hpp"

namespace ccl {

// ---------------------------------------------------------------------------
// Judgments

enum class Kind { Pre, Kan };

const char* kind_name(Kind k);

enum class FormKind { EqTypePre, EqTypeKan, EqTm, WfShape };

/// `lhs ≐ rhs type κ`, `lhs ≐ rhs ∈ type`, or `wfshape(shape)`. Single-sided
/// judgments are the diagonal of the equality forms.
struct Form {
  FormKind kind = FormKind::EqTm;
  Term lhs;
  Term rhs;
  Term type;             // EqTm only
  EquationList shape;    // WfShape only
};

struct Hyp {
  std::string var;
  Term type;
};

struct Judgment {
  DimCtx psi;
  EquationList xi;
  std::vector<Hyp> gamma;
  Form form;
};

Judgment eq_type(Kind k, const Term& a, const Term& b);
Judgment eq_tm(const Term& m, const Term& n, const Term& a);
Judgment wf_shape(EquationList shape);

/// Structural equality up to alpha; Ψ and Ξ compare as written.
bool same_judgment(const Judgment& a, const Judgment& b);
std::string to_string(const Judgment& j);

/// Empty when every free name lies in Ψ, Ξ mentions only Ψ, each hypothesis
/// type mentions only earlier variables, and the form mentions only Γ.
std::optional<std::string> scope_problem(const Judgment& j);

/// J⟨r/x⟩ on every component; x leaves Ψ.
Judgment dsubst(const Judgment& j, const Dim& r, const std::string& x);
/// Jψ; Ψ becomes psi.target().
Judgment apply_subst(const Judgment& j, const DimSubst& psi);

struct Vacuous {};
struct Plain {
  std::vector<Judgment> judgments;  // each with an empty restriction
};
using Expansion = std::variant<Vacuous, Plain>;

enum class ExpansionOrder { LeftToRight, RightToLeft };

/// Eliminates Ξ: reflexive equations are dropped, an equation between distinct
/// constants makes the judgment vacuous, and an equation between a name and
/// another dimension substitutes for the name (the larger of two names is
/// replaced by the smaller). Throws ScopeError for names outside Ψ.
Expansion expand_restriction(const Judgment& j, ExpansionOrder order = ExpansionOrder::LeftToRight);

/// Equal after restriction expansion; two vacuous judgments are equal.
bool equivalent_judgments(const Judgment& a, const Judgment& b);

// ---------------------------------------------------------------------------
// Rule schemas

enum class MetaSort {
  Term,      // a term, possibly open in binder metavariables of the same rule
  Dim,       // a dimension expression
  Const,     // 0 or 1
  DimVar,    // a dimension binder name
  TermVar,   // a term binder name
  Level,     // a universe level
  Index,     // a position in a tube list or context
  KindSort,  // pre or kan
  Eqs,       // an equation list
  Tubes,     // a list of `eq ↪ body`; bodies are open in the rule's `y`
  Caps,      // a list of `eq ↪ body` with no binder
  Judg,      // a whole judgment
  Subst,     // a total dimension substitution
  Ctx,       // a dimension context (ambient Ψ)
  Hyps,      // a hypothesis list (ambient Γ)
};

const char* sort_name(MetaSort s);

struct MetaVar {
  std::string name;
  MetaSort sort;
};

struct TubeInst {
  Equation eq;
  Term body;
};

using MetaValue = std::variant<Term, Dim, std::string, unsigned, Kind, EquationList, std::vector<TubeInst>,
                               Judgment, DimSubst, DimCtx, std::vector<Hyp>>;

/// Metavariable assignments. The ambient `Psi`, `Xi` and `Gamma` default to
/// empty when absent.
using Instantiation = std::map<std::string, MetaValue>;

struct SideCondition {
  std::string description;
  bool holds = false;
  std::string detail;
};

struct Instance {
  Judgment conclusion;
  std::vector<Judgment> premises;
  std::vector<SideCondition> side_conditions;
};

class InstantiationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RuleSchema {
  std::string id;
  std::string paragraph;
  std::vector<MetaVar> metavars;         // excluding the ambient Psi, Xi, Gamma
  std::vector<std::string> premises;     // templates, in order
  std::string conclusion;                // template
  std::vector<std::string> side_conditions;
  std::function<void(class RuleBuilder&)> build;

  const MetaVar* find(const std::string& name) const;
};

const std::vector<RuleSchema>& rule_catalog();
const RuleSchema* find_rule(const std::string& id);

/// Throws InstantiationError for unknown rules, missing or extra
/// metavariables, sort mismatches and malformed tube lists.
Instance instantiate_rule(const std::string& rule, const Instantiation& inst);

// ---------------------------------------------------------------------------
// Derivations

struct Derivation {
  std::string rule;
  Judgment conclusion;
  Instantiation inst;
  std::vector<Derivation> children;
};

struct CheckReport {
  bool ok = true;
  std::vector<std::size_t> path;  // child indices from the root to the failing node
  std::string reason;
};

struct CheckOptions {
  /// When set, nodes with rule id "assume" are accepted iff the oracle
  /// accepts their conclusion. Meant for testing rule instances in isolation.
  std::function<bool(const Judgment&)> assume;
};

CheckReport check_derivation(const Derivation& d, const CheckOptions& options = {});

/// The building context handed to each rule schema.
class RuleBuilder {
 public:
  RuleBuilder(const RuleSchema& schema, const Instantiation& inst);

  // Metavariable access, checked against the schema's declared sorts.
  Term term(const std::string& n) const;
  Dim dim(const std::string& n) const;
  Dim constant(const std::string& n) const;
  std::string dim_var(const std::string& n);
  std::string term_var(const std::string& n);
  unsigned level(const std::string& n) const;
  std::size_t index(const std::string& n) const;
  Kind kind(const std::string& n) const;
  EquationList eqs(const std::string& n) const;
  std::vector<TubeInst> tubes(const std::string& n) const;
  std::vector<TubeInst> caps(const std::string& n) const;
  Judgment judgment(const std::string& n) const;
  DimSubst subst(const std::string& n) const;

  // Judgments in the ambient context.
  Judgment type_eq(Kind k, const Term& a, const Term& b) const;
  Judgment type_wf(Kind k, const Term& a) const { return type_eq(k, a, a); }
  Judgment tm_eq(const Term& m, const Term& n, const Term& a) const;
  Judgment tm_of(const Term& m, const Term& a) const { return tm_eq(m, m, a); }
  Judgment shape(const EquationList& eqs) const;

  static Judgment under(Judgment j, std::initializer_list<Equation> eqs);
  static Judgment with_dim(Judgment j, const std::string& y);
  static Judgment with_hyp(Judgment j, const std::string& a, const Term& type);

  void premise(Judgment j) { out_.premises.push_back(std::move(j)); }
  void conclude(Judgment j) { out_.conclusion = std::move(j); }
  void side(std::string description, bool holds, std::string detail = {});
  /// Side condition: M steps to M' by a cubically stable step.
  void stable_step(const Term& m, const Term& m2);

  const DimCtx& psi() const { return psi_; }
  const EquationList& xi() const { return xi_; }
  const std::vector<Hyp>& gamma() const { return gamma_; }

  Instance finish();

 private:
  const MetaValue& get(const std::string& n, MetaSort sort) const;

  const RuleSchema& schema_;
  const Instantiation& inst_;
  DimCtx psi_;
  EquationList xi_;
  std::vector<Hyp> gamma_;
  Instance out_;
};

}  // namespace ccl

#endif  // CCL_CHECKER_HPP
