#ifndef CCL_OPSEM_HPP
#define CCL_OPSEM_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "ccl/syntax.hpp"

namespace ccl {

/// One entry of the transition-rule table. Identifiers have the form
/// `<paragraph>/<name>` and never change once published.
struct StepRule {
  const char* id;
  bool is_value_rule;  // a `val` rule rather than a transition
  bool stable;         // cubically stable
  const char* summary;
};

const std::vector<StepRule>& step_rules();
const StepRule* find_step_rule(const std::string& id);

struct ValueInfo {
  bool value = false;
  bool stable = false;
  const char* rule = nullptr;
};

/// The `val` judgment, with its stability flag.
ValueInfo is_val(const Term& m);

struct StepOutcome {
  enum class Kind { Value, Steps, Stuck };

  Kind kind = Kind::Stuck;
  Term next;                       // Steps only
  bool stable = false;             // Value and Steps
  std::vector<std::string> rules;  // congruences outermost first, then the redex rule
  std::string reason;              // Stuck only
  std::vector<int> path;           // Stuck only: argument positions down to the offending redex

  bool is_value() const { return kind == Kind::Value; }
  bool steps() const { return kind == Kind::Steps; }
  bool stuck() const { return kind == Kind::Stuck; }
  /// The redex rule (last entry of `rules`), or "" when stuck.
  std::string rule() const { return rules.empty() ? std::string() : rules.back(); }
  /// All rules joined with " > ".
  std::string rule_chain() const;
};

/// One step of weak head reduction.
StepOutcome step(const Term& m);

class EvalError : public std::runtime_error {
 public:
  enum class Kind { FuelExhausted, Stuck };
  EvalError(Kind kind, Term at, const std::string& msg, std::size_t fuel_used)
      : std::runtime_error(msg), kind_(kind), at_(std::move(at)), fuel_used_(fuel_used) {}
  Kind kind() const { return kind_; }
  const Term& at() const { return at_; }
  std::size_t fuel_used() const { return fuel_used_; }

 private:
  Kind kind_;
  Term at_;
  std::size_t fuel_used_;
};

struct EvalResult {
  Term value;
  bool stable = true;  // every step and the final value judgment were stable
  std::size_t steps = 0;
};

inline constexpr std::size_t kDefaultFuel = 1'000'000;

/// kDefaultFuel unless the CCL_FUEL environment variable holds a positive count.
std::size_t default_fuel();

/// Throws EvalError when fuel runs out or evaluation gets stuck.
EvalResult eval(const Term& m, std::size_t fuel = default_fuel());

/// Like eval, then keeps evaluating beneath `suc` so that natural numbers come
/// back as numerals. Steps and stability accumulate over the whole run.
EvalResult eval_canonical(const Term& m, std::size_t fuel = default_fuel());

struct TraceEntry {
  Term term;
  std::string rule;  // rule chain
  bool stable = false;
};

struct Trace {
  enum class Final { Value, Stuck, FuelExhausted };

  std::vector<TraceEntry> steps;
  Final final = Final::Value;
  Term last;               // the value, the stuck term, or the term where fuel ran out
  bool stable = false;     // stability of the final value judgment
  std::string value_rule;  // Value only
  std::string reason;      // Stuck only
  std::size_t fuel_used = 0;
};

Trace trace(const Term& m, std::size_t fuel = default_fuel());

}  // namespace ccl

#endif  // CCL_OPSEM_HPP
