#ifndef CCL_PROPTEST_HPP
#define CCL_PROPTEST_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ccl/gen.hpp"
#include "ccl/opsem.hpp"

namespace ccl {

/// Names of the property suites accepted by run_suite.
const std::vector<std::string>& suite_names();

struct SuiteOptions {
  std::size_t n = 10000;
  std::uint64_t seed = 0;
  GenConfig gen;
  unsigned threads = 0;       // 0: one per hardware thread
  std::size_t walk = 12;      // reduction steps followed from each generated term
  std::size_t max_size = 4000;  // stop following a reduction once terms grow past this
  /// Programs for coherence-bool: closed boolean programs with their Psi.
  std::vector<Sample> bool_programs;
};

struct Counterexample {
  std::size_t index = 0;  // case index within the run
  Sample original;
  Sample shrunk;
  std::string detail;
};

struct SuiteResult {
  std::string suite;
  std::size_t cases = 0;
  std::size_t checks = 0;  // individual property instances checked
  std::optional<Counterexample> failure;
  std::map<std::string, std::size_t> rule_hits;  // step and value rules exercised
  double seconds = 0;

  bool ok() const { return !failure.has_value(); }
};

/// Runs `options.n` cases of the named suite. Throws std::invalid_argument for
/// an unknown suite, or for coherence-bool without programs.
SuiteResult run_suite(const std::string& suite, const SuiteOptions& options);

// ---------------------------------------------------------------------------
// Oracles, written independently of the evaluator

/// A rule chain whose left-hand side and side conditions match a term: the
/// congruence rules from the root down, then the redex or value rule.
struct RuleMatch {
  std::vector<std::string> chain;
  bool value = false;
};

/// Every rule chain that applies to `m`.
std::vector<RuleMatch> matching_rules(const Term& m);

/// The free dimension names of `m`, by direct traversal.
std::set<std::string> free_dim_names(const Term& m);

/// Structural, children-first, deterministic shrinking: repeatedly replaces the
/// term by a smaller one that still satisfies `fails`.
Term shrink(const Term& m, const std::function<bool(const Term&)>& fails, std::size_t budget = 4000);

}  // namespace ccl

#endif  // CCL_PROPTEST_HPP
