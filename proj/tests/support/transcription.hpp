#ifndef CCL_TESTS_TRANSCRIPTION_HPP
#define CCL_TESTS_TRANSCRIPTION_HPP

#include <optional>
#include <string>
#include <vector>

namespace ccl::testing {

/// A schematic instance of one evaluation rule. Metavariables are free term
/// variables (inert: they never reach a principal position) and free dimension
/// names. Dependence on a bound variable is written `app F a` or `dapp F x`.
struct TranscriptionCase {
  std::string rule;
  std::string input;
  std::optional<std::string> expected;  // absent for value rules
  bool stable;
};

const std::vector<TranscriptionCase>& transcription_cases();

struct CaseVerdict {
  bool ok = false;
  std::string detail;
};

/// Steps the input once and compares with the expected right-hand side up to
/// alpha, along with the rule identifier and the stability flag.
CaseVerdict run_transcription(const TranscriptionCase& c);

}  // namespace ccl::testing

#endif  // CCL_TESTS_TRANSCRIPTION_HPP
