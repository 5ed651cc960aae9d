#ifndef CCL_SERIALIZE_HPP
#define CCL_SERIALIZE_HPP

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "ccl/checker.hpp"
#include "ccl/opsem.hpp"
#include "ccl/syntax.hpp"

namespace ccl {

using Json = nlohmann::json;

/// Malformed JSON input. `where` is a JSON pointer to the offending value.
class FormatError : public std::runtime_error {
 public:
  FormatError(std::string where, const std::string& msg)
      : std::runtime_error(where + ": " + msg), where_(std::move(where)) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

// Terms serialize as an AST object:
//   {"tag": "Hcom", "dims": ["0", "x"], "args": [<term>, {"bind": ["y"], "body": <term>}],
//    "tubes": [{"eq": "x=0", "bind": "y", "body": <term>}]}
// with "name" for variables and "level" for universes. Bound variables are
// named in the output. On input a JSON string is parsed as concrete syntax.
Json term_to_json(const Term& m);
Term term_from_json(const Json& j, const std::string& where = "");

Json judgment_to_json(const Judgment& j);
Judgment judgment_from_json(const Json& j, const std::string& where = "");

Json instantiation_to_json(const Instantiation& inst);
Instantiation instantiation_from_json(const RuleSchema& schema, const Json& j, const std::string& where = "");

/// {"rule", "conclusion", "inst", "children"}; rule "assume" takes no "inst".
Json derivation_to_json(const Derivation& d);
Derivation derivation_from_json(const Json& j, const std::string& where = "");

Json trace_to_json(const Trace& t);
Json report_to_json(const CheckReport& r);

}  // namespace ccl

#endif  // CCL_SERIALIZE_HPP
