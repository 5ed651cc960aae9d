#ifndef CCL_TESTS_DERIVATIONS_HPP
#define CCL_TESTS_DERIVATIONS_HPP

#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ccl/checker.hpp"

namespace ccl::testing {

// Metavariable values from concrete syntax.
MetaValue T(std::string_view term);
MetaValue D(std::string_view dim);
MetaValue Name(std::string name);
MetaValue Lvl(unsigned level);
MetaValue Idx(unsigned index);
MetaValue Kan();
MetaValue Pre();
MetaValue Eqs(std::string_view eqs);
MetaValue Ctx(std::initializer_list<std::string> names);
/// Tubes or caps: pairs of an equation and a body.
MetaValue Tubes(std::initializer_list<std::pair<std::string_view, std::string_view>> tubes);
MetaValue J(Judgment j);

/// Judgment builders from concrete syntax, in the empty context.
Judgment tm(std::string_view m, std::string_view n, std::string_view a);
Judgment ty(Kind k, std::string_view a, std::string_view b);
Judgment in_ctx(Judgment j, std::initializer_list<std::string> psi,
                std::string_view xi = "", std::vector<std::pair<std::string, std::string>> gamma = {});

/// A node whose conclusion is the instantiated conclusion of the rule.
/// Throws InstantiationError when the instantiation is malformed.
Derivation node(const std::string& rule, Instantiation inst, std::vector<Derivation> children = {});

/// A leaf accepted only by checkers given an assumption oracle.
Derivation assume(Judgment j);

struct NamedDerivation {
  std::string name;
  Derivation derivation;
};

/// The derivation corpus: each entry is complete (no assumptions) and valid.
std::vector<NamedDerivation> derivation_corpus();

}  // namespace ccl::testing

#endif  // CCL_TESTS_DERIVATIONS_HPP
