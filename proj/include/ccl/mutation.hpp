#ifndef CCL_MUTATION_HPP
#define CCL_MUTATION_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "ccl/checker.hpp"

namespace ccl {

/// A derivation differing from its source in exactly one place.
struct Mutant {
  std::vector<std::size_t> path;  // child indices down to the mutated node
  std::string description;
  Derivation derivation;
};

/// Single-point mutations of a term: constants swapped, dimensions flipped or
/// renamed, universe levels shifted, type formers exchanged.
std::vector<std::pair<std::string, Term>> term_mutants(const Term& m);

/// Every single-point mutant of `d`, in a fixed order. Each node contributes
/// mutants of its rule name, its conclusion, its instantiation and its list
/// of children.
std::vector<Mutant> mutants(const Derivation& d);

/// Same tree shape, same rule at every node, and conclusions equal after
/// restriction expansion. Such a mutant derives exactly what the original did.
bool equivalent_derivations(const Derivation& a, const Derivation& b);

struct NamedMutantResult {
  std::string derivation;
  std::string description;
  std::vector<std::size_t> path;
};

struct FuzzResult {
  std::size_t mutants = 0;
  std::size_t rejected = 0;
  std::size_t equivalent = 0;  // accepted mutants that derive the same judgments
  std::vector<NamedMutantResult> false_accepts;
};

/// Checks every mutant of every derivation.
FuzzResult fuzz_derivations(const std::vector<std::pair<std::string, Derivation>>& corpus);

}  // namespace ccl

#endif  // CCL_MUTATION_HPP
