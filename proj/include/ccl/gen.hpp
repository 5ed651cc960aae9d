#ifndef CCL_GEN_HPP
#define CCL_GEN_HPP

#include <cstdint>
#include <random>
#include <string>

#include "ccl/cube.hpp"
#include "ccl/syntax.hpp"

namespace ccl {

/// Relative weights of the constructor families the generator draws from.
struct GenWeights {
  unsigned intro = 4;      // canonical forms of the target type
  unsigned elim = 4;       // eliminators that produce the target type
  unsigned kan = 4;        // hcom, coe, com, ghcom, gcom
  unsigned variable = 2;   // a bound variable of the target type, when one is in scope
  unsigned junk = 1;       // a term of some other type, usually stuck
};

struct GenConfig {
  unsigned max_depth = 4;
  unsigned dim_pool = 3;  // dimension names x, y, z, ... available to Psi
  GenWeights weights;
  std::uint64_t seed = 0;
};

/// A generated term together with the dimension context it lives in.
struct Sample {
  DimCtx psi;
  Term term;
};

/// The names of the dimension pool, in order: x, y, z, w, then x4, x5, ...
std::vector<std::string> dim_pool_names(unsigned size);

/// Deterministic per-case seed derived from a run seed and a case index.
std::uint64_t case_seed(std::uint64_t seed, std::uint64_t index);

class Generator {
 public:
  explicit Generator(const GenConfig& config) : Generator(config, config.seed) {}
  Generator(const GenConfig& config, std::uint64_t seed) : config_(config), rng_(seed) {}

  /// A term closed with respect to term variables whose free dimensions lie
  /// in the returned Psi. Same configuration and seed give the same sequence.
  Sample sample();

  /// A random total substitution from `source` into a random subset of the
  /// dimension pool. Distinct names may be identified.
  DimSubst substitution(const DimCtx& source);

  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : rng_() % n; }
  bool chance(unsigned percent) { return below(100) < percent; }

 private:
  GenConfig config_;
  std::mt19937_64 rng_;
};

}  // namespace ccl

#endif  // CCL_GEN_HPP
