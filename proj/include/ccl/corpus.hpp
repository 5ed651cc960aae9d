#ifndef CCL_CORPUS_HPP
#define CCL_CORPUS_HPP

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ccl/cube.hpp"
#include "ccl/gen.hpp"
#include "ccl/syntax.hpp"

namespace ccl {

// A corpus program is a text file whose leading `#` lines are headers:
//
//   # name: hcom-bool
//   # tags: bool kan
//   # psi: x y
//   # expect: true
//   # derivation: derivations/if-computation.json
//   hcom bool 0 ~> 1 true [x=0 y. true]
//
// Every other line belongs to the program source.
struct CorpusEntry {
  std::string name;
  std::string source;
  DimCtx psi;
  std::optional<std::string> expected;
  std::optional<std::string> derivation;
  std::vector<std::string> tags;
  std::filesystem::path path;

  bool has_tag(std::string_view tag) const;
};

class CorpusError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Throws CorpusError for an unknown header or a malformed header value.
CorpusEntry parse_corpus_entry(std::string_view text, const std::string& default_name);

/// Loads every `*.ccl` file of `dir`, ordered by file name.
std::vector<CorpusEntry> load_corpus(const std::filesystem::path& dir);

struct CanonicityRow {
  std::string name;
  std::string tag;  // bool or nat
  std::string expected;
  std::string actual;
  std::size_t steps = 0;
  double seconds = 0;
  bool ok = false;
  std::string error;
};

/// Evaluates each entry tagged `bool` or `nat` and compares it to its
/// expected canonical form. Entries with neither tag are skipped.
std::vector<CanonicityRow> run_canonicity(const std::vector<CorpusEntry>& corpus, std::size_t fuel);

/// The boolean programs of the corpus, for the coherence suite.
std::vector<Sample> bool_programs(const std::vector<CorpusEntry>& corpus);

}  // namespace ccl

#endif  // CCL_CORPUS_HPP
