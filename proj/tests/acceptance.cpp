#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ccl/corpus.hpp"
#include "ccl/mutation.hpp"
#include "ccl/opsem.hpp"
#include "ccl/proptest.hpp"
#include "ccl/serialize.hpp"
#include "support/transcription.hpp"

#ifndef CCL_TEST_BINARIES
#define CCL_TEST_BINARIES ""
#endif

namespace {

using namespace ccl;
using Clock = std::chrono::steady_clock;

constexpr std::size_t kCases = 10000;
constexpr std::uint64_t kSeed = 20240601;

int failures = 0;

double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

void report(const std::string& name, bool ok, const std::string& detail) {
  std::cout << (ok ? "PASS" : "FAIL") << "  " << name << ": " << detail << std::endl;
  failures += !ok;
}

std::string seconds(double s) {
  std::ostringstream out;
  out.precision(2);
  out << std::fixed << s << " s";
  return out.str();
}

void transcription() {
  auto started = Clock::now();
  std::set<std::string> covered;
  std::size_t failed = 0;
  std::string first;
  for (const auto& c : testing::transcription_cases()) {
    covered.insert(c.rule);
    testing::CaseVerdict v = testing::run_transcription(c);
    if (!v.ok) {
      ++failed;
      if (first.empty()) first = "; first failure " + c.rule + ": " + v.detail;
    }
  }
  std::size_t missing = 0;
  for (const auto& r : step_rules()) missing += !covered.contains(r.id);
  double t = since(started);
  report("rule transcription", missing == 0 && failed == 0 && t < 5.0,
         std::to_string(step_rules().size() - missing) + "/" + std::to_string(step_rules().size()) + " rules covered, " +
             std::to_string(failed) + " failures, " + seconds(t) + first);
}

void suite(const std::string& label, const std::string& name, std::size_t n,
           const std::vector<Sample>& programs = {}) {
  SuiteOptions opts;
  opts.n = n;
  opts.seed = kSeed;
  opts.gen.seed = kSeed;
  opts.bool_programs = programs;
  SuiteResult r = run_suite(name, opts);
  std::string detail = std::to_string(r.cases) + " cases, " + std::to_string(r.checks) + " checks, " + seconds(r.seconds);
  if (r.failure) detail += "; counterexample " + print(r.failure->shrunk.term) + ": " + r.failure->detail;
  report(label, r.ok() && r.cases >= n, detail);
}

std::string last_rule(const std::string& chain) {
  std::size_t p = chain.rfind("> ");
  return p == std::string::npos ? chain : chain.substr(p + 2);
}

void canonicity(const std::vector<CorpusEntry>& corpus) {
  const std::vector<std::string> required = {"bool/hcom",      "wbool/hcom",  "wbool/if-fcom", "circle/elim-loop",
                                             "circle/elim-fcom", "ua/coe-0",   "ua/coe-1",      "ua/coe-name",
                                             "univ/cap-box"};
  auto started = Clock::now();
  std::vector<CanonicityRow> rows = run_canonicity(corpus, 1000000);
  double t = since(started);
  std::size_t bools = 0, nats = 0, failed = 0;
  std::string first;
  for (const auto& r : rows) {
    if (!r.ok) {
      ++failed;
      if (first.empty()) first = "; first failure " + r.name + ": " + r.error;
    } else {
      (r.tag == "bool" ? bools : nats) += 1;
    }
  }
  std::set<std::string> fired;
  for (const auto& e : corpus) {
    if (!e.has_tag("bool") && !e.has_tag("nat")) continue;
    try {
      Trace tr = trace(parse(e.source), 1000000);
      for (const auto& s : tr.steps) fired.insert(last_rule(s.rule));
    } catch (const std::exception&) {
    }
  }
  std::string missing;
  for (const auto& r : required) {
    if (!fired.contains(r)) missing += " " + r;
  }
  report("canonicity corpus", bools >= 12 && nats >= 4 && failed == 0 && missing.empty() && t < 10.0,
         std::to_string(bools) + " bool and " + std::to_string(nats) + " nat programs evaluated, " +
             std::to_string(failed) + " failures, " + seconds(t) + (missing.empty() ? "" : "; rules never fired:" + missing) +
             first);
}

void derivations(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> files;
  for (const auto& f : std::filesystem::directory_iterator(dir)) {
    if (f.path().extension() == ".json") files.push_back(f.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<std::pair<std::string, Derivation>> corpus;
  std::size_t accepted = 0;
  std::string first;
  std::set<std::string> paragraphs;
  std::function<void(const Derivation&)> visit = [&](const Derivation& d) {
    if (const RuleSchema* s = find_rule(d.rule)) paragraphs.insert(s->paragraph);
    for (const auto& c : d.children) visit(c);
  };
  for (const auto& f : files) {
    try {
      std::ifstream in(f);
      Derivation d = derivation_from_json(Json::parse(in));
      CheckReport r = check_derivation(d);
      if (r.ok) {
        ++accepted;
        visit(d);
      } else if (first.empty()) {
        first = "; " + f.stem().string() + " rejected: " + r.reason;
      }
      corpus.push_back({f.stem().string(), std::move(d)});
    } catch (const std::exception& e) {
      if (first.empty()) first = "; " + f.stem().string() + " unreadable: " + e.what();
    }
  }
  std::set<std::string> all;
  for (const auto& r : rule_catalog()) all.insert(r.paragraph);
  std::string missing;
  for (const auto& p : all) {
    if (!paragraphs.contains(p)) missing += " [" + p + "]";
  }
  FuzzResult fz = fuzz_derivations(corpus);
  std::string fa;
  for (const auto& f : fz.false_accepts) fa += "; " + f.derivation + ": " + f.description;
  report("derivation corpus",
         accepted >= 20 && accepted == files.size() && missing.empty() && fz.mutants >= 200 && fz.false_accepts.empty(),
         std::to_string(accepted) + "/" + std::to_string(files.size()) + " accepted spanning " +
             std::to_string(paragraphs.size()) + "/" + std::to_string(all.size()) + " paragraphs, " +
             std::to_string(fz.mutants) + " mutants, " + std::to_string(fz.rejected) + " rejected, " +
             std::to_string(fz.equivalent) + " equivalent, " + std::to_string(fz.false_accepts.size()) +
             " false acceptances" + (missing.empty() ? "" : "; missing" + missing) + first + fa);
}

void battery(double own) {
  auto started = Clock::now();
  std::string list = CCL_TEST_BINARIES;
  std::size_t failed = 0, ran = 0;
  std::string bad;
  std::istringstream in(list);
  for (std::string bin; std::getline(in, bin, '|');) {
    if (bin.empty()) continue;
    ++ran;
    std::string cmd = "\"" + bin + "\" > /dev/null 2>&1";
    if (std::system(cmd.c_str()) != 0) {
      ++failed;
      bad += " " + std::filesystem::path(bin).filename().string();
    }
  }
  double total = own + since(started);
  report("whole battery under 60 s", ran > 0 && failed == 0 && total < 60.0,
         std::to_string(ran) + " unit test binaries plus this run, " + seconds(total) +
             (bad.empty() ? "" : "; failing:" + bad));
}

}  // namespace

int main() {
  auto started = Clock::now();
  std::filesystem::path root = CCL_CORPUS_DIR;
  std::vector<CorpusEntry> corpus;
  try {
    corpus = load_corpus(root / "canonicity");
  } catch (const std::exception& e) {
    std::cerr << "cannot load the canonicity corpus: " << e.what() << "\n";
  }
  std::vector<Sample> programs = bool_programs(corpus);

  transcription();
  suite("determinacy and exclusivity", "exclusivity", kCases);
  suite("dimension preservation", "dim-preservation", kCases);
  suite("cubical stability", "stability", kCases);
  canonicity(corpus);
  if (programs.empty()) {
    report("coherence at bool", false, "no boolean programs in the corpus");
  } else {
    suite("coherence at bool", "coherence-bool", 100 * programs.size(), programs);
  }
  derivations(root / "derivations");
  suite("substitution functoriality", "subst-functoriality", kCases);
  suite("print/parse round trip", "roundtrip", kCases);
  battery(since(started));
  return failures == 0 ? 0 : 1;
}
