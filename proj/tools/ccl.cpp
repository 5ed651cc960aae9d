#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "ccl/checker.hpp"
#include "ccl/corpus.hpp"
#include "ccl/opsem.hpp"
#include "ccl/proptest.hpp"
#include "ccl/serialize.hpp"

#ifndef CCL_CORPUS_DIR
#define CCL_CORPUS_DIR "corpus"
#endif

namespace {

using namespace ccl;

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  std::stringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read " + path);
    buf << in.rdbuf();
  }
  return buf.str();
}

Term read_term(const std::string& path) {
  try {
    return parse(parse_corpus_entry(read_input(path), path).source);
  } catch (const CorpusError& e) {
    throw UsageError(e.what());
  } catch (const ParseError& e) {
    throw UsageError(std::string("parse error: ") + e.what());
  }
}

std::string stable_word(bool stable) { return stable ? "stable" : "unstable"; }

int cmd_eval(const std::string& path, std::size_t fuel) {
  Term m = read_term(path);
  try {
    EvalResult r = eval_canonical(m, fuel);
    std::cout << print(r.value) << "\n";
    return kOk;
  } catch (const EvalError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
}

int cmd_trace(const std::string& path, std::size_t fuel, bool json) {
  Term m = read_term(path);
  Trace t = trace(m, fuel);
  if (json) {
    std::cout << trace_to_json(t).dump(2) << "\n";
  } else {
    for (std::size_t i = 0; i < t.steps.size(); ++i) {
      const TraceEntry& e = t.steps[i];
      std::cout << i << ". " << print(e.term) << "\n";
      std::cout << "   ~> [" << e.rule << ", " << stable_word(e.stable) << "]\n";
    }
    std::cout << t.steps.size() << ". " << print(t.last) << "\n";
    switch (t.final) {
      case Trace::Final::Value:
        std::cout << "value [" << t.value_rule << ", " << stable_word(t.stable) << "] after " << t.steps.size()
                  << (t.steps.size() == 1 ? " step" : " steps") << "\n";
        break;
      case Trace::Final::Stuck:
        std::cout << "stuck: " << t.reason << "\n";
        break;
      case Trace::Final::FuelExhausted:
        std::cout << "fuel exhausted after " << t.fuel_used << (t.fuel_used == 1 ? " step\n" : " steps\n");
        break;
    }
  }
  return t.final == Trace::Final::Value ? kOk : kFailure;
}

std::string show_path(const std::vector<std::size_t>& path) {
  std::string out = "[";
  for (std::size_t i = 0; i < path.size(); ++i) out += (i ? "," : "") + std::to_string(path[i]);
  return out + "]";
}

int cmd_check(const std::string& path, bool json) {
  Derivation d;
  try {
    d = derivation_from_json(Json::parse(read_input(path)));
  } catch (const Json::exception& e) {
    throw UsageError(std::string("malformed JSON: ") + e.what());
  } catch (const FormatError& e) {
    throw UsageError(std::string("malformed derivation: ") + e.what());
  } catch (const ParseError& e) {
    throw UsageError(std::string("parse error: ") + e.what());
  }
  CheckReport r = check_derivation(d);
  if (json) {
    std::cout << report_to_json(r).dump(2) << "\n";
  } else if (r.ok) {
    std::cout << "ok: " << to_string(d.conclusion) << "\n";
  } else {
    std::cout << "error at " << show_path(r.path) << ": " << r.reason << "\n";
  }
  return r.ok ? kOk : kFailure;
}

int cmd_canonicity(const std::string& dir, std::size_t fuel) {
  std::vector<CorpusEntry> corpus;
  try {
    corpus = load_corpus(dir);
  } catch (const CorpusError& e) {
    throw UsageError(e.what());
  }
  std::vector<CanonicityRow> rows = run_canonicity(corpus, fuel);
  std::size_t width = 4;
  for (const auto& r : rows) width = std::max(width, r.name.size());
  std::cout << std::left << std::setw(static_cast<int>(width)) << "name"
            << "  type  result  steps     value\n";
  std::size_t passed = 0;
  for (const auto& r : rows) {
    passed += r.ok;
    std::cout << std::left << std::setw(static_cast<int>(width)) << r.name << "  " << std::setw(4) << r.tag << "  "
              << std::setw(6) << (r.ok ? "PASS" : "FAIL") << "  " << std::setw(8) << r.steps << "  "
              << (r.actual.empty() ? "-" : r.actual);
    if (!r.ok) std::cout << "  (" << r.error << ")";
    std::cout << "\n";
  }
  std::size_t bools = std::count_if(rows.begin(), rows.end(), [](const auto& r) { return r.tag == "bool"; });
  std::cout << passed << "/" << rows.size() << " passed (" << bools << " bool, " << rows.size() - bools << " nat)\n";
  return passed == rows.size() ? kOk : kFailure;
}

int cmd_proptest(const std::string& suite, const SuiteOptions& base, const std::string& corpus_dir, bool coverage) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end()) {
    std::string list;
    for (const auto& n : names) list += " " + n;
    throw UsageError("unknown suite `" + suite + "`; choose one of:" + list);
  }
  SuiteOptions opts = base;
  if (suite == "coherence-bool") {
    try {
      opts.bool_programs = bool_programs(load_corpus(std::filesystem::path(corpus_dir) / "canonicity"));
    } catch (const CorpusError& e) {
      throw UsageError(e.what());
    }
  }
  SuiteResult r = run_suite(suite, opts);
  std::cout << suite << ": " << (r.ok() ? "PASS" : "FAIL") << " (" << r.cases << " cases, " << r.checks
            << " checks, seed " << opts.seed << ", " << std::fixed << std::setprecision(2) << r.seconds << " s)\n";
  if (coverage) {
    std::size_t hit = 0;
    for (const auto& rule : step_rules()) {
      auto it = r.rule_hits.find(rule.id);
      std::size_t k = it == r.rule_hits.end() ? 0 : it->second;
      hit += k > 0;
      std::cout << "  " << std::left << std::setw(22) << rule.id << " " << k << "\n";
    }
    std::cout << "rules exercised: " << hit << "/" << step_rules().size() << "\n";
  }
  if (!r.ok()) {
    const Counterexample& cx = *r.failure;
    std::cout << "counterexample at case " << cx.index << " in Ψ = " << cx.original.psi.str() << "\n"
              << "  original: " << print(cx.original.term) << "\n"
              << "  shrunk:   " << print(cx.shrunk.term) << "\n"
              << "  " << cx.detail << "\n";
  }
  return r.ok() ? kOk : kFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reference interpreter and derivation checker for Cartesian cubical type theory"};
  app.require_subcommand(1);
  std::size_t fuel = ccl::default_fuel();

  std::string file;
  auto* eval = app.add_subcommand("eval", "Evaluate a program to its canonical form");
  eval->add_option("FILE", file, "Program file, or - for standard input")->required();
  eval->add_option("--fuel", fuel, "Maximum number of steps (default: CCL_FUEL or 1000000)");

  bool json = false;
  auto* tr = app.add_subcommand("trace", "Show each evaluation step with its rule");
  tr->add_option("FILE", file, "Program file, or - for standard input")->required();
  tr->add_option("--fuel", fuel, "Maximum number of steps");
  tr->add_flag("--json", json, "Emit JSON");

  auto* check = app.add_subcommand("check", "Check a derivation given as JSON");
  check->add_option("FILE", file, "Derivation file, or - for standard input")->required();
  check->add_flag("--json", json, "Emit the report as JSON");

  std::string dir;
  auto* canon = app.add_subcommand("canonicity", "Evaluate every bool and nat program of a corpus directory");
  canon->add_option("DIR", dir, "Directory of .ccl programs")->required();
  canon->add_option("--fuel", fuel, "Maximum number of steps per program");

  std::string suite;
  ccl::SuiteOptions opts;
  std::string corpus_dir = CCL_CORPUS_DIR;
  auto* prop = app.add_subcommand("proptest", "Run a property suite over generated terms");
  prop->add_option("SUITE", suite, "exclusivity, dim-preservation, stability, subst-functoriality, roundtrip or coherence-bool")
      ->required();
  prop->add_option("--n", opts.n, "Number of cases")->capture_default_str();
  prop->add_option("--seed", opts.seed, "Random seed")->capture_default_str();
  prop->add_option("--threads", opts.threads, "Worker threads (0: one per core)")->capture_default_str();
  prop->add_option("--depth", opts.gen.max_depth, "Maximum generator depth")->capture_default_str();
  prop->add_option("--dims", opts.gen.dim_pool, "Size of the dimension name pool")->capture_default_str();
  bool coverage = false;
  prop->add_flag("--coverage", coverage, "Print how often each step rule fired");
  prop->add_option("--corpus", corpus_dir, "Corpus root holding canonicity/")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  if (fuel == 0) {
    std::cerr << "error: --fuel must be positive\n";
    return kUsage;
  }
  opts.gen.seed = opts.seed;

  try {
    if (*eval) return cmd_eval(file, fuel);
    if (*tr) return cmd_trace(file, fuel, json);
    if (*check) return cmd_check(file, json);
    if (*canon) return cmd_canonicity(dir, fuel);
    if (*prop) return cmd_proptest(suite, opts, corpus_dir, coverage);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kUsage;
}
