#include "ccl/corpus.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <sstream>

#include "ccl/checker.hpp"
#include "ccl/opsem.hpp"
#include "ccl/serialize.hpp"

namespace ccl {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> words(std::string_view s) {
  std::istringstream in{std::string(s)};
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

}  // namespace

bool CorpusEntry::has_tag(std::string_view tag) const {
  return std::find(tags.begin(), tags.end(), tag) != tags.end();
}

CorpusEntry parse_corpus_entry(std::string_view text, const std::string& default_name) {
  CorpusEntry e;
  e.name = default_name;
  std::istringstream in{std::string(text)};
  std::string source;
  for (std::string line; std::getline(in, line);) {
    std::string t = trim(line);
    if (t.empty() || t[0] != '#') {
      source += line + "\n";
      continue;
    }
    std::size_t colon = t.find(':');
    if (colon == std::string::npos) continue;
    std::string key = trim(std::string_view(t).substr(1, colon - 1));
    std::string value = trim(std::string_view(t).substr(colon + 1));
    if (key == "name") {
      e.name = value;
    } else if (key == "tags") {
      e.tags = words(value);
    } else if (key == "psi") {
      for (const auto& n : words(value)) {
        if (!parse_dim(n).is_name()) throw CorpusError(default_name + ": psi lists `" + n + "`, not a name");
        e.psi.insert(n);
      }
    } else if (key == "expect") {
      e.expected = value;
    } else if (key == "derivation") {
      e.derivation = value;
    } else {
      throw CorpusError(default_name + ": unknown header `" + key + "`");
    }
  }
  e.source = trim(source);
  return e;
}

std::vector<CorpusEntry> load_corpus(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) throw CorpusError(dir.string() + " is not a directory");
  std::vector<std::filesystem::path> files;
  for (const auto& f : std::filesystem::directory_iterator(dir)) {
    if (f.is_regular_file() && f.path().extension() == ".ccl") files.push_back(f.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<CorpusEntry> out;
  for (const auto& p : files) {
    std::ifstream in(p);
    std::stringstream buf;
    buf << in.rdbuf();
    CorpusEntry e = parse_corpus_entry(buf.str(), p.stem().string());
    e.path = p;
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<CanonicityRow> run_canonicity(const std::vector<CorpusEntry>& corpus, std::size_t fuel) {
  std::vector<CanonicityRow> rows;
  for (const auto& e : corpus) {
    bool is_bool = e.has_tag("bool");
    bool is_nat = e.has_tag("nat");
    if (!is_bool && !is_nat) continue;
    CanonicityRow row;
    row.name = e.name;
    row.tag = is_bool ? "bool" : "nat";
    row.expected = e.expected.value_or("");
    auto started = std::chrono::steady_clock::now();
    try {
      Term m = parse(e.source);
      for (const auto& n : fd(m)) {
        if (!e.psi.contains(n)) throw CorpusError("dimension " + n + " is not declared in psi");
      }
      if (!free_vars(m).empty()) throw CorpusError("program has free term variables");
      EvalResult r = eval_canonical(m, fuel);
      row.actual = print(r.value);
      row.steps = r.steps;
      bool canonical = is_bool ? (r.value.tag() == Tag::True || r.value.tag() == Tag::False) : [&] {
        Term t = r.value;
        while (t.tag() == Tag::Suc) t = t.body(0);
        return t.tag() == Tag::Zero;
      }();
      if (!canonical) {
        row.error = "not a canonical " + row.tag;
      } else if (!e.expected) {
        row.error = "no expected value";
      } else if (!(parse(*e.expected) == r.value)) {
        row.error = "expected " + *e.expected;
      } else if (e.derivation) {
        std::ifstream in(e.path.parent_path() / *e.derivation);
        if (!in) throw CorpusError("cannot read derivation " + *e.derivation);
        CheckReport rep = check_derivation(derivation_from_json(Json::parse(in)));
        if (rep.ok) {
          row.ok = true;
        } else {
          row.error = "derivation rejected: " + rep.reason;
        }
      } else {
        row.ok = true;
      }
    } catch (const std::exception& ex) {
      row.error = ex.what();
    }
    row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<Sample> bool_programs(const std::vector<CorpusEntry>& corpus) {
  std::vector<Sample> out;
  for (const auto& e : corpus) {
    if (e.has_tag("bool")) out.push_back({e.psi, parse(e.source)});
  }
  return out;
}

}  // namespace ccl
