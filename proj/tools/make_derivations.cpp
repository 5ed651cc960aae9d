// Writes the hand-built derivation corpus to DIR/<name>.json.

#include <filesystem>
#include <fstream>
#include <iostream>

#include "ccl/serialize.hpp"
#include "support/derivations.hpp"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: make_derivations DIR\n";
    return 2;
  }
  std::filesystem::path dir = argv[1];
  std::filesystem::create_directories(dir);
  for (const auto& [name, d] : ccl::testing::derivation_corpus()) {
    std::ofstream out(dir / (name + ".json"));
    out << ccl::derivation_to_json(d).dump(2) << "\n";
    if (!out) {
      std::cerr << "cannot write " << name << "\n";
      return 1;
    }
  }
  return 0;
}
