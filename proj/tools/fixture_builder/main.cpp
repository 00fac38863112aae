// Writes the standard fixture algebras as .alg files, or checks that a
// directory holds exactly what would be written.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "bltk/finite_algebra.hpp"
#include "bltk/fixtures.hpp"

namespace fs = std::filesystem;

namespace {

bool self_validate(const bltk::fixtures::Fixture& f) {
  bltk::Report r = bltk::check_axioms(f.algebra);
  bltk::append(r, bltk::check_derived_laws(f.algebra));
  const bool ok = bltk::all_passed(r);
  if (ok != f.valid) {
    std::cerr << f.name << ": expected the law suites to " << (f.valid ? "pass" : "fail") << "\n"
              << bltk::to_text(r);
    return false;
  }
  return true;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Build the standard fixture algebras from their closed forms", "bltk-fixtures"};
  std::string dir;
  bool check = false;
  app.add_option("DIR", dir, "Fixture directory")->required();
  app.add_flag("--check", check, "Compare DIR against freshly built fixtures instead of writing");
  CLI11_PARSE(app, argc, argv);

  int status = 0;
  if (!check) fs::create_directories(dir);
  for (const auto& f : bltk::fixtures::standard_fixtures()) {
    if (!self_validate(f)) {
      status = 1;
      continue;
    }
    const fs::path path = fs::path(dir) / (f.name + ".alg");
    const std::string doc = bltk::save_algebra(f.algebra);
    if (check) {
      if (!fs::exists(path) || slurp(path) != doc) {
        std::cerr << path.string() << ": differs from the built fixture\n";
        status = 1;
      }
      continue;
    }
    std::ofstream(path, std::ios::binary) << doc;
    std::cout << "wrote " << path.string() << "  (" << f.description << ")\n";
  }
  return status;
}
