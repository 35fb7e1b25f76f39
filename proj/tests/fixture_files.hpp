#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

// Bundled fixture files and the generator arguments that produced them, read
// from the "gen" lines of tools/make_fixtures.sh.
struct FixtureFile {
  std::string path;
  std::vector<std::string> args;  // example subcommand arguments
};

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::vector<FixtureFile> bundled_fixture_files() {
  const std::string root = HOPFKIT_SOURCE_DIR;
  std::vector<FixtureFile> out;
  std::istringstream script(slurp(root + "/tools/make_fixtures.sh"));
  for (std::string line; std::getline(script, line);) {
    if (line.rfind("gen ", 0) != 0) continue;
    std::istringstream words(line.substr(4));
    std::string name, w;
    words >> name;
    FixtureFile f{root + "/fixtures/" + name + ".hkd", {"example"}};
    while (words >> w) f.args.push_back(w);
    out.push_back(std::move(f));
  }
  return out;
}
