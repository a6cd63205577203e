// Runs the command recorded in each reference file with JSON output and
// compares the seed it prints against the file.

#include "clusterseed/golden.hpp"
#include "clusterseed/seed_io.hpp"
#include "clusterseed/suites.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>

using namespace clusterseed;

namespace {

std::string run(const std::string& cmd)
{
  std::string out;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p)
    return out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0)
    out.append(buf, n);
  if (pclose(p) != 0)
    return "";
  return out;
}

} // namespace

int main(int argc, char** argv)
{
  if (argc != 2) {
    std::cerr << "usage: golden_commands <clusterseed binary>\n";
    return 2;
  }
  std::string exe = argv[1];
  int failed = 0, files = 0;
  std::vector<std::filesystem::path> paths;
  for (const auto& entry : std::filesystem::directory_iterator(default_golden_dir()))
    paths.push_back(entry.path());
  std::sort(paths.begin(), paths.end());
  for (const auto& path : paths) {
    std::ifstream in(path);
    std::string first;
    std::getline(in, first);
    const std::string tag = "# regenerate: clusterseed ";
    std::string name = path.filename().string();
    if (first.rfind(tag, 0) != 0) {
      std::cout << "FAIL " << name << ": no regenerate line\n";
      ++failed;
      continue;
    }
    std::string args = first.substr(tag.size());
    auto fmt = args.find("--format arrows");
    if (fmt != std::string::npos)
      args.replace(fmt, 15, "--format json");
    std::string out = run(exe + " " + args);
    ++files;
    try {
      auto j = nlohmann::json::parse(out);
      RootDatum rd = cartan_matrix(seed_kind(j));
      Seed s = seed_from_json(j);
      auto diff = compare_golden(s, load_golden(rd, path.string(), s.marked_points() == 4 ? 4 : 3));
      if (diff.empty()) {
        std::cout << "ok   " << name << "\n";
      } else {
        std::cout << "FAIL " << name << ": " << diff.front() << "\n";
        ++failed;
      }
    } catch (const std::exception& e) {
      std::cout << "FAIL " << name << ": " << e.what() << "\n";
      ++failed;
    }
  }
  std::cout << files << " files, " << failed << " failed\n";
  return failed || files == 0 ? 1 : 0;
}
