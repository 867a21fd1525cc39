// Acceptance runner: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "bilipkit/io.hpp"
#include "bilipkit/verify.hpp"

using namespace bilipkit;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;
};

bool contains(const std::string& s, const char* needle) { return s.find(needle) != std::string::npos; }

// Folds the selected checks of a suite into a single outcome.
Outcome fold(const verify::SuiteResult& r, const std::function<bool(const std::string&)>& pick) {
  Outcome o;
  std::size_t asserted = 0;
  std::size_t recorded = 0;
  for (const verify::Check& c : r.checks) {
    if (!pick(c.name)) continue;
    if (c.comparison == verify::Comparison::Recorded) {
      ++recorded;
      continue;
    }
    ++asserted;
    if (!c.passed && o.passed) {
      o.passed = false;
      o.detail = "'" + c.name + "' measured " + io::format_double(c.measured) + " vs " +
                 io::format_double(c.tolerance);
    }
  }
  if (asserted == 0) {
    o.passed = false;
    o.detail = "no checks selected";
  } else if (o.passed) {
    o.detail = std::to_string(asserted) + " checks";
    if (recorded > 0) o.detail += ", " + std::to_string(recorded) + " recorded";
  }
  return o;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome determinism() {
#ifndef BILIPKIT_CLI_PATH
  return {false, "CLI binary not built"};
#else
  const fs::path dir = fs::temp_directory_path() / "bilipkit_acceptance";
  fs::remove_all(dir);
  fs::create_directories(dir);
  // Each invocation writes into <dir>/<run>/; outputs are compared file by file.
  const std::vector<std::string> commands = {
      "generate shear --n 400 --seed 3 --probes 4 --origin --unbounded -o {}/shear.csv",
      "invert {}/shear.csv -o {}/inv.csv",
      "compactify {}/shear.csv -o {}/compact.csv",
      "distortion {}/inv.csv --strategy random --pairs 50000 --seed 11 -o {}/inv.json",
      "distortion {}/compact.csv --strategy all -o {}/compact.json",
      "generate random --dim 3 --n 300 --seed 4 -o {}/cloud.csv",
      "cones {}/cloud.csv --kind origin -o {}/dirs.csv",
      "cones {}/cloud.csv --exchange --band 1 --center 100 -o {}/exchange.json",
      "verify cone-exchange --seed 2 -o {}/verify.json",
  };
  for (const char* run : {"a", "b"}) {
    const fs::path out = dir / run;
    fs::create_directories(out);
    for (std::string cmd : commands) {
      for (auto pos = cmd.find("{}"); pos != std::string::npos; pos = cmd.find("{}")) {
        cmd.replace(pos, 2, out.string());
      }
      const std::string line = std::string(BILIPKIT_CLI_PATH) + " " + cmd + " >/dev/null 2>&1";
      const int status = std::system(line.c_str());
      if (!WIFEXITED(status) || WEXITSTATUS(status) != 0) {
        return {false, "command failed: " + cmd};
      }
    }
  }
  std::size_t files = 0;
  for (const auto& entry : fs::directory_iterator(dir / "a")) {
    const fs::path other = dir / "b" / entry.path().filename();
    if (!fs::exists(other) || slurp(entry.path()) != slurp(other)) {
      return {false, "differs: " + entry.path().filename().string()};
    }
    ++files;
  }
  fs::remove_all(dir);
  return {true, std::to_string(files) + " files byte-identical across 2 runs"};
#endif
}

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();
  verify::Options opt;
  opt.seed = 0;
  const verify::SuiteResult ident = verify::identities(opt);
  const verify::SuiteResult cube = verify::cube_bound(opt);
  const verify::SuiteResult compact = verify::compactify_iff(opt);
  const verify::SuiteResult cones = verify::cone_exchange(opt);

  struct Criterion {
    int id;
    const char* title;
    Outcome outcome;
  };
  const std::vector<Criterion> criteria = {
      {1, "distance identities under inversion (q = 1,2,3,6; 1e-10)",
       fold(ident, [](const std::string& n) {
         return contains(n, "e_E_residual") || contains(n, "law_of_cosines");
       })},
      {2, "finite-difference derivative norm = 1/|x|^2 (rel 1e-5)",
       fold(ident, [](const std::string& n) { return contains(n, "derivative norm"); })},
      {3, "two-sided distance estimate on random pairs and attainment cases",
       fold(ident, [](const std::string& n) { return contains(n, "claim bounds"); })},
      {4, "cube bound and radial ratios of inverted linear maps",
       fold(cube, [](const std::string& n) { return contains(n, "A^3"); })},
      {5, "inversion iff: finite inverted constants, divergence of |x|x",
       fold(cube, [](const std::string& n) { return !contains(n, "A^3"); })},
      {6, "compactified constants finite, pole pair, identity = 1",
       fold(compact, [](const std::string&) { return true; })},
      {7, "cone exchange residuals (1e-10) and shifted-line direction (1e-3)",
       fold(cones, [](const std::string&) { return true; })},
      {8, "pole chart gluing, renormalized chart (1e-9)",
       fold(ident, [](const std::string& n) {
         return contains(n, "gluing") || contains(n, "sphere defect");
       })},
      {9, "CLI determinism", determinism()},
  };

  bool all = true;
  for (const Criterion& c : criteria) {
    std::printf("criterion %d: %s  %s [%s]\n", c.id, c.outcome.passed ? "PASS" : "FAIL", c.title,
                c.outcome.detail.c_str());
    all = all && c.outcome.passed;
  }
  for (const verify::Check& c : ident.checks) {
    if (c.comparison == verify::Comparison::Recorded && contains(c.name, "gluing")) {
      std::printf("  baseline: %s = %s\n", c.name.c_str(), io::format_double(c.measured).c_str());
    }
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%s in %.1f s\n", all ? "all criteria passed" : "some criteria FAILED", secs);
  return all ? 0 : 1;
}
