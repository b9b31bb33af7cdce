#pragma once

#include <cstdint>
#include <string>

namespace fiplab::cli {

/// Parsed command line. Exit codes: 0 success, 1 check failure (with a
/// counterexample dump on stdout), 2 invalid input or usage.
struct RunConfig {
  std::string command;
  std::string scenarioPath;
  std::string mode = "fip";
  std::string outputDir = ".";
  std::uint64_t seed = 0;
  // Bounds overrides; negative means "leave the scenario's value alone".
  int depth = -1;
  int stages = -1;
  int jMax = -1;
  int iMax = -1;
  // Command-specific knobs.
  std::string suite;       // check
  std::string familyPath;  // maximalize
  std::string path;        // phi / psi oracle path, empty means the crafted target
  std::string nu;          // psi guard prefix, 2IP only; "-" selects the root
  int nBits = -1;          // phi output length, default the path length
  int strategy = -1;       // psi strategy, default the crafted dense strategy
  int budget = -1;         // psi stage budget, default maxStage
  int subsetSize = 4;      // check scan bound
  int margin = 2;          // scenario-craft
  bool interference = false;  // scenario-craft, priority mode only
};

int run(int argc, const char* const* argv);

}  // namespace fiplab::cli
