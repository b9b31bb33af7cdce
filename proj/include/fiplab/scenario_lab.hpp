#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fiplab/engine.hpp"
#include "fiplab/family.hpp"
#include "fiplab/functionals.hpp"
#include "fiplab/scenario.hpp"

namespace fiplab {

/// How to assemble an oracle from a finished run.
struct OracleRecipe {
  enum class Kind { PathOnly, PathPlusCoding, Explicit };

  Kind kind = Kind::Explicit;
  Node path;                   // PathOnly / PathPlusCoding
  StrategySelector strategy;   // PathPlusCoding
  std::set<int> indices;       // Explicit

  static OracleRecipe pathOnly(const Node& path);
  static OracleRecipe pathPlusCoding(const Node& path, const StrategySelector& strategy);
  static OracleRecipe explicitSet(const std::set<int>& indices);
};

/// Materializes a recipe. PathOnly is the chain label set of the path;
/// PathPlusCoding adds exactly the strategy's B labels for every j < jMax
/// outside the final K (MissingLabel if one was never placed); Explicit is
/// taken verbatim (MissingLabel on an out-of-range index).
OracleSet buildOracle(const LabeledTree& tree, const Scenario& scenario, const OracleRecipe& recipe);

/// Per-prefix occurrence report for one label along a path prefix:
/// entry sigma is true when the label lies on the strict-prefix label set
/// of some tau extending sigma (within the depth bound plus one).
struct CofinalityReport {
  std::vector<std::pair<Node, bool>> perPrefix;
  bool allTrue = false;
};

CofinalityReport isCofinalAlong(const LabeledTree& tree, int labelIndex, const Node& yd);

/// Strict bounded maximality check of an oracle's family restriction.
struct MaximalityReport {
  struct OutsideIndex {
    int index = 0;
    bool addable = false;
    /// When not addable: indices (oracle members plus this one) whose
    /// member sets have empty intersection.
    std::vector<int> conflictSubfamily;
    /// Addable structural label sitting on a strict extension of the
    /// classification path, when one was supplied.
    bool pathExtensionStructural = false;
  };

  bool oracleHasFip = false;
  std::optional<int> commonWitness;
  std::vector<OutsideIndex> outside;
  bool maximalWithinUniverse = false;
  std::string caveat;
};

/// Verifies the oracle's sets intersect and that every outside index breaks
/// that when added, producing an explicit empty-intersection subfamily per
/// failure. `classifyAgainstPath` marks addable structural labels that lie
/// strictly beyond the given path prefix.
MaximalityReport checkMaximalWithinUniverse(const LabeledTree& tree, const SetFamily& family,
                                            const OracleSet& oracle,
                                            std::optional<Node> classifyAgainstPath = std::nullopt);

/// Parameters for the crafted neither-meets-nor-avoids scenario.
struct CraftParams {
  int depth = 8;
  int maxStage = 32;
  int jMax = 4;
  int iMax = 1;
  int margin = 2;                 // target path stops margin levels above the depth bound
  std::vector<KEvent> kScript;
  std::uint64_t seed = 0;         // drives the target path's bits
  bool higherPriorityActs = false;  // priority mode: strategy 0 acts once mid-run
};

struct CraftedScenario {
  Mode mode = Mode::Fip;
  Scenario scenario;
  Node targetPath;     // Y_d
  int strategy = 0;    // the dense strategy i0
  Node nu0;            // guard prefix its post-interference labels carry (priority mode)
  int margin = 0;
};

/// Builds a scenario in which the last strategy's scripted set enumerates a
/// strict extension of every prefix of the target path but never a prefix of
/// it: the path neither meets nor avoids that set within the bounds. In
/// priority mode with higherPriorityActs, strategy 0 acts once between the
/// dense events, forcing a discard and a non-root guard prefix nu0.
CraftedScenario craftLemmaMainScenario(Mode mode, const CraftParams& params);

}  // namespace fiplab
