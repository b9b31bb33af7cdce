#pragma once

#include <string>

#include "fiplab/engine.hpp"
#include "fiplab/scenario.hpp"
#include "fiplab/scenario_lab.hpp"

namespace fiplab {

// Scenario files are JSON with a fixed key order:
//   maxStage, maxDepth, jMax, iMax, ceSets, kEvents
// ceSets is a list of {i, events:[{stage, node}]} ascending in i; kEvents is
// a list of {stage, j}. Nodes are bit strings, "" for the root. Writing a
// parsed canonical file reproduces it byte for byte.

std::string scenarioToText(const Scenario& scenario);
Scenario scenarioFromText(const std::string& text);

Scenario loadScenarioFile(const std::string& path);
void writeTextFile(const std::string& path, const std::string& text);
std::string readTextFile(const std::string& path);

/// Canonical dump of a finished tree: mode, depth, index order with first
/// stages, placements per node (length-lex).
std::string treeToText(const LabeledTree& tree);

/// Canonical dump of the derived family: per-set witness lists and the
/// witness origin table.
std::string familyToText(const SetFamily& family, const LabeledTree& tree);

/// Sidecar metadata for crafted scenarios.
std::string craftedToText(const CraftedScenario& crafted);
CraftedScenario craftedFromText(const std::string& text);

}  // namespace fiplab
