#include "fiplab/scenario_lab.hpp"

#include <algorithm>
#include <sstream>

#include "fiplab/errors.hpp"

namespace fiplab {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

OracleRecipe OracleRecipe::pathOnly(const Node& path) {
  OracleRecipe r;
  r.kind = Kind::PathOnly;
  r.path = path;
  return r;
}

OracleRecipe OracleRecipe::pathPlusCoding(const Node& path, const StrategySelector& strategy) {
  OracleRecipe r;
  r.kind = Kind::PathPlusCoding;
  r.path = path;
  r.strategy = strategy;
  return r;
}

OracleRecipe OracleRecipe::explicitSet(const std::set<int>& indices) {
  OracleRecipe r;
  r.kind = Kind::Explicit;
  r.indices = indices;
  return r;
}

OracleSet buildOracle(const LabeledTree& tree, const Scenario& scenario, const OracleRecipe& recipe) {
  OracleSet oracle;
  switch (recipe.kind) {
    case OracleRecipe::Kind::Explicit:
      for (int index : recipe.indices) {
        if (index < 0 || index >= tree.labelCount()) {
          std::ostringstream out;
          out << "oracle index " << index << " outside the tree's label range";
          throw MissingLabel(out.str());
        }
      }
      oracle.indices = recipe.indices;
      return oracle;
    case OracleRecipe::Kind::PathOnly:
    case OracleRecipe::Kind::PathPlusCoding:
      break;
  }
  if (static_cast<int>(recipe.path.length()) > tree.maxDepth())
    throw MissingLabel("oracle path \"" + recipe.path.toString() + "\" deeper than the tree");
  oracle.indices = tree.pathTilde(recipe.path);
  if (recipe.kind == OracleRecipe::Kind::PathPlusCoding) {
    std::set<int> finalK = kApprox(scenario, scenario.maxStage);
    for (int j = 0; j < scenario.jMax; ++j) {
      if (finalK.count(j)) continue;
      Label label = recipe.strategy.nu
                        ? Label::priorityCoding(recipe.strategy.i, j, *recipe.strategy.nu)
                        : Label::coding(recipe.strategy.i, j);
      auto index = tree.indexOf(label);
      if (!index) throw MissingLabel(label.toString() + " was never placed");
      oracle.indices.insert(*index);
    }
  }
  return oracle;
}

CofinalityReport isCofinalAlong(const LabeledTree& tree, int labelIndex, const Node& yd) {
  if (labelIndex < 0 || labelIndex >= tree.labelCount())
    throw std::out_of_range("isCofinalAlong: label index outside the tree");
  auto placements = tree.placementsOf(labelIndex);
  CofinalityReport report;
  report.allTrue = true;
  for (std::size_t k = 0; k <= yd.length(); ++k) {
    Node p = yd.prefix(k);
    // The label occurs beyond p iff one of its placements is comparable
    // with p: a placement above p is on every continuation through p, and
    // a placement tau below p is seen at tau's children.
    bool occurs = std::any_of(placements.begin(), placements.end(),
                              [&p](const auto& placed) { return placed.first.comparableWith(p); });
    report.perPrefix.emplace_back(p, occurs);
    report.allTrue = report.allTrue && occurs;
  }
  return report;
}

MaximalityReport checkMaximalWithinUniverse(const LabeledTree& tree, const SetFamily& family,
                                            const OracleSet& oracle,
                                            std::optional<Node> classifyAgainstPath) {
  MaximalityReport report;
  std::ostringstream caveat;
  caveat << "verdict is relative to the bounded universe (depth " << tree.maxDepth()
         << "); an oracle derived from a path shorter than the depth bound can be maximal "
            "only modulo structural labels on the path's extensions";
  report.caveat = caveat.str();

  std::set<int> common;
  bool first = true;
  for (int k : oracle.indices) {
    if (first) {
      common = family.witnessesOf(k);
      first = false;
    } else {
      std::set<int> next;
      std::set_intersection(common.begin(), common.end(), family.witnessesOf(k).begin(),
                            family.witnessesOf(k).end(), std::inserter(next, next.begin()));
      common = std::move(next);
    }
    if (common.empty()) break;
  }
  report.oracleHasFip = first || !common.empty();
  if (!first && !common.empty()) report.commonWitness = *common.begin();

  for (int k = 0; k < family.setCount(); ++k) {
    if (oracle.indices.count(k)) continue;
    MaximalityReport::OutsideIndex entry;
    entry.index = k;
    std::set<int> withK;
    if (first) {
      withK = family.witnessesOf(k);
    } else {
      std::set_intersection(common.begin(), common.end(), family.witnessesOf(k).begin(),
                            family.witnessesOf(k).end(), std::inserter(withK, withK.begin()));
    }
    entry.addable = !withK.empty();
    if (entry.addable) {
      if (classifyAgainstPath) {
        const Label& label = tree.labelAt(k);
        entry.pathExtensionStructural =
            label.isStructural() && classifyAgainstPath->isStrictPrefixOf(label.site());
      }
    } else {
      // Shrink to an explicit empty-intersection subfamily: k plus the
      // oracle prefix that kills the running intersection.
      std::set<int> running = family.witnessesOf(k);
      entry.conflictSubfamily.push_back(k);
      for (int m : oracle.indices) {
        std::set<int> next;
        std::set_intersection(running.begin(), running.end(), family.witnessesOf(m).begin(),
                              family.witnessesOf(m).end(), std::inserter(next, next.begin()));
        running = std::move(next);
        entry.conflictSubfamily.push_back(m);
        if (running.empty()) break;
      }
    }
    report.outside.push_back(std::move(entry));
  }
  report.maximalWithinUniverse =
      report.oracleHasFip && std::none_of(report.outside.begin(), report.outside.end(),
                                          [](const auto& e) { return e.addable; });
  return report;
}

CraftedScenario craftLemmaMainScenario(Mode mode, const CraftParams& params) {
  auto infeasible = [](const std::string& message) { throw ParamsInfeasible(message); };
  if (params.depth < 0 || params.maxStage < 0 || params.jMax < 0 || params.iMax < 0 ||
      params.margin < 0)
    infeasible("bounds must be nonnegative");
  if (params.maxStage <= params.depth)
    infeasible("need maxStage > depth so the final witness pass covers every chain");
  int pathLength = params.depth - params.margin;
  if (pathLength < 0) infeasible("margin exceeds depth");
  if (params.iMax > 0) {
    if (params.margin < 1)
      infeasible("dense events need one level of headroom below the target path");
    if (pathLength < 1) infeasible("target path would be the root; lower the margin or raise depth");
  }
  if (params.higherPriorityActs) {
    if (mode != Mode::TwoIp) infeasible("higher-priority interference is a priority-mode feature");
    if (params.iMax < 2) infeasible("higher-priority interference needs at least two strategies");
  }

  CraftedScenario crafted;
  crafted.mode = mode;
  crafted.margin = params.margin;
  crafted.scenario.maxStage = params.maxStage;
  crafted.scenario.maxDepth = params.depth;
  crafted.scenario.jMax = params.jMax;
  crafted.scenario.iMax = params.iMax;
  crafted.scenario.kEvents = params.kScript;

  std::uint64_t rng = params.seed;
  Node path;
  for (int k = 0; k < pathLength; ++k) path = path.child(static_cast<int>(splitmix64(rng) & 1));
  crafted.targetPath = path;
  crafted.strategy = params.iMax > 0 ? params.iMax - 1 : 0;

  if (params.iMax > 0) {
    // Dense events: one strict off-path extension per proper prefix of the
    // target, and one strict extension of the target itself. No event node
    // is a prefix of the target, so the path neither meets nor avoids the
    // scripted set; all nodes are pairwise incomparable, so no event blocks
    // another.
    int i0 = crafted.strategy;
    int start = i0 + 1;
    int interferenceAt = start + 1;  // between the first and second dense event
    std::vector<CeEvent>& dense = crafted.scenario.ceSets[i0];
    for (int m = 0; m <= pathLength; ++m) {
      CeEvent event;
      if (m < pathLength) {
        event.node = path.prefix(m).child(1 - path.bit(m));
      } else {
        event.node = path.child(0);
      }
      event.stage = start + m;
      if (params.higherPriorityActs && m >= 1) event.stage += 1;
      dense.push_back(event);
    }
    int lastStage = dense.back().stage;
    if (lastStage > params.maxStage)
      infeasible("dense events do not fit below maxStage; raise stages or lower depth");
    if (params.higherPriorityActs) {
      CeEvent interference;
      interference.node = Node().child(1 - path.bit(0)).child(1 - path.bit(0));
      interference.stage = interferenceAt;
      crafted.scenario.ceSets[0].push_back(interference);
      crafted.nu0 = path.prefix(1);
    } else if (mode == Mode::TwoIp) {
      crafted.nu0 = Node::root();
    }
  }

  for (const KEvent& event : params.kScript) {
    if (event.j < 0 || event.j >= params.jMax)
      infeasible("K script index outside the coding range");
    if (event.stage < 0 || event.stage > params.maxStage)
      infeasible("K script stage outside the stage range");
  }

  try {
    validateScenario(crafted.scenario, mode);
  } catch (const ScenarioInvalid& e) {
    infeasible(std::string("crafted scenario fails validation: ") + e.what());
  }
  return crafted;
}

}  // namespace fiplab
