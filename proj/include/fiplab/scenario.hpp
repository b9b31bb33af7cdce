#pragma once

#include <map>
#include <set>
#include <vector>

#include "fiplab/node.hpp"
#include "fiplab/tree.hpp"

namespace fiplab {

/// One enumeration event of a scripted c.e. set: at `stage`, the set is seen
/// to contain `node`.
struct CeEvent {
  int stage = 0;
  Node node;
};

/// One entry event of the scripted halting-set approximation: index j is in
/// K_s for every s >= stage.
struct KEvent {
  int stage = 0;
  int j = 0;
};

/// A finite, fully scripted input to a construction run.
struct Scenario {
  int maxStage = 0;
  int maxDepth = 0;
  int jMax = 0;  // coding indices range over 0..jMax-1
  int iMax = 0;  // strategies range over 0..iMax-1
  std::map<int, std::vector<CeEvent>> ceSets;
  std::vector<KEvent> kEvents;
};

/// K_s: the set of j that entered at stages <= s. Monotone in s by
/// construction; s beyond maxStage yields the final set.
std::set<int> kApprox(const Scenario& scenario, int stage);

/// Bounds and schema checks shared by both modes; additionally rejects
/// root enumeration events in priority mode (LambdaEnumerated).
void validateScenario(const Scenario& scenario, Mode mode);

}  // namespace fiplab
