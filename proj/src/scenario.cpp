#include "fiplab/scenario.hpp"

#include <sstream>

#include "fiplab/errors.hpp"

namespace fiplab {

std::set<int> kApprox(const Scenario& scenario, int stage) {
  std::set<int> out;
  for (const auto& event : scenario.kEvents)
    if (event.stage <= stage) out.insert(event.j);
  return out;
}

void validateScenario(const Scenario& scenario, Mode mode) {
  auto fail = [](const std::string& message) { throw ScenarioInvalid(message); };
  if (scenario.maxStage < 0) fail("maxStage must be >= 0");
  if (scenario.maxDepth < 0) fail("maxDepth must be >= 0");
  if (scenario.jMax < 0) fail("jMax must be >= 0");
  if (scenario.iMax < 0) fail("iMax must be >= 0");
  for (const auto& [i, events] : scenario.ceSets) {
    if (i < 0 || i >= scenario.iMax) {
      std::ostringstream out;
      out << "ceSets key " << i << " outside 0.." << scenario.iMax - 1;
      fail(out.str());
    }
    for (const auto& event : events) {
      if (event.stage < 0 || event.stage > scenario.maxStage) {
        std::ostringstream out;
        out << "W_" << i << " event stage " << event.stage << " outside 0.." << scenario.maxStage;
        fail(out.str());
      }
      if (static_cast<int>(event.node.length()) > scenario.maxDepth) {
        std::ostringstream out;
        out << "W_" << i << " event node \"" << event.node.toString() << "\" deeper than "
            << scenario.maxDepth;
        fail(out.str());
      }
      if (mode == Mode::TwoIp && event.node.isRoot()) {
        std::ostringstream out;
        out << "W_" << i << " enumerates the root, which the priority construction forbids";
        throw LambdaEnumerated(out.str());
      }
    }
  }
  for (const auto& event : scenario.kEvents) {
    if (event.stage < 0 || event.stage > scenario.maxStage) {
      std::ostringstream out;
      out << "K event stage " << event.stage << " outside 0.." << scenario.maxStage;
      fail(out.str());
    }
    if (event.j < 0 || event.j >= scenario.jMax) {
      std::ostringstream out;
      out << "K event index " << event.j << " outside 0.." << scenario.jMax - 1;
      fail(out.str());
    }
  }
}

}  // namespace fiplab
