#pragma once

#include "fiplab/family.hpp"
#include "fiplab/scenario.hpp"
#include "fiplab/trace.hpp"
#include "fiplab/tree.hpp"

namespace fiplab {

struct EngineResult {
  LabeledTree tree;
  SetFamily family;
  ConstructionTrace trace;
};

/// Runs the plain stage construction: structural labels breadth-first, one
/// B_{i,j} batch per unblocked enumeration event (an event is blocked when
/// the same scripted set already enumerated a prefix of its node at an
/// earlier stage), then the witness pass.
EngineResult runFip(const Scenario& scenario);

/// Runs the priority construction: placements carry a guard prefix nu (the
/// shortest prefix of the event node none of whose extensions carries a
/// higher-priority B label), a strategy never places above or below its own
/// earlier placements on a chain (root excepted), and every placement
/// discards lower-priority labels with guards below it onto the root.
EngineResult run2ip(const Scenario& scenario);

EngineResult runConstruction(const Scenario& scenario, Mode mode);

}  // namespace fiplab
