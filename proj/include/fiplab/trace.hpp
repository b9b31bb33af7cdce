#pragma once

#include <string>
#include <variant>
#include <vector>

#include "fiplab/family.hpp"
#include "fiplab/label.hpp"
#include "fiplab/tree.hpp"

namespace fiplab {

// Trace records, one per line, in execution order. Line formats:
//   PLACE <label> <node> <stage> <reason>      reason: structural | coding
//   DISCARD <label> <stage> <trigger-label>@<trigger-node>
//   WITNESS <n> <stage> <node>
//   SKIP <strategy> <stage> <node> <reason>    reason: prior-enumeration | no-nu | b-label-gate
// Nodes print as "-" for the root. Tag witnesses are not traced; replay
// re-creates them when a PLACE/DISCARD line introduces a new label.

struct LabelPlaced {
  Label label;
  Node node;
  int stage = 0;
  std::string reason;
  LabelPlaced() : label(Label::structural(Node())) {}
  LabelPlaced(const Label& l, const Node& n, int s, std::string r)
      : label(l), node(n), stage(s), reason(std::move(r)) {}
};

struct LabelDiscarded {
  Label label;
  int stage = 0;
  Label trigger;
  Node triggerNode;
  LabelDiscarded() : label(Label::structural(Node())), trigger(label) {}
  LabelDiscarded(const Label& l, int s, const Label& t, const Node& tn)
      : label(l), stage(s), trigger(t), triggerNode(tn) {}
};

struct WitnessAdded {
  int witness = 0;
  int stage = 0;
  Node node;
};

struct EventSkipped {
  int strategy = 0;
  int stage = 0;
  Node node;
  std::string reason;
};

using TraceRecord = std::variant<LabelPlaced, LabelDiscarded, WitnessAdded, EventSkipped>;

struct ConstructionTrace {
  std::vector<TraceRecord> records;
};

std::string renderRecord(const TraceRecord& record);
TraceRecord parseRecord(const std::string& line);

std::string renderTrace(const ConstructionTrace& trace);
ConstructionTrace parseTrace(const std::string& text);

struct ReplayResult {
  LabeledTree tree;
  SetFamily family;
};

/// Rebuilds tree and family from a trace alone. The result matches the
/// engine's output exactly when the trace came from a run with the same
/// mode and depth bound.
ReplayResult replayTrace(const ConstructionTrace& trace, Mode mode, int maxDepth);

}  // namespace fiplab
