#include "fiplab/engine.hpp"

#include <algorithm>

namespace fiplab {

namespace {

class Run {
 public:
  Run(const Scenario& scenario, Mode mode)
      : scenario_(scenario),
        mode_(mode),
        result_{LabeledTree(mode, scenario.maxDepth), SetFamily(), ConstructionTrace()} {}

  EngineResult go() {
    validateScenario(scenario_, mode_);
    for (const auto& [i, events] : scenario_.ceSets)
      consumed_[i].assign(events.size(), false);
    for (int s = 0; s <= scenario_.maxStage; ++s) stage(s);
    return std::move(result_);
  }

 private:
  // One stage: structural labels breadth-first, then strategies in priority
  // order over their pending events, then the witness pass. Placements made
  // earlier in the stage are visible to everything after them.
  void stage(int s) {
    for (int d = 0; d <= std::min(s, scenario_.maxDepth); ++d)
      for (const Node& node : nodesOfLength(d))
        if (!result_.tree.structuralIndexOf(node))
          place(Label::structural(node), node, s, "structural");

    std::set<int> ks = kApprox(scenario_, s);
    for (int i = 0; i < std::min(s, scenario_.iMax); ++i) {
      auto events = scenario_.ceSets.find(i);
      if (events == scenario_.ceSets.end()) continue;
      for (std::size_t e = 0; e < events->second.size(); ++e) {
        if (consumed_[i][e] || events->second[e].stage > s) continue;
        consumed_[i][e] = true;
        const CeEvent& event = events->second[e];
        if (mode_ == Mode::Fip)
          fipEvent(i, event, s, ks, events->second);
        else
          twoIpEvent(i, event, s, ks);
      }
    }

    int witnessDepth = std::min(s - 1, scenario_.maxDepth);
    for (int d = 0; d <= witnessDepth; ++d) {
      for (const Node& node : nodesOfLength(d)) {
        int witness = result_.family.addRuleWitness(s, node, result_.tree.inclusiveTilde(node));
        result_.trace.records.push_back(WitnessAdded{witness, s, node});
      }
    }
  }

  void fipEvent(int i, const CeEvent& event, int s, const std::set<int>& ks,
                const std::vector<CeEvent>& allEvents) {
    // An event is dead when the same scripted set already enumerated a
    // prefix of its node (the node itself included) at a strictly earlier
    // stage. This depends on the script alone, not on processing times.
    for (const CeEvent& other : allEvents) {
      if (other.stage < event.stage && other.node.isPrefixOf(event.node)) {
        skip(i, s, event.node, "prior-enumeration");
        return;
      }
    }
    for (int j = 0; j < scenario_.jMax; ++j)
      if (!ks.count(j)) place(Label::coding(i, j), event.node, s, "coding");
  }

  void twoIpEvent(int i, const CeEvent& event, int s, const std::set<int>& ks) {
    // Guard prefix: shortest prefix of the event node such that no node
    // extending it (itself included) carries a higher-priority B label.
    std::optional<Node> nu;
    for (std::size_t k = 0; k <= event.node.length(); ++k) {
      Node p = event.node.prefix(k);
      if (!result_.tree.hasPriorityCodingOnExtension(p, i)) {
        nu = p;
        break;
      }
    }
    if (!nu) {
      skip(i, s, event.node, "no-nu");
      return;
    }
    if (result_.tree.strategyActedOnChain(event.node, i)) {
      skip(i, s, event.node, "b-label-gate");
      return;
    }
    std::vector<int> batch;
    for (int j = 0; j < scenario_.jMax; ++j)
      if (!ks.count(j)) batch.push_back(j);
    for (int j : batch) place(Label::priorityCoding(i, j, *nu), event.node, s, "coding");
    if (batch.empty()) return;

    // Placing a batch at this node retires every lower-priority label whose
    // guard prefix lies on the node's chain: each is re-placed on the root
    // (keeping its other placements). Labels already on the root are left
    // alone. Only labels that exist are affected.
    Label trigger = Label::priorityCoding(i, batch.front(), *nu);
    int existing = result_.tree.labelCount();
    for (int index = 0; index < existing; ++index) {
      const Label& label = result_.tree.labelAt(index);
      if (label.kind() != Label::Kind::PriorityCoding) continue;
      if (label.strategy() <= i) continue;
      if (!label.nu().isPrefixOf(event.node)) continue;
      auto atRoot = result_.tree.labelsAt(Node::root());
      bool onRoot = std::any_of(atRoot.begin(), atRoot.end(),
                                [index](const auto& p) { return p.first == index; });
      if (onRoot) continue;
      result_.tree.placeLabel(label, Node::root(), s);
      result_.trace.records.push_back(LabelDiscarded(label, s, trigger, event.node));
    }
  }

  void place(const Label& label, const Node& node, int s, const std::string& reason) {
    auto placed = result_.tree.placeLabel(label, node, s);
    if (placed.newLabel) result_.family.addSet(s, node);
    if (placed.newPlacement)
      result_.trace.records.push_back(LabelPlaced{label, node, s, reason});
  }

  void skip(int i, int s, const Node& node, const std::string& reason) {
    result_.trace.records.push_back(EventSkipped{i, s, node, reason});
  }

  const Scenario& scenario_;
  Mode mode_;
  EngineResult result_;
  std::map<int, std::vector<bool>> consumed_;
};

}  // namespace

EngineResult runFip(const Scenario& scenario) { return Run(scenario, Mode::Fip).go(); }

EngineResult run2ip(const Scenario& scenario) { return Run(scenario, Mode::TwoIp).go(); }

EngineResult runConstruction(const Scenario& scenario, Mode mode) {
  return Run(scenario, mode).go();
}

}  // namespace fiplab
