#include "fiplab/functionals.hpp"

#include <algorithm>

#include "fiplab/errors.hpp"

namespace fiplab {

FunctionalOutcome FunctionalOutcome::convergedBits(const Node& n) {
  FunctionalOutcome out;
  out.kind = Kind::Converged;
  out.bits = n;
  return out;
}

FunctionalOutcome FunctionalOutcome::convergedBit(int b) {
  FunctionalOutcome out;
  out.kind = Kind::Converged;
  out.bit = b;
  return out;
}

FunctionalOutcome FunctionalOutcome::diverged() { return FunctionalOutcome(); }

FunctionalOutcome FunctionalOutcome::illFormed(const std::string& reason) {
  FunctionalOutcome out;
  out.kind = Kind::IllFormedOracle;
  out.reason = reason;
  return out;
}

FunctionalOutcome phi(const LabeledTree& tree, const OracleSet& oracle, int nBits) {
  // Structural labels in the oracle, sorted by site length. Any two of them
  // must mark comparable nodes; sorted by length, it suffices that each is
  // a prefix of the next.
  std::vector<Node> sites;
  for (int index : oracle.indices) {
    if (index < 0 || index >= tree.labelCount()) continue;
    const Label& label = tree.labelAt(index);
    if (label.isStructural()) sites.push_back(label.site());
  }
  std::sort(sites.begin(), sites.end(),
            [](const Node& a, const Node& b) { return a.length() < b.length(); });
  for (std::size_t k = 1; k < sites.size(); ++k) {
    if (!sites[k - 1].isPrefixOf(sites[k]))
      return FunctionalOutcome::illFormed("structural labels of incomparable nodes: " +
                                          sites[k - 1].toString() + " and " + sites[k].toString());
  }
  for (const Node& site : sites)
    if (static_cast<int>(site.length()) == nBits) return FunctionalOutcome::convergedBits(site);
  return FunctionalOutcome::diverged();
}

namespace {

FunctionalOutcome psiSearch(const LabeledTree& tree, const Scenario& scenario, const Label& target,
                            const OracleSet& oracle, int j, int budget) {
  if (!oracle.enumerationConsistent())
    return FunctionalOutcome::illFormed("oracle enumeration range differs from its index set");
  std::vector<int> enumeration = oracle.enumerationOrDefault();
  std::optional<int> targetIndex = tree.indexOf(target);
  for (int s = 0; s <= budget; ++s) {
    if (kApprox(scenario, s).count(j)) return FunctionalOutcome::convergedBit(1);
    if (targetIndex) {
      int window = std::min<int>(s, static_cast<int>(enumeration.size()));
      for (int r = 0; r < window; ++r) {
        if (enumeration[r] == *targetIndex && tree.firstStageOf(*targetIndex) <= s)
          return FunctionalOutcome::convergedBit(0);
      }
    }
  }
  return FunctionalOutcome::diverged();
}

}  // namespace

FunctionalOutcome psiFip(const LabeledTree& tree, const Scenario& scenario, int i,
                         const OracleSet& oracle, int j, int budget) {
  return psiSearch(tree, scenario, Label::coding(i, j), oracle, j, budget);
}

FunctionalOutcome psi2ip(const LabeledTree& tree, const Scenario& scenario, int i,
                         const Node& nu, const OracleSet& oracle, int j, int budget) {
  return psiSearch(tree, scenario, Label::priorityCoding(i, j, nu), oracle, j, budget);
}

std::map<int, FunctionalOutcome> decodeK(const LabeledTree& tree, const Scenario& scenario,
                                         const StrategySelector& selector, const OracleSet& oracle,
                                         int budget) {
  std::map<int, FunctionalOutcome> out;
  for (int j = 0; j < scenario.jMax; ++j) {
    out[j] = selector.nu ? psi2ip(tree, scenario, selector.i, *selector.nu, oracle, j, budget)
                         : psiFip(tree, scenario, selector.i, oracle, j, budget);
  }
  return out;
}

MeetAvoidResult meetsOrAvoids(int depthBound, const Node& yd, const std::vector<CeEvent>& events,
                              bool exhausted) {
  if (static_cast<int>(yd.length()) > depthBound)
    throw ScenarioInvalid("meetsOrAvoids: path prefix deeper than the bound");
  for (const CeEvent& event : events)
    if (static_cast<int>(event.node.length()) > depthBound)
      throw ScenarioInvalid("meetsOrAvoids: event node deeper than the bound");

  for (const CeEvent& event : events) {
    if (event.node.isPrefixOf(yd)) return MeetAvoidResult{MeetAvoidKind::Meets, event.node};
  }
  if (exhausted) {
    for (std::size_t k = 0; k <= yd.length(); ++k) {
      Node p = yd.prefix(k);
      bool extended = std::any_of(events.begin(), events.end(),
                                  [&p](const CeEvent& e) { return p.isPrefixOf(e.node); });
      if (!extended) return MeetAvoidResult{MeetAvoidKind::Avoids, p};
    }
  }
  return MeetAvoidResult{MeetAvoidKind::Undecided, std::nullopt};
}

}  // namespace fiplab
