#include "fiplab/tree.hpp"

#include <stdexcept>

namespace fiplab {

std::string modeName(Mode m) {
  return m == Mode::Fip ? "fip" : "2ip";
}

LabeledTree::PlaceResult LabeledTree::placeLabel(const Label& label, const Node& node, int stage) {
  if (static_cast<int>(node.length()) > maxDepth_)
    throw std::logic_error("LabeledTree::placeLabel: node below depth bound");
  PlaceResult result{};
  auto it = indexOf_.find(label);
  if (it == indexOf_.end()) {
    result.index = labelCount();
    result.newLabel = true;
    indexOf_.emplace(label, result.index);
    indexOrder_.push_back(label);
    indexFirstStage_.push_back(stage);
  } else {
    result.index = it->second;
  }
  auto& atNode = placements_[node];
  result.newPlacement = atNode.emplace(result.index, stage).second;
  return result;
}

std::optional<int> LabeledTree::indexOf(const Label& label) const {
  auto it = indexOf_.find(label);
  if (it == indexOf_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::pair<int, int>> LabeledTree::labelsAt(const Node& node) const {
  std::vector<std::pair<int, int>> out;
  auto it = placements_.find(node);
  if (it == placements_.end()) return out;
  out.assign(it->second.begin(), it->second.end());
  return out;
}

std::vector<std::pair<Node, int>> LabeledTree::placementsOf(int index) const {
  std::vector<std::pair<Node, int>> out;
  for (const auto& [node, labels] : placements_) {
    auto it = labels.find(index);
    if (it != labels.end()) out.emplace_back(node, it->second);
  }
  return out;
}

std::optional<int> LabeledTree::structuralIndexOf(const Node& node) const {
  return indexOf(Label::structural(node));
}

std::set<int> LabeledTree::properTilde(const Node& sigma, std::optional<int> stageBound) const {
  std::set<int> out;
  for (std::size_t k = 0; k < sigma.length(); ++k) {
    auto it = placements_.find(sigma.prefix(k));
    if (it == placements_.end()) continue;
    for (const auto& [index, stage] : it->second)
      if (!stageBound || stage <= *stageBound) out.insert(index);
  }
  return out;
}

std::set<int> LabeledTree::inclusiveTilde(const Node& sigma, std::optional<int> stageBound) const {
  std::set<int> out = properTilde(sigma, stageBound);
  auto it = placements_.find(sigma);
  if (it != placements_.end()) {
    for (const auto& [index, stage] : it->second)
      if (!stageBound || stage <= *stageBound) out.insert(index);
  }
  return out;
}

bool LabeledTree::hasPriorityCodingOnExtension(const Node& p, int strategyBound) const {
  for (const auto& [node, labels] : placements_) {
    if (!p.isPrefixOf(node)) continue;
    for (const auto& [index, stage] : labels) {
      const Label& label = indexOrder_[index];
      if (label.isCoding() && label.strategy() < strategyBound) return true;
    }
  }
  return false;
}

bool LabeledTree::strategyActedOnChain(const Node& node, int strategy) const {
  // The root is exempt: discarded labels accumulate there without blocking.
  for (std::size_t k = 1; k <= node.length(); ++k) {
    auto it = placements_.find(node.prefix(k));
    if (it == placements_.end()) continue;
    for (const auto& [index, stage] : it->second) {
      const Label& label = indexOrder_[index];
      if (label.isCoding() && label.strategy() == strategy) return true;
    }
  }
  return false;
}

}  // namespace fiplab
