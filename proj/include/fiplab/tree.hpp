#pragma once

#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "fiplab/label.hpp"
#include "fiplab/node.hpp"

namespace fiplab {

enum class Mode { Fip, TwoIp };

std::string modeName(Mode m);

/// The labeled binary tree a construction run produces.
///
/// Every label that ever appears gets a global index in first-appearance
/// order; set X_k of the derived family corresponds to index k. A label may
/// sit on several nodes (it is placed again whenever its strategy acts, and
/// priority-mode discards re-place it on the root); each (label, node) pair
/// keeps the stage of its first placement and never changes afterwards.
class LabeledTree {
 public:
  LabeledTree(Mode mode, int maxDepth) : mode_(mode), maxDepth_(maxDepth) {}

  Mode mode() const { return mode_; }
  int maxDepth() const { return maxDepth_; }

  struct PlaceResult {
    int index;          // global label index
    bool newLabel;      // first appearance anywhere
    bool newPlacement;  // first placement on this node
  };

  /// Records a placement. Re-placing a label on a node it already carries
  /// is a no-op that keeps the original stage.
  PlaceResult placeLabel(const Label& label, const Node& node, int stage);

  int labelCount() const { return static_cast<int>(indexOrder_.size()); }
  const Label& labelAt(int index) const { return indexOrder_.at(index); }
  int firstStageOf(int index) const { return indexFirstStage_.at(index); }
  std::optional<int> indexOf(const Label& label) const;

  /// Labels on one node as (index, stage placed), index-ascending.
  std::vector<std::pair<int, int>> labelsAt(const Node& node) const;

  /// All placements of one label as (node, stage), node length-lex.
  std::vector<std::pair<Node, int>> placementsOf(int index) const;

  /// Nodes that carry at least one label, length-lex, with their labels.
  const std::map<Node, std::map<int, int>>& placements() const { return placements_; }

  /// Index of the structural label of a node, if it was ever placed.
  std::optional<int> structuralIndexOf(const Node& node) const;

  /// Indices of labels on strict prefixes of sigma. With a stage bound,
  /// only placements made at stages <= bound count.
  std::set<int> properTilde(const Node& sigma, std::optional<int> stageBound = std::nullopt) const;

  /// Indices of labels on prefixes of sigma including sigma itself.
  /// Equals properTilde of either child of sigma.
  std::set<int> inclusiveTilde(const Node& sigma, std::optional<int> stageBound = std::nullopt) const;

  /// The bounded approximation of a path's label set: labels along the
  /// chain of the given path prefix, endpoints included.
  std::set<int> pathTilde(const Node& pathPrefix) const { return inclusiveTilde(pathPrefix); }

  /// True if some node tau with p as a prefix (tau = p allowed) carries a
  /// coding label owned by a strategy with index < strategyBound.
  bool hasPriorityCodingOnExtension(const Node& p, int strategyBound) const;

  /// True if some strict non-root prefix of node, or node itself, carries a
  /// coding label owned by the given strategy.
  bool strategyActedOnChain(const Node& node, int strategy) const;

 private:
  Mode mode_;
  int maxDepth_;
  std::map<Node, std::map<int, int>> placements_;  // node -> index -> stage
  std::vector<Label> indexOrder_;
  std::vector<int> indexFirstStage_;
  std::map<Label, int> indexOf_;
};

}  // namespace fiplab
