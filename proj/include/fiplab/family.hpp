#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "fiplab/node.hpp"

namespace fiplab {

/// The computable set family X_0, X_1, ... derived from a construction run.
///
/// Witness numbering is split: odd numbers implement the stage rule (a fresh
/// odd witness per (stage, node), entering every set whose label sits on the
/// node's chain), and the even number 2k is the identity tag that only set k
/// receives, at the stage its label first appears. Every witness has exactly
/// one origin record; rule witnesses satisfy the chain-membership law, tag
/// witnesses are marked as tags.
class SetFamily {
 public:
  struct Origin {
    int stage = 0;
    Node node;
    bool identityTag = false;
  };

  /// Creates set k (k must equal setCount()) and gives it the tag witness 2k.
  void addSet(int stage, const Node& firstNode);

  /// Adds the next odd rule witness at (stage, node) to the given sets.
  /// Returns the witness.
  int addRuleWitness(int stage, const Node& node, const std::set<int>& memberSets);

  int setCount() const { return static_cast<int>(sets_.size()); }
  const std::set<int>& witnessesOf(int k) const { return sets_.at(k); }
  const std::vector<std::set<int>>& sets() const { return sets_; }

  const std::map<int, Origin>& origins() const { return origins_; }
  const Origin& originOf(int witness) const { return origins_.at(witness); }

  int nextWitness() const { return nextOdd_; }

  bool contains(int k, int witness) const { return sets_.at(k).count(witness) > 0; }

  friend bool operator==(const SetFamily& a, const SetFamily& b);

 private:
  std::vector<std::set<int>> sets_;
  std::map<int, Origin> origins_;
  int nextOdd_ = 1;
};

/// A finite oracle: a set of label indices, optionally with an explicit
/// enumeration order (a sequence whose range must equal the set).
struct OracleSet {
  std::set<int> indices;
  std::optional<std::vector<int>> enumeration;

  /// True when the enumeration, if present, has range exactly `indices`.
  bool enumerationConsistent() const;

  /// The enumeration if present, otherwise indices in ascending order.
  std::vector<int> enumerationOrDefault() const;
};

}  // namespace fiplab
