#pragma once

#include <optional>
#include <set>
#include <vector>

#include "fiplab/node.hpp"
#include "fiplab/tree.hpp"

namespace fiplab {

/// A plain finite family of finite sets of naturals. Repetitions are
/// allowed; members are addressed by index.
struct FiniteFamily {
  std::vector<std::set<int>> members;

  int size() const { return static_cast<int>(members.size()); }
  const std::set<int>& member(int k) const { return members.at(k); }
};

/// Intersection of the selected members; all members when `indices` is
/// empty is the convention-free case and returns nullopt-like semantics via
/// wholeIntersectionNonempty below, so this helper requires a nonempty
/// selection.
std::set<int> intersectionOf(const FiniteFamily& family, const std::vector<int>& indices);

/// Whole-family intersection nonempty; an empty family qualifies vacuously.
/// For a finite family this is exactly the finite intersection property.
bool hasFip(const FiniteFamily& family);

/// Every subfamily of at most n members has nonempty intersection.
/// Subfamilies smaller than n count, so for n >= 1 an empty member fails.
bool hasNip(const FiniteFamily& family, int n);

/// Single ascending scan; index k joins the result iff the members chosen
/// so far plus member k still intersect. Throws AllEmpty when every member
/// is empty. The result is a maximal subfamily with nonempty intersection.
std::vector<int> greedyMaximalFip(const FiniteFamily& family);

/// Same selection reached along the forcing route: a chain of finite
/// conditions (partial maps into member indices with intersecting range),
/// where step n meets the dense set "n is in the range, or no extension can
/// put it there". Returns the range of the chain's union, ascending.
std::vector<int> forcingMaximalFip(const FiniteFamily& family);

/// The n-ary to binary-style reduction: scans every nonempty index subset
/// (size-then-lex order); each subset whose restriction satisfies hasNip(n)
/// receives one fresh element, put into exactly its members. A finite index
/// set has the finite intersection property in the output iff it satisfies
/// hasNip(n) in the input.
FiniteFamily reduceNipToFip(const FiniteFamily& family, int n);

/// First node sigma (length-lex, lengths 0..maxDepth+1) whose strict-prefix
/// label set contains all the given indices. Children of depth-maxDepth
/// nodes are included so chains ending at the depth bound are found.
std::optional<Node> labelSetOnCommonPath(const LabeledTree& tree, const std::set<int>& labels);

}  // namespace fiplab
