#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fiplab/family.hpp"
#include "fiplab/tree.hpp"

namespace fiplab {

/// A label subset on which one of the exhaustive equivalence scans found
/// the two sides disagreeing.
struct SubsetCounterexample {
  std::vector<int> labels;
  bool leftSide = false;   // the intersection-side verdict
  bool rightSide = false;  // the common-path-side verdict
};

struct LemmaScanResult {
  long long subsetsCovered = 0;  // subsets accounted for, directly or by pruning
  long long subsetsVisited = 0;  // subsets whose both sides were computed
  std::vector<SubsetCounterexample> counterexamples;

  bool clean() const { return counterexamples.empty(); }
};

/// Checks, over every label subset of size 1..maxSubsetSize, that the
/// members' sets have a common element iff some node carries the whole
/// subset on its strict-prefix label set. Exact when maxStage > maxDepth
/// (the final witness pass covers every populated chain).
LemmaScanResult scanIntersectionEqualsChain(const LabeledTree& tree, const SetFamily& family,
                                            int maxSubsetSize);

/// Checks, over every label subset of size 2..maxSubsetSize, that pairwise
/// nonempty intersection of the members is equivalent to a common chain
/// node. This is the priority construction's defining property; the plain
/// construction can violate it.
LemmaScanResult scanPairwiseEqualsChain(const LabeledTree& tree, const SetFamily& family,
                                        int maxSubsetSize);

}  // namespace fiplab
