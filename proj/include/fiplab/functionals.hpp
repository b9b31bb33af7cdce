#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fiplab/family.hpp"
#include "fiplab/scenario.hpp"
#include "fiplab/tree.hpp"

namespace fiplab {

/// Result of applying one of the oracle functionals.
struct FunctionalOutcome {
  enum class Kind { Converged, Diverged, IllFormedOracle };

  Kind kind = Kind::Diverged;
  Node bits;                // path-recovery output
  int bit = -1;             // single-bit output
  std::string reason;       // ill-formedness explanation

  static FunctionalOutcome convergedBits(const Node& n);
  static FunctionalOutcome convergedBit(int b);
  static FunctionalOutcome diverged();
  static FunctionalOutcome illFormed(const std::string& reason);

  bool converged() const { return kind == Kind::Converged; }
};

/// Path recovery: the unique sigma of length nBits whose structural label
/// index is in the oracle. IllFormedOracle when the oracle holds structural
/// labels of incomparable nodes; Diverged when no length-nBits structural
/// label is present.
FunctionalOutcome phi(const LabeledTree& tree, const OracleSet& oracle, int nBits);

/// Single-bit decoding for plain-mode coding labels. Searches stages
/// s = 0..budget for the first at which either clause holds:
///   (1) j is in K_s                                      -> 1
///   (2) some oracle element at enumeration position r < s has label
///       B_{i,j} and its index first appeared by stage s  -> 0
/// Clause (1) wins a same-stage tie. Diverged when the budget runs out.
FunctionalOutcome psiFip(const LabeledTree& tree, const Scenario& scenario, int i,
                         const OracleSet& oracle, int j, int budget);

/// Priority-mode variant: clause (2) requires the exact label B_{i,j,nu}.
FunctionalOutcome psi2ip(const LabeledTree& tree, const Scenario& scenario, int i,
                         const Node& nu, const OracleSet& oracle, int j, int budget);

/// Which strategy's labels a decoding run should look for; `nu` present
/// selects the priority-mode variant.
struct StrategySelector {
  int i = 0;
  std::optional<Node> nu;
};

/// Applies the matching psi at every j < jMax.
std::map<int, FunctionalOutcome> decodeK(const LabeledTree& tree, const Scenario& scenario,
                                         const StrategySelector& selector, const OracleSet& oracle,
                                         int budget);

enum class MeetAvoidKind { Meets, Avoids, Undecided };

struct MeetAvoidResult {
  MeetAvoidKind kind = MeetAvoidKind::Undecided;
  std::optional<Node> witness;
};

/// Classifies a path prefix against one scripted enumeration:
///  - Meets(tau): some enumerated node tau is a prefix of yd;
///  - Avoids(tau): the script is exhausted and some prefix tau of yd has no
///    enumerated extension (shortest such tau reported);
///  - Undecided otherwise.
MeetAvoidResult meetsOrAvoids(int depthBound, const Node& yd, const std::vector<CeEvent>& events,
                              bool exhausted);

}  // namespace fiplab
