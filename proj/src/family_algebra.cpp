#include "fiplab/family_algebra.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "fiplab/errors.hpp"

namespace fiplab {

namespace {

std::set<int> intersect(const std::set<int>& a, const std::set<int>& b) {
  std::set<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.begin()));
  return out;
}

/// Calls fn with every strictly increasing index tuple of the given size.
/// Returns false as soon as fn does.
bool forEachCombination(int count, int size, const std::function<bool(const std::vector<int>&)>& fn) {
  std::vector<int> pick(size);
  std::function<bool(int, int)> rec = [&](int level, int start) {
    if (level == size) return fn(pick);
    for (int k = start; k < count; ++k) {
      pick[level] = k;
      if (!rec(level + 1, k + 1)) return false;
    }
    return true;
  };
  return rec(0, 0);
}

}  // namespace

std::set<int> intersectionOf(const FiniteFamily& family, const std::vector<int>& indices) {
  if (indices.empty()) throw std::logic_error("intersectionOf: empty selection");
  std::set<int> out = family.member(indices[0]);
  for (std::size_t k = 1; k < indices.size() && !out.empty(); ++k)
    out = intersect(out, family.member(indices[k]));
  return out;
}

bool hasFip(const FiniteFamily& family) {
  if (family.size() == 0) return true;
  std::vector<int> all(family.size());
  for (int k = 0; k < family.size(); ++k) all[k] = k;
  return !intersectionOf(family, all).empty();
}

bool hasNip(const FiniteFamily& family, int n) {
  for (int size = 1; size <= std::min(n, family.size()); ++size) {
    bool ok = forEachCombination(family.size(), size, [&](const std::vector<int>& pick) {
      return !intersectionOf(family, pick).empty();
    });
    if (!ok) return false;
  }
  return true;
}

std::vector<int> greedyMaximalFip(const FiniteFamily& family) {
  bool anyNonempty = std::any_of(family.members.begin(), family.members.end(),
                                 [](const std::set<int>& m) { return !m.empty(); });
  if (!anyNonempty) throw AllEmpty("greedyMaximalFip: every member is empty");
  std::vector<int> chosen;
  std::set<int> running;
  for (int k = 0; k < family.size(); ++k) {
    std::set<int> candidate = chosen.empty() ? family.member(k) : intersect(running, family.member(k));
    if (!candidate.empty()) {
      chosen.push_back(k);
      running = std::move(candidate);
    }
  }
  return chosen;
}

std::vector<int> forcingMaximalFip(const FiniteFamily& family) {
  bool anyNonempty = std::any_of(family.members.begin(), family.members.end(),
                                 [](const std::set<int>& m) { return !m.empty(); });
  if (!anyNonempty) throw AllEmpty("forcingMaximalFip: every member is empty");
  // Conditions are finite partial maps into member indices whose chosen
  // members intersect. Extending never removes entries, so the chain's
  // union decides each n in turn: n joins the range when some extension
  // could put it there, i.e. when the current common intersection still
  // meets member n.
  std::vector<std::pair<int, int>> condition;  // (domain point, member index)
  std::set<int> common;
  int nextDomainPoint = 0;
  for (int n = 0; n < family.size(); ++n) {
    std::set<int> extended =
        condition.empty() ? family.member(n) : intersect(common, family.member(n));
    if (!extended.empty()) {
      condition.emplace_back(nextDomainPoint++, n);
      common = std::move(extended);
    }
  }
  std::vector<int> range;
  range.reserve(condition.size());
  for (const auto& [point, member] : condition) range.push_back(member);
  std::sort(range.begin(), range.end());
  return range;
}

FiniteFamily reduceNipToFip(const FiniteFamily& family, int n) {
  if (n < 2) throw std::invalid_argument("reduceNipToFip: n must be >= 2");
  FiniteFamily out;
  out.members.resize(family.size());
  int fresh = 0;
  for (int size = 1; size <= family.size(); ++size) {
    forEachCombination(family.size(), size, [&](const std::vector<int>& pick) {
      FiniteFamily restriction;
      for (int k : pick) restriction.members.push_back(family.member(k));
      if (hasNip(restriction, n)) {
        for (int k : pick) out.members[k].insert(fresh);
        ++fresh;
      }
      return true;
    });
  }
  return out;
}

std::optional<Node> labelSetOnCommonPath(const LabeledTree& tree, const std::set<int>& labels) {
  for (int k : labels)
    if (k < 0 || k >= tree.labelCount())
      throw std::out_of_range("labelSetOnCommonPath: label index outside the tree");
  // Children of depth-bound nodes are included: their strict-prefix label
  // sets are the inclusive label sets of the deepest real nodes.
  for (int d = 0; d <= tree.maxDepth() + 1; ++d) {
    for (const Node& sigma : nodesOfLength(d)) {
      std::set<int> chain = tree.properTilde(sigma);
      if (std::includes(chain.begin(), chain.end(), labels.begin(), labels.end()))
        return sigma;
    }
  }
  return std::nullopt;
}

}  // namespace fiplab
