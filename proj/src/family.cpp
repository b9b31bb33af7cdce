#include "fiplab/family.hpp"

#include <algorithm>
#include <stdexcept>

namespace fiplab {

void SetFamily::addSet(int stage, const Node& firstNode) {
  int k = setCount();
  sets_.emplace_back();
  int tag = 2 * k;
  sets_[k].insert(tag);
  origins_[tag] = Origin{stage, firstNode, true};
}

int SetFamily::addRuleWitness(int stage, const Node& node, const std::set<int>& memberSets) {
  int witness = nextOdd_;
  nextOdd_ += 2;
  for (int k : memberSets) sets_.at(k).insert(witness);
  origins_[witness] = Origin{stage, node, false};
  return witness;
}

bool operator==(const SetFamily& a, const SetFamily& b) {
  if (a.sets_ != b.sets_ || a.nextOdd_ != b.nextOdd_) return false;
  if (a.origins_.size() != b.origins_.size()) return false;
  for (const auto& [w, origin] : a.origins_) {
    auto it = b.origins_.find(w);
    if (it == b.origins_.end()) return false;
    const auto& other = it->second;
    if (origin.stage != other.stage || origin.node != other.node ||
        origin.identityTag != other.identityTag)
      return false;
  }
  return true;
}

bool OracleSet::enumerationConsistent() const {
  if (!enumeration) return true;
  std::set<int> range(enumeration->begin(), enumeration->end());
  return range == indices && enumeration->size() == indices.size();
}

std::vector<int> OracleSet::enumerationOrDefault() const {
  if (enumeration) return *enumeration;
  return std::vector<int>(indices.begin(), indices.end());
}

}  // namespace fiplab
