#include "fiplab/node.hpp"

namespace fiplab {

std::vector<Node> nodesOfLength(int d) {
  std::vector<Node> out;
  if (d < 0) return out;
  out.reserve(std::size_t(1) << d);
  std::string bits(d, '0');
  while (true) {
    out.push_back(Node::fromString(bits));
    int k = d - 1;
    while (k >= 0 && bits[k] == '1') bits[k--] = '0';
    if (k < 0) break;
    bits[k] = '1';
  }
  return out;
}

std::vector<Node> nodesUpToDepth(int maxDepth) {
  std::vector<Node> out;
  for (int d = 0; d <= maxDepth; ++d) {
    auto level = nodesOfLength(d);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

}  // namespace fiplab
