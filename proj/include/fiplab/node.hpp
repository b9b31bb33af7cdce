#pragma once

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace fiplab {

/// A node of the complete binary tree: a finite string over {0,1}.
/// The empty string is the root. Ordering is length-lexicographic
/// (shorter strings first, then left to right), which is the order
/// used everywhere a deterministic node sweep is required.
class Node {
 public:
  Node() = default;

  static Node root() { return Node(); }

  /// Parses a string of '0'/'1' characters. The empty string is the root.
  static Node fromString(const std::string& bits) {
    for (char c : bits) {
      if (c != '0' && c != '1')
        throw std::invalid_argument("Node::fromString: bad character in \"" + bits + "\"");
    }
    Node n;
    n.bits_ = bits;
    return n;
  }

  const std::string& toString() const { return bits_; }

  std::size_t length() const { return bits_.size(); }
  bool isRoot() const { return bits_.empty(); }

  /// Bit at position i, as 0 or 1.
  int bit(std::size_t i) const { return bits_.at(i) == '1' ? 1 : 0; }

  Node child(int b) const {
    Node n = *this;
    n.bits_.push_back(b ? '1' : '0');
    return n;
  }

  Node parent() const {
    if (isRoot()) throw std::logic_error("Node::parent: root has no parent");
    Node n = *this;
    n.bits_.pop_back();
    return n;
  }

  /// First k bits.
  Node prefix(std::size_t k) const {
    if (k > length()) throw std::out_of_range("Node::prefix: length exceeded");
    Node n;
    n.bits_ = bits_.substr(0, k);
    return n;
  }

  bool isPrefixOf(const Node& other) const {
    return other.bits_.compare(0, bits_.size(), bits_) == 0 &&
           bits_.size() <= other.bits_.size();
  }

  bool isStrictPrefixOf(const Node& other) const {
    return bits_.size() < other.bits_.size() && isPrefixOf(other);
  }

  bool comparableWith(const Node& other) const {
    return isPrefixOf(other) || other.isPrefixOf(*this);
  }

  /// All prefixes including the root and the node itself, shortest first.
  std::vector<Node> prefixes() const {
    std::vector<Node> out;
    out.reserve(length() + 1);
    for (std::size_t k = 0; k <= length(); ++k) out.push_back(prefix(k));
    return out;
  }

  friend bool operator==(const Node& a, const Node& b) { return a.bits_ == b.bits_; }
  friend bool operator!=(const Node& a, const Node& b) { return !(a == b); }

  // Length-lex order.
  friend bool operator<(const Node& a, const Node& b) {
    if (a.bits_.size() != b.bits_.size()) return a.bits_.size() < b.bits_.size();
    return a.bits_ < b.bits_;
  }

 private:
  std::string bits_;
};

/// All nodes of length exactly d, in lexicographic order.
std::vector<Node> nodesOfLength(int d);

/// All nodes of length 0..maxDepth, in length-lex order.
std::vector<Node> nodesUpToDepth(int maxDepth);

}  // namespace fiplab
