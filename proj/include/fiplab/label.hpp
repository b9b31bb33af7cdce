#pragma once

#include <optional>
#include <string>
#include <tuple>

#include "fiplab/node.hpp"

namespace fiplab {

/// A label that the construction can place on tree nodes.
///
/// Three kinds exist:
///  - Structural: the marker A_sigma tied to one specific node sigma.
///  - Coding: B_{i,j}, owned by strategy i and tied to coding index j.
///  - PriorityCoding: B_{i,j,nu}, the priority-construction variant that
///    additionally remembers the guard prefix nu chosen at placement time.
class Label {
 public:
  enum class Kind { Structural, Coding, PriorityCoding };

  static Label structural(const Node& sigma) { return Label(Kind::Structural, sigma, -1, -1, Node()); }
  static Label coding(int i, int j) { return Label(Kind::Coding, Node(), i, j, Node()); }
  static Label priorityCoding(int i, int j, const Node& nu) { return Label(Kind::PriorityCoding, Node(), i, j, nu); }

  Kind kind() const { return kind_; }
  bool isStructural() const { return kind_ == Kind::Structural; }
  bool isCoding() const { return kind_ != Kind::Structural; }

  /// The node a structural label marks.
  const Node& site() const { return site_; }
  /// Strategy index of a coding label.
  int strategy() const { return i_; }
  /// Coding index of a coding label.
  int codingIndex() const { return j_; }
  /// Guard prefix of a PriorityCoding label.
  const Node& nu() const { return nu_; }

  /// Compact text form used by traces and dumps: A[-], A[010], B[1,0], B[1,0,01].
  /// The root node prints as "-".
  std::string toString() const;

  /// Inverse of toString.
  static Label fromString(const std::string& text);

  friend bool operator==(const Label& a, const Label& b) { return a.key() == b.key(); }
  friend bool operator!=(const Label& a, const Label& b) { return !(a == b); }
  friend bool operator<(const Label& a, const Label& b) { return a.key() < b.key(); }

 private:
  Label(Kind k, const Node& site, int i, int j, const Node& nu)
      : kind_(k), site_(site), i_(i), j_(j), nu_(nu) {}

  std::tuple<int, Node, int, int, Node> key() const {
    return {static_cast<int>(kind_), site_, i_, j_, nu_};
  }

  Kind kind_;
  Node site_;
  int i_ = -1;
  int j_ = -1;
  Node nu_;
};

/// Renders a node for trace fields: "-" for the root, the bit string otherwise.
std::string nodeField(const Node& n);
/// Parses a trace node field.
Node nodeFromField(const std::string& field);

}  // namespace fiplab
