#include "fiplab/label.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace fiplab {

std::string nodeField(const Node& n) {
  return n.isRoot() ? "-" : n.toString();
}

Node nodeFromField(const std::string& field) {
  if (field == "-") return Node::root();
  return Node::fromString(field);
}

std::string Label::toString() const {
  std::ostringstream out;
  switch (kind_) {
    case Kind::Structural:
      out << "A[" << nodeField(site_) << "]";
      break;
    case Kind::Coding:
      out << "B[" << i_ << "," << j_ << "]";
      break;
    case Kind::PriorityCoding:
      out << "B[" << i_ << "," << j_ << "," << nodeField(nu_) << "]";
      break;
  }
  return out.str();
}

Label Label::fromString(const std::string& text) {
  if (text.size() < 3 || text[1] != '[' || text.back() != ']')
    throw std::invalid_argument("Label::fromString: bad form \"" + text + "\"");
  std::string body = text.substr(2, text.size() - 3);
  if (text[0] == 'A') return structural(nodeFromField(body));
  if (text[0] != 'B') throw std::invalid_argument("Label::fromString: bad kind \"" + text + "\"");
  std::vector<std::string> parts;
  std::string cur;
  for (char c : body) {
    if (c == ',') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  if (parts.size() == 2) return coding(std::stoi(parts[0]), std::stoi(parts[1]));
  if (parts.size() == 3)
    return priorityCoding(std::stoi(parts[0]), std::stoi(parts[1]), nodeFromField(parts[2]));
  throw std::invalid_argument("Label::fromString: bad arity \"" + text + "\"");
}

}  // namespace fiplab
