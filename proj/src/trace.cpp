#include "fiplab/trace.hpp"

#include <sstream>
#include <stdexcept>

namespace fiplab {

namespace {

std::vector<std::string> splitFields(const std::string& line) {
  std::vector<std::string> fields;
  std::istringstream in(line);
  std::string field;
  while (in >> field) fields.push_back(field);
  return fields;
}

}  // namespace

std::string renderRecord(const TraceRecord& record) {
  std::ostringstream out;
  if (const auto* p = std::get_if<LabelPlaced>(&record)) {
    out << "PLACE " << p->label.toString() << " " << nodeField(p->node) << " " << p->stage << " "
        << p->reason;
  } else if (const auto* d = std::get_if<LabelDiscarded>(&record)) {
    out << "DISCARD " << d->label.toString() << " " << d->stage << " " << d->trigger.toString()
        << "@" << nodeField(d->triggerNode);
  } else if (const auto* w = std::get_if<WitnessAdded>(&record)) {
    out << "WITNESS " << w->witness << " " << w->stage << " " << nodeField(w->node);
  } else {
    const auto& s = std::get<EventSkipped>(record);
    out << "SKIP " << s.strategy << " " << s.stage << " " << nodeField(s.node) << " " << s.reason;
  }
  return out.str();
}

TraceRecord parseRecord(const std::string& line) {
  auto fields = splitFields(line);
  if (fields.empty()) throw std::invalid_argument("parseRecord: empty line");
  const std::string& tag = fields[0];
  auto arity = [&](std::size_t n) {
    if (fields.size() != n + 1)
      throw std::invalid_argument("parseRecord: bad field count in \"" + line + "\"");
  };
  if (tag == "PLACE") {
    arity(4);
    LabelPlaced p;
    p.label = Label::fromString(fields[1]);
    p.node = nodeFromField(fields[2]);
    p.stage = std::stoi(fields[3]);
    p.reason = fields[4];
    return p;
  }
  if (tag == "DISCARD") {
    arity(3);
    auto at = fields[3].rfind('@');
    if (at == std::string::npos)
      throw std::invalid_argument("parseRecord: bad trigger in \"" + line + "\"");
    return LabelDiscarded(Label::fromString(fields[1]), std::stoi(fields[2]),
                          Label::fromString(fields[3].substr(0, at)),
                          nodeFromField(fields[3].substr(at + 1)));
  }
  if (tag == "WITNESS") {
    arity(3);
    WitnessAdded w;
    w.witness = std::stoi(fields[1]);
    w.stage = std::stoi(fields[2]);
    w.node = nodeFromField(fields[3]);
    return w;
  }
  if (tag == "SKIP") {
    arity(4);
    EventSkipped s;
    s.strategy = std::stoi(fields[1]);
    s.stage = std::stoi(fields[2]);
    s.node = nodeFromField(fields[3]);
    s.reason = fields[4];
    return s;
  }
  throw std::invalid_argument("parseRecord: unknown tag in \"" + line + "\"");
}

std::string renderTrace(const ConstructionTrace& trace) {
  std::ostringstream out;
  for (const auto& record : trace.records) out << renderRecord(record) << "\n";
  return out.str();
}

ConstructionTrace parseTrace(const std::string& text) {
  ConstructionTrace trace;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    trace.records.push_back(parseRecord(line));
  }
  return trace;
}

ReplayResult replayTrace(const ConstructionTrace& trace, Mode mode, int maxDepth) {
  ReplayResult result{LabeledTree(mode, maxDepth), SetFamily()};
  auto place = [&result](const Label& label, const Node& node, int stage) {
    auto placed = result.tree.placeLabel(label, node, stage);
    if (placed.newLabel) result.family.addSet(stage, node);
  };
  for (const auto& record : trace.records) {
    if (const auto* p = std::get_if<LabelPlaced>(&record)) {
      place(p->label, p->node, p->stage);
    } else if (const auto* d = std::get_if<LabelDiscarded>(&record)) {
      place(d->label, Node::root(), d->stage);
    } else if (const auto* w = std::get_if<WitnessAdded>(&record)) {
      int witness = result.family.addRuleWitness(w->stage, w->node,
                                                 result.tree.inclusiveTilde(w->node));
      if (witness != w->witness)
        throw std::invalid_argument("replayTrace: witness numbering out of step");
    }
  }
  return result;
}

}  // namespace fiplab
