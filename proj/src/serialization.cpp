#include "fiplab/serialization.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "fiplab/errors.hpp"

namespace fiplab {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json parseOrThrow(const std::string& text, const char* what) {
  ordered_json j = ordered_json::parse(text, nullptr, false);
  if (j.is_discarded())
    throw ScenarioInvalid(std::string(what) + ": not valid JSON");
  return j;
}

int intField(const ordered_json& j, const char* key, const char* where) {
  if (!j.contains(key) || !j[key].is_number_integer())
    throw ScenarioInvalid(std::string(where) + ": missing integer field '" + key + "'");
  return j[key].get<int>();
}

std::string stringField(const ordered_json& j, const char* key, const char* where) {
  if (!j.contains(key) || !j[key].is_string())
    throw ScenarioInvalid(std::string(where) + ": missing string field '" + key + "'");
  return j[key].get<std::string>();
}

Node parseNode(const std::string& bits, const char* where) {
  try {
    return Node::fromString(bits);
  } catch (const std::invalid_argument& e) {
    throw ScenarioInvalid(std::string(where) + ": " + e.what());
  }
}

}  // namespace

std::string scenarioToText(const Scenario& scenario) {
  ordered_json j;
  j["maxStage"] = scenario.maxStage;
  j["maxDepth"] = scenario.maxDepth;
  j["jMax"] = scenario.jMax;
  j["iMax"] = scenario.iMax;
  j["ceSets"] = ordered_json::array();
  for (const auto& [i, events] : scenario.ceSets) {
    ordered_json entry;
    entry["i"] = i;
    entry["events"] = ordered_json::array();
    for (const CeEvent& e : events) {
      ordered_json ev;
      ev["stage"] = e.stage;
      ev["node"] = e.node.toString();
      entry["events"].push_back(ev);
    }
    j["ceSets"].push_back(entry);
  }
  j["kEvents"] = ordered_json::array();
  for (const KEvent& e : scenario.kEvents) {
    ordered_json ev;
    ev["stage"] = e.stage;
    ev["j"] = e.j;
    j["kEvents"].push_back(ev);
  }
  return j.dump(2) + "\n";
}

Scenario scenarioFromText(const std::string& text) {
  ordered_json j = parseOrThrow(text, "scenario");
  if (!j.is_object()) throw ScenarioInvalid("scenario: top level must be an object");
  Scenario scenario;
  scenario.maxStage = intField(j, "maxStage", "scenario");
  scenario.maxDepth = intField(j, "maxDepth", "scenario");
  scenario.jMax = intField(j, "jMax", "scenario");
  scenario.iMax = intField(j, "iMax", "scenario");
  if (j.contains("ceSets")) {
    if (!j["ceSets"].is_array()) throw ScenarioInvalid("scenario: ceSets must be a list");
    for (const auto& entry : j["ceSets"]) {
      int i = intField(entry, "i", "ceSets entry");
      if (scenario.ceSets.count(i))
        throw ScenarioInvalid("scenario: duplicate ceSets entry for i=" + std::to_string(i));
      auto& events = scenario.ceSets[i];
      if (!entry.contains("events") || !entry["events"].is_array())
        throw ScenarioInvalid("ceSets entry: missing events list");
      for (const auto& ev : entry["events"]) {
        CeEvent e;
        e.stage = intField(ev, "stage", "ce event");
        e.node = parseNode(stringField(ev, "node", "ce event"), "ce event");
        events.push_back(e);
      }
    }
  }
  if (j.contains("kEvents")) {
    if (!j["kEvents"].is_array()) throw ScenarioInvalid("scenario: kEvents must be a list");
    for (const auto& ev : j["kEvents"]) {
      KEvent e;
      e.stage = intField(ev, "stage", "k event");
      e.j = intField(ev, "j", "k event");
      scenario.kEvents.push_back(e);
    }
  }
  return scenario;
}

Scenario loadScenarioFile(const std::string& path) {
  return scenarioFromText(readTextFile(path));
}

void writeTextFile(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << text;
  if (!out) throw std::runtime_error("write failed: " + path);
}

std::string readTextFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string treeToText(const LabeledTree& tree) {
  ordered_json j;
  j["mode"] = modeName(tree.mode());
  j["maxDepth"] = tree.maxDepth();
  j["labels"] = ordered_json::array();
  for (int k = 0; k < tree.labelCount(); ++k) {
    ordered_json entry;
    entry["index"] = k;
    entry["label"] = tree.labelAt(k).toString();
    entry["firstStage"] = tree.firstStageOf(k);
    j["labels"].push_back(entry);
  }
  j["placements"] = ordered_json::array();
  for (const auto& [node, byIndex] : tree.placements()) {
    ordered_json entry;
    entry["node"] = node.toString();
    entry["labels"] = ordered_json::array();
    for (const auto& [index, stage] : byIndex) {
      ordered_json cell;
      cell["index"] = index;
      cell["stage"] = stage;
      entry["labels"].push_back(cell);
    }
    j["placements"].push_back(entry);
  }
  return j.dump(2) + "\n";
}

std::string familyToText(const SetFamily& family, const LabeledTree& tree) {
  ordered_json j;
  j["sets"] = ordered_json::array();
  for (int k = 0; k < family.setCount(); ++k) {
    ordered_json entry;
    entry["index"] = k;
    entry["label"] = tree.labelAt(k).toString();
    entry["elements"] = family.witnessesOf(k);
    j["sets"].push_back(entry);
  }
  j["origins"] = ordered_json::array();
  for (const auto& [witness, origin] : family.origins()) {
    ordered_json entry;
    entry["witness"] = witness;
    entry["stage"] = origin.stage;
    entry["node"] = origin.node.toString();
    entry["identityTag"] = origin.identityTag;
    j["origins"].push_back(entry);
  }
  return j.dump(2) + "\n";
}

std::string craftedToText(const CraftedScenario& crafted) {
  ordered_json j;
  j["mode"] = modeName(crafted.mode);
  j["targetPath"] = crafted.targetPath.toString();
  j["strategy"] = crafted.strategy;
  j["nu0"] = crafted.nu0.toString();
  j["margin"] = crafted.margin;
  j["scenario"] = ordered_json::parse(scenarioToText(crafted.scenario));
  return j.dump(2) + "\n";
}

CraftedScenario craftedFromText(const std::string& text) {
  ordered_json j = parseOrThrow(text, "crafted scenario");
  CraftedScenario crafted;
  std::string mode = stringField(j, "mode", "crafted scenario");
  if (mode == modeName(Mode::Fip)) {
    crafted.mode = Mode::Fip;
  } else if (mode == modeName(Mode::TwoIp)) {
    crafted.mode = Mode::TwoIp;
  } else {
    throw ScenarioInvalid("crafted scenario: unknown mode '" + mode + "'");
  }
  crafted.targetPath = parseNode(stringField(j, "targetPath", "crafted scenario"), "crafted scenario");
  crafted.strategy = intField(j, "strategy", "crafted scenario");
  crafted.nu0 = parseNode(stringField(j, "nu0", "crafted scenario"), "crafted scenario");
  crafted.margin = intField(j, "margin", "crafted scenario");
  if (!j.contains("scenario"))
    throw ScenarioInvalid("crafted scenario: missing scenario object");
  crafted.scenario = scenarioFromText(j["scenario"].dump());
  return crafted;
}

}  // namespace fiplab
