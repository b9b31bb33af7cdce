#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <initializer_list>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "fiplab/cli.hpp"
#include "fiplab/engine.hpp"
#include "fiplab/errors.hpp"
#include "fiplab/scenario_lab.hpp"
#include "fiplab/serialization.hpp"
#include "fiplab/trace.hpp"

using namespace fiplab;
namespace fs = std::filesystem;

namespace {

Scenario sampleScenario() {
  Scenario s;
  s.maxStage = 6;
  s.maxDepth = 2;
  s.jMax = 2;
  s.iMax = 2;
  s.ceSets[0] = {{1, Node::fromString("0")}, {3, Node::fromString("01")}};
  s.ceSets[1] = {{2, Node::fromString("1")}};
  s.kEvents = {{2, 1}, {4, 0}};
  return s;
}

fs::path freshDir(const std::string& tag) {
  fs::path dir = fs::temp_directory_path() / ("fiplab-test-" + tag);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

// Runs the command line in-process with stdout and stderr captured.
int runCli(std::initializer_list<std::string> args, std::string* captured = nullptr) {
  std::vector<std::string> argv = {"fiplab"};
  argv.insert(argv.end(), args.begin(), args.end());
  std::vector<const char*> ptrs;
  for (const std::string& a : argv) ptrs.push_back(a.c_str());

  std::ostringstream sink;
  std::streambuf* oldOut = std::cout.rdbuf(sink.rdbuf());
  std::streambuf* oldErr = std::cerr.rdbuf(sink.rdbuf());
  int rc = cli::run(static_cast<int>(ptrs.size()), ptrs.data());
  std::cout.rdbuf(oldOut);
  std::cerr.rdbuf(oldErr);
  if (captured) *captured = sink.str();
  return rc;
}

std::string slurp(const fs::path& p) { return readTextFile(p.string()); }

}  // namespace

TEST_CASE("scenario text is canonical and round trips byte for byte") {
  Scenario s = sampleScenario();
  std::string text = scenarioToText(s);
  CHECK(!text.empty());
  CHECK(text.back() == '\n');

  // Fixed top-level key order.
  std::vector<std::string> keys = {"\"maxStage\"", "\"maxDepth\"", "\"jMax\"",
                                   "\"iMax\"",     "\"ceSets\"",   "\"kEvents\""};
  std::size_t at = 0;
  for (const std::string& key : keys) {
    std::size_t next = text.find(key);
    REQUIRE(next != std::string::npos);
    CHECK(next > at);
    at = next;
  }

  Scenario parsed = scenarioFromText(text);
  CHECK(parsed.maxStage == s.maxStage);
  CHECK(parsed.maxDepth == s.maxDepth);
  CHECK(parsed.jMax == s.jMax);
  CHECK(parsed.iMax == s.iMax);
  REQUIRE(parsed.ceSets.size() == 2);
  CHECK(parsed.ceSets.at(0).size() == 2);
  CHECK(parsed.ceSets.at(0)[1].stage == 3);
  CHECK(parsed.ceSets.at(0)[1].node == Node::fromString("01"));
  CHECK(parsed.kEvents.size() == 2);
  CHECK(scenarioToText(parsed) == text);
}

TEST_CASE("the root renders as the empty bit string in scenario files") {
  Scenario s;
  s.maxStage = 2;
  s.maxDepth = 1;
  s.jMax = 1;
  s.iMax = 1;
  s.ceSets[0] = {{1, Node()}};
  std::string text = scenarioToText(s);
  CHECK(text.find("\"node\": \"\"") != std::string::npos);
  CHECK(scenarioFromText(text).ceSets.at(0)[0].node == Node());
}

TEST_CASE("malformed scenario text is rejected") {
  CHECK_THROWS_AS(scenarioFromText("not json at all"), ScenarioInvalid);
  CHECK_THROWS_AS(scenarioFromText("[1,2,3]"), ScenarioInvalid);
  CHECK_THROWS_AS(scenarioFromText("{\"maxDepth\":1,\"jMax\":0,\"iMax\":0}"), ScenarioInvalid);
  CHECK_THROWS_AS(
      scenarioFromText("{\"maxStage\":\"three\",\"maxDepth\":1,\"jMax\":0,\"iMax\":0}"),
      ScenarioInvalid);

  std::string badNode = scenarioToText(sampleScenario());
  badNode.replace(badNode.find("\"01\""), 4, "\"02\"");
  CHECK_THROWS_AS(scenarioFromText(badNode), ScenarioInvalid);

  Scenario s = sampleScenario();
  std::string text = scenarioToText(s);
  // Duplicate the first ceSets block to fake two entries for the same i.
  std::size_t open = text.find("\"ceSets\": [");
  REQUIRE(open != std::string::npos);
  std::size_t blockStart = text.find('{', open);
  std::size_t blockEnd = text.find("    }", blockStart);
  REQUIRE(blockEnd != std::string::npos);
  std::string block = text.substr(blockStart, blockEnd + 5 - blockStart);
  text.insert(blockStart, block + ",\n    ");
  CHECK_THROWS_AS(scenarioFromText(text), ScenarioInvalid);
}

TEST_CASE("scenario files survive a disk round trip") {
  fs::path dir = freshDir("io");
  fs::path file = dir / "scenario.json";
  Scenario s = sampleScenario();
  writeTextFile(file.string(), scenarioToText(s));
  CHECK(scenarioToText(loadScenarioFile(file.string())) == scenarioToText(s));
  CHECK_THROWS_AS(readTextFile((dir / "absent.json").string()), std::runtime_error);
  fs::remove_all(dir);
}

TEST_CASE("traces render, parse, and replay to the same construction") {
  CraftParams params;
  params.depth = 4;
  params.maxStage = 12;
  params.jMax = 2;
  params.iMax = 2;
  params.margin = 2;
  params.seed = 9;
  params.higherPriorityActs = true;
  CraftedScenario crafted = craftLemmaMainScenario(Mode::TwoIp, params);
  EngineResult run = runConstruction(crafted.scenario, Mode::TwoIp);

  std::string text = renderTrace(run.trace);
  ConstructionTrace parsed = parseTrace(text);
  CHECK(parsed.records.size() == run.trace.records.size());
  CHECK(renderTrace(parsed) == text);

  ReplayResult replayed = replayTrace(parsed, Mode::TwoIp, crafted.scenario.maxDepth);
  CHECK(treeToText(replayed.tree) == treeToText(run.tree));
  CHECK(replayed.family == run.family);

  CHECK_THROWS_AS(parseRecord("BOGUS 1 2 3"), std::invalid_argument);
  CHECK_THROWS_AS(parseTrace("PLACE A[-] - 0 structural\nBOGUS"), std::invalid_argument);
}

TEST_CASE("tree and family dumps are well-formed json") {
  EngineResult run = runConstruction(sampleScenario(), Mode::Fip);
  nlohmann::json tree = nlohmann::json::parse(treeToText(run.tree));
  CHECK(tree.at("mode") == "fip");
  CHECK(tree.at("maxDepth") == 2);
  CHECK(tree.at("labels").size() == static_cast<std::size_t>(run.tree.labelCount()));
  CHECK(tree.at("labels")[0].at("label") == "A[-]");

  nlohmann::json family = nlohmann::json::parse(familyToText(run.family, run.tree));
  CHECK(family.at("sets").size() == static_cast<std::size_t>(run.family.setCount()));
  CHECK(family.at("origins").size() == run.family.origins().size());
}

TEST_CASE("crafted sidecars round trip") {
  CraftParams params;
  params.depth = 5;
  params.maxStage = 16;
  params.jMax = 2;
  params.iMax = 2;
  params.margin = 2;
  params.seed = 4;
  params.higherPriorityActs = true;
  CraftedScenario crafted = craftLemmaMainScenario(Mode::TwoIp, params);

  std::string text = craftedToText(crafted);
  CraftedScenario back = craftedFromText(text);
  CHECK(back.mode == crafted.mode);
  CHECK(back.targetPath == crafted.targetPath);
  CHECK(back.strategy == crafted.strategy);
  CHECK(back.nu0 == crafted.nu0);
  CHECK(back.margin == crafted.margin);
  CHECK(scenarioToText(back.scenario) == scenarioToText(crafted.scenario));
  CHECK(craftedToText(back) == text);

  CHECK_THROWS_AS(craftedFromText("{}"), ScenarioInvalid);
}

TEST_CASE("build writes the run artifacts deterministically") {
  fs::path dir = freshDir("build");
  fs::path scn = dir / "in.json";
  writeTextFile(scn.string(), scenarioToText(sampleScenario()));

  std::string out;
  int rc = runCli({"build", "--scenario", scn.string(), "--out", (dir / "a").string()}, &out);
  CHECK(rc == 0);
  CHECK(out.find("wrote scenario.json tree.json family.json trace.txt") != std::string::npos);
  for (const char* name : {"scenario.json", "tree.json", "family.json", "trace.txt"})
    CHECK(fs::exists(dir / "a" / name));
  // The emitted scenario is the canonical form of what was loaded.
  CHECK(slurp(dir / "a" / "scenario.json") == scenarioToText(sampleScenario()));

  CHECK(runCli({"build", "--scenario", scn.string(), "--out", (dir / "b").string()}) == 0);
  for (const char* name : {"scenario.json", "tree.json", "family.json", "trace.txt"})
    CHECK(slurp(dir / "a" / name) == slurp(dir / "b" / name));
  fs::remove_all(dir);
}

TEST_CASE("build rejects unreadable input") {
  fs::path dir = freshDir("badbuild");
  fs::path scn = dir / "garbage.json";
  writeTextFile(scn.string(), "{{{{");
  CHECK(runCli({"build", "--scenario", scn.string(), "--out", (dir / "out").string()}) == 2);
  CHECK(runCli({"build", "--scenario", (dir / "absent.json").string()}) == 2);
  fs::remove_all(dir);
}

TEST_CASE("check suites pass on the fallback scenario") {
  std::string out;
  CHECK(runCli({"check", "--suite", "lemma-finitepaths", "--depth", "4", "--stages", "12",
                "--jmax", "2"},
               &out) == 0);
  CHECK(out.find("lemma-finitepaths") != std::string::npos);
  CHECK(runCli({"check", "--suite", "lemma-cofinal", "--depth", "4", "--stages", "12", "--jmax",
                "2"}) == 0);
  CHECK(runCli({"check", "--suite", "witness-soundness", "--depth", "4", "--stages", "12",
                "--jmax", "2"}) == 0);
  CHECK(runCli({"check", "--suite", "2ip-is-fip", "--mode", "2ip", "--depth", "4", "--stages",
                "12", "--jmax", "2"}) == 0);
}

TEST_CASE("the pairwise suite requires priority mode") {
  std::string out;
  CHECK(runCli({"check", "--suite", "2ip-is-fip", "--mode", "fip"}, &out) == 2);
  CHECK(out.find("2ip") != std::string::npos);
  CHECK(runCli({"check", "--suite", "no-such-suite"}) == 2);
}

TEST_CASE("maximalize reports agreeing selections") {
  fs::path dir = freshDir("maximalize");
  fs::path fam = dir / "family.json";
  writeTextFile(fam.string(), "{\"members\": [[1,2],[2,3],[3,1]]}\n");
  std::string out;
  CHECK(runCli({"maximalize", "--family", fam.string()}, &out) == 0);
  CHECK(out.find("agree: yes") != std::string::npos);
  CHECK(out.find("RESULT ") != std::string::npos);

  writeTextFile(fam.string(), "{\"members\": \"oops\"}\n");
  CHECK(runCli({"maximalize", "--family", fam.string()}) == 2);
  CHECK(runCli({"maximalize"}) == 2);  // --family is required
  fs::remove_all(dir);
}

TEST_CASE("phi and psi run against the fallback scenario") {
  std::string out;
  CHECK(runCli({"phi", "--depth", "3", "--stages", "8", "--jmax", "1"}, &out) == 0);
  CHECK(out.find("phi(path=") != std::string::npos);
  CHECK(out.find("converged") != std::string::npos);

  CHECK(runCli({"phi", "--path", "0", "--nbits", "1", "--depth", "3", "--stages", "8", "--jmax",
                "1"}) == 0);
  CHECK(runCli({"phi", "--path", "abc"}) == 2);

  CHECK(runCli({"psi", "--depth", "4", "--stages", "12", "--jmax", "2"}, &out) == 0);
  CHECK(out.find("decoded-matches-final: yes") != std::string::npos);

  CHECK(runCli({"psi", "--mode", "2ip", "--depth", "4", "--stages", "12", "--jmax", "2"}, &out) ==
        0);
  CHECK(out.find("decoded-matches-final: yes") != std::string::npos);
}

TEST_CASE("scenario-craft writes a scenario and its sidecar") {
  fs::path dir = freshDir("craft");
  std::string out;
  CHECK(runCli({"scenario-craft", "--out", dir.string(), "--depth", "4", "--stages", "12",
                "--jmax", "2"},
               &out) == 0);
  CHECK(out.find("wrote scenario.json crafted.json") != std::string::npos);
  CHECK_NOTHROW(validateScenario(loadScenarioFile((dir / "scenario.json").string()), Mode::Fip));
  CHECK_NOTHROW(craftedFromText(slurp(dir / "crafted.json")));

  CHECK(runCli({"scenario-craft", "--out", dir.string(), "--depth", "2", "--stages", "1"}) == 2);
  fs::remove_all(dir);
}

TEST_CASE("report summarizes a clean run") {
  std::string out;
  CHECK(runCli({"report", "--depth", "4", "--stages", "12", "--jmax", "2"}, &out) == 0);
  CHECK(out.find("intersection-scan") != std::string::npos);
  CHECK(out.find("RESULT ") != std::string::npos);
  CHECK(runCli({"report", "--mode", "2ip", "--depth", "4", "--stages", "12", "--jmax", "2"},
               &out) == 0);
  CHECK(out.find("pairwise-scan") != std::string::npos);
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(runCli({}) == 2);
  CHECK(runCli({"no-such-command"}) == 2);
  CHECK(runCli({"check"}) == 2);  // --suite is required
  CHECK(runCli({"--help"}) == 0);
}
