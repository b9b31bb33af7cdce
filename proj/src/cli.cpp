#include "fiplab/cli.hpp"

#include <filesystem>
#include <iostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "fiplab/engine.hpp"
#include "fiplab/errors.hpp"
#include "fiplab/family_algebra.hpp"
#include "fiplab/functionals.hpp"
#include "fiplab/lemma_scan.hpp"
#include "fiplab/scenario_lab.hpp"
#include "fiplab/serialization.hpp"

namespace fiplab::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

Mode parseMode(const std::string& name) {
  if (name == "fip") return Mode::Fip;
  if (name == "2ip") return Mode::TwoIp;
  throw ScenarioInvalid("unknown mode '" + name + "' (expected fip or 2ip)");
}

void applyOverrides(Scenario& scenario, const RunConfig& cfg) {
  if (cfg.depth >= 0) scenario.maxDepth = cfg.depth;
  if (cfg.stages >= 0) scenario.maxStage = cfg.stages;
  if (cfg.jMax >= 0) scenario.jMax = cfg.jMax;
  if (cfg.iMax >= 0) scenario.iMax = cfg.iMax;
}

CraftParams craftParamsFor(const RunConfig& cfg, Mode mode) {
  CraftParams params;
  if (cfg.depth >= 0) params.depth = cfg.depth;
  params.maxStage = cfg.stages >= 0 ? cfg.stages : std::max(32, 4 * params.depth);
  if (cfg.jMax >= 0) params.jMax = cfg.jMax;
  params.iMax = cfg.iMax >= 0 ? cfg.iMax : (cfg.interference ? 2 : 1);
  params.margin = std::min(cfg.margin, params.depth - 1);
  params.seed = cfg.seed;
  params.higherPriorityActs = mode == Mode::TwoIp && cfg.interference;
  return params;
}

/// Scenario source for commands that accept a file but fall back to the
/// crafted dense scenario. Returns the crafted record when one was built.
struct ScenarioSource {
  Scenario scenario;
  std::optional<CraftedScenario> crafted;
};

ScenarioSource resolveScenario(const RunConfig& cfg, Mode mode) {
  ScenarioSource source;
  if (!cfg.scenarioPath.empty()) {
    source.scenario = loadScenarioFile(cfg.scenarioPath);
    applyOverrides(source.scenario, cfg);
    return source;
  }
  CraftedScenario crafted = craftLemmaMainScenario(mode, craftParamsFor(cfg, mode));
  source.scenario = crafted.scenario;
  source.crafted = crafted;
  return source;
}

Node resolvePath(const RunConfig& cfg, const ScenarioSource& source) {
  if (!cfg.path.empty() && cfg.path != "-") return Node::fromString(cfg.path);
  if (cfg.path == "-") return Node::root();
  if (source.crafted) return source.crafted->targetPath;
  throw ScenarioInvalid("--path is required when a scenario file is supplied");
}

ordered_json scanToJson(const LemmaScanResult& result) {
  ordered_json j;
  j["subsetsCovered"] = result.subsetsCovered;
  j["subsetsVisited"] = result.subsetsVisited;
  j["counterexamples"] = result.counterexamples.size();
  return j;
}

void printCounterexamples(const LemmaScanResult& result) {
  for (const SubsetCounterexample& c : result.counterexamples) {
    std::cout << "counterexample: labels {";
    for (std::size_t k = 0; k < c.labels.size(); ++k)
      std::cout << (k ? "," : "") << c.labels[k];
    std::cout << "} intersection-side=" << (c.leftSide ? "nonempty" : "empty")
              << " chain-side=" << (c.rightSide ? "found" : "none") << "\n";
  }
}

std::string outcomeToString(const FunctionalOutcome& outcome) {
  switch (outcome.kind) {
    case FunctionalOutcome::Kind::Converged:
      if (outcome.bit >= 0) return "converged " + std::to_string(outcome.bit);
      return "converged \"" + outcome.bits.toString() + "\"";
    case FunctionalOutcome::Kind::Diverged:
      return "diverged";
    case FunctionalOutcome::Kind::IllFormedOracle:
      return "ill-formed oracle (" + outcome.reason + ")";
  }
  return "unreachable";
}

int cmdBuild(const RunConfig& cfg) {
  Mode mode = parseMode(cfg.mode);
  ScenarioSource source = resolveScenario(cfg, mode);
  EngineResult result = runConstruction(source.scenario, mode);

  std::filesystem::create_directories(cfg.outputDir);
  auto out = [&](const char* name) {
    return (std::filesystem::path(cfg.outputDir) / name).string();
  };
  writeTextFile(out("scenario.json"), scenarioToText(source.scenario));
  writeTextFile(out("tree.json"), treeToText(result.tree));
  writeTextFile(out("family.json"), familyToText(result.family, result.tree));
  writeTextFile(out("trace.txt"), renderTrace(result.trace));
  if (source.crafted)
    writeTextFile(out("crafted.json"), craftedToText(*source.crafted));

  std::cout << "build: mode=" << modeName(mode) << " labels=" << result.tree.labelCount()
            << " witnesses=" << result.family.origins().size()
            << " trace-records=" << result.trace.records.size() << "\n";
  std::cout << "wrote scenario.json tree.json family.json trace.txt to " << cfg.outputDir << "\n";
  return 0;
}

int suiteLemmaFinitepaths(const RunConfig& cfg) {
  Mode mode = parseMode(cfg.mode);
  ScenarioSource source = resolveScenario(cfg, mode);
  EngineResult result = runConstruction(source.scenario, mode);
  LemmaScanResult scan = scanIntersectionEqualsChain(result.tree, result.family, cfg.subsetSize);
  std::cout << "lemma-finitepaths: labels=" << result.tree.labelCount()
            << " subsets<=" << cfg.subsetSize << " covered=" << scan.subsetsCovered
            << " visited=" << scan.subsetsVisited
            << " counterexamples=" << scan.counterexamples.size() << "\n";
  printCounterexamples(scan);
  return scan.clean() ? 0 : 1;
}

int suite2ipIsFip(const RunConfig& cfg) {
  if (cfg.mode != "2ip") {
    std::cerr << "error: suite 2ip-is-fip requires --mode 2ip (got " << cfg.mode << ")\n";
    return 2;
  }
  ScenarioSource source = resolveScenario(cfg, Mode::TwoIp);
  EngineResult result = runConstruction(source.scenario, Mode::TwoIp);
  LemmaScanResult scan = scanPairwiseEqualsChain(result.tree, result.family, cfg.subsetSize);
  std::cout << "2ip-is-fip: labels=" << result.tree.labelCount()
            << " subsets<=" << cfg.subsetSize << " covered=" << scan.subsetsCovered
            << " visited=" << scan.subsetsVisited
            << " counterexamples=" << scan.counterexamples.size() << "\n";
  printCounterexamples(scan);
  return scan.clean() ? 0 : 1;
}

int suiteLemmaCofinal(const RunConfig& cfg) {
  Mode mode = parseMode(cfg.mode);
  ScenarioSource source = resolveScenario(cfg, mode);
  EngineResult result = runConstruction(source.scenario, mode);
  Node yd = resolvePath(cfg, source);

  OracleSet oracle = buildOracle(result.tree, source.scenario, OracleRecipe::pathOnly(yd));
  std::set<int> onPath(oracle.indices.begin(), oracle.indices.end());

  int mismatches = 0;
  int checked = 0;
  for (int k = 0; k < result.tree.labelCount(); ++k) {
    if (onPath.count(k) || result.tree.labelAt(k).kind() == Label::Kind::Structural) continue;
    ++checked;
    bool cofinal = isCofinalAlong(result.tree, k, yd).allTrue;
    std::set<int> common = result.family.witnessesOf(k);
    for (int m : oracle.indices) {
      std::set<int> next;
      for (int w : result.family.witnessesOf(m))
        if (common.count(w)) next.insert(w);
      common.swap(next);
    }
    bool preserves = !common.empty();
    if (preserves != cofinal) {
      ++mismatches;
      std::cout << "counterexample: label " << result.tree.labelAt(k).toString()
                << " preserves-intersection=" << (preserves ? "yes" : "no")
                << " cofinal-along-path=" << (cofinal ? "yes" : "no") << "\n";
    }
  }
  std::cout << "lemma-cofinal: path=\"" << yd.toString() << "\" coding-labels-checked=" << checked
            << " mismatches=" << mismatches << "\n";
  return mismatches == 0 ? 0 : 1;
}

int suiteWitnessSoundness(const RunConfig& cfg) {
  Mode mode = parseMode(cfg.mode);
  ScenarioSource source = resolveScenario(cfg, mode);
  EngineResult result = runConstruction(source.scenario, mode);

  int failures = 0;
  long long membershipsChecked = 0;
  for (const auto& [witness, origin] : result.family.origins()) {
    if (origin.identityTag) {
      for (int k = 0; k < result.family.setCount(); ++k) {
        ++membershipsChecked;
        bool expected = witness == 2 * k;
        if (result.family.contains(k, witness) != expected) {
          ++failures;
          std::cout << "counterexample: identity tag " << witness << " vs set " << k << "\n";
        }
      }
      continue;
    }
    std::set<int> expected = result.tree.inclusiveTilde(origin.node, origin.stage);
    for (int k = 0; k < result.family.setCount(); ++k) {
      ++membershipsChecked;
      if (result.family.contains(k, witness) != (expected.count(k) > 0)) {
        ++failures;
        std::cout << "counterexample: witness " << witness << " at stage " << origin.stage
                  << " node \"" << origin.node.toString() << "\" set " << k
                  << " membership disagrees with the chain at that stage\n";
      }
    }
  }
  std::cout << "witness-soundness: witnesses=" << result.family.origins().size()
            << " memberships-checked=" << membershipsChecked << " failures=" << failures << "\n";
  return failures == 0 ? 0 : 1;
}

int cmdCheck(const RunConfig& cfg) {
  if (cfg.suite == "lemma-finitepaths") return suiteLemmaFinitepaths(cfg);
  if (cfg.suite == "2ip-is-fip") return suite2ipIsFip(cfg);
  if (cfg.suite == "lemma-cofinal") return suiteLemmaCofinal(cfg);
  if (cfg.suite == "witness-soundness") return suiteWitnessSoundness(cfg);
  std::cerr << "error: unknown suite '" << cfg.suite
            << "' (expected lemma-finitepaths, 2ip-is-fip, lemma-cofinal or witness-soundness)\n";
  return 2;
}

int cmdMaximalize(const RunConfig& cfg) {
  if (cfg.familyPath.empty()) {
    std::cerr << "error: maximalize requires --family pointing at a members file\n";
    return 2;
  }
  ordered_json j = ordered_json::parse(readTextFile(cfg.familyPath), nullptr, false);
  if (j.is_discarded() || !j.is_object() || !j.contains("members") || !j["members"].is_array())
    throw ScenarioInvalid("family file: expected {\"members\": [[...], ...]}");
  FiniteFamily family;
  for (const auto& member : j["members"]) {
    if (!member.is_array()) throw ScenarioInvalid("family file: each member must be a list");
    std::set<int> elements;
    for (const auto& v : member) {
      if (!v.is_number_integer()) throw ScenarioInvalid("family file: elements must be integers");
      elements.insert(v.get<int>());
    }
    family.members.push_back(std::move(elements));
  }

  std::vector<int> greedy = greedyMaximalFip(family);
  std::vector<int> forcing = forcingMaximalFip(family);
  auto render = [](const std::vector<int>& indices) {
    std::string s = "{";
    for (std::size_t k = 0; k < indices.size(); ++k)
      s += (k ? "," : "") + std::to_string(indices[k]);
    return s + "}";
  };
  std::cout << "greedy:  " << render(greedy) << "\n";
  std::cout << "forcing: " << render(forcing) << "\n";
  std::cout << "agree: " << (greedy == forcing ? "yes" : "no") << "\n";
  ordered_json out;
  out["greedy"] = greedy;
  out["forcing"] = forcing;
  out["agree"] = greedy == forcing;
  std::cout << "RESULT " << out.dump() << "\n";
  return 0;
}

int cmdPhi(const RunConfig& cfg) {
  Mode mode = parseMode(cfg.mode);
  ScenarioSource source = resolveScenario(cfg, mode);
  EngineResult result = runConstruction(source.scenario, mode);
  Node path = resolvePath(cfg, source);
  OracleSet oracle = buildOracle(result.tree, source.scenario, OracleRecipe::pathOnly(path));
  int nBits = cfg.nBits >= 0 ? cfg.nBits : static_cast<int>(path.length());
  FunctionalOutcome outcome = phi(result.tree, oracle, nBits);
  std::cout << "phi(path=\"" << path.toString() << "\", n=" << nBits
            << ") = " << outcomeToString(outcome) << "\n";
  return 0;
}

int cmdPsi(const RunConfig& cfg) {
  Mode mode = parseMode(cfg.mode);
  ScenarioSource source = resolveScenario(cfg, mode);
  EngineResult result = runConstruction(source.scenario, mode);
  Node path = resolvePath(cfg, source);

  StrategySelector selector;
  if (cfg.strategy >= 0) {
    selector.i = cfg.strategy;
  } else if (source.crafted) {
    selector.i = source.crafted->strategy;
  } else {
    throw ScenarioInvalid("--strategy is required when a scenario file is supplied");
  }
  if (mode == Mode::TwoIp) {
    if (!cfg.nu.empty()) {
      selector.nu = cfg.nu == "-" ? Node::root() : Node::fromString(cfg.nu);
    } else if (source.crafted) {
      selector.nu = source.crafted->nu0;
    } else {
      throw ScenarioInvalid("--nu is required for 2ip decoding of a scenario file");
    }
  }

  OracleSet oracle = buildOracle(result.tree, source.scenario,
                                 OracleRecipe::pathPlusCoding(path, selector));
  int budget = cfg.budget >= 0 ? cfg.budget : source.scenario.maxStage;
  std::map<int, FunctionalOutcome> decoded =
      decodeK(result.tree, source.scenario, selector, oracle, budget);
  std::set<int> finalK = kApprox(source.scenario, source.scenario.maxStage);

  bool allMatch = true;
  for (const auto& [j, outcome] : decoded) {
    bool inK = finalK.count(j) > 0;
    std::cout << "psi j=" << j << ": " << outcomeToString(outcome)
              << " (final membership " << (inK ? 1 : 0) << ")\n";
    allMatch = allMatch && outcome.converged() && outcome.bit == (inK ? 1 : 0);
  }
  std::cout << "decoded-matches-final: " << (allMatch ? "yes" : "no") << "\n";
  return 0;
}

int cmdCraft(const RunConfig& cfg) {
  Mode mode = parseMode(cfg.mode);
  CraftedScenario crafted = craftLemmaMainScenario(mode, craftParamsFor(cfg, mode));
  std::filesystem::create_directories(cfg.outputDir);
  auto out = [&](const char* name) {
    return (std::filesystem::path(cfg.outputDir) / name).string();
  };
  writeTextFile(out("scenario.json"), scenarioToText(crafted.scenario));
  writeTextFile(out("crafted.json"), craftedToText(crafted));
  std::cout << "crafted: mode=" << modeName(mode) << " targetPath=\"" << crafted.targetPath.toString()
            << "\" strategy=" << crafted.strategy << " nu0=\"" << crafted.nu0.toString()
            << "\" margin=" << crafted.margin << "\n";
  std::cout << "wrote scenario.json crafted.json to " << cfg.outputDir << "\n";
  return 0;
}

int cmdReport(const RunConfig& cfg) {
  Mode mode = parseMode(cfg.mode);
  ScenarioSource source = resolveScenario(cfg, mode);
  EngineResult result = runConstruction(source.scenario, mode);

  LemmaScanResult intersection =
      scanIntersectionEqualsChain(result.tree, result.family, cfg.subsetSize);
  std::optional<LemmaScanResult> pairwise;
  if (mode == Mode::TwoIp)
    pairwise = scanPairwiseEqualsChain(result.tree, result.family, cfg.subsetSize);

  int placed = 0, discarded = 0, skipped = 0, witnesses = 0;
  for (const TraceRecord& record : result.trace.records) {
    if (std::holds_alternative<LabelPlaced>(record)) ++placed;
    if (std::holds_alternative<LabelDiscarded>(record)) ++discarded;
    if (std::holds_alternative<EventSkipped>(record)) ++skipped;
    if (std::holds_alternative<WitnessAdded>(record)) ++witnesses;
  }

  std::cout << "report: mode=" << modeName(mode) << " maxStage=" << source.scenario.maxStage
            << " maxDepth=" << source.scenario.maxDepth << "\n";
  std::cout << "  labels=" << result.tree.labelCount() << " (placed=" << placed
            << " discarded=" << discarded << " skipped-events=" << skipped
            << " witnesses=" << witnesses << ")\n";
  std::cout << "  intersection-scan: covered=" << intersection.subsetsCovered
            << " counterexamples=" << intersection.counterexamples.size() << "\n";
  printCounterexamples(intersection);
  if (pairwise) {
    std::cout << "  pairwise-scan: covered=" << pairwise->subsetsCovered
              << " counterexamples=" << pairwise->counterexamples.size() << "\n";
    printCounterexamples(*pairwise);
  }

  ordered_json j;
  j["mode"] = modeName(mode);
  j["labels"] = result.tree.labelCount();
  j["placed"] = placed;
  j["discarded"] = discarded;
  j["skippedEvents"] = skipped;
  j["witnesses"] = witnesses;
  j["intersectionScan"] = scanToJson(intersection);
  if (pairwise) j["pairwiseScan"] = scanToJson(*pairwise);
  bool clean = intersection.clean() && (!pairwise || pairwise->clean());
  j["clean"] = clean;
  std::cout << "RESULT " << j.dump() << "\n";
  return clean ? 0 : 1;
}

void addCommonOptions(CLI::App* sub, RunConfig& cfg, bool withScenario = true) {
  if (withScenario)
    sub->add_option("--scenario", cfg.scenarioPath, "scenario file (omit to use a crafted one)");
  sub->add_option("--mode", cfg.mode, "construction mode: fip or 2ip")
      ->check(CLI::IsMember({"fip", "2ip"}));
  sub->add_option("--seed", cfg.seed, "seed for crafted scenarios");
  sub->add_option("--depth", cfg.depth, "override maxDepth");
  sub->add_option("--stages", cfg.stages, "override maxStage");
  sub->add_option("--jmax", cfg.jMax, "override jMax");
  sub->add_option("--imax", cfg.iMax, "override iMax");
}

}  // namespace

int run(int argc, const char* const* argv) {
  RunConfig cfg;
  CLI::App app{"finite labeled-tree construction lab"};
  app.require_subcommand(1);

  CLI::App* build = app.add_subcommand("build", "run a construction, write tree/family/trace");
  addCommonOptions(build, cfg);
  build->add_option("--out", cfg.outputDir, "output directory");

  CLI::App* check = app.add_subcommand("check", "run an exhaustive check suite");
  check->add_option("--suite", cfg.suite, "lemma-finitepaths | 2ip-is-fip | lemma-cofinal | witness-soundness")
      ->required();
  addCommonOptions(check, cfg);
  check->add_option("--subset-size", cfg.subsetSize, "label subset size bound for the scans");
  check->add_option("--path", cfg.path, "path for lemma-cofinal ('-' for the root)");

  CLI::App* maximalize = app.add_subcommand("maximalize", "maximal intersecting subfamily, both routes");
  maximalize->add_option("--family", cfg.familyPath, "JSON file {\"members\": [[...], ...]}")->required();

  CLI::App* phiCmd = app.add_subcommand("phi", "evaluate the path functional on a chain oracle");
  addCommonOptions(phiCmd, cfg);
  phiCmd->add_option("--path", cfg.path, "oracle path ('-' for the root)");
  phiCmd->add_option("--nbits", cfg.nBits, "requested output length");

  CLI::App* psiCmd = app.add_subcommand("psi", "decode the scripted set from a coding oracle");
  addCommonOptions(psiCmd, cfg);
  psiCmd->add_option("--path", cfg.path, "oracle path ('-' for the root)");
  psiCmd->add_option("--strategy", cfg.strategy, "decoding strategy index");
  psiCmd->add_option("--nu", cfg.nu, "guard prefix for 2ip decoding ('-' for the root)");
  psiCmd->add_option("--budget", cfg.budget, "stage search budget");

  CLI::App* craft = app.add_subcommand("scenario-craft", "emit a crafted dense scenario");
  addCommonOptions(craft, cfg, false);
  craft->add_option("--out", cfg.outputDir, "output directory");
  craft->add_option("--margin", cfg.margin, "target path stops this many levels above the depth bound");
  craft->add_flag("--interference", cfg.interference, "2ip only: strategy 0 acts once mid-run");

  CLI::App* report = app.add_subcommand("report", "build plus scans, with a machine-readable tail");
  addCommonOptions(report, cfg);
  report->add_option("--subset-size", cfg.subsetSize, "label subset size bound for the scans");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*build) return cmdBuild(cfg);
    if (*check) return cmdCheck(cfg);
    if (*maximalize) return cmdMaximalize(cfg);
    if (*phiCmd) return cmdPhi(cfg);
    if (*psiCmd) return cmdPsi(cfg);
    if (*craft) return cmdCraft(cfg);
    if (*report) return cmdReport(cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  std::cerr << "error: no command\n";
  return 2;
}

}  // namespace fiplab::cli
