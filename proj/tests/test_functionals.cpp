#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fiplab/engine.hpp"
#include "fiplab/errors.hpp"
#include "fiplab/functionals.hpp"
#include "oracle_helpers.hpp"

using namespace fiplab;

namespace {

Scenario structuralOnly(int maxStage, int maxDepth) {
  Scenario s;
  s.maxStage = maxStage;
  s.maxDepth = maxDepth;
  s.jMax = 1;
  s.iMax = 1;
  return s;
}

OracleSet chainOracle(const LabeledTree& tree, const std::vector<std::string>& nodes) {
  OracleSet oracle;
  for (const std::string& text : nodes)
    oracle.indices.insert(*tree.structuralIndexOf(Node::fromString(text)));
  return oracle;
}

}  // namespace

TEST_CASE("path recovery from a chain oracle") {
  LabeledTree tree = runFip(structuralOnly(4, 3)).tree;

  OracleSet oracle = chainOracle(tree, {"", "0", "01"});
  FunctionalOutcome two = phi(tree, oracle, 2);
  REQUIRE(two.converged());
  CHECK(two.bits.toString() == "01");

  FunctionalOutcome zero = phi(tree, chainOracle(tree, {""}), 0);
  REQUIRE(zero.converged());
  CHECK(zero.bits.isRoot());

  CHECK(phi(tree, oracle, 3).kind == FunctionalOutcome::Kind::Diverged);

  FunctionalOutcome bad = phi(tree, chainOracle(tree, {"0", "1"}), 1);
  CHECK(bad.kind == FunctionalOutcome::Kind::IllFormedOracle);
  CHECK(bad.reason.find("0") != std::string::npos);
  CHECK(bad.reason.find("1") != std::string::npos);
}

TEST_CASE("path recovery outputs are coherent prefixes") {
  LabeledTree tree = runFip(structuralOnly(5, 3)).tree;
  OracleSet oracle = chainOracle(tree, {"", "0", "01", "011"});
  Node previous;
  for (int n = 0; n <= 3; ++n) {
    FunctionalOutcome out = phi(tree, oracle, n);
    REQUIRE(out.converged());
    CHECK(previous.isPrefixOf(out.bits));
    previous = out.bits;
  }
  CHECK(previous.toString() == "011");

  // The value ignores the enumeration order entirely.
  OracleSet shuffled = oracle;
  shuffled.enumeration = std::vector<int>(oracle.indices.rbegin(), oracle.indices.rend());
  for (int n = 0; n <= 3; ++n)
    CHECK(phi(tree, shuffled, n).bits == phi(tree, oracle, n).bits);
}

TEST_CASE("single-bit decoding, halting-set clause") {
  Scenario s = structuralOnly(4, 2);
  s.jMax = 2;
  s.ceSets[0] = {{1, Node::fromString("0")}};
  s.kEvents = {{3, 0}};
  EngineResult r = runFip(s);

  // Oracle along "1" holds no coding labels; only the K clause can fire.
  OracleSet oracle;
  oracle.indices = r.tree.pathTilde(Node::fromString("1"));
  FunctionalOutcome out = psiFip(r.tree, s, 0, oracle, 0, 4);
  REQUIRE(out.converged());
  CHECK(out.bit == 1);
  CHECK(psiFip(r.tree, s, 0, oracle, 1, 4).kind == FunctionalOutcome::Kind::Diverged);
}

TEST_CASE("single-bit decoding, oracle clause") {
  Scenario s = structuralOnly(5, 2);
  s.jMax = 2;
  s.ceSets[0] = {{1, Node::fromString("0")}};
  EngineResult r = runFip(s);

  OracleSet oracle;
  oracle.indices = r.tree.pathTilde(Node::fromString("0"));  // holds B[0,0] and B[0,1]
  for (int j = 0; j < 2; ++j) {
    FunctionalOutcome out = psiFip(r.tree, s, 0, oracle, j, 5);
    REQUIRE(out.converged());
    CHECK(out.bit == 0);
  }

  // The bit is stable under permuted enumerations and larger budgets.
  OracleSet shuffled = oracle;
  shuffled.enumeration = std::vector<int>(oracle.indices.rbegin(), oracle.indices.rend());
  for (int j = 0; j < 2; ++j) {
    CHECK(psiFip(r.tree, s, 0, shuffled, j, 5).bit == 0);
    CHECK(psiFip(r.tree, s, 0, oracle, j, 50).bit == 0);
  }

  // An inconsistent enumeration is rejected, not searched.
  OracleSet broken = oracle;
  broken.enumeration = std::vector<int>{0};
  CHECK(psiFip(r.tree, s, 0, broken, 0, 5).kind == FunctionalOutcome::Kind::IllFormedOracle);
}

TEST_CASE("decoding convergence is monotone in the budget") {
  Scenario s = structuralOnly(6, 2);
  s.jMax = 1;
  s.ceSets[0] = {{1, Node::fromString("0")}};
  EngineResult r = runFip(s);
  OracleSet oracle;
  oracle.indices = r.tree.pathTilde(Node::fromString("0"));

  std::optional<int> firstValue;
  for (int budget = 0; budget <= 10; ++budget) {
    FunctionalOutcome out = psiFip(r.tree, s, 0, oracle, 0, budget);
    if (firstValue) {
      REQUIRE(out.converged());
      CHECK(out.bit == *firstValue);
    } else if (out.converged()) {
      firstValue = out.bit;
    }
  }
  CHECK(firstValue.has_value());
}

TEST_CASE("same-stage clause tie resolves to the halting-set bit") {
  Scenario s = structuralOnly(5, 2);
  s.jMax = 2;
  s.ceSets[0] = {{1, Node::fromString("0")}};
  s.kEvents = {{3, 1}};  // enters K after the label was already placed
  EngineResult r = runFip(s);
  int target = *r.tree.indexOf(Label::coding(0, 1));

  // Enumeration puts the target at position 2, so the oracle clause first
  // holds at s = 3, exactly when j enters K.
  OracleSet oracle;
  oracle.indices = {0, 1, target};
  oracle.enumeration = std::vector<int>{0, 1, target};
  FunctionalOutcome tied = psiFip(r.tree, s, 0, oracle, 1, 5);
  REQUIRE(tied.converged());
  CHECK(tied.bit == 1);

  // Moved one slot earlier, the oracle clause wins the race instead.
  oracle.enumeration = std::vector<int>{0, target, 1};
  FunctionalOutcome raced = psiFip(r.tree, s, 0, oracle, 1, 5);
  REQUIRE(raced.converged());
  CHECK(raced.bit == 0);
}

TEST_CASE("priority decoding requires the exact guard") {
  Scenario s = structuralOnly(4, 2);
  s.jMax = 2;
  s.ceSets[0] = {{1, Node::fromString("01")}};
  EngineResult r = run2ip(s);

  OracleSet oracle;
  oracle.indices = r.tree.pathTilde(Node::fromString("01"));
  for (int j = 0; j < 2; ++j) {
    FunctionalOutcome out = psi2ip(r.tree, s, 0, Node(), oracle, j, 4);
    REQUIRE(out.converged());
    CHECK(out.bit == 0);
  }
  CHECK(psi2ip(r.tree, s, 0, Node::fromString("0"), oracle, 0, 4).kind ==
        FunctionalOutcome::Kind::Diverged);

  Scenario inK = s;
  inK.kEvents = {{0, 0}};
  EngineResult r2 = run2ip(inK);
  OracleSet empty;
  FunctionalOutcome viaK = psi2ip(r2.tree, inK, 0, Node(), empty, 0, 0);
  REQUIRE(viaK.converged());
  CHECK(viaK.bit == 1);
}

TEST_CASE("whole-table decoding") {
  Scenario s = structuralOnly(4, 2);
  s.jMax = 3;
  EngineResult r = runFip(s);

  StrategySelector plain{0, std::nullopt};
  OracleSet empty;
  auto table = decodeK(r.tree, s, plain, empty, 4);
  REQUIRE(table.size() == 3);
  for (const auto& [j, outcome] : table)
    CHECK(outcome.kind == FunctionalOutcome::Kind::Diverged);

  Scenario allIn = s;
  allIn.kEvents = {{0, 0}, {0, 1}, {0, 2}};
  EngineResult r2 = runFip(allIn);
  auto ones = decodeK(r2.tree, allIn, plain, empty, 4);
  for (const auto& [j, outcome] : ones) {
    REQUIRE(outcome.converged());
    CHECK(outcome.bit == 1);
  }
}

TEST_CASE("meet and avoid classification") {
  std::vector<CeEvent> events = {{1, Node::fromString("01")}};
  MeetAvoidResult meets = meetsOrAvoids(3, Node::fromString("011"), events, false);
  CHECK(meets.kind == MeetAvoidKind::Meets);
  CHECK(meets.witness == Node::fromString("01"));

  std::vector<CeEvent> off = {{1, Node::fromString("10")}};
  MeetAvoidResult avoids = meetsOrAvoids(3, Node::fromString("00"), off, true);
  CHECK(avoids.kind == MeetAvoidKind::Avoids);
  CHECK(avoids.witness == Node::fromString("0"));

  // Not exhausted: the same configuration stays undecided.
  CHECK(meetsOrAvoids(3, Node::fromString("00"), off, false).kind == MeetAvoidKind::Undecided);

  // Dense-above-every-prefix, never on the path: undecided even exhausted.
  std::vector<CeEvent> dense = {{1, Node::fromString("01")}, {2, Node::fromString("001")}};
  CHECK(meetsOrAvoids(3, Node::fromString("00"), dense, true).kind == MeetAvoidKind::Undecided);

  // First matching event in script order is the reported witness.
  std::vector<CeEvent> ordered = {{1, Node::fromString("10")}, {2, Node::fromString("0")}};
  MeetAvoidResult first = meetsOrAvoids(3, Node::fromString("011"), ordered, false);
  CHECK(first.kind == MeetAvoidKind::Meets);
  CHECK(first.witness == Node::fromString("0"));

  CHECK_THROWS_AS(meetsOrAvoids(2, Node::fromString("011"), events, false), ScenarioInvalid);
  std::vector<CeEvent> tooDeep = {{1, Node::fromString("0000")}};
  CHECK_THROWS_AS(meetsOrAvoids(3, Node::fromString("0"), tooDeep, false), ScenarioInvalid);
}
