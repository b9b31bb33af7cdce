#include "fiplab/lemma_scan.hpp"

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>

namespace fiplab {

namespace {

// Flat bitset machinery for the subset sweeps: one row per label over the
// witness universe, one row per label over the candidate-node universe.

struct BitMatrix {
  std::size_t words = 0;
  std::vector<std::uint64_t> bits;

  void init(std::size_t rows, std::size_t columns) {
    words = (columns + 63) / 64;
    bits.assign(rows * words, 0);
  }
  void set(std::size_t row, std::size_t column) {
    bits[row * words + column / 64] |= std::uint64_t(1) << (column % 64);
  }
  const std::uint64_t* row(std::size_t r) const { return bits.data() + r * words; }
};

bool andInto(const std::uint64_t* a, const std::uint64_t* b, std::uint64_t* out, std::size_t words) {
  std::uint64_t any = 0;
  for (std::size_t w = 0; w < words; ++w) {
    out[w] = a[w] & b[w];
    any |= out[w];
  }
  return any != 0;
}

bool anyBit(const std::uint64_t* a, std::size_t words) {
  for (std::size_t w = 0; w < words; ++w)
    if (a[w]) return true;
  return false;
}

struct ScanContext {
  int labelCount = 0;
  BitMatrix witnessBits;  // label x witness
  BitMatrix chainBits;    // label x candidate node

  ScanContext(const LabeledTree& tree, const SetFamily& family) {
    labelCount = family.setCount();

    std::map<int, std::size_t> witnessId;
    for (const auto& [witness, origin] : family.origins())
      witnessId.emplace(witness, witnessId.size());
    witnessBits.init(labelCount, witnessId.size());
    for (int k = 0; k < labelCount; ++k)
      for (int witness : family.witnessesOf(k)) witnessBits.set(k, witnessId.at(witness));

    // Candidate nodes are all nodes up to one past the depth bound; the
    // strict-prefix label set of a candidate grows from its parent's
    // inclusive label set, computed level by level.
    std::vector<Node> candidates = nodesUpToDepth(tree.maxDepth() + 1);
    chainBits.init(labelCount, candidates.size());
    std::map<Node, std::vector<int>> inclusive;
    for (std::size_t id = 0; id < candidates.size(); ++id) {
      const Node& sigma = candidates[id];
      std::vector<int> chain;
      if (!sigma.isRoot()) {
        chain = inclusive.at(sigma.parent());
      }
      for (int k : chain) chainBits.set(k, id);
      if (static_cast<int>(sigma.length()) <= tree.maxDepth()) {
        for (const auto& [k, stage] : tree.labelsAt(sigma)) chain.push_back(k);
        inclusive.emplace(sigma, std::move(chain));
      }
    }
  }
};

long long subsetTotal(int labelCount, int minSize, int maxSize) {
  long long total = 0;
  for (int size = minSize; size <= maxSize && size <= labelCount; ++size) {
    long long c = 1;
    for (int k = 0; k < size; ++k) c = c * (labelCount - k) / (k + 1);
    total += c;
  }
  return total;
}

}  // namespace

LemmaScanResult scanIntersectionEqualsChain(const LabeledTree& tree, const SetFamily& family,
                                            int maxSubsetSize) {
  ScanContext ctx(tree, family);
  LemmaScanResult result;
  result.subsetsCovered = subsetTotal(ctx.labelCount, 1, maxSubsetSize);

  std::size_t ww = ctx.witnessBits.words;
  std::size_t cw = ctx.chainBits.words;
  std::vector<std::vector<std::uint64_t>> witnessBuf(maxSubsetSize, std::vector<std::uint64_t>(ww));
  std::vector<std::vector<std::uint64_t>> chainBuf(maxSubsetSize, std::vector<std::uint64_t>(cw));
  std::vector<int> stack;

  // Depth-first sweep over ascending label tuples. A subset whose two sides
  // are both empty cannot gain elements in any superset, so the branch is
  // pruned and every pruned superset satisfies the equivalence vacuously.
  // A violating subset is reported once and its branch is not expanded.
  std::function<void(int, int)> sweep = [&](int start, int level) {
    for (int k = start; k < ctx.labelCount; ++k) {
      const std::uint64_t* wRow = ctx.witnessBits.row(k);
      const std::uint64_t* cRow = ctx.chainBits.row(k);
      bool wAny, cAny;
      if (level == 0) {
        std::copy(wRow, wRow + ww, witnessBuf[0].begin());
        std::copy(cRow, cRow + cw, chainBuf[0].begin());
        wAny = anyBit(witnessBuf[0].data(), ww);
        cAny = anyBit(chainBuf[0].data(), cw);
      } else {
        wAny = andInto(witnessBuf[level - 1].data(), wRow, witnessBuf[level].data(), ww);
        cAny = andInto(chainBuf[level - 1].data(), cRow, chainBuf[level].data(), cw);
      }
      ++result.subsetsVisited;
      stack.push_back(k);
      if (wAny != cAny) {
        result.counterexamples.push_back(SubsetCounterexample{stack, wAny, cAny});
      } else if (wAny && level + 1 < maxSubsetSize) {
        sweep(k + 1, level + 1);
      }
      stack.pop_back();
    }
  };
  sweep(0, 0);
  return result;
}

LemmaScanResult scanPairwiseEqualsChain(const LabeledTree& tree, const SetFamily& family,
                                        int maxSubsetSize) {
  ScanContext ctx(tree, family);
  LemmaScanResult result;
  result.subsetsCovered = subsetTotal(ctx.labelCount, 2, maxSubsetSize);

  std::size_t ww = ctx.witnessBits.words;
  std::size_t cw = ctx.chainBits.words;
  std::vector<std::uint64_t> pairBuf(ww);

  // Pairwise-intersection verdicts for all label pairs, computed once.
  std::vector<std::vector<bool>> pairOk(ctx.labelCount, std::vector<bool>(ctx.labelCount, false));
  for (int a = 0; a < ctx.labelCount; ++a)
    for (int b = a + 1; b < ctx.labelCount; ++b) {
      bool ok = andInto(ctx.witnessBits.row(a), ctx.witnessBits.row(b), pairBuf.data(), ww);
      pairOk[a][b] = pairOk[b][a] = ok;
    }

  std::vector<std::vector<std::uint64_t>> chainBuf(maxSubsetSize, std::vector<std::uint64_t>(cw));
  std::vector<int> stack;

  // Sweep over ascending tuples of size >= 2. The left side is "all pairs
  // intersect"; once false together with an empty chain side, no superset
  // can change either verdict, so the branch is pruned. A violating subset
  // is reported once and its branch is not expanded.
  std::function<void(int, int)> sweep = [&](int start, int level) {
    for (int k = start; k < ctx.labelCount; ++k) {
      const std::uint64_t* cRow = ctx.chainBits.row(k);
      bool cAny;
      if (level == 0) {
        std::copy(cRow, cRow + cw, chainBuf[0].begin());
        cAny = anyBit(chainBuf[0].data(), cw);
        stack.push_back(k);
        if (cAny) sweep(k + 1, 1);
        stack.pop_back();
        continue;
      }
      cAny = andInto(chainBuf[level - 1].data(), cRow, chainBuf[level].data(), cw);
      bool pairwise = true;
      for (int chosen : stack) pairwise = pairwise && pairOk[chosen][k];
      ++result.subsetsVisited;
      stack.push_back(k);
      if (pairwise != cAny) {
        result.counterexamples.push_back(SubsetCounterexample{stack, pairwise, cAny});
      } else if (pairwise && level + 1 < maxSubsetSize) {
        sweep(k + 1, level + 1);
      }
      stack.pop_back();
    }
  };
  sweep(0, 0);
  return result;
}

}  // namespace fiplab
