#include "search.hpp"

#include <algorithm>

#include "scaledim/errors.hpp"

namespace scaledim::detail {

std::vector<std::size_t> greedy_set_cover(std::size_t universe_size,
                                          const std::vector<BitSet>& candidates) {
  std::vector<std::size_t> chosen;
  BitSet uncovered = BitSet::full(universe_size);
  while (!uncovered.empty()) {
    std::size_t best = BitSet::npos;
    std::size_t best_gain = 0;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      std::size_t gain = (candidates[c] & uncovered).count();
      if (gain > best_gain) {
        best_gain = gain;
        best = c;
      }
    }
    if (best == BitSet::npos)
      throw Error("internal: set cover instance has an uncoverable element");
    chosen.push_back(best);
    uncovered = uncovered.without(candidates[best]);
  }
  return chosen;
}

namespace {

struct CoverSearch {
  const std::vector<BitSet>& cand;
  std::vector<std::vector<std::size_t>> covering;  // per element
  std::size_t max_cand_size = 1;
  std::size_t lower_hint;
  std::uint64_t budget;

  std::uint64_t nodes = 0;
  bool aborted = false;
  std::vector<std::size_t> best;
  std::vector<std::size_t> current;

  void dfs(const BitSet& uncovered) {
    if (aborted || best.size() <= lower_hint) return;
    if (++nodes > budget) {
      aborted = true;
      return;
    }
    if (uncovered.empty()) {
      if (current.size() < best.size()) best = current;
      return;
    }
    std::size_t unc = uncovered.count();
    std::size_t lb = (unc + max_cand_size - 1) / max_cand_size;
    if (current.size() + lb >= best.size()) return;

    // branch on the uncovered element with the fewest candidates
    std::size_t elem = BitSet::npos;
    std::size_t fewest = ~std::size_t{0};
    uncovered.for_each([&](std::size_t e) {
      if (covering[e].size() < fewest) {
        fewest = covering[e].size();
        elem = e;
      }
    });

    std::vector<std::pair<std::size_t, std::size_t>> order;  // (-gain proxy, index)
    order.reserve(covering[elem].size());
    for (std::size_t c : covering[elem])
      order.emplace_back((cand[c] & uncovered).count(), c);
    std::stable_sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
      return a.first > b.first;
    });
    for (const auto& [gain, c] : order) {
      current.push_back(c);
      dfs(uncovered.without(cand[c]));
      current.pop_back();
      if (aborted || best.size() <= lower_hint) return;
    }
  }
};

}  // namespace

SetCoverOutcome min_set_cover(std::size_t universe_size,
                              const std::vector<BitSet>& candidates,
                              std::size_t lower_hint,
                              std::uint64_t node_budget) {
  SetCoverOutcome out;
  if (universe_size == 0) {
    out.optimal = true;
    return out;
  }
  CoverSearch s{candidates, {}, 1, lower_hint, node_budget, 0, false, {}, {}};
  s.covering.resize(universe_size);
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    s.max_cand_size = std::max(s.max_cand_size, candidates[c].count());
    candidates[c].for_each([&](std::size_t e) { s.covering[e].push_back(c); });
  }
  for (std::size_t e = 0; e < universe_size; ++e)
    if (s.covering[e].empty())
      throw Error("internal: set cover instance has an uncoverable element");

  s.best = greedy_set_cover(universe_size, candidates);
  s.dfs(BitSet::full(universe_size));

  out.chosen = s.best;
  out.nodes = s.nodes;
  out.optimal = !s.aborted || s.best.size() <= lower_hint;
  out.proven_lower = out.optimal ? s.best.size() : lower_hint;
  return out;
}

}  // namespace scaledim::detail
