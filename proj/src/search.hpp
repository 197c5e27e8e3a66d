#pragma once

#include <cstdint>
#include <vector>

#include "scaledim/bitset.hpp"

namespace scaledim::detail {

struct SetCoverOutcome {
  bool optimal = false;             // search finished (or matched the lower bound)
  std::vector<std::size_t> chosen;  // best cover found, candidate indices
  std::size_t proven_lower = 0;
  std::uint64_t nodes = 0;
};

// Minimum set cover by branch and bound: branches on the uncovered element
// with the fewest candidates, candidates ordered by fresh coverage. Every
// element must be covered by at least one candidate. lower_hint must be a
// valid lower bound; the search stops early when the incumbent reaches it.
SetCoverOutcome min_set_cover(std::size_t universe_size,
                              const std::vector<BitSet>& candidates,
                              std::size_t lower_hint,
                              std::uint64_t node_budget);

// Deterministic greedy cover (largest fresh coverage, ties by index).
std::vector<std::size_t> greedy_set_cover(std::size_t universe_size,
                                          const std::vector<BitSet>& candidates);

}  // namespace scaledim::detail
