#include <algorithm>
#include <functional>
#include <unordered_map>

#include "scaledim/dimensions.hpp"
#include "search.hpp"

namespace scaledim {

namespace {

using Cell = std::pair<std::size_t, std::size_t>;

// Same names, complemented incidence. Its concepts are the maximal
// staircase-shaped rectangles inside the non-incidence.
FormalContext complement_context(const FormalContext& ctx) {
  std::vector<AttributeSet> rows;
  rows.reserve(ctx.object_count());
  for (std::size_t g = 0; g < ctx.object_count(); ++g)
    rows.push_back(ctx.row(g).complement());
  return FormalContext(ctx.objects(), ctx.attributes(), std::move(rows));
}

// Two non-incidence cells fit in a common Ferrers relation unless both
// crossing cells lie outside the non-incidence.
bool cells_conflict(const FormalContext& comp, const Cell& a, const Cell& b) {
  return !comp.incident(a.first, b.second) && !comp.incident(b.first, a.second);
}

std::size_t clique_lower_bound(const FormalContext& comp,
                               const std::vector<Cell>& cells) {
  if (cells.empty()) return 0;
  std::size_t best = 1;
  const std::size_t starts = std::min<std::size_t>(cells.size(), 64);
  for (std::size_t s = 0; s < starts; ++s) {
    std::vector<Cell> clique{cells[s]};
    for (const Cell& c : cells) {
      if (c == cells[s]) continue;
      bool fits = true;
      for (const Cell& q : clique)
        if (!cells_conflict(comp, c, q)) {
          fits = false;
          break;
        }
      if (fits) clique.push_back(c);
    }
    best = std::max(best, clique.size());
  }
  return best;
}

struct CellGrid {
  std::size_t attribute_count = 0;
  std::vector<std::size_t> id;  // (g, m) -> cell index or npos
  std::vector<Cell> cells;

  explicit CellGrid(const FormalContext& comp)
      : attribute_count(comp.attribute_count()),
        id(comp.object_count() * comp.attribute_count(), BitSet::npos) {
    for (std::size_t g = 0; g < comp.object_count(); ++g)
      comp.row(g).for_each([&](std::size_t m) {
        id[g * attribute_count + m] = cells.size();
        cells.emplace_back(g, m);
      });
  }

  BitSet rectangle(const ObjectSet& extent, const AttributeSet& intent) const {
    BitSet mask(cells.size());
    extent.for_each([&](std::size_t g) {
      intent.for_each([&](std::size_t m) { mask.set(id[g * attribute_count + m]); });
    });
    return mask;
  }
};

// Greedy staircase through the concept lattice of `comp`, forced through the
// concept of `target` so that at least that cell is covered, then extended
// upward by the step with the largest fresh coverage.
BitSet greedy_chain_mask(const FormalContext& comp, const CellGrid& grid,
                         const Cell& target, const BitSet& uncovered) {
  ObjectSet extent = comp.extent_closure(comp.empty_objects());
  BitSet mask = grid.rectangle(extent, comp.object_prime(extent));
  if (!extent.test(target.first)) {
    ObjectSet grown = extent;
    grown.set(target.first);
    extent = comp.extent_closure(grown);
    mask |= grid.rectangle(extent, comp.object_prime(extent));
  }
  while (extent.count() < comp.object_count()) {
    ObjectSet best;
    BitSet best_mask;
    std::size_t best_gain = BitSet::npos;
    extent.complement().for_each([&](std::size_t g) {
      ObjectSet grown = extent;
      grown.set(g);
      grown = comp.extent_closure(grown);
      BitSet m = grid.rectangle(grown, comp.object_prime(grown));
      std::size_t gain = (m & uncovered).without(mask).count();
      if (best_gain == BitSet::npos || gain > best_gain) {
        best_gain = gain;
        best = std::move(grown);
        best_mask = std::move(m);
      }
    });
    extent = std::move(best);
    mask |= best_mask;
  }
  return mask;
}

FerrersResult bounded_result(const FormalContext& comp, const CellGrid& grid,
                             std::uint64_t nodes) {
  FerrersResult r;
  r.exact = false;
  r.nodes = nodes;
  r.lower = clique_lower_bound(comp, grid.cells);
  BitSet uncovered = BitSet::full(grid.cells.size());
  while (!uncovered.empty()) {
    Cell target = grid.cells[uncovered.first()];
    BitSet mask = greedy_chain_mask(comp, grid, target, uncovered);
    std::vector<Cell> rel;
    mask.for_each([&](std::size_t c) { rel.push_back(grid.cells[c]); });
    r.relations.push_back(std::move(rel));
    uncovered = uncovered.without(mask);
  }
  r.upper = r.relations.size();
  return r;
}

}  // namespace

FerrersResult ferrers_order_dimension(const FormalContext& ctx,
                                      std::size_t cell_budget,
                                      std::uint64_t node_budget) {
  FormalContext comp = complement_context(ctx);
  CellGrid grid(comp);
  if (grid.cells.empty()) {
    FerrersResult r;
    r.exact = true;
    return r;
  }
  if (ctx.object_count() * ctx.attribute_count() > cell_budget)
    return bounded_result(comp, grid, 0);

  // Exact: maximal staircases are unions of concept rectangles along maximal
  // chains of the complement's lattice; minimum cover over those.
  std::uint64_t nodes = 0;
  ExtentLattice lat(comp);
  std::vector<BitSet> concept_mask;
  concept_mask.reserve(lat.size());
  for (const auto& e : lat.extents())
    concept_mask.push_back(grid.rectangle(e, comp.object_prime(e)));

  std::unordered_map<BitSet, std::size_t, BitSetHash> by_mask;
  std::vector<BitSet> masks;
  bool complete = true;
  std::function<void(std::size_t, BitSet)> dfs = [&](std::size_t node, BitSet acc) {
    if (!complete) return;
    if (++nodes > node_budget) {
      complete = false;
      return;
    }
    acc |= concept_mask[node];
    const auto& up = lat.upper_covers()[node];
    if (up.empty()) {
      if (by_mask.emplace(acc, masks.size()).second) masks.push_back(acc);
      return;
    }
    for (std::int32_t next : up) dfs(static_cast<std::size_t>(next), acc);
  };
  dfs(lat.bottom_index(), BitSet(grid.cells.size()));
  if (!complete) return bounded_result(comp, grid, nodes);

  std::vector<char> dominated(masks.size(), 0);
  for (std::size_t a = 0; a < masks.size(); ++a)
    for (std::size_t b = 0; b < masks.size(); ++b)
      if (a != b && !dominated[b] && masks[a].is_proper_subset_of(masks[b])) {
        dominated[a] = 1;
        break;
      }
  std::vector<BitSet> kept;
  for (std::size_t a = 0; a < masks.size(); ++a)
    if (!dominated[a]) kept.push_back(std::move(masks[a]));

  std::size_t lower_hint = clique_lower_bound(comp, grid.cells);
  detail::SetCoverOutcome outcome = detail::min_set_cover(
      grid.cells.size(), kept, lower_hint,
      node_budget > nodes ? node_budget - nodes : 0);
  nodes += outcome.nodes;

  FerrersResult r;
  r.nodes = nodes;
  for (std::size_t c : outcome.chosen) {
    std::vector<Cell> rel;
    kept[c].for_each([&](std::size_t i) { rel.push_back(grid.cells[i]); });
    r.relations.push_back(std::move(rel));
  }
  if (outcome.optimal) {
    r.exact = true;
    r.value = outcome.chosen.size();
    r.lower = r.upper = r.value;
  } else {
    r.exact = false;
    r.lower = std::max(lower_hint, outcome.proven_lower);
    r.upper = outcome.chosen.size();
  }
  return r;
}

}  // namespace scaledim
