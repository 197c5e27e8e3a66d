#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "scaledim/dimensions.hpp"
#include "scaledim/lattice.hpp"

namespace testsupport {

using scaledim::BitSet;
using scaledim::BitSetHash;
using scaledim::ExtentLattice;
using scaledim::FormalContext;
using scaledim::ObjectSet;

inline FormalContext drive_context() {
  return FormalContext::from_table(
      {"Conventional", "All-Wheel", "Mid-Wheel", "Rear-Wheel", "Front-Wheel"},
      {"1", "2", "3", "4", "5", "6"},
      {"..XXXX", "X..XXX", "XX..XX", "XXX..X", "XXXXX."});
}

inline FormalContext diag3_context() {
  return FormalContext::from_table({"g1", "g2", "g3"}, {"m1", "m2", "m3"},
                                   {"X..", ".X.", "..X"});
}

inline FormalContext nominal2_context() {
  return FormalContext::from_table({"a", "b"}, {"p", "q"}, {"X.", ".X"});
}

inline ObjectSet objects_of(const FormalContext& ctx,
                            std::initializer_list<const char*> names) {
  ObjectSet s(ctx.object_count());
  for (const char* n : names) s.set(*ctx.object_index(n));
  return s;
}

inline scaledim::AttributeSet attributes_of(const FormalContext& ctx,
                                            std::initializer_list<const char*> names) {
  scaledim::AttributeSet s(ctx.attribute_count());
  for (const char* n : names) s.set(*ctx.attribute_index(n));
  return s;
}

inline std::unordered_set<BitSet, BitSetHash> extent_family(const FormalContext& ctx) {
  std::unordered_set<BitSet, BitSetHash> out;
  for (const auto& e : scaledim::enumerate_extents(ctx)) out.insert(e);
  return out;
}

inline FormalContext random_context(std::mt19937& rng, std::size_t max_objects,
                                    std::size_t max_attributes, double density = 0.5) {
  std::uniform_int_distribution<std::size_t> gd(0, max_objects), md(0, max_attributes);
  std::size_t G = gd(rng), M = md(rng);
  std::bernoulli_distribution cross(density);
  std::vector<std::string> objects, attributes;
  for (std::size_t g = 0; g < G; ++g) objects.push_back("g" + std::to_string(g + 1));
  for (std::size_t m = 0; m < M; ++m) attributes.push_back("m" + std::to_string(m + 1));
  std::vector<scaledim::AttributeSet> rows(G, scaledim::AttributeSet(M));
  for (std::size_t g = 0; g < G; ++g)
    for (std::size_t m = 0; m < M; ++m)
      if (cross(rng)) rows[g].set(m);
  return FormalContext(std::move(objects), std::move(attributes), std::move(rows));
}

// Brute-force extent family: closures of every object subset. |G| small.
inline std::set<std::vector<bool>> brute_force_extents(const FormalContext& ctx) {
  const std::size_t n = ctx.object_count();
  std::set<std::vector<bool>> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    ObjectSet a(n);
    for (std::size_t g = 0; g < n; ++g)
      if (mask & (std::uint64_t{1} << g)) a.set(g);
    ObjectSet c = ctx.extent_closure(a);
    std::vector<bool> key(n);
    for (std::size_t g = 0; g < n; ++g) key[g] = c.test(g);
    out.insert(key);
  }
  return out;
}

// Brute-force width: maximum antichain over all subsets. n ≤ 16.
inline std::size_t brute_force_width(const std::vector<BitSet>& elements) {
  const std::size_t n = elements.size();
  std::size_t best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<std::size_t> picked;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::uint64_t{1} << i)) picked.push_back(i);
    bool antichain = true;
    for (std::size_t a = 0; a < picked.size() && antichain; ++a)
      for (std::size_t b = 0; b < a; ++b)
        if (elements[picked[a]].comparable_with(elements[picked[b]])) {
          antichain = false;
          break;
        }
    if (antichain) best = std::max(best, picked.size());
  }
  return best;
}

// Exhaustive ISD: every ladder is the complement closure of a chain of
// nonempty proper extents whose complements are extents; enumerate all such
// chains, collect their meet-irreducible coverage, and search for the
// smallest covering family by plain depth-first search.
inline std::optional<std::size_t> brute_force_isd(const ExtentLattice& lat) {
  std::vector<ObjectSet> mi = lat.meet_irreducible_extents();
  for (const auto& e : mi)
    if (e.empty() || !lat.is_extent(e.complement())) return std::nullopt;
  if (mi.empty()) return 0;

  std::vector<ObjectSet> universe;
  for (const auto& e : lat.extents())
    if (!e.empty() && !e.is_full() && lat.is_extent(e.complement()))
      universe.push_back(e);

  std::unordered_map<BitSet, std::size_t, BitSetHash> mi_pos;
  for (std::size_t i = 0; i < mi.size(); ++i) mi_pos.emplace(mi[i], i);

  std::unordered_set<BitSet, BitSetHash> masks;
  std::vector<std::size_t> chain;
  auto chain_mask = [&]() {
    BitSet mask(mi.size());
    for (std::size_t i : chain) {
      auto it = mi_pos.find(universe[i]);
      if (it != mi_pos.end()) mask.set(it->second);
      auto ic = mi_pos.find(universe[i].complement());
      if (ic != mi_pos.end()) mask.set(ic->second);
    }
    return mask;
  };
  std::function<void(std::size_t)> extend = [&](std::size_t last) {
    masks.insert(chain_mask());
    for (std::size_t j = 0; j < universe.size(); ++j)
      if (universe[last].is_proper_subset_of(universe[j])) {
        chain.push_back(j);
        extend(j);
        chain.pop_back();
      }
  };
  for (std::size_t i = 0; i < universe.size(); ++i) {
    chain = {i};
    extend(i);
  }

  std::vector<BitSet> mask_list(masks.begin(), masks.end());
  std::function<bool(const BitSet&, std::size_t)> coverable =
      [&](const BitSet& uncovered, std::size_t depth) -> bool {
    if (uncovered.empty()) return true;
    if (depth == 0) return false;
    std::size_t e = uncovered.first();
    for (const auto& m : mask_list)
      if (m.test(e) && coverable(uncovered.without(m), depth - 1)) return true;
    return false;
  };
  for (std::size_t d = 1; d <= mi.size(); ++d)
    if (coverable(BitSet::full(mi.size()), d)) return d;
  return mi.size();  // unreachable: singletons cover one element each
}

// Staircase test: the per-row column sets must form a chain under inclusion.
inline bool is_staircase(const std::vector<std::pair<std::size_t, std::size_t>>& cells) {
  std::map<std::size_t, std::set<std::size_t>> rows;
  for (const auto& [g, m] : cells) rows[g].insert(m);
  std::vector<const std::set<std::size_t>*> sets;
  for (const auto& [g, cols] : rows) sets.push_back(&cols);
  for (std::size_t a = 0; a < sets.size(); ++a)
    for (std::size_t b = 0; b < a; ++b) {
      const auto& x = *sets[a];
      const auto& y = *sets[b];
      bool x_in_y = std::includes(y.begin(), y.end(), x.begin(), x.end());
      bool y_in_x = std::includes(x.begin(), x.end(), y.begin(), y.end());
      if (!x_in_y && !y_in_x) return false;
    }
  return true;
}

}  // namespace testsupport
