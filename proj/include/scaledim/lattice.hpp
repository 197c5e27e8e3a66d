#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "scaledim/context.hpp"

namespace scaledim {

// All extents of a formal context in ascending lectic order, together with
// the cover relation (transitive reduction of ⊆). Immutable after
// construction.
class ExtentLattice {
 public:
  static constexpr std::size_t kDefaultMaxExtents = 1'000'000;

  explicit ExtentLattice(FormalContext ctx,
                         std::size_t max_extents = kDefaultMaxExtents);

  const FormalContext& context() const { return ctx_; }
  std::size_t size() const { return extents_.size(); }
  const std::vector<ObjectSet>& extents() const { return extents_; }
  const ObjectSet& extent(std::size_t i) const { return extents_[i]; }

  // Indices of the immediate supersets of each extent, ascending.
  const std::vector<std::vector<std::int32_t>>& upper_covers() const {
    return upper_covers_;
  }

  std::optional<std::size_t> index_of(const ObjectSet& a) const;
  bool is_extent(const ObjectSet& a) const { return ctx_.is_extent(a); }
  bool complement_is_extent(const ObjectSet& a) const;

  // Extents with exactly one upper cover, in lectic order. G (zero covers)
  // never qualifies; the empty extent may.
  const std::vector<std::size_t>& meet_irreducible_indices() const {
    return mi_indices_;
  }
  std::vector<ObjectSet> meet_irreducible_extents() const;

  std::size_t bottom_index() const { return 0; }
  std::size_t top_index() const { return extents_.size() - 1; }

 private:
  FormalContext ctx_;
  std::vector<ObjectSet> extents_;
  std::vector<std::vector<std::int32_t>> upper_covers_;
  std::vector<std::size_t> mi_indices_;
  std::unordered_map<BitSet, std::size_t, BitSetHash> index_;
};

// Fixed points of the extent closure in ascending lectic order (NextClosure).
// Throws CapacityError when more than max_extents closures exist.
std::vector<ObjectSet> enumerate_extents(
    const FormalContext& ctx,
    std::size_t max_extents = ExtentLattice::kDefaultMaxExtents);

inline ExtentLattice all_extents(
    FormalContext ctx,
    std::size_t max_extents = ExtentLattice::kDefaultMaxExtents) {
  return ExtentLattice(std::move(ctx), max_extents);
}

}  // namespace scaledim
