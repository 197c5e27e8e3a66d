#include "scaledim/lattice.hpp"

#include <algorithm>

namespace scaledim {

std::vector<ObjectSet> enumerate_extents(const FormalContext& ctx,
                                         std::size_t max_extents) {
  const std::size_t n = ctx.object_count();
  std::vector<ObjectSet> out;
  ObjectSet a = ctx.extent_closure(ctx.empty_objects());
  for (;;) {
    if (out.size() >= max_extents)
      throw CapacityError("extent enumeration exceeded the limit of " +
                              std::to_string(max_extents) + " extents",
                          out.size());
    out.push_back(a);
    if (a.count() == n) break;
    bool advanced = false;
    for (std::size_t ii = n; ii-- > 0;) {
      if (a.test(ii)) {
        a.reset(ii);
      } else {
        ObjectSet b = a;
        b.set(ii);
        b = ctx.extent_closure(b);
        // Lectic successor: the closure may add nothing below ii.
        if (b.without(a).first() == ii) {
          a = std::move(b);
          advanced = true;
          break;
        }
      }
    }
    if (!advanced)
      throw Error("internal: closure enumeration stalled before the top extent");
  }
  return out;
}

ExtentLattice::ExtentLattice(FormalContext ctx, std::size_t max_extents)
    : ctx_(std::move(ctx)) {
  extents_ = enumerate_extents(ctx_, max_extents);
  index_.reserve(extents_.size());
  for (std::size_t i = 0; i < extents_.size(); ++i) index_.emplace(extents_[i], i);

  // Upper covers of E are the minimal sets among {closure(E ∪ {g}) : g ∉ E}.
  upper_covers_.resize(extents_.size());
  for (std::size_t e = 0; e < extents_.size(); ++e) {
    const ObjectSet& ext = extents_[e];
    std::vector<std::size_t> candidates;
    ext.complement().for_each([&](std::size_t g) {
      ObjectSet grown = ext;
      grown.set(g);
      std::size_t idx = index_.at(ctx_.extent_closure(grown));
      candidates.push_back(idx);
    });
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()),
                     candidates.end());
    for (std::size_t c : candidates) {
      bool minimal = true;
      for (std::size_t d : candidates) {
        if (d != c && extents_[d].is_proper_subset_of(extents_[c])) {
          minimal = false;
          break;
        }
      }
      if (minimal) upper_covers_[e].push_back(static_cast<std::int32_t>(c));
    }
  }

  for (std::size_t e = 0; e < extents_.size(); ++e)
    if (upper_covers_[e].size() == 1) mi_indices_.push_back(e);
}

std::optional<std::size_t> ExtentLattice::index_of(const ObjectSet& a) const {
  auto it = index_.find(a);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool ExtentLattice::complement_is_extent(const ObjectSet& a) const {
  if (a.universe() != ctx_.object_count())
    throw StructuralError("object set does not index into this context");
  return ctx_.is_extent(a.complement());
}

std::vector<ObjectSet> ExtentLattice::meet_irreducible_extents() const {
  std::vector<ObjectSet> out;
  out.reserve(mi_indices_.size());
  for (std::size_t i : mi_indices_) out.push_back(extents_[i]);
  return out;
}

}  // namespace scaledim
