#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "scaledim/context.hpp"

namespace scaledim {

// A total map σ from the objects of a source context into the objects of a
// target context. It is a scale measure when every target extent pulls back
// to a source extent.
struct ScaleMeasure {
  FormalContext source;
  FormalContext target;
  std::vector<std::size_t> map;  // source object index -> target object index
};

// Builds a measure from a name-level map; every source object must be mapped
// to an existing target object.
ScaleMeasure make_scale_measure(
    FormalContext source, FormalContext target,
    const std::vector<std::pair<std::string, std::string>>& object_map);

struct MeasureCheck {
  bool ok = false;
  // Lectically first target extent whose preimage is not a source extent.
  std::optional<ObjectSet> violating_extent;
};

MeasureCheck is_scale_measure(const ScaleMeasure& sm);

// Requires is_scale_measure(sm).ok; true iff every source extent is the
// preimage of some target extent. Both extent families are materialized,
// which is exponential in the worst case.
bool is_full_scale_measure(const ScaleMeasure& sm);

// View specification: each derived attribute is generated by a set of base
// attributes; an empty generator set yields the full column.
struct ViewSpec {
  std::vector<std::pair<std::string, std::vector<std::string>>> columns;
};

// Context on the same objects whose column n is the extent of A_n in base.
FormalContext make_view(const FormalContext& base, const ViewSpec& spec);

// True iff candidate has the same object list and the identity map is a
// candidate-measure of base (every candidate extent is a base extent).
bool is_view(const FormalContext& candidate, const FormalContext& base);

// The context (G, 𝒜, ∈) for a family 𝒜 of base extents; attribute names
// render the member sets.
FormalContext canonical_view(const FormalContext& base,
                             const std::vector<ObjectSet>& extent_family);

}  // namespace scaledim
