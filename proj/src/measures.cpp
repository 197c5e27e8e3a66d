#include "scaledim/measures.hpp"

#include <unordered_map>
#include <unordered_set>

#include "scaledim/lattice.hpp"

namespace scaledim {

ScaleMeasure make_scale_measure(
    FormalContext source, FormalContext target,
    const std::vector<std::pair<std::string, std::string>>& object_map) {
  std::unordered_map<std::string, std::string> by_name;
  for (const auto& [from, to] : object_map)
    if (!by_name.emplace(from, to).second)
      throw SpecError("object '" + from + "' is mapped twice");
  std::vector<std::size_t> map(source.object_count());
  for (std::size_t g = 0; g < source.object_count(); ++g) {
    auto it = by_name.find(source.object_name(g));
    if (it == by_name.end())
      throw SpecError("no image for object '" + source.object_name(g) + "' (σ must be total)");
    auto t = target.object_index(it->second);
    if (!t)
      throw SpecError("image '" + it->second + "' of '" + source.object_name(g) +
                      "' is not a target object");
    map[g] = *t;
  }
  return ScaleMeasure{std::move(source), std::move(target), std::move(map)};
}

namespace {

ObjectSet preimage(const ScaleMeasure& sm, const ObjectSet& target_extent) {
  ObjectSet pre(sm.source.object_count());
  for (std::size_t g = 0; g < sm.map.size(); ++g)
    if (target_extent.test(sm.map[g])) pre.set(g);
  return pre;
}

void check_measure_shape(const ScaleMeasure& sm) {
  if (sm.map.size() != sm.source.object_count())
    throw StructuralError("σ must be total on the source objects");
  for (std::size_t t : sm.map)
    if (t >= sm.target.object_count())
      throw StructuralError("σ maps outside the target objects");
}

}  // namespace

MeasureCheck is_scale_measure(const ScaleMeasure& sm) {
  check_measure_shape(sm);
  for (const auto& e : enumerate_extents(sm.target)) {
    if (!sm.source.is_extent(preimage(sm, e))) return {false, e};
  }
  return {true, std::nullopt};
}

bool is_full_scale_measure(const ScaleMeasure& sm) {
  MeasureCheck basic = is_scale_measure(sm);
  if (!basic.ok)
    throw PreconditionError("fullness is only defined for scale measures; preimage of " +
                            sm.target.render_object_set(*basic.violating_extent) +
                            " is not a source extent");
  std::unordered_set<BitSet, BitSetHash> preimages;
  for (const auto& e : enumerate_extents(sm.target)) preimages.insert(preimage(sm, e));
  for (const auto& e : enumerate_extents(sm.source))
    if (!preimages.count(e)) return false;
  return true;
}

FormalContext make_view(const FormalContext& base, const ViewSpec& spec) {
  std::vector<std::string> attrs;
  std::vector<ObjectSet> columns;
  for (const auto& [name, generators] : spec.columns) {
    AttributeSet gen(base.attribute_count());
    for (const auto& a : generators) {
      auto m = base.attribute_index(a);
      if (!m)
        throw SpecError("unknown base attribute '" + a + "' in the generator set of '" +
                        name + "'");
      gen.set(*m);
    }
    attrs.push_back(name);
    columns.push_back(base.attribute_prime(gen));
  }
  std::vector<AttributeSet> rows(base.object_count(), AttributeSet(attrs.size()));
  for (std::size_t j = 0; j < columns.size(); ++j)
    columns[j].for_each([&](std::size_t g) { rows[g].set(j); });
  return FormalContext(base.objects(), std::move(attrs), std::move(rows));
}

bool is_view(const FormalContext& candidate, const FormalContext& base) {
  if (candidate.objects() != base.objects())
    throw StructuralError("view check requires identical object lists");
  // Column extents generate all extents by intersection, so checking the
  // columns suffices.
  for (std::size_t m = 0; m < candidate.attribute_count(); ++m)
    if (!base.is_extent(candidate.column(m))) return false;
  return true;
}

FormalContext canonical_view(const FormalContext& base,
                             const std::vector<ObjectSet>& extent_family) {
  std::vector<std::string> attrs;
  std::unordered_set<std::string> seen;
  for (const auto& e : extent_family) {
    if (!base.is_extent(e))
      throw SpecError("family member " + base.render_object_set(e) +
                      " is not an extent of the base context");
    std::string name = base.render_object_set(e);
    if (!seen.insert(name).second)
      throw SpecError("family member " + name + " appears twice");
    attrs.push_back(std::move(name));
  }
  std::vector<AttributeSet> rows(base.object_count(), AttributeSet(attrs.size()));
  for (std::size_t j = 0; j < extent_family.size(); ++j)
    extent_family[j].for_each([&](std::size_t g) { rows[g].set(j); });
  return FormalContext(base.objects(), std::move(attrs), std::move(rows));
}

}  // namespace scaledim
