#include "scaledim/scaling.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "scaledim/lattice.hpp"

namespace scaledim {

ManyValuedContext::ManyValuedContext(
    std::vector<std::string> objects, std::vector<std::string> attributes,
    std::vector<std::vector<std::optional<std::string>>> cells)
    : objects_(std::move(objects)),
      attributes_(std::move(attributes)),
      cells_(std::move(cells)) {
  auto check_unique = [](const std::vector<std::string>& names, const char* what) {
    std::unordered_set<std::string> seen;
    for (const auto& n : names) {
      if (n.empty())
        throw StructuralError(std::string(what) + " name must not be empty");
      if (!seen.insert(n).second)
        throw StructuralError("duplicate " + std::string(what) + " name '" + n + "'");
    }
  };
  check_unique(objects_, "object");
  check_unique(attributes_, "attribute");
  if (cells_.size() != objects_.size())
    throw StructuralError("cell row count does not match object count");
  for (const auto& row : cells_)
    if (row.size() != attributes_.size())
      throw StructuralError("cell row width does not match attribute count");
}

bool ManyValuedContext::complete() const {
  for (const auto& row : cells_)
    for (const auto& cell : row)
      if (!cell) return false;
  return true;
}

void validate_prescaling(const ManyValuedContext& mv, const PreScaling& pre) {
  if (pre.domains.size() != mv.attribute_count())
    throw StructuralError("pre-scaling must declare one domain per attribute");
  for (std::size_t m = 0; m < mv.attribute_count(); ++m) {
    const auto& dom = pre.domains[m].values;
    std::unordered_set<std::string> tokens;
    for (const auto& v : dom)
      if (!tokens.insert(v).second)
        throw ConfigurationError("duplicate value '" + v + "' in the domain of " +
                                 mv.attribute_name(m));
    for (std::size_t g = 0; g < mv.object_count(); ++g) {
      const auto& cell = mv.value(g, m);
      if (cell && !tokens.count(*cell))
        throw ConfigurationError("value '" + *cell + "' of (" + mv.object_name(g) +
                                 ", " + mv.attribute_name(m) +
                                 ") is not in the declared domain");
    }
  }
}

std::string ScaleKind::name() const {
  switch (tag) {
    case ScaleKindTag::Nominal: return "nominal";
    case ScaleKindTag::Ordinal: return "ordinal";
    case ScaleKindTag::Interordinal: return "interordinal";
    case ScaleKindTag::Biordinal: return "biordinal";
    case ScaleKindTag::Dichotomic: return "dichotomic";
    case ScaleKindTag::Contranominal: return "contranominal";
  }
  return "?";
}

std::optional<ScaleKind> ScaleKind::from_name(const std::string& name) {
  if (name == "nominal") return nominal();
  if (name == "ordinal") return ordinal();
  if (name == "interordinal") return interordinal();
  if (name == "biordinal") return biordinal(0);  // split filled in by the caller
  if (name == "dichotomic") return dichotomic();
  if (name == "contranominal") return contranominal();
  return std::nullopt;
}

Scale build_scale(const ScaleKind& kind, const std::vector<std::string>& domain) {
  if (domain.empty())
    throw ConfigurationError("scale domain must not be empty");
  {
    std::unordered_set<std::string> seen;
    for (const auto& v : domain)
      if (!seen.insert(v).second)
        throw ConfigurationError("duplicate value '" + v + "' in scale domain");
  }
  const std::size_t n = domain.size();
  std::vector<std::string> attrs;
  // incidence(u, attribute) as a predicate over value indices
  std::vector<std::vector<bool>> table;
  auto add_column = [&](std::string name, auto&& pred) {
    attrs.push_back(std::move(name));
    std::vector<bool> col(n);
    for (std::size_t u = 0; u < n; ++u) col[u] = pred(u);
    table.push_back(std::move(col));
  };

  switch (kind.tag) {
    case ScaleKindTag::Nominal:
      for (std::size_t v = 0; v < n; ++v)
        add_column("=" + domain[v], [&](std::size_t u) { return u == v; });
      break;
    case ScaleKindTag::Contranominal:
      for (std::size_t v = 0; v < n; ++v)
        add_column("≠" + domain[v], [&](std::size_t u) { return u != v; });
      break;
    case ScaleKindTag::Ordinal:
      for (std::size_t v = 0; v < n; ++v)
        add_column("≤" + domain[v], [&](std::size_t u) { return u <= v; });
      break;
    case ScaleKindTag::Interordinal:
      for (std::size_t v = 0; v + 1 < n; ++v)
        add_column("≤" + domain[v], [&](std::size_t u) { return u <= v; });
      for (std::size_t v = 1; v < n; ++v)
        add_column("≥" + domain[v], [&](std::size_t u) { return u >= v; });
      break;
    case ScaleKindTag::Dichotomic:
      if (n != 2)
        throw ConfigurationError("dichotomic scale requires exactly two values, got " +
                                 std::to_string(n));
      add_column("≤" + domain[0], [&](std::size_t u) { return u == 0; });
      add_column("≥" + domain[1], [&](std::size_t u) { return u == 1; });
      break;
    case ScaleKindTag::Biordinal: {
      if (kind.split == 0 || kind.split >= n)
        throw ConfigurationError("biordinal split must lie strictly inside the domain");
      for (std::size_t v = 0; v < kind.split; ++v)
        add_column("≤" + domain[v], [&](std::size_t u) { return u <= v; });
      for (std::size_t v = kind.split; v < n; ++v)
        add_column("≥" + domain[v], [&](std::size_t u) { return u >= v && u >= kind.split; });
      break;
    }
  }

  std::vector<AttributeSet> rows(n, AttributeSet(attrs.size()));
  for (std::size_t j = 0; j < attrs.size(); ++j)
    for (std::size_t u = 0; u < n; ++u)
      if (table[j][u]) rows[u].set(j);
  Scale s{FormalContext(domain, std::move(attrs), std::move(rows)), domain};
  return s;
}

FormalContext plain_scaling(const ManyValuedContext& mv,
                            const std::vector<Scale>& scales) {
  if (scales.size() != mv.attribute_count())
    throw StructuralError("plain scaling needs one scale per many-valued attribute");

  std::vector<std::string> attrs;
  std::vector<std::size_t> offsets(scales.size());
  for (std::size_t m = 0; m < scales.size(); ++m) {
    offsets[m] = attrs.size();
    for (const auto& n : scales[m].context.attributes())
      attrs.push_back(mv.attribute_name(m) + ":" + n);
  }

  std::vector<AttributeSet> rows(mv.object_count(), AttributeSet(attrs.size()));
  for (std::size_t g = 0; g < mv.object_count(); ++g) {
    for (std::size_t m = 0; m < scales.size(); ++m) {
      const auto& cell = mv.value(g, m);
      if (!cell) continue;  // ⊥ contributes no incidences in this block
      auto v = scales[m].context.object_index(*cell);
      if (!v)
        throw ScalingError("value '" + *cell + "' of (" + mv.object_name(g) + ", " +
                           mv.attribute_name(m) + ") is not an object of its scale");
      scales[m].context.row(*v).for_each(
          [&](std::size_t j) { rows[g].set(offsets[m] + j); });
    }
  }
  return FormalContext(mv.objects(), std::move(attrs), std::move(rows));
}

FormalContext derive_with_kinds(const ManyValuedContext& mv, const PreScaling& pre,
                                const std::vector<ScaleKind>& kinds) {
  validate_prescaling(mv, pre);
  if (kinds.size() != mv.attribute_count())
    throw StructuralError("derivation needs one scale kind per attribute");
  std::vector<Scale> scales;
  scales.reserve(kinds.size());
  for (std::size_t m = 0; m < kinds.size(); ++m) {
    if (kinds[m].requires_order() && !pre.domains[m].linearly_ordered)
      throw ConfigurationError("attribute " + mv.attribute_name(m) + " has no linear order but scale kind " +
                               kinds[m].name() + " requires one");
    scales.push_back(build_scale(kinds[m], pre.domains[m].values));
  }
  return plain_scaling(mv, scales);
}

FormalContext interordinal_derive(const ManyValuedContext& mv, const PreScaling& pre) {
  return derive_with_kinds(
      mv, pre, std::vector<ScaleKind>(mv.attribute_count(), ScaleKind::interordinal()));
}

FormalContext ordinal_derive(const ManyValuedContext& mv, const PreScaling& pre) {
  return derive_with_kinds(
      mv, pre, std::vector<ScaleKind>(mv.attribute_count(), ScaleKind::ordinal()));
}

bool verify_preimage_lemma(const ManyValuedContext& mv,
                           const std::vector<Scale>& scales) {
  if (!mv.complete())
    throw PreconditionError("the preimage characterization requires a complete many-valued context");
  FormalContext derived = plain_scaling(mv, scales);

  std::unordered_set<BitSet, BitSetHash> lhs;
  for (const auto& e : enumerate_extents(derived)) lhs.insert(e);

  // Preimages of scale extents, then closure under pairwise intersection.
  std::vector<ObjectSet> family;
  std::unordered_set<BitSet, BitSetHash> seen;
  auto push = [&](const ObjectSet& s) {
    if (seen.insert(s).second) family.push_back(s);
  };
  push(ObjectSet::full(mv.object_count()));
  for (std::size_t m = 0; m < scales.size(); ++m) {
    std::vector<std::size_t> sigma(mv.object_count());
    for (std::size_t g = 0; g < mv.object_count(); ++g) {
      auto v = scales[m].context.object_index(*mv.value(g, m));
      if (!v)
        throw ScalingError("value '" + *mv.value(g, m) + "' of (" + mv.object_name(g) +
                           ", " + mv.attribute_name(m) + ") is not an object of its scale");
      sigma[g] = *v;
    }
    for (const auto& scale_extent : enumerate_extents(scales[m].context)) {
      ObjectSet pre(mv.object_count());
      for (std::size_t g = 0; g < mv.object_count(); ++g)
        if (scale_extent.test(sigma[g])) pre.set(g);
      push(pre);
    }
  }
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) push(family[i] & family[j]);

  return seen.size() == lhs.size() &&
         std::all_of(family.begin(), family.end(),
                     [&](const ObjectSet& s) { return lhs.count(s) > 0; });
}

}  // namespace scaledim
