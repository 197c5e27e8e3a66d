#pragma once

#include <optional>
#include <string>
#include <vector>

#include "scaledim/context.hpp"

namespace scaledim {

// Partial data table (G, M, W, I): at most one value per object-attribute
// pair; absent cells are allowed. Immutable after construction.
class ManyValuedContext {
 public:
  ManyValuedContext(std::vector<std::string> objects,
                    std::vector<std::string> attributes,
                    std::vector<std::vector<std::optional<std::string>>> cells);

  std::size_t object_count() const { return objects_.size(); }
  std::size_t attribute_count() const { return attributes_.size(); }
  const std::vector<std::string>& objects() const { return objects_; }
  const std::vector<std::string>& attributes() const { return attributes_; }
  const std::string& object_name(std::size_t g) const { return objects_[g]; }
  const std::string& attribute_name(std::size_t m) const { return attributes_[m]; }

  const std::optional<std::string>& value(std::size_t g, std::size_t m) const {
    return cells_[g][m];
  }
  bool complete() const;

  friend bool operator==(const ManyValuedContext&, const ManyValuedContext&) = default;

 private:
  std::vector<std::string> objects_;
  std::vector<std::string> attributes_;
  std::vector<std::vector<std::optional<std::string>>> cells_;
};

// Declared value domain of one many-valued attribute. When linearly_ordered
// is set, the list order is the linear order on the values.
struct AttributeDomain {
  std::vector<std::string> values;
  bool linearly_ordered = false;

  friend bool operator==(const AttributeDomain&, const AttributeDomain&) = default;
};

// One AttributeDomain per many-valued attribute, in attribute order.
struct PreScaling {
  std::vector<AttributeDomain> domains;

  friend bool operator==(const PreScaling&, const PreScaling&) = default;
};

// Throws unless every stored value belongs to its attribute's declared domain
// and the domain lists are well formed.
void validate_prescaling(const ManyValuedContext& mv, const PreScaling& pre);

enum class ScaleKindTag {
  Nominal,
  Ordinal,
  Interordinal,
  Biordinal,
  Dichotomic,
  Contranominal,
};

struct ScaleKind {
  ScaleKindTag tag = ScaleKindTag::Nominal;
  // Biordinal only: number of values in the lower block, 0 < split < n.
  std::size_t split = 0;

  static ScaleKind nominal() { return {ScaleKindTag::Nominal, 0}; }
  static ScaleKind ordinal() { return {ScaleKindTag::Ordinal, 0}; }
  static ScaleKind interordinal() { return {ScaleKindTag::Interordinal, 0}; }
  static ScaleKind biordinal(std::size_t split) { return {ScaleKindTag::Biordinal, split}; }
  static ScaleKind dichotomic() { return {ScaleKindTag::Dichotomic, 0}; }
  static ScaleKind contranominal() { return {ScaleKindTag::Contranominal, 0}; }

  bool requires_order() const {
    return tag == ScaleKindTag::Ordinal || tag == ScaleKindTag::Interordinal ||
           tag == ScaleKindTag::Biordinal || tag == ScaleKindTag::Dichotomic;
  }
  std::string name() const;
  static std::optional<ScaleKind> from_name(const std::string& name);

  friend bool operator==(const ScaleKind&, const ScaleKind&) = default;
};

// Interpretation device of plain scaling: a formal context whose objects are
// the scale values.
struct Scale {
  FormalContext context;
  std::vector<std::string> value_domain;  // ⊆ context.objects()
};

// Standard scale over the given value list. Attribute names carry the
// comparison and the value ("≤v", "≥v", "=v", "≠v"). Interordinal and
// dichotomic scales omit the two full columns ("≤max", "≥min").
Scale build_scale(const ScaleKind& kind, const std::vector<std::string>& domain);

// Derived context: same objects, attributes are the disjoint union of the
// scale attribute sets named "m:n", and g is incident to (m,n) iff m(g) is
// defined and incident to n in the scale. scales[i] interprets attribute i.
FormalContext plain_scaling(const ManyValuedContext& mv,
                            const std::vector<Scale>& scales);

// Plain scaling with build_scale(kinds[m], domains[m]) per attribute.
FormalContext derive_with_kinds(const ManyValuedContext& mv,
                                const PreScaling& pre,
                                const std::vector<ScaleKind>& kinds);

// Plain scaling with one interordinal (resp. ordinal) scale per attribute;
// every attribute domain must be linearly ordered.
FormalContext interordinal_derive(const ManyValuedContext& mv, const PreScaling& pre);
FormalContext ordinal_derive(const ManyValuedContext& mv, const PreScaling& pre);

// Diagnostic oracle for complete data: checks that the extents of the derived
// context are exactly the intersection closure of the preimages of scale
// extents (plus G).
bool verify_preimage_lemma(const ManyValuedContext& mv,
                           const std::vector<Scale>& scales);

}  // namespace scaledim
