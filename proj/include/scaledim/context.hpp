#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "scaledim/bitset.hpp"
#include "scaledim/errors.hpp"

namespace scaledim {

using ObjectSet = BitSet;     // subset of a context's objects
using AttributeSet = BitSet;  // subset of a context's attributes

// A formal context (G, M, I): ordered object and attribute names with a
// boolean incidence table. Immutable after construction; all derivation
// operators are const and pure.
class FormalContext {
 public:
  FormalContext();
  // rows[g] is the attribute set of object g.
  FormalContext(std::vector<std::string> objects,
                std::vector<std::string> attributes,
                std::vector<AttributeSet> rows);

  // Convenience builder: one string per object over {'X', '.'}.
  static FormalContext from_table(std::vector<std::string> objects,
                                  std::vector<std::string> attributes,
                                  const std::vector<std::string>& table);

  std::size_t object_count() const { return objects_.size(); }
  std::size_t attribute_count() const { return attributes_.size(); }
  const std::vector<std::string>& objects() const { return objects_; }
  const std::vector<std::string>& attributes() const { return attributes_; }
  const std::string& object_name(std::size_t g) const { return objects_[g]; }
  const std::string& attribute_name(std::size_t m) const { return attributes_[m]; }
  std::optional<std::size_t> object_index(std::string_view name) const;
  std::optional<std::size_t> attribute_index(std::string_view name) const;

  const AttributeSet& row(std::size_t g) const { return rows_[g]; }
  const ObjectSet& column(std::size_t m) const { return cols_[m]; }
  bool incident(std::size_t g, std::size_t m) const { return rows_[g].test(m); }
  std::size_t incidence_count() const;

  // Derivation (prime) operators. The prime of the empty object set is the
  // full attribute set, and dually.
  AttributeSet object_prime(const ObjectSet& a) const;
  ObjectSet attribute_prime(const AttributeSet& b) const;
  ObjectSet extent_closure(const ObjectSet& a) const;        // A''
  AttributeSet intent_closure(const AttributeSet& b) const;  // B''
  bool is_extent(const ObjectSet& a) const;

  ObjectSet empty_objects() const { return ObjectSet(object_count()); }
  ObjectSet full_objects() const { return ObjectSet::full(object_count()); }
  AttributeSet empty_attributes() const { return AttributeSet(attribute_count()); }
  AttributeSet full_attributes() const { return AttributeSet::full(attribute_count()); }

  // "{a,b}" with names in input order.
  std::string render_object_set(const ObjectSet& a) const;
  std::string render_attribute_set(const AttributeSet& b) const;

  friend bool operator==(const FormalContext& a, const FormalContext& b) {
    return a.objects_ == b.objects_ && a.attributes_ == b.attributes_ &&
           a.rows_ == b.rows_;
  }

 private:
  void check_objects(const ObjectSet& a) const;
  void check_attributes(const AttributeSet& b) const;

  std::vector<std::string> objects_;
  std::vector<std::string> attributes_;
  std::vector<AttributeSet> rows_;
  std::vector<ObjectSet> cols_;
  std::unordered_map<std::string, std::size_t> object_index_;
  std::unordered_map<std::string, std::size_t> attribute_index_;
};

// Merge duplicate rows and duplicate columns, keeping first occurrences.
// The extent lattice is preserved up to the induced object relabeling.
FormalContext clarify(const FormalContext& ctx);

// True iff no object intent properly contains another:
// {g}' ⊆ {h}' implies {g}' = {h}'.
bool is_atomistic(const FormalContext& ctx);

}  // namespace scaledim
