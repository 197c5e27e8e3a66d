#include "scaledim/context.hpp"

#include <algorithm>

namespace scaledim {

namespace {

void validate_names(const std::vector<std::string>& names, const char* what,
                    std::unordered_map<std::string, std::size_t>& index) {
  for (std::size_t i = 0; i < names.size(); ++i) {
    const std::string& n = names[i];
    if (n.empty())
      throw StructuralError(std::string(what) + " name must not be empty");
    if (n.find('\n') != std::string::npos || n.find('\r') != std::string::npos)
      throw StructuralError(std::string(what) + " name must not contain line breaks: '" + n + "'");
    if (!index.emplace(n, i).second)
      throw StructuralError("duplicate " + std::string(what) + " name '" + n + "'");
  }
}

}  // namespace

FormalContext::FormalContext() = default;

FormalContext::FormalContext(std::vector<std::string> objects,
                             std::vector<std::string> attributes,
                             std::vector<AttributeSet> rows)
    : objects_(std::move(objects)),
      attributes_(std::move(attributes)),
      rows_(std::move(rows)) {
  validate_names(objects_, "object", object_index_);
  validate_names(attributes_, "attribute", attribute_index_);
  if (rows_.size() != objects_.size())
    throw StructuralError("incidence row count does not match object count");
  for (const auto& r : rows_)
    if (r.universe() != attributes_.size())
      throw StructuralError("incidence row width does not match attribute count");
  cols_.assign(attributes_.size(), ObjectSet(objects_.size()));
  for (std::size_t g = 0; g < rows_.size(); ++g)
    rows_[g].for_each([&](std::size_t m) { cols_[m].set(g); });
}

FormalContext FormalContext::from_table(std::vector<std::string> objects,
                                        std::vector<std::string> attributes,
                                        const std::vector<std::string>& table) {
  if (table.size() != objects.size())
    throw StructuralError("table row count does not match object count");
  std::vector<AttributeSet> rows;
  rows.reserve(table.size());
  for (const std::string& line : table) {
    if (line.size() != attributes.size())
      throw StructuralError("table row width does not match attribute count");
    AttributeSet r(attributes.size());
    for (std::size_t m = 0; m < line.size(); ++m) {
      if (line[m] == 'X')
        r.set(m);
      else if (line[m] != '.')
        throw StructuralError(std::string("table cell must be 'X' or '.', got '") + line[m] + "'");
    }
    rows.push_back(std::move(r));
  }
  return FormalContext(std::move(objects), std::move(attributes), std::move(rows));
}

std::optional<std::size_t> FormalContext::object_index(std::string_view name) const {
  auto it = object_index_.find(std::string(name));
  if (it == object_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> FormalContext::attribute_index(std::string_view name) const {
  auto it = attribute_index_.find(std::string(name));
  if (it == attribute_index_.end()) return std::nullopt;
  return it->second;
}

std::size_t FormalContext::incidence_count() const {
  std::size_t c = 0;
  for (const auto& r : rows_) c += r.count();
  return c;
}

void FormalContext::check_objects(const ObjectSet& a) const {
  if (a.universe() != object_count())
    throw StructuralError("object set does not index into this context");
}

void FormalContext::check_attributes(const AttributeSet& b) const {
  if (b.universe() != attribute_count())
    throw StructuralError("attribute set does not index into this context");
}

AttributeSet FormalContext::object_prime(const ObjectSet& a) const {
  check_objects(a);
  AttributeSet r = full_attributes();
  a.for_each([&](std::size_t g) { r &= rows_[g]; });
  return r;
}

ObjectSet FormalContext::attribute_prime(const AttributeSet& b) const {
  check_attributes(b);
  ObjectSet r = full_objects();
  b.for_each([&](std::size_t m) { r &= cols_[m]; });
  return r;
}

ObjectSet FormalContext::extent_closure(const ObjectSet& a) const {
  return attribute_prime(object_prime(a));
}

AttributeSet FormalContext::intent_closure(const AttributeSet& b) const {
  return object_prime(attribute_prime(b));
}

bool FormalContext::is_extent(const ObjectSet& a) const {
  return extent_closure(a) == a;
}

namespace {

std::string render_set(const std::vector<std::string>& names, const BitSet& s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](std::size_t i) {
    if (!first) out += ",";
    out += names[i];
    first = false;
  });
  out += "}";
  return out;
}

}  // namespace

std::string FormalContext::render_object_set(const ObjectSet& a) const {
  check_objects(a);
  return render_set(objects_, a);
}

std::string FormalContext::render_attribute_set(const AttributeSet& b) const {
  check_attributes(b);
  return render_set(attributes_, b);
}

FormalContext clarify(const FormalContext& ctx) {
  // Keep the first object of every distinct intent.
  std::vector<std::size_t> kept_objects;
  {
    std::unordered_map<BitSet, std::size_t, BitSetHash> seen;
    for (std::size_t g = 0; g < ctx.object_count(); ++g)
      if (seen.emplace(ctx.row(g), g).second) kept_objects.push_back(g);
  }
  // Columns are compared after the row merge.
  std::vector<std::size_t> kept_attributes;
  {
    std::unordered_map<BitSet, std::size_t, BitSetHash> seen;
    for (std::size_t m = 0; m < ctx.attribute_count(); ++m) {
      BitSet restricted(kept_objects.size());
      for (std::size_t i = 0; i < kept_objects.size(); ++i)
        if (ctx.incident(kept_objects[i], m)) restricted.set(i);
      if (seen.emplace(restricted, m).second) kept_attributes.push_back(m);
    }
  }
  std::vector<std::string> objects, attributes;
  for (std::size_t g : kept_objects) objects.push_back(ctx.object_name(g));
  for (std::size_t m : kept_attributes) attributes.push_back(ctx.attribute_name(m));
  std::vector<AttributeSet> rows;
  rows.reserve(objects.size());
  for (std::size_t g : kept_objects) {
    AttributeSet r(attributes.size());
    for (std::size_t j = 0; j < kept_attributes.size(); ++j)
      if (ctx.incident(g, kept_attributes[j])) r.set(j);
    rows.push_back(std::move(r));
  }
  return FormalContext(std::move(objects), std::move(attributes), std::move(rows));
}

bool is_atomistic(const FormalContext& ctx) {
  for (std::size_t g = 0; g < ctx.object_count(); ++g)
    for (std::size_t h = 0; h < ctx.object_count(); ++h)
      if (ctx.row(g).is_proper_subset_of(ctx.row(h))) return false;
  return true;
}

}  // namespace scaledim
