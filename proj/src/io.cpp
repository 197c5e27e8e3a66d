#include "scaledim/io.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

namespace scaledim {

namespace {

struct Line {
  std::string text;
  std::size_t number;  // 1-based
};

std::vector<Line> split_lines(std::string_view bytes) {
  std::vector<Line> lines;
  std::size_t number = 1;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= bytes.size(); ++i) {
    if (i == bytes.size() || bytes[i] == '\n') {
      if (i == bytes.size() && i == start) break;  // no trailing empty line
      std::string text(bytes.substr(start, i - start));
      if (!text.empty() && text.back() == '\r') text.pop_back();
      lines.push_back({std::move(text), number});
      ++number;
      start = i + 1;
    }
  }
  return lines;
}

class LineReader {
 public:
  explicit LineReader(std::vector<Line> lines) : lines_(std::move(lines)) {}

  bool done() const { return pos_ >= lines_.size(); }
  std::size_t line_number() const {
    return done() ? (lines_.empty() ? 1 : lines_.back().number + 1)
                  : lines_[pos_].number;
  }
  const Line& take(const char* what) {
    if (done()) throw ParseError(std::string("unexpected end of input, expected ") + what,
                                 line_number());
    return lines_[pos_++];
  }
  void skip_blank() {
    while (!done() && lines_[pos_].text.empty()) ++pos_;
  }

 private:
  std::vector<Line> lines_;
  std::size_t pos_ = 0;
};

std::size_t parse_count(const Line& line, const char* what) {
  if (line.text.empty() ||
      !std::all_of(line.text.begin(), line.text.end(),
                   [](unsigned char c) { return c >= '0' && c <= '9'; }))
    throw ParseError(std::string("expected ") + what + ", got '" + line.text + "'",
                     line.number);
  std::size_t value = 0;
  for (char c : line.text) {
    value = value * 10 + static_cast<std::size_t>(c - '0');
    if (value > 100'000'000) throw ParseError(std::string(what) + " is implausibly large", line.number);
  }
  return value;
}

}  // namespace

FormalContext parse_cxt(std::string_view bytes) {
  LineReader in(split_lines(bytes));
  in.skip_blank();
  {
    const Line& header = in.take("header 'B'");
    if (header.text != "B")
      throw ParseError("expected header 'B', got '" + header.text + "'", header.number);
  }
  in.skip_blank();
  std::size_t object_count = parse_count(in.take("object count"), "object count");
  in.skip_blank();
  std::size_t attribute_count = parse_count(in.take("attribute count"), "attribute count");
  in.skip_blank();

  std::vector<std::string> objects, attributes;
  std::unordered_set<std::string> seen;
  for (std::size_t g = 0; g < object_count; ++g) {
    const Line& line = in.take("object name");
    if (line.text.empty()) throw ParseError("object name must not be empty", line.number);
    if (!seen.insert(line.text).second)
      throw ParseError("duplicate object name '" + line.text + "'", line.number);
    objects.push_back(line.text);
  }
  seen.clear();
  for (std::size_t m = 0; m < attribute_count; ++m) {
    const Line& line = in.take("attribute name");
    if (line.text.empty()) throw ParseError("attribute name must not be empty", line.number);
    if (!seen.insert(line.text).second)
      throw ParseError("duplicate attribute name '" + line.text + "'", line.number);
    attributes.push_back(line.text);
  }

  std::vector<AttributeSet> rows;
  rows.reserve(object_count);
  for (std::size_t g = 0; g < object_count; ++g) {
    const Line& line = in.take("incidence row");
    if (line.text.size() != attribute_count)
      throw ParseError("incidence row has " + std::to_string(line.text.size()) +
                           " symbols, expected " + std::to_string(attribute_count),
                       line.number);
    AttributeSet row(attribute_count);
    for (std::size_t m = 0; m < attribute_count; ++m) {
      char c = line.text[m];
      if (c == 'X')
        row.set(m);
      else if (c != '.')
        throw ParseError(std::string("incidence symbol must be 'X' or '.', got '") + c + "'",
                         line.number);
    }
    rows.push_back(std::move(row));
  }
  in.skip_blank();
  if (!in.done())
    throw ParseError("unexpected trailing content", in.line_number());
  return FormalContext(std::move(objects), std::move(attributes), std::move(rows));
}

std::string write_cxt(const FormalContext& ctx) {
  std::string out = "B\n\n";
  out += std::to_string(ctx.object_count()) + "\n";
  out += std::to_string(ctx.attribute_count()) + "\n\n";
  for (const auto& g : ctx.objects()) out += g + "\n";
  for (const auto& m : ctx.attributes()) out += m + "\n";
  for (std::size_t g = 0; g < ctx.object_count(); ++g) {
    std::string line(ctx.attribute_count(), '.');
    ctx.row(g).for_each([&](std::size_t m) { line[m] = 'X'; });
    out += line + "\n";
  }
  return out;
}

namespace {

// RFC-4180 style records: quoted fields may contain commas, quotes and
// line breaks.
std::vector<std::vector<std::string>> parse_csv(std::string_view bytes,
                                                std::vector<std::size_t>& record_lines) {
  std::vector<std::vector<std::string>> records;
  std::vector<std::string> record;
  std::string field;
  bool quoted = false;
  bool field_started = false;
  std::size_t line = 1, record_line = 1;

  auto end_field = [&]() {
    record.push_back(std::move(field));
    field.clear();
    field_started = false;
  };
  auto end_record = [&]() {
    end_field();
    if (record.size() > 1 || !record[0].empty()) {
      records.push_back(std::move(record));
      record_lines.push_back(record_line);
    }
    record.clear();
    record_line = line;
  };

  for (std::size_t i = 0; i < bytes.size(); ++i) {
    char c = bytes[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < bytes.size() && bytes[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        if (c == '\n') ++line;
        field += c;
      }
    } else if (c == '"') {
      if (field_started && !field.empty())
        throw ParseError("unexpected quote inside an unquoted field", line);
      quoted = true;
      field_started = true;
    } else if (c == ',') {
      end_field();
    } else if (c == '\n') {
      if (!field.empty() && field.back() == '\r') field.pop_back();
      end_record();
      ++line;
      record_line = line;
    } else {
      field_started = true;
      field += c;
    }
  }
  if (quoted) throw ParseError("unterminated quoted field", line);
  if (field_started || !record.empty()) {
    if (!field.empty() && field.back() == '\r') field.pop_back();
    end_record();
  }
  return records;
}

std::string csv_field(const std::string& value) {
  if (value.find_first_of(",\"\n\r") == std::string::npos) return value;
  std::string out = "\"";
  for (char c : value) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

}  // namespace

MvParseResult parse_mv(std::string_view csv_bytes, std::string_view spec_json) {
  std::vector<std::size_t> record_lines;
  auto records = parse_csv(csv_bytes, record_lines);
  if (records.empty()) throw ParseError("empty data table");
  const auto& header = records[0];
  if (header.size() < 1) throw ParseError("header row is empty", record_lines[0]);

  std::vector<std::string> attributes(header.begin() + 1, header.end());
  std::vector<std::string> objects;
  std::vector<std::vector<std::optional<std::string>>> cells;
  std::unordered_set<std::string> seen_objects;
  for (std::size_t r = 1; r < records.size(); ++r) {
    const auto& rec = records[r];
    if (rec.size() != header.size())
      throw ParseError("row has " + std::to_string(rec.size()) + " fields, expected " +
                           std::to_string(header.size()),
                       record_lines[r]);
    if (rec[0].empty()) throw ParseError("object name must not be empty", record_lines[r]);
    if (!seen_objects.insert(rec[0]).second)
      throw ParseError("duplicate object name '" + rec[0] + "'", record_lines[r]);
    objects.push_back(rec[0]);
    std::vector<std::optional<std::string>> row;
    for (std::size_t m = 1; m < rec.size(); ++m)
      row.push_back(rec[m].empty() ? std::nullopt : std::optional<std::string>(rec[m]));
    cells.push_back(std::move(row));
  }

  nlohmann::json spec;
  try {
    spec = nlohmann::json::parse(spec_json);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("scaling spec is not valid JSON: ") + e.what());
  }
  if (!spec.is_object()) throw ParseError("scaling spec must be a JSON object");

  PreScaling pre;
  std::vector<ScaleKind> kinds;
  for (const auto& name : attributes) {
    if (!spec.contains(name))
      throw ParseError("scaling spec does not declare attribute '" + name + "'");
    const auto& entry = spec.at(name);
    if (!entry.is_object() || !entry.contains("kind") || !entry.contains("order"))
      throw ParseError("scaling spec for '" + name + "' needs \"kind\" and \"order\"");
    auto kind = ScaleKind::from_name(entry.at("kind").get<std::string>());
    if (!kind)
      throw ParseError("unknown scale kind '" + entry.at("kind").get<std::string>() +
                       "' for attribute '" + name + "'");
    if (kind->tag == ScaleKindTag::Biordinal) {
      if (!entry.contains("split") || !entry.at("split").is_number_unsigned())
        throw ParseError("biordinal scaling of '" + name + "' needs an unsigned \"split\"");
      kind->split = entry.at("split").get<std::size_t>();
    }
    if (!entry.at("order").is_array())
      throw ParseError("\"order\" of '" + name + "' must be an array of value tokens");
    AttributeDomain dom;
    for (const auto& v : entry.at("order")) {
      if (!v.is_string())
        throw ParseError("\"order\" of '" + name + "' must contain strings only");
      dom.values.push_back(v.get<std::string>());
    }
    dom.linearly_ordered = kind->requires_order();
    pre.domains.push_back(std::move(dom));
    kinds.push_back(*kind);
  }
  for (const auto& [key, value] : spec.items()) {
    (void)value;
    if (std::find(attributes.begin(), attributes.end(), key) == attributes.end())
      throw ParseError("scaling spec declares unknown attribute '" + key + "'");
  }

  ManyValuedContext mv(std::move(objects), std::move(attributes), std::move(cells));
  try {
    validate_prescaling(mv, pre);
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
  return {std::move(mv), std::move(pre), std::move(kinds)};
}

std::string write_mv_csv(const ManyValuedContext& mv) {
  std::string out = "object";
  for (const auto& m : mv.attributes()) out += "," + csv_field(m);
  out += "\n";
  for (std::size_t g = 0; g < mv.object_count(); ++g) {
    out += csv_field(mv.object_name(g));
    for (std::size_t m = 0; m < mv.attribute_count(); ++m) {
      const auto& cell = mv.value(g, m);
      out += ",";
      if (cell) out += csv_field(*cell);
    }
    out += "\n";
  }
  return out;
}

std::string write_scaling_spec(const ManyValuedContext& mv, const PreScaling& pre,
                               const std::vector<ScaleKind>& kinds) {
  if (pre.domains.size() != mv.attribute_count() || kinds.size() != mv.attribute_count())
    throw StructuralError("scaling spec needs one domain and kind per attribute");
  nlohmann::ordered_json spec = nlohmann::ordered_json::object();
  for (std::size_t m = 0; m < mv.attribute_count(); ++m) {
    nlohmann::ordered_json entry;
    entry["kind"] = kinds[m].name();
    entry["order"] = pre.domains[m].values;
    if (kinds[m].tag == ScaleKindTag::Biordinal) entry["split"] = kinds[m].split;
    spec[mv.attribute_name(m)] = std::move(entry);
  }
  return spec.dump(2) + "\n";
}

std::string export_dot(const ExtentLattice& lat, const LadderCover* highlight) {
  static const char* kPalette[] = {"#e41a1c", "#377eb8", "#4daf4a", "#984ea3",
                                   "#ff7f00", "#a65628", "#f781bf", "#999999"};
  constexpr std::size_t kPaletteSize = sizeof(kPalette) / sizeof(kPalette[0]);

  const FormalContext& ctx = lat.context();
  std::unordered_map<BitSet, std::size_t, BitSetHash> color;
  if (highlight) {
    for (std::size_t i = 0; i < highlight->ladders.size(); ++i)
      for (const auto& m : highlight->ladders[i].members)
        color.emplace(m, i % kPaletteSize);  // first ladder wins
  }

  auto escape = [](const std::string& s) {
    std::string out;
    for (char c : s) {
      if (c == '"' || c == '\\') out += '\\';
      out += c;
    }
    return out;
  };

  std::string out = "digraph extents {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < lat.size(); ++i) {
    out += "  n" + std::to_string(i) + " [label=\"" +
           escape(ctx.render_object_set(lat.extent(i))) + "\"";
    auto it = color.find(lat.extent(i));
    if (it != color.end())
      out += std::string(", style=filled, fillcolor=\"") + kPalette[it->second] + "\"";
    out += "];\n";
  }
  // group extents of equal cardinality on one rank
  std::size_t max_card = ctx.object_count();
  for (std::size_t card = 0; card <= max_card; ++card) {
    std::string rank;
    for (std::size_t i = 0; i < lat.size(); ++i)
      if (lat.extent(i).count() == card) rank += " n" + std::to_string(i) + ";";
    if (!rank.empty()) out += "  { rank=same;" + rank + " }\n";
  }
  for (std::size_t i = 0; i < lat.size(); ++i)
    for (std::int32_t c : lat.upper_covers()[i])
      out += "  n" + std::to_string(i) + " -> n" + std::to_string(c) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace scaledim
