#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "scaledim/io.hpp"
#include "scaledim/measures.hpp"
#include "scaledim/report.hpp"

namespace {

using namespace scaledim;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void emit(const std::string& output_path, const std::string& content) {
  if (output_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(output_path, std::ios::binary);
  if (!out) throw ParseError("cannot write '" + output_path + "'");
  out << content;
}

FormalContext load_context(const std::string& path) {
  return parse_cxt(read_file(path));
}

nlohmann::ordered_json set_list_json(const FormalContext& ctx,
                                     const std::vector<ObjectSet>& sets) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& s : sets) arr.push_back(object_set_json(ctx, s));
  return arr;
}

struct CommonOptions {
  bool json = false;
  bool witness = false;
  std::uint64_t budget = kDefaultSearchBudget;
  std::size_t max_cells = 48;
  std::string output;
};

void add_common(CLI::App* cmd, CommonOptions& opt, bool with_witness = true) {
  cmd->add_flag("--json", opt.json, "emit machine-readable JSON");
  if (with_witness) cmd->add_flag("--witness", opt.witness, "print witnesses");
  cmd->add_option("--budget", opt.budget, "search node budget");
  cmd->add_option("--max-cells", opt.max_cells,
                  "largest |G|*|M| solved exactly for the order dimension");
  cmd->add_option("-o,--output", opt.output, "write results to FILE instead of stdout");
}

int cmd_concepts(const std::string& path, const CommonOptions& opt) {
  FormalContext ctx = load_context(path);
  ExtentLattice lat(ctx);
  std::string out;
  if (opt.json) {
    nlohmann::ordered_json j;
    j["count"] = lat.size();
    j["extents"] = set_list_json(ctx, lat.extents());
    out = j.dump(2) + "\n";
  } else {
    out = std::to_string(lat.size()) + "\n";
    for (const auto& e : lat.extents()) out += ctx.render_object_set(e) + "\n";
  }
  emit(opt.output, out);
  return 0;
}

int cmd_irreducibles(const std::string& path, const CommonOptions& opt) {
  FormalContext ctx = load_context(path);
  ExtentLattice lat(ctx);
  auto mi = lat.meet_irreducible_extents();
  std::string out;
  if (opt.json) {
    nlohmann::ordered_json j;
    j["count"] = mi.size();
    j["extents"] = set_list_json(ctx, mi);
    out = j.dump(2) + "\n";
  } else {
    out = std::to_string(mi.size()) + "\n";
    for (const auto& e : mi) out += ctx.render_object_set(e) + "\n";
  }
  emit(opt.output, out);
  return 0;
}

int cmd_osd(const std::string& path, const CommonOptions& opt) {
  FormalContext ctx = load_context(path);
  ExtentLattice lat(ctx);
  OsdResult r = ordinal_scaling_dimension(lat);
  std::string out;
  if (opt.json) {
    nlohmann::ordered_json j;
    j["value"] = r.value;
    if (opt.witness) j["chains"] = chains_json(ctx, r.chains);
    out = j.dump(2) + "\n";
  } else {
    out = std::to_string(r.value) + "\n";
    if (opt.witness)
      for (std::size_t i = 0; i < r.chains.size(); ++i) {
        out += "chain " + std::to_string(i + 1) + ":";
        for (const auto& e : r.chains[i]) out += " " + ctx.render_object_set(e);
        out += "\n";
      }
  }
  emit(opt.output, out);
  return 0;
}

int cmd_isd(const std::string& path, const CommonOptions& opt) {
  FormalContext ctx = load_context(path);
  ExtentLattice lat(ctx);
  IsdResult r = interordinal_scaling_dimension(lat, opt.budget);
  std::string out;
  if (opt.json) {
    nlohmann::ordered_json j;
    j["defined"] = r.defined;
    if (!r.defined) {
      j["blocking_extent"] = object_set_json(ctx, *r.gate.blocker);
      j["blocking_reason"] = r.gate.blocker_is_empty
                                 ? "meet-irreducible extent is empty"
                                 : "complement is not an extent";
    } else {
      j["exact"] = r.exact;
      if (r.exact)
        j["value"] = r.value;
      else {
        j["lower"] = r.lower;
        j["upper"] = r.upper;
      }
      if (opt.witness && r.cover) j["ladders"] = cover_json(ctx, *r.cover);
    }
    out = j.dump(2) + "\n";
    emit(opt.output, out);
    return r.defined ? 0 : 1;
  }
  if (!r.defined) {
    out = "ISD undefined: ";
    out += r.gate.blocker_is_empty
               ? "the empty set is a meet-irreducible extent"
               : "complement of " + ctx.render_object_set(*r.gate.blocker) +
                     " is not an extent";
    out += "\n";
    emit(opt.output, out);
    return 1;
  }
  if (r.exact)
    out = std::to_string(r.value) + "\n";
  else
    out = "ISD in [" + std::to_string(r.lower) + ", " + std::to_string(r.upper) +
          "] (budget exhausted)\n";
  if (opt.witness && r.cover)
    for (std::size_t i = 0; i < r.cover->ladders.size(); ++i) {
      out += "ladder " + std::to_string(i + 1) + ":";
      for (const auto& m : r.cover->ladders[i].members)
        out += " " + ctx.render_object_set(m);
      out += "\n";
    }
  emit(opt.output, out);
  return 0;
}

int cmd_bounds(const std::string& path, const CommonOptions& opt) {
  FormalContext ctx = load_context(path);
  ExtentLattice lat(ctx);
  IsdBounds b = isd_bounds(lat);
  std::string out;
  if (opt.json) {
    nlohmann::ordered_json j;
    j["lower"] = b.lower;
    j["upper"] = b.upper;
    if (opt.witness) {
      nlohmann::ordered_json arr = nlohmann::ordered_json::array();
      for (const auto& lad : b.upper_witness) arr.push_back(ladder_json(ctx, lad));
      j["upper_witness"] = std::move(arr);
    }
    out = j.dump(2) + "\n";
  } else {
    out = std::to_string(b.lower) + " " + std::to_string(b.upper) + "\n";
  }
  emit(opt.output, out);
  return 0;
}

int cmd_order_dim(const std::string& path, const CommonOptions& opt) {
  FormalContext ctx = load_context(path);
  FerrersResult r = ferrers_order_dimension(ctx, opt.max_cells, opt.budget);
  std::string out;
  if (opt.json) {
    nlohmann::ordered_json j;
    j["exact"] = r.exact;
    if (r.exact)
      j["value"] = r.value;
    else {
      j["lower"] = r.lower;
      j["upper"] = r.upper;
    }
    out = j.dump(2) + "\n";
  } else if (r.exact) {
    out = std::to_string(r.value) + "\n";
  } else {
    out = "order dimension in [" + std::to_string(r.lower) + ", " +
          std::to_string(r.upper) + "] (bounds)\n";
  }
  emit(opt.output, out);
  return 0;
}

int cmd_check_interordinal(const std::string& path, const CommonOptions& opt) {
  FormalContext ctx = load_context(path);
  DerivabilityCheck d = check_interordinal_derivability(ctx);
  std::string out;
  if (opt.json) {
    nlohmann::ordered_json j;
    j["atomistic"] = d.atomistic;
    j["attribute_extent_complements_closed"] = d.attribute_complements_closed;
    j["interordinally_derivable"] = d.derivable();
    out = j.dump(2) + "\n";
  } else {
    out = std::string("interordinally derivable: ") + (d.derivable() ? "yes" : "no") +
          " (atomistic: " + (d.atomistic ? "yes" : "no") +
          ", attribute extent complements closed: " +
          (d.attribute_complements_closed ? "yes" : "no") + ")\n";
  }
  emit(opt.output, out);
  return d.derivable() ? 0 : 1;
}

int cmd_derive(const std::string& csv_path, const std::string& spec_path,
               const std::string& kind_name, const CommonOptions& opt) {
  MvParseResult parsed = parse_mv(read_file(csv_path), read_file(spec_path));
  if (!parsed.mv.complete())
    std::cerr << "note: the data table is incomplete; missing cells scale to empty rows\n";
  std::vector<ScaleKind> kinds = parsed.kinds;
  if (kind_name != "plain") {
    auto k = ScaleKind::from_name(kind_name);
    if (!k) throw ParseError("unknown scale kind '" + kind_name + "'");
    if (k->tag == ScaleKindTag::Biordinal)
      throw ParseError("biordinal requires per-attribute splits; declare it in the scaling spec");
    kinds.assign(parsed.mv.attribute_count(), *k);
  }
  FormalContext derived = derive_with_kinds(parsed.mv, parsed.prescaling, kinds);
  emit(opt.output, write_cxt(derived));
  std::cerr << "derived " << derived.object_count() << "x" << derived.attribute_count()
            << " context\n";
  return 0;
}

int cmd_measure(const std::string& source_path, const std::string& target_path,
                const std::string& map_path, bool full, const CommonOptions& opt) {
  FormalContext source = load_context(source_path);
  FormalContext target = load_context(target_path);
  nlohmann::json map_json;
  try {
    map_json = nlohmann::json::parse(read_file(map_path));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("object map is not valid JSON: ") + e.what());
  }
  if (!map_json.is_object()) throw ParseError("object map must be a JSON object");
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const auto& [from, to] : map_json.items()) {
    if (!to.is_string()) throw ParseError("object map values must be strings");
    pairs.emplace_back(from, to.get<std::string>());
  }
  ScaleMeasure sm = make_scale_measure(std::move(source), std::move(target), pairs);
  MeasureCheck check = is_scale_measure(sm);
  bool is_full = check.ok && full ? is_full_scale_measure(sm) : false;

  std::string out;
  if (opt.json) {
    nlohmann::ordered_json j;
    j["scale_measure"] = check.ok;
    if (!check.ok)
      j["violating_extent"] = object_set_json(sm.target, *check.violating_extent);
    if (full && check.ok) j["full"] = is_full;
    out = j.dump(2) + "\n";
  } else {
    out = std::string("scale measure: ") + (check.ok ? "yes" : "no") + "\n";
    if (!check.ok)
      out += "preimage of " + sm.target.render_object_set(*check.violating_extent) +
             " is not a source extent\n";
    if (full && check.ok) out += std::string("full: ") + (is_full ? "yes" : "no") + "\n";
  }
  emit(opt.output, out);
  if (!check.ok) return 1;
  if (full && !is_full) return 1;
  return 0;
}

int cmd_view(const std::string& base_path, const std::string& spec_path,
             const std::string& check_path, const std::string& canonical_path,
             const CommonOptions& opt) {
  FormalContext base = load_context(base_path);
  if (!check_path.empty()) {
    FormalContext candidate = load_context(check_path);
    bool ok = is_view(candidate, base);
    emit(opt.output, std::string("view: ") + (ok ? "yes" : "no") + "\n");
    return ok ? 0 : 1;
  }
  if (!canonical_path.empty()) {
    nlohmann::json family_json;
    try {
      family_json = nlohmann::json::parse(read_file(canonical_path));
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("extent family is not valid JSON: ") + e.what());
    }
    if (!family_json.is_array())
      throw ParseError("extent family must be a JSON array of object-name arrays");
    std::vector<ObjectSet> family;
    for (const auto& entry : family_json) {
      ObjectSet s(base.object_count());
      for (const auto& name : entry) {
        auto g = base.object_index(name.get<std::string>());
        if (!g) throw SpecError("unknown object '" + name.get<std::string>() + "'");
        s.set(*g);
      }
      family.push_back(std::move(s));
    }
    emit(opt.output, write_cxt(canonical_view(base, family)));
    return 0;
  }
  nlohmann::json spec_json;
  try {
    spec_json = nlohmann::json::parse(read_file(spec_path));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("view spec is not valid JSON: ") + e.what());
  }
  if (!spec_json.is_object())
    throw ParseError("view spec must be a JSON object mapping names to attribute arrays");
  ViewSpec spec;
  for (const auto& [name, generators] : spec_json.items()) {
    if (!generators.is_array())
      throw ParseError("generator set of '" + name + "' must be an array");
    std::vector<std::string> attrs;
    for (const auto& a : generators) attrs.push_back(a.get<std::string>());
    spec.columns.emplace_back(name, std::move(attrs));
  }
  emit(opt.output, write_cxt(make_view(base, spec)));
  return 0;
}

int cmd_reconstruct(const std::string& path, const std::string& kind,
                    const std::string& prefix, const CommonOptions& opt) {
  FormalContext ctx = load_context(path);
  ExtentLattice lat(ctx);
  if (kind == "interordinal") {
    IsdResult isd = interordinal_scaling_dimension(lat, opt.budget);
    if (!isd.defined) {
      std::cout << "ISD undefined: "
                << (isd.gate.blocker_is_empty
                        ? "the empty set is a meet-irreducible extent"
                        : "complement of " + ctx.render_object_set(*isd.gate.blocker) +
                              " is not an extent")
                << "\n";
      return 1;
    }
    if (!isd.cover) throw Error("internal: defined ISD without a ladder cover");
    InterordinalReconstruction rec = reconstruct_interordinal_mv(lat, *isd.cover);
    emit(prefix + ".csv", write_mv_csv(rec.mv));
    emit(prefix + "-scaling.json",
         write_scaling_spec(rec.mv, rec.prescaling,
                            std::vector<ScaleKind>(rec.mv.attribute_count(),
                                                   ScaleKind::interordinal())));
    std::cout << rec.mv.attribute_count() << "\n";
    std::cerr << "wrote " << prefix << ".csv and " << prefix << "-scaling.json\n";
    return 0;
  }
  if (kind == "ordinal") {
    OsdResult osd = ordinal_scaling_dimension(lat);
    OrdinalReconstruction rec = reconstruct_ordinal_mv(lat, osd.chains);
    emit(prefix + ".csv", write_mv_csv(rec.mv));
    emit(prefix + "-scaling.json",
         write_scaling_spec(rec.mv, rec.prescaling,
                            std::vector<ScaleKind>(rec.mv.attribute_count(),
                                                   ScaleKind::ordinal())));
    std::cout << rec.mv.attribute_count() << "\n";
    std::cerr << "wrote " << prefix << ".csv and " << prefix << "-scaling.json\n";
    return 0;
  }
  throw ParseError("reconstruct kind must be 'interordinal' or 'ordinal'");
}

int cmd_dot(const std::string& path, bool ladders, const CommonOptions& opt) {
  FormalContext ctx = load_context(path);
  ExtentLattice lat(ctx);
  if (!ladders) {
    emit(opt.output, export_dot(lat));
    return 0;
  }
  IsdResult isd = interordinal_scaling_dimension(lat, opt.budget);
  if (isd.defined && isd.cover) {
    emit(opt.output, export_dot(lat, &*isd.cover));
  } else {
    std::cerr << "note: no ladder cover (ISD undefined); emitting an uncolored diagram\n";
    emit(opt.output, export_dot(lat));
  }
  return 0;
}

int cmd_report(const std::string& path, const CommonOptions& opt) {
  FormalContext ctx = load_context(path);
  AnalysisOptions options;
  options.isd_node_budget = opt.budget;
  options.ferrers_node_budget = opt.budget;
  options.ferrers_cell_budget = opt.max_cells;
  options.witnesses = true;
  auto t0 = std::chrono::steady_clock::now();
  nlohmann::ordered_json report = analyze(ctx, options);
  auto t1 = std::chrono::steady_clock::now();
  std::cerr << "analysis took "
            << std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count()
            << " ms\n";
  emit(opt.output, opt.json ? render_report_json(report) : render_report_text(report));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"conceptual scaling toolkit: contexts, scales, views and scaling dimensions"};
  app.require_subcommand(1);

  std::string context_path, csv_path, spec_path, map_path, check_path, canonical_path;
  std::string kind = "plain", reconstruct_kind = "interordinal", prefix;
  bool full = false, ladders = false;

  CommonOptions opt;

  auto* concepts = app.add_subcommand("concepts", "enumerate all extents");
  concepts->add_option("context", context_path, "Burmeister .cxt file")->required();
  add_common(concepts, opt, false);

  auto* irreducibles =
      app.add_subcommand("irreducibles", "meet-irreducible extents");
  irreducibles->add_option("context", context_path)->required();
  add_common(irreducibles, opt, false);

  auto* osd = app.add_subcommand("osd", "ordinal scaling dimension");
  osd->add_option("context", context_path)->required();
  add_common(osd, opt);

  auto* isd = app.add_subcommand("isd", "interordinal scaling dimension");
  isd->add_option("context", context_path)->required();
  add_common(isd, opt);

  auto* bounds = app.add_subcommand("bounds", "width-based bounds on the ISD");
  bounds->add_option("context", context_path)->required();
  add_common(bounds, opt);

  auto* order_dim = app.add_subcommand("order-dim", "order (Ferrers) dimension");
  order_dim->add_option("context", context_path)->required();
  add_common(order_dim, opt);

  auto* check = app.add_subcommand("check-interordinal",
                                   "test derivability from interordinal scaling");
  check->add_option("context", context_path)->required();
  add_common(check, opt, false);

  auto* derive = app.add_subcommand("derive", "derive a context by plain scaling");
  derive->add_option("data", csv_path, "CSV data table")->required();
  derive->add_option("scaling", spec_path, "JSON scaling spec")->required();
  derive->add_option("--kind", kind,
                     "override all scale kinds (plain, nominal, ordinal, interordinal, "
                     "dichotomic, contranominal)");
  add_common(derive, opt, false);

  auto* measure = app.add_subcommand("measure", "check a scale measure");
  measure->add_option("source", context_path, "source .cxt")->required();
  measure->add_option("target", spec_path, "target .cxt")->required();
  measure->add_option("map", map_path, "JSON object map source→target")->required();
  measure->add_flag("--full", full, "also check fullness");
  add_common(measure, opt, false);

  auto* view = app.add_subcommand("view", "build or check views");
  view->add_option("base", context_path, "base .cxt")->required();
  view->add_option("--spec", csv_path, "JSON view spec: name → generating attributes");
  view->add_option("--check", check_path, "candidate .cxt to test against the base");
  view->add_option("--canonical", canonical_path,
                   "JSON array of extents (object-name arrays) for a canonical view");
  add_common(view, opt, false);

  auto* reconstruct = app.add_subcommand(
      "reconstruct", "rebuild a minimal many-valued context from a .cxt");
  reconstruct->add_option("context", context_path)->required();
  reconstruct->add_option("--kind", reconstruct_kind, "interordinal or ordinal");
  reconstruct->add_option("-o,--output", prefix, "output prefix (PREFIX.csv, PREFIX-scaling.json)")
      ->required();
  reconstruct->add_option("--budget", opt.budget, "search node budget");

  auto* dot = app.add_subcommand("dot", "export the lattice diagram as DOT");
  dot->add_option("context", context_path)->required();
  dot->add_flag("--ladders", ladders, "color a minimum ladder cover");
  add_common(dot, opt, false);

  auto* report = app.add_subcommand("report", "full analysis report");
  report->add_option("context", context_path)->required();
  add_common(report, opt, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (concepts->parsed()) return cmd_concepts(context_path, opt);
    if (irreducibles->parsed()) return cmd_irreducibles(context_path, opt);
    if (osd->parsed()) return cmd_osd(context_path, opt);
    if (isd->parsed()) return cmd_isd(context_path, opt);
    if (bounds->parsed()) return cmd_bounds(context_path, opt);
    if (order_dim->parsed()) return cmd_order_dim(context_path, opt);
    if (check->parsed()) return cmd_check_interordinal(context_path, opt);
    if (derive->parsed()) return cmd_derive(csv_path, spec_path, kind, opt);
    if (measure->parsed()) return cmd_measure(context_path, spec_path, map_path, full, opt);
    if (view->parsed()) {
      int selectors = (!csv_path.empty()) + (!check_path.empty()) + (!canonical_path.empty());
      if (selectors != 1)
        throw ParseError("view needs exactly one of --spec, --check, --canonical");
      return cmd_view(context_path, csv_path, check_path, canonical_path, opt);
    }
    if (reconstruct->parsed())
      return cmd_reconstruct(context_path, reconstruct_kind, prefix, opt);
    if (dot->parsed()) return cmd_dot(context_path, ladders, opt);
    if (report->parsed()) return cmd_report(context_path, opt);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
