#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>

#include "scaledim/io.hpp"
#include "scaledim/measures.hpp"
#include "scaledim/report.hpp"

namespace py = pybind11;
using namespace scaledim;

namespace {

std::vector<std::string> set_names(const FormalContext& ctx, const ObjectSet& s) {
  std::vector<std::string> out;
  s.for_each([&](std::size_t g) { out.push_back(ctx.object_name(g)); });
  return out;
}

std::vector<std::vector<std::string>> sets_names(const FormalContext& ctx,
                                                 const std::vector<ObjectSet>& sets) {
  std::vector<std::vector<std::string>> out;
  for (const auto& s : sets) out.push_back(set_names(ctx, s));
  return out;
}

py::dict isd_dict(const FormalContext& ctx, const IsdResult& r) {
  py::dict d;
  d["defined"] = r.defined;
  if (!r.defined) {
    d["blocking_extent"] = set_names(ctx, *r.gate.blocker);
    return d;
  }
  d["exact"] = r.exact;
  if (r.exact)
    d["value"] = r.value;
  else {
    d["lower"] = r.lower;
    d["upper"] = r.upper;
  }
  if (r.cover) {
    py::list ladders;
    for (const auto& lad : r.cover->ladders) {
      py::dict l;
      l["members"] = sets_names(ctx, lad.members);
      l["chain_a"] = sets_names(ctx, lad.chain_a);
      l["chain_b"] = sets_names(ctx, lad.chain_b);
      ladders.append(l);
    }
    d["ladders"] = ladders;
  }
  return d;
}

}  // namespace

PYBIND11_MODULE(_scaledim, m) {
  m.doc() = "Formal contexts, conceptual scaling, and scaling dimensions";

  py::register_exception<Error>(m, "ScaledimError");

  py::class_<FormalContext>(m, "FormalContext")
      .def(py::init([](std::vector<std::string> objects,
                       std::vector<std::string> attributes,
                       const std::vector<std::string>& rows) {
             return FormalContext::from_table(std::move(objects), std::move(attributes), rows);
           }),
           py::arg("objects"), py::arg("attributes"), py::arg("rows"),
           "Build a context from row strings over {'X', '.'}")
      .def_property_readonly("objects", &FormalContext::objects)
      .def_property_readonly("attributes", &FormalContext::attributes)
      .def("incident", &FormalContext::incident)
      .def("__eq__", [](const FormalContext& a, const FormalContext& b) { return a == b; })
      .def("__repr__", [](const FormalContext& c) {
        return "<FormalContext " + std::to_string(c.object_count()) + "x" +
               std::to_string(c.attribute_count()) + ">";
      });

  m.def("parse_context", [](const std::string& text) { return parse_cxt(text); },
        py::arg("text"), "Parse a Burmeister .cxt document");
  m.def("write_context", &write_cxt, py::arg("context"));

  m.def(
      "object_prime",
      [](const FormalContext& ctx, const std::vector<std::string>& objects) {
        ObjectSet s(ctx.object_count());
        for (const auto& name : objects) {
          auto g = ctx.object_index(name);
          if (!g) throw StructuralError("unknown object '" + name + "'");
          s.set(*g);
        }
        std::vector<std::string> out;
        ctx.object_prime(s).for_each(
            [&](std::size_t m) { out.push_back(ctx.attribute_name(m)); });
        return out;
      },
      py::arg("context"), py::arg("objects"),
      "Attributes shared by all the given objects");

  m.def(
      "attribute_prime",
      [](const FormalContext& ctx, const std::vector<std::string>& attributes) {
        AttributeSet s(ctx.attribute_count());
        for (const auto& name : attributes) {
          auto m = ctx.attribute_index(name);
          if (!m) throw StructuralError("unknown attribute '" + name + "'");
          s.set(*m);
        }
        return set_names(ctx, ctx.attribute_prime(s));
      },
      py::arg("context"), py::arg("attributes"),
      "Objects carrying all the given attributes");

  m.def(
      "extent_closure",
      [](const FormalContext& ctx, const std::vector<std::string>& objects) {
        ObjectSet s(ctx.object_count());
        for (const auto& name : objects) {
          auto g = ctx.object_index(name);
          if (!g) throw StructuralError("unknown object '" + name + "'");
          s.set(*g);
        }
        return set_names(ctx, ctx.extent_closure(s));
      },
      py::arg("context"), py::arg("objects"));

  m.def("extents", [](const FormalContext& ctx) {
    ExtentLattice lat(ctx);
    return sets_names(ctx, lat.extents());
  });
  m.def("meet_irreducible_extents", [](const FormalContext& ctx) {
    ExtentLattice lat(ctx);
    return sets_names(ctx, lat.meet_irreducible_extents());
  });
  m.def("is_atomistic", [](const FormalContext& ctx) { return is_atomistic(ctx); });
  m.def("interordinally_derivable", [](const FormalContext& ctx) {
    DerivabilityCheck d = check_interordinal_derivability(ctx);
    py::dict out;
    out["atomistic"] = d.atomistic;
    out["attribute_extent_complements_closed"] = d.attribute_complements_closed;
    out["derivable"] = d.derivable();
    return out;
  });

  m.def("ordinal_scaling_dimension", [](const FormalContext& ctx) {
    ExtentLattice lat(ctx);
    OsdResult r = ordinal_scaling_dimension(lat);
    py::dict d;
    d["value"] = r.value;
    py::list chains;
    for (const auto& chain : r.chains) chains.append(sets_names(ctx, chain));
    d["chains"] = chains;
    return d;
  });

  m.def(
      "interordinal_scaling_dimension",
      [](const FormalContext& ctx, std::uint64_t budget) {
        ExtentLattice lat(ctx);
        return isd_dict(ctx, interordinal_scaling_dimension(lat, budget));
      },
      py::arg("context"), py::arg("budget") = kDefaultSearchBudget);

  m.def("isd_bounds", [](const FormalContext& ctx) {
    ExtentLattice lat(ctx);
    IsdBounds b = isd_bounds(lat);
    return py::make_tuple(b.lower, b.upper);
  });

  m.def(
      "order_dimension",
      [](const FormalContext& ctx, std::size_t cell_budget, std::uint64_t budget) {
        FerrersResult r = ferrers_order_dimension(ctx, cell_budget, budget);
        py::dict d;
        d["exact"] = r.exact;
        if (r.exact)
          d["value"] = r.value;
        else {
          d["lower"] = r.lower;
          d["upper"] = r.upper;
        }
        return d;
      },
      py::arg("context"), py::arg("cell_budget") = 48,
      py::arg("budget") = kDefaultSearchBudget);

  m.def(
      "derive",
      [](const std::string& csv, const std::string& scaling_spec, const std::string& kind) {
        MvParseResult parsed = parse_mv(csv, scaling_spec);
        std::vector<ScaleKind> kinds = parsed.kinds;
        if (kind != "plain") {
          auto k = ScaleKind::from_name(kind);
          if (!k) throw ParseError("unknown scale kind '" + kind + "'");
          kinds.assign(parsed.mv.attribute_count(), *k);
        }
        return derive_with_kinds(parsed.mv, parsed.prescaling, kinds);
      },
      py::arg("csv"), py::arg("scaling_spec"), py::arg("kind") = "plain",
      "Derive a formal context from a CSV data table and a JSON scaling spec");

  m.def(
      "reconstruct",
      [](const FormalContext& ctx, const std::string& kind, std::uint64_t budget) {
        ExtentLattice lat(ctx);
        if (kind == "interordinal") {
          IsdResult isd = interordinal_scaling_dimension(lat, budget);
          if (!isd.defined || !isd.cover)
            throw SpecError("interordinal scaling dimension is undefined for this context");
          InterordinalReconstruction rec = reconstruct_interordinal_mv(lat, *isd.cover);
          return py::make_tuple(
              write_mv_csv(rec.mv),
              write_scaling_spec(rec.mv, rec.prescaling,
                                 std::vector<ScaleKind>(rec.mv.attribute_count(),
                                                        ScaleKind::interordinal())));
        }
        if (kind == "ordinal") {
          OsdResult osd = ordinal_scaling_dimension(lat);
          OrdinalReconstruction rec = reconstruct_ordinal_mv(lat, osd.chains);
          return py::make_tuple(
              write_mv_csv(rec.mv),
              write_scaling_spec(rec.mv, rec.prescaling,
                                 std::vector<ScaleKind>(rec.mv.attribute_count(),
                                                        ScaleKind::ordinal())));
        }
        throw ParseError("kind must be 'interordinal' or 'ordinal'");
      },
      py::arg("context"), py::arg("kind") = "interordinal",
      py::arg("budget") = kDefaultSearchBudget,
      "Rebuild a minimal many-valued context as (csv, scaling_spec) strings");

  m.def("clarify", [](const FormalContext& ctx) { return clarify(ctx); },
        py::arg("context"), "Merge duplicate rows and columns");

  m.def(
      "is_scale_measure",
      [](const FormalContext& source, const FormalContext& target,
         const std::map<std::string, std::string>& mapping) {
        std::vector<std::pair<std::string, std::string>> pairs(mapping.begin(),
                                                               mapping.end());
        ScaleMeasure sm = make_scale_measure(source, target, pairs);
        MeasureCheck check = is_scale_measure(sm);
        py::dict d;
        d["ok"] = check.ok;
        if (!check.ok)
          d["violating_extent"] = set_names(sm.target, *check.violating_extent);
        else
          d["full"] = is_full_scale_measure(sm);
        return d;
      },
      py::arg("source"), py::arg("target"), py::arg("mapping"),
      "Check σ (a source→target object-name mapping) and, when it is a scale "
      "measure, its fullness");

  m.def(
      "make_view",
      [](const FormalContext& base,
         const std::vector<std::pair<std::string, std::vector<std::string>>>& columns) {
        ViewSpec spec;
        spec.columns = columns;
        return make_view(base, spec);
      },
      py::arg("base"), py::arg("columns"),
      "Build a view from (name, generating attribute list) pairs");

  m.def(
      "is_view",
      [](const FormalContext& candidate, const FormalContext& base) {
        return is_view(candidate, base);
      },
      py::arg("candidate"), py::arg("base"));

  m.def(
      "canonical_view",
      [](const FormalContext& base,
         const std::vector<std::vector<std::string>>& extent_family) {
        std::vector<ObjectSet> family;
        for (const auto& names : extent_family) {
          ObjectSet s(base.object_count());
          for (const auto& name : names) {
            auto g = base.object_index(name);
            if (!g) throw SpecError("unknown object '" + name + "'");
            s.set(*g);
          }
          family.push_back(std::move(s));
        }
        return canonical_view(base, family);
      },
      py::arg("base"), py::arg("extent_family"),
      "The membership-table view (G, A, ∈) over a family of base extents");

  m.def(
      "verify_preimage_lemma",
      [](const std::string& csv, const std::string& scaling_spec) {
        MvParseResult parsed = parse_mv(csv, scaling_spec);
        std::vector<Scale> scales;
        for (std::size_t m = 0; m < parsed.mv.attribute_count(); ++m)
          scales.push_back(
              build_scale(parsed.kinds[m], parsed.prescaling.domains[m].values));
        return verify_preimage_lemma(parsed.mv, scales);
      },
      py::arg("csv"), py::arg("scaling_spec"),
      "Check that the derived extents are exactly the intersection closure of "
      "the scale-extent preimages (complete tables only)");

  m.def(
      "analyze_json",
      [](const FormalContext& ctx) { return render_report_json(analyze(ctx)); },
      py::arg("context"), "Full analysis report as a JSON string");

  m.def(
      "export_dot",
      [](const FormalContext& ctx, bool ladders, std::uint64_t budget) {
        ExtentLattice lat(ctx);
        if (!ladders) return export_dot(lat);
        IsdResult isd = interordinal_scaling_dimension(lat, budget);
        if (isd.defined && isd.cover) return export_dot(lat, &*isd.cover);
        return export_dot(lat);
      },
      py::arg("context"), py::arg("ladders") = false,
      py::arg("budget") = kDefaultSearchBudget);
}
