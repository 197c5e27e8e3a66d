#include "scaledim/report.hpp"

namespace scaledim {

nlohmann::ordered_json object_set_json(const FormalContext& ctx, const ObjectSet& s) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  s.for_each([&](std::size_t g) { arr.push_back(ctx.object_name(g)); });
  return arr;
}

nlohmann::ordered_json chains_json(const FormalContext& ctx,
                                   const std::vector<std::vector<ObjectSet>>& chains) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& chain : chains) {
    nlohmann::ordered_json c = nlohmann::ordered_json::array();
    for (const auto& e : chain) c.push_back(object_set_json(ctx, e));
    arr.push_back(std::move(c));
  }
  return arr;
}

nlohmann::ordered_json ladder_json(const FormalContext& ctx, const ExtentLadder& ladder) {
  nlohmann::ordered_json j;
  nlohmann::ordered_json members = nlohmann::ordered_json::array();
  for (const auto& m : ladder.members) members.push_back(object_set_json(ctx, m));
  j["members"] = std::move(members);
  nlohmann::ordered_json a = nlohmann::ordered_json::array();
  for (const auto& m : ladder.chain_a) a.push_back(object_set_json(ctx, m));
  j["chain_a"] = std::move(a);
  nlohmann::ordered_json b = nlohmann::ordered_json::array();
  for (const auto& m : ladder.chain_b) b.push_back(object_set_json(ctx, m));
  j["chain_b"] = std::move(b);
  return j;
}

nlohmann::ordered_json cover_json(const FormalContext& ctx, const LadderCover& cover) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& lad : cover.ladders) arr.push_back(ladder_json(ctx, lad));
  return arr;
}

nlohmann::ordered_json analyze(const FormalContext& ctx, const AnalysisOptions& options) {
  ExtentLattice lat(ctx, options.max_extents);

  nlohmann::ordered_json report;
  report["schema_version"] = 1;

  {
    nlohmann::ordered_json c;
    c["objects"] = ctx.object_count();
    c["attributes"] = ctx.attribute_count();
    c["incidences"] = ctx.incidence_count();
    c["extents"] = lat.size();
    c["meet_irreducibles"] = lat.meet_irreducible_indices().size();
    report["context"] = std::move(c);
  }

  DerivabilityCheck deriv = check_interordinal_derivability(ctx);
  {
    nlohmann::ordered_json d;
    d["atomistic"] = deriv.atomistic;
    d["attribute_extent_complements_closed"] = deriv.attribute_complements_closed;
    d["interordinally_derivable"] = deriv.derivable();
    report["derivability"] = std::move(d);
  }

  OsdResult osd = ordinal_scaling_dimension(lat);
  report["width"] = osd.value;
  {
    nlohmann::ordered_json o;
    o["value"] = osd.value;
    if (options.witnesses) o["chains"] = chains_json(ctx, osd.chains);
    report["osd"] = std::move(o);
  }

  IsdBounds bounds = isd_bounds(lat);
  {
    nlohmann::ordered_json b;
    b["lower"] = bounds.lower;
    b["upper"] = bounds.upper;
    report["isd_bounds"] = std::move(b);
  }

  IsdResult isd = interordinal_scaling_dimension(lat, options.isd_node_budget);
  {
    nlohmann::ordered_json i;
    i["defined"] = isd.defined;
    if (!isd.defined) {
      i["blocking_extent"] = object_set_json(ctx, *isd.gate.blocker);
      i["blocking_reason"] = isd.gate.blocker_is_empty
                                 ? "meet-irreducible extent is empty"
                                 : "complement is not an extent";
    } else {
      i["exact"] = isd.exact;
      if (isd.exact)
        i["value"] = isd.value;
      else {
        i["lower"] = isd.lower;
        i["upper"] = isd.upper;
      }
      if (options.witnesses && isd.cover) i["ladders"] = cover_json(ctx, *isd.cover);
    }
    report["isd"] = std::move(i);
  }

  FerrersResult od = ferrers_order_dimension(ctx, options.ferrers_cell_budget,
                                             options.ferrers_node_budget);
  {
    nlohmann::ordered_json o;
    o["exact"] = od.exact;
    if (od.exact)
      o["value"] = od.value;
    else {
      o["lower"] = od.lower;
      o["upper"] = od.upper;
    }
    if (options.witnesses) {
      nlohmann::ordered_json rels = nlohmann::ordered_json::array();
      for (const auto& rel : od.relations) {
        nlohmann::ordered_json r = nlohmann::ordered_json::array();
        for (const auto& [g, m] : rel) {
          nlohmann::ordered_json cell = nlohmann::ordered_json::array();
          cell.push_back(ctx.object_name(g));
          cell.push_back(ctx.attribute_name(m));
          r.push_back(std::move(cell));
        }
        rels.push_back(std::move(r));
      }
      o["ferrers_relations"] = std::move(rels);
    }
    report["order_dimension"] = std::move(o);
  }

  {
    nlohmann::ordered_json s;
    s["isd_nodes"] = isd.nodes;
    s["order_dimension_nodes"] = od.nodes;
    report["search"] = std::move(s);
  }
  return report;
}

std::string render_report_json(const nlohmann::ordered_json& report) {
  return report.dump(2) + "\n";
}

std::string render_report_text(const nlohmann::ordered_json& report) {
  const auto& ctx = report.at("context");
  std::string out;
  out += "objects:      " + std::to_string(ctx.at("objects").get<std::size_t>()) + "\n";
  out += "attributes:   " + std::to_string(ctx.at("attributes").get<std::size_t>()) + "\n";
  out += "incidences:   " + std::to_string(ctx.at("incidences").get<std::size_t>()) + "\n";
  out += "extents:      " + std::to_string(ctx.at("extents").get<std::size_t>()) + "\n";
  const auto& d = report.at("derivability");
  out += std::string("atomistic:    ") + (d.at("atomistic").get<bool>() ? "yes" : "no") + "\n";
  out += std::string("complements closed: ") +
         (d.at("attribute_extent_complements_closed").get<bool>() ? "yes" : "no") + "\n";
  out += std::string("interordinally derivable: ") +
         (d.at("interordinally_derivable").get<bool>() ? "yes" : "no") + "\n";
  out += "osd:          " + std::to_string(report.at("osd").at("value").get<std::size_t>()) + "\n";
  const auto& isd = report.at("isd");
  if (!isd.at("defined").get<bool>()) {
    out += "isd:          undefined (" + isd.at("blocking_reason").get<std::string>() + ")\n";
  } else if (isd.at("exact").get<bool>()) {
    out += "isd:          " + std::to_string(isd.at("value").get<std::size_t>()) + "\n";
  } else {
    out += "isd:          in [" + std::to_string(isd.at("lower").get<std::size_t>()) + ", " +
           std::to_string(isd.at("upper").get<std::size_t>()) + "] (budget exhausted)\n";
  }
  const auto& b = report.at("isd_bounds");
  out += "isd bounds:   [" + std::to_string(b.at("lower").get<std::size_t>()) + ", " +
         std::to_string(b.at("upper").get<std::size_t>()) + "]\n";
  const auto& od = report.at("order_dimension");
  if (od.at("exact").get<bool>())
    out += "order dim:    " + std::to_string(od.at("value").get<std::size_t>()) + "\n";
  else
    out += "order dim:    in [" + std::to_string(od.at("lower").get<std::size_t>()) + ", " +
           std::to_string(od.at("upper").get<std::size_t>()) + "] (bounds)\n";
  return out;
}

}  // namespace scaledim
