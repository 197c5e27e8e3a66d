#pragma once

#include <string>

#include <json.hpp>

#include "scaledim/dimensions.hpp"

namespace scaledim {

struct AnalysisOptions {
  std::size_t max_extents = ExtentLattice::kDefaultMaxExtents;
  std::uint64_t isd_node_budget = kDefaultSearchBudget;
  std::size_t ferrers_cell_budget = 48;
  std::uint64_t ferrers_node_budget = kDefaultSearchBudget;
  bool witnesses = true;
};

// Full machine-readable analysis of one context. Deterministic: fixed key
// order, no wall-clock fields, node counts only.
nlohmann::ordered_json analyze(const FormalContext& ctx,
                               const AnalysisOptions& options = {});

std::string render_report_json(const nlohmann::ordered_json& report);
std::string render_report_text(const nlohmann::ordered_json& report);

// Witness serialization shared by reports and the CLI.
nlohmann::ordered_json object_set_json(const FormalContext& ctx, const ObjectSet& s);
nlohmann::ordered_json chains_json(const FormalContext& ctx,
                                   const std::vector<std::vector<ObjectSet>>& chains);
nlohmann::ordered_json ladder_json(const FormalContext& ctx, const ExtentLadder& ladder);
nlohmann::ordered_json cover_json(const FormalContext& ctx, const LadderCover& cover);

}  // namespace scaledim
