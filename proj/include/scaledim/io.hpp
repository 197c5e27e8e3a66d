#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "scaledim/dimensions.hpp"
#include "scaledim/scaling.hpp"

namespace scaledim {

// Burmeister .cxt: "B", blank, |G|, |M|, blank, object names, attribute
// names, |G| rows over {'X','.'}. Writing is byte-deterministic (LF line
// endings); parse(write(ctx)) == ctx and write(parse(b)) is a fixpoint.
FormalContext parse_cxt(std::string_view bytes);
std::string write_cxt(const FormalContext& ctx);

struct MvParseResult {
  ManyValuedContext mv;
  PreScaling prescaling;
  std::vector<ScaleKind> kinds;
};

// CSV data table (header row, first column = object names, empty cell = ⊥)
// plus a JSON scaling spec mapping each attribute to
// {"kind": ..., "order": [tokens], "split": n?}.
MvParseResult parse_mv(std::string_view csv_bytes, std::string_view spec_json);

std::string write_mv_csv(const ManyValuedContext& mv);
std::string write_scaling_spec(const ManyValuedContext& mv, const PreScaling& pre,
                               const std::vector<ScaleKind>& kinds);

// DOT digraph of the cover relation, ranked by extent cardinality; ladder
// members are filled from a fixed palette when a cover is given.
std::string export_dot(const ExtentLattice& lat,
                       const LadderCover* highlight = nullptr);

}  // namespace scaledim
