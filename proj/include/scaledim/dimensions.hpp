#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "scaledim/lattice.hpp"
#include "scaledim/scaling.hpp"

namespace scaledim {

inline constexpr std::uint64_t kDefaultSearchBudget = 10'000'000;

// Dilworth decomposition of a ⊆-ordered family: a minimum chain cover and a
// maximum antichain of equal size. Solved by maximum bipartite matching on
// the strict-containment relation; the certificate equality is checked on
// every call.
struct ChainDecomposition {
  std::size_t width = 0;
  std::vector<std::vector<std::size_t>> chains;  // index lists, ascending by ⊆
  std::vector<std::size_t> antichain;            // index list, size == width
};

ChainDecomposition poset_width(const std::vector<BitSet>& elements);

struct OsdResult {
  std::size_t value = 0;
  // Minimum chain cover of the meet-irreducible extents, each ascending.
  std::vector<std::vector<ObjectSet>> chains;
};

OsdResult ordinal_scaling_dimension(const ExtentLattice& lat);

// Complement-closed family of nonempty extents without a 3-antichain.
// Splits into two complementary chains of equal size.
struct ExtentLadder {
  std::vector<ObjectSet> members;  // lectic order
  std::vector<ObjectSet> chain_a;  // ascending by ⊆
  std::vector<ObjectSet> chain_b;  // ascending; the complements of chain_a
};

struct LadderViolation {
  enum class Kind { EmptyMember, NotAnExtent, MissingComplement, ThreeAntichain };
  Kind kind;
  std::vector<ObjectSet> sets;
  std::string describe(const FormalContext& ctx) const;
};

std::optional<LadderViolation> check_extent_ladder(
    const ExtentLattice& lat, const std::vector<ObjectSet>& members);

inline bool is_extent_ladder(const ExtentLattice& lat,
                             const std::vector<ObjectSet>& members) {
  return !check_extent_ladder(lat, members).has_value();
}

// Validates and splits the member family into its two chains.
ExtentLadder make_extent_ladder(const ExtentLattice& lat,
                                std::vector<ObjectSet> members);

// Context-level interordinal derivability: atomistic and every attribute
// extent has an extent complement.
struct DerivabilityCheck {
  bool atomistic = false;
  bool attribute_complements_closed = false;
  bool derivable() const { return atomistic && attribute_complements_closed; }
};

DerivabilityCheck check_interordinal_derivability(const FormalContext& ctx);

// Existence gate for the interordinal scaling dimension: every
// meet-irreducible extent must be nonempty and have an extent complement,
// otherwise no ladder can contain it. The derivability pair is reported
// alongside for diagnostics.
struct IsdGate {
  bool coverable = false;
  std::optional<ObjectSet> blocker;  // lectically first failing extent
  bool blocker_is_empty = false;     // the blocker failed nonemptiness
  DerivabilityCheck derivability;
};

IsdGate isd_exists(const ExtentLattice& lat);

struct LadderCover {
  std::vector<ExtentLadder> ladders;
  std::vector<ObjectSet> covered;  // meet-irreducible extents contained, lectic
};

// (⌈w/2⌉, w) for w the width of the meet-irreducible extents. The upper
// witness closes each chain of a minimum chain cover under complements; it is
// only available when the existence gate passes.
struct IsdBounds {
  std::size_t lower = 0;
  std::size_t upper = 0;
  std::vector<ExtentLadder> upper_witness;
};

IsdBounds isd_bounds(const ExtentLattice& lat);

struct IsdResult {
  bool defined = false;
  IsdGate gate;
  bool exact = false;
  std::size_t value = 0;  // when exact
  std::size_t lower = 0;  // proven interval (equal when exact)
  std::size_t upper = 0;
  std::optional<LadderCover> cover;  // minimum witness, or best found
  std::uint64_t nodes = 0;
};

// Minimum number of extent ladders whose union contains all meet-irreducible
// extents. Candidates are ladders spanned by maximal chains within the
// meet-irreducibles and their complements (sufficient: dropping other members
// never shrinks coverage); the minimum cover is found by branch and bound.
// When the node budget runs out the result degrades to a bound pair.
IsdResult interordinal_scaling_dimension(
    const ExtentLattice& lat, std::uint64_t node_budget = kDefaultSearchBudget);

struct FerrersResult {
  bool exact = false;
  std::size_t value = 0;  // when exact
  std::size_t lower = 0;
  std::size_t upper = 0;
  // Staircase relations covering the non-incidence, as (object, attribute)
  // cell lists.
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> relations;
  std::uint64_t nodes = 0;
};

// Minimum number of Ferrers relations covering the complement of the
// incidence (= order dimension of the concept lattice). Exact by set cover
// over maximal staircases when |G|·|M| ≤ cell_budget and the node budget
// holds out; greedy/crown bounds otherwise.
FerrersResult ferrers_order_dimension(const FormalContext& ctx,
                                      std::size_t cell_budget = 48,
                                      std::uint64_t node_budget = kDefaultSearchBudget);

struct InterordinalReconstruction {
  ManyValuedContext mv;
  PreScaling prescaling;
  std::vector<Scale> scales;
};

// One many-valued attribute per ladder; the values are the minimal nonempty
// intersections of ladder members, ordered along the ladder's chain.
// Interordinal derivation of the result reproduces the input extents.
InterordinalReconstruction reconstruct_interordinal_mv(const ExtentLattice& lat,
                                                       const LadderCover& cover);

struct OrdinalReconstruction {
  ManyValuedContext mv;
  PreScaling prescaling;
};

// One many-valued attribute per chain; the value of an object is the
// smallest chain extent containing it, with a shared top value for the rest.
OrdinalReconstruction reconstruct_ordinal_mv(
    const ExtentLattice& lat, const std::vector<std::vector<ObjectSet>>& chains);

}  // namespace scaledim
