#include "scaledim/dimensions.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>
#include <unordered_set>

#include "search.hpp"

namespace scaledim {

ChainDecomposition poset_width(const std::vector<BitSet>& elements) {
  const std::size_t n = elements.size();
  {
    std::unordered_set<BitSet, BitSetHash> seen;
    for (const auto& e : elements)
      if (!seen.insert(e).second)
        throw PreconditionError("width requires duplicate-free elements");
  }
  ChainDecomposition out;
  if (n == 0) return out;

  std::vector<std::vector<std::size_t>> adj(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && elements[i].is_proper_subset_of(elements[j])) adj[i].push_back(j);

  // Maximum matching on the strict-containment relation (Kuhn).
  constexpr std::size_t NONE = BitSet::npos;
  std::vector<std::size_t> match_l(n, NONE), match_r(n, NONE);
  std::vector<char> visited(n);
  std::function<bool(std::size_t)> augment = [&](std::size_t u) -> bool {
    for (std::size_t v : adj[u]) {
      if (visited[v]) continue;
      visited[v] = 1;
      if (match_r[v] == NONE || augment(match_r[v])) {
        match_l[u] = v;
        match_r[v] = u;
        return true;
      }
    }
    return false;
  };
  for (std::size_t u = 0; u < n; ++u) {
    std::fill(visited.begin(), visited.end(), 0);
    augment(u);
  }

  // Chains: vertex-disjoint matched paths.
  for (std::size_t s = 0; s < n; ++s) {
    if (match_r[s] != NONE) continue;  // has a predecessor
    std::vector<std::size_t> chain;
    for (std::size_t cur = s;;) {
      chain.push_back(cur);
      if (match_l[cur] == NONE) break;
      cur = match_l[cur];
    }
    out.chains.push_back(std::move(chain));
  }

  // König: the elements untouched by the minimum vertex cover form a
  // maximum antichain.
  std::vector<char> zl(n, 0), zr(n, 0);
  std::vector<std::size_t> stack;
  for (std::size_t u = 0; u < n; ++u)
    if (match_l[u] == NONE) {
      zl[u] = 1;
      stack.push_back(u);
    }
  while (!stack.empty()) {
    std::size_t u = stack.back();
    stack.pop_back();
    for (std::size_t v : adj[u]) {
      if (zr[v]) continue;
      zr[v] = 1;
      std::size_t w = match_r[v];
      if (w != NONE && !zl[w]) {
        zl[w] = 1;
        stack.push_back(w);
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    if (zl[i] && !zr[i]) out.antichain.push_back(i);

  out.width = out.chains.size();
  if (out.antichain.size() != out.width)
    throw Error("internal: chain cover and antichain certificates disagree");
  for (std::size_t a = 0; a < out.antichain.size(); ++a)
    for (std::size_t b = 0; b < a; ++b)
      if (elements[out.antichain[a]].comparable_with(elements[out.antichain[b]]))
        throw Error("internal: antichain certificate contains comparable elements");
  return out;
}

OsdResult ordinal_scaling_dimension(const ExtentLattice& lat) {
  std::vector<ObjectSet> mi = lat.meet_irreducible_extents();
  ChainDecomposition cd = poset_width(mi);
  OsdResult r;
  r.value = cd.width;
  for (const auto& chain : cd.chains) {
    std::vector<ObjectSet> c;
    c.reserve(chain.size());
    for (std::size_t idx : chain) c.push_back(mi[idx]);
    r.chains.push_back(std::move(c));
  }
  return r;
}

std::string LadderViolation::describe(const FormalContext& ctx) const {
  switch (kind) {
    case Kind::EmptyMember:
      return "the empty set cannot be a ladder member";
    case Kind::NotAnExtent:
      return ctx.render_object_set(sets[0]) + " is not an extent";
    case Kind::MissingComplement:
      return "complement of " + ctx.render_object_set(sets[0]) + " is missing";
    case Kind::ThreeAntichain:
      return ctx.render_object_set(sets[0]) + ", " + ctx.render_object_set(sets[1]) +
             " and " + ctx.render_object_set(sets[2]) + " are mutually incomparable";
  }
  return "?";
}

namespace {

std::vector<ObjectSet> dedupe_lectic(std::vector<ObjectSet> sets) {
  std::sort(sets.begin(), sets.end(), BitSetLecticLess{});
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  return sets;
}

}  // namespace

std::optional<LadderViolation> check_extent_ladder(
    const ExtentLattice& lat, const std::vector<ObjectSet>& members) {
  std::vector<ObjectSet> ms = dedupe_lectic(members);
  std::unordered_set<BitSet, BitSetHash> present(ms.begin(), ms.end());
  for (const auto& m : ms) {
    if (m.universe() != lat.context().object_count())
      throw StructuralError("ladder member does not index into the context");
    if (m.empty())
      return LadderViolation{LadderViolation::Kind::EmptyMember, {m}};
    if (!lat.is_extent(m))
      return LadderViolation{LadderViolation::Kind::NotAnExtent, {m}};
  }
  for (const auto& m : ms)
    if (!present.count(m.complement()))
      return LadderViolation{LadderViolation::Kind::MissingComplement, {m}};
  for (std::size_t i = 0; i < ms.size(); ++i)
    for (std::size_t j = i + 1; j < ms.size(); ++j) {
      if (ms[i].comparable_with(ms[j])) continue;
      for (std::size_t k = j + 1; k < ms.size(); ++k)
        if (!ms[k].comparable_with(ms[i]) && !ms[k].comparable_with(ms[j]))
          return LadderViolation{LadderViolation::Kind::ThreeAntichain,
                                 {ms[i], ms[j], ms[k]}};
    }
  return std::nullopt;
}

ExtentLadder make_extent_ladder(const ExtentLattice& lat,
                                std::vector<ObjectSet> members) {
  std::vector<ObjectSet> ms = dedupe_lectic(std::move(members));
  if (auto v = check_extent_ladder(lat, ms))
    throw SpecError("not an extent ladder: " + v->describe(lat.context()));
  ExtentLadder ladder;
  ladder.members = ms;
  if (ms.empty()) return ladder;

  // Minimal member: everything else contains it or lies in its complement,
  // and the members containing it form one of the two chains.
  std::size_t min_idx = 0;
  for (std::size_t i = 0; i < ms.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < ms.size(); ++j)
      if (j != i && ms[j].is_proper_subset_of(ms[i])) {
        minimal = false;
        break;
      }
    if (minimal) {
      min_idx = i;
      break;
    }
  }
  const ObjectSet& bottom = ms[min_idx];
  for (const auto& m : ms)
    (bottom.is_subset_of(m) ? ladder.chain_a : ladder.chain_b).push_back(m);
  auto by_size = [](const ObjectSet& a, const ObjectSet& b) {
    return a.count() < b.count();
  };
  std::sort(ladder.chain_a.begin(), ladder.chain_a.end(), by_size);
  std::sort(ladder.chain_b.begin(), ladder.chain_b.end(), by_size);
  for (const auto* chain : {&ladder.chain_a, &ladder.chain_b})
    for (std::size_t i = 1; i < chain->size(); ++i)
      if (!(*chain)[i - 1].is_proper_subset_of((*chain)[i]))
        throw Error("internal: ladder does not split into two chains");
  if (ladder.chain_a.size() != ladder.chain_b.size())
    throw Error("internal: ladder chains have unequal size");
  return ladder;
}

DerivabilityCheck check_interordinal_derivability(const FormalContext& ctx) {
  DerivabilityCheck r;
  r.atomistic = is_atomistic(ctx);
  r.attribute_complements_closed = true;
  for (std::size_t m = 0; m < ctx.attribute_count(); ++m)
    if (!ctx.is_extent(ctx.column(m).complement())) {
      r.attribute_complements_closed = false;
      break;
    }
  return r;
}

namespace {

// Reading order for humans: compare member index lists lexicographically.
bool index_lex_less(const BitSet& a, const BitSet& b) {
  return a.indices() < b.indices();
}

}  // namespace

IsdGate isd_exists(const ExtentLattice& lat) {
  IsdGate g;
  g.derivability = check_interordinal_derivability(lat.context());
  g.coverable = true;
  std::vector<ObjectSet> mi = lat.meet_irreducible_extents();
  std::sort(mi.begin(), mi.end(), index_lex_less);
  for (const ObjectSet& e : mi) {
    if (e.empty()) {
      g.coverable = false;
      g.blocker = e;
      g.blocker_is_empty = true;
      break;
    }
    if (!lat.complement_is_extent(e)) {
      g.coverable = false;
      g.blocker = e;
      g.blocker_is_empty = false;
      break;
    }
  }
  return g;
}

namespace {

// Ladders usable for covering are, without loss of coverage, spanned by
// chains within S = meet-irreducibles ∪ complements: intersecting any ladder
// with S keeps a ladder and the covered meet-irreducibles. Every maximal
// ladder within S arises from a maximal chain of S together with the
// complements of its elements.
struct LadderCandidates {
  std::vector<BitSet> masks;                       // coverage over MI indices
  std::vector<std::vector<std::size_t>> members;   // S indices per candidate
  bool complete = true;
};

LadderCandidates enumerate_ladder_candidates(const std::vector<ObjectSet>& S,
                                             const std::vector<std::size_t>& complement_of,
                                             const std::vector<std::size_t>& mi_bit,
                                             std::size_t mi_count,
                                             std::uint64_t& nodes,
                                             std::uint64_t node_budget) {
  const std::size_t n = S.size();
  LadderCandidates out;

  std::vector<std::vector<std::size_t>> above(n);  // strict supersets
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && S[i].is_proper_subset_of(S[j])) above[i].push_back(j);

  // Hasse successors within S.
  std::vector<std::vector<std::size_t>> succ(n);
  std::vector<char> has_pred(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j : above[i]) {
      bool direct = true;
      for (std::size_t k : above[i])
        if (k != j && S[k].is_proper_subset_of(S[j])) {
          direct = false;
          break;
        }
      if (direct) {
        succ[i].push_back(j);
        has_pred[j] = 1;
      }
    }

  std::unordered_map<BitSet, std::size_t, BitSetHash> by_mask;
  std::vector<std::size_t> path;
  auto emit = [&](const std::vector<std::size_t>& chain) {
    BitSet mask(mi_count);
    std::vector<std::size_t> members;
    for (std::size_t i : chain) {
      members.push_back(i);
      members.push_back(complement_of[i]);
    }
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    for (std::size_t i : members)
      if (mi_bit[i] != BitSet::npos) mask.set(mi_bit[i]);
    if (by_mask.emplace(mask, out.masks.size()).second) {
      out.masks.push_back(std::move(mask));
      out.members.push_back(std::move(members));
    }
  };
  std::function<void(std::size_t)> dfs = [&](std::size_t i) {
    if (!out.complete) return;
    if (++nodes > node_budget) {
      out.complete = false;
      return;
    }
    path.push_back(i);
    if (succ[i].empty())
      emit(path);
    else
      for (std::size_t j : succ[i]) dfs(j);
    path.pop_back();
  };
  for (std::size_t i = 0; i < n && out.complete; ++i)
    if (!has_pred[i]) dfs(i);

  if (!out.complete) return out;

  // Drop dominated coverage masks.
  std::vector<char> dominated(out.masks.size(), 0);
  for (std::size_t a = 0; a < out.masks.size(); ++a)
    for (std::size_t b = 0; b < out.masks.size(); ++b)
      if (a != b && !dominated[b] &&
          out.masks[a].is_proper_subset_of(out.masks[b])) {
        dominated[a] = 1;
        break;
      }
  LadderCandidates kept;
  for (std::size_t a = 0; a < out.masks.size(); ++a)
    if (!dominated[a]) {
      kept.masks.push_back(std::move(out.masks[a]));
      kept.members.push_back(std::move(out.members[a]));
    }
  return kept;
}

LadderCover cover_from_ladders(const ExtentLattice& lat,
                               std::vector<std::vector<ObjectSet>> member_sets) {
  LadderCover cover;
  for (auto& members : member_sets)
    cover.ladders.push_back(make_extent_ladder(lat, std::move(members)));
  std::sort(cover.ladders.begin(), cover.ladders.end(),
            [](const ExtentLadder& a, const ExtentLadder& b) {
              if (a.members.size() != b.members.size())
                return a.members.size() > b.members.size();
              return std::lexicographical_compare(
                  a.members.begin(), a.members.end(), b.members.begin(),
                  b.members.end(), BitSetLecticLess{});
            });
  std::unordered_set<BitSet, BitSetHash> member_union;
  for (const auto& lad : cover.ladders)
    for (const auto& m : lad.members) member_union.insert(m);
  for (const auto& e : lat.meet_irreducible_extents())
    if (member_union.count(e)) cover.covered.push_back(e);
  return cover;
}

}  // namespace

IsdResult interordinal_scaling_dimension(const ExtentLattice& lat,
                                         std::uint64_t node_budget) {
  IsdResult r;
  r.gate = isd_exists(lat);
  if (!r.gate.coverable) return r;
  r.defined = true;

  std::vector<ObjectSet> mi = lat.meet_irreducible_extents();
  const std::size_t k = mi.size();
  if (k == 0) {
    r.exact = true;
    r.cover = LadderCover{};
    return r;
  }

  ChainDecomposition cd = poset_width(mi);
  const std::size_t w = cd.width;
  const std::size_t lower0 = (w + 1) / 2;

  // Fallback witness: each chain of the width decomposition closed under
  // complements is a ladder, so w ladders always cover.
  std::vector<std::vector<ObjectSet>> fallback;
  for (const auto& chain : cd.chains) {
    std::vector<ObjectSet> members;
    for (std::size_t idx : chain) {
      members.push_back(mi[idx]);
      members.push_back(mi[idx].complement());
    }
    fallback.push_back(std::move(members));
  }

  // S = meet-irreducibles ∪ complements, deduplicated, lectic.
  std::vector<ObjectSet> S;
  {
    std::unordered_set<BitSet, BitSetHash> seen;
    for (const auto& e : mi) {
      if (seen.insert(e).second) S.push_back(e);
      ObjectSet c = e.complement();
      if (seen.insert(c).second) S.push_back(std::move(c));
    }
  }
  std::sort(S.begin(), S.end(), BitSetLecticLess{});
  std::unordered_map<BitSet, std::size_t, BitSetHash> pos;
  for (std::size_t i = 0; i < S.size(); ++i) pos.emplace(S[i], i);
  std::vector<std::size_t> complement_of(S.size());
  for (std::size_t i = 0; i < S.size(); ++i)
    complement_of[i] = pos.at(S[i].complement());
  std::vector<std::size_t> mi_bit(S.size(), BitSet::npos);
  {
    std::unordered_map<BitSet, std::size_t, BitSetHash> mi_pos;
    for (std::size_t b = 0; b < mi.size(); ++b) mi_pos.emplace(mi[b], b);
    for (std::size_t i = 0; i < S.size(); ++i) {
      auto it = mi_pos.find(S[i]);
      if (it != mi_pos.end()) mi_bit[i] = it->second;
    }
  }

  LadderCandidates cands = enumerate_ladder_candidates(
      S, complement_of, mi_bit, k, r.nodes, node_budget);

  if (!cands.complete) {
    r.exact = false;
    r.lower = lower0;
    r.upper = w;
    r.cover = cover_from_ladders(lat, std::move(fallback));
    return r;
  }

  detail::SetCoverOutcome outcome = detail::min_set_cover(
      k, cands.masks, lower0, node_budget > r.nodes ? node_budget - r.nodes : 0);
  r.nodes += outcome.nodes;

  std::vector<std::vector<ObjectSet>> chosen_members;
  for (std::size_t c : outcome.chosen) {
    std::vector<ObjectSet> members;
    for (std::size_t i : cands.members[c]) members.push_back(S[i]);
    chosen_members.push_back(std::move(members));
  }

  if (outcome.optimal && outcome.chosen.size() <= w) {
    r.exact = true;
    r.value = outcome.chosen.size();
    r.lower = r.upper = r.value;
    r.cover = cover_from_ladders(lat, std::move(chosen_members));
  } else {
    r.exact = false;
    r.lower = std::max(lower0, outcome.proven_lower);
    if (outcome.chosen.size() <= w) {
      r.upper = outcome.chosen.size();
      r.cover = cover_from_ladders(lat, std::move(chosen_members));
    } else {
      r.upper = w;
      r.cover = cover_from_ladders(lat, std::move(fallback));
    }
  }
  return r;
}

IsdBounds isd_bounds(const ExtentLattice& lat) {
  std::vector<ObjectSet> mi = lat.meet_irreducible_extents();
  ChainDecomposition cd = poset_width(mi);
  IsdBounds b;
  b.lower = (cd.width + 1) / 2;
  b.upper = cd.width;
  if (isd_exists(lat).coverable) {
    for (const auto& chain : cd.chains) {
      std::vector<ObjectSet> members;
      for (std::size_t idx : chain) {
        members.push_back(mi[idx]);
        members.push_back(mi[idx].complement());
      }
      b.upper_witness.push_back(make_extent_ladder(lat, std::move(members)));
    }
  }
  return b;
}

InterordinalReconstruction reconstruct_interordinal_mv(const ExtentLattice& lat,
                                                       const LadderCover& cover) {
  const FormalContext& ctx = lat.context();
  const std::size_t n = ctx.object_count();

  std::vector<ExtentLadder> ladders;
  std::unordered_set<BitSet, BitSetHash> member_union;
  for (const auto& lad : cover.ladders) {
    ExtentLadder checked = make_extent_ladder(lat, lad.members);
    for (const auto& m : checked.members) member_union.insert(m);
    ladders.push_back(std::move(checked));
  }
  for (const auto& e : lat.meet_irreducible_extents())
    if (!member_union.count(e))
      throw SpecError("ladder cover misses meet-irreducible extent " +
                      ctx.render_object_set(e));

  std::vector<std::string> attrs;
  std::vector<std::vector<std::optional<std::string>>> cells(
      n, std::vector<std::optional<std::string>>(ladders.size()));
  PreScaling pre;
  std::vector<Scale> scales;
  for (std::size_t i = 0; i < ladders.size(); ++i) {
    attrs.push_back("x" + std::to_string(i + 1));
    const auto& chain = ladders[i].chain_a;  // A1 ⊂ ... ⊂ Ak
    // Values are the minimal nonempty intersections of ladder members:
    // A1, A2∖A1, ..., Ak∖A(k-1), G∖Ak, in chain order.
    std::vector<std::string> values;
    for (std::size_t j = 0; j <= chain.size(); ++j)
      values.push_back("v" + std::to_string(j + 1));
    for (std::size_t g = 0; g < n; ++g) {
      std::size_t j = 0;
      while (j < chain.size() && !chain[j].test(g)) ++j;
      cells[g][i] = values[j];
    }
    pre.domains.push_back(AttributeDomain{values, true});
    scales.push_back(build_scale(ScaleKind::interordinal(), values));
  }
  return {ManyValuedContext(ctx.objects(), std::move(attrs), std::move(cells)),
          std::move(pre), std::move(scales)};
}

OrdinalReconstruction reconstruct_ordinal_mv(
    const ExtentLattice& lat, const std::vector<std::vector<ObjectSet>>& chains) {
  const FormalContext& ctx = lat.context();
  const std::size_t n = ctx.object_count();

  std::unordered_set<BitSet, BitSetHash> member_union;
  for (const auto& chain : chains)
    for (std::size_t j = 0; j < chain.size(); ++j) {
      if (!lat.is_extent(chain[j]))
        throw SpecError("chain member " + ctx.render_object_set(chain[j]) +
                        " is not an extent");
      if (j > 0 && !chain[j - 1].is_proper_subset_of(chain[j]))
        throw SpecError("chain is not strictly ascending at " +
                        ctx.render_object_set(chain[j]));
      member_union.insert(chain[j]);
    }
  for (const auto& e : lat.meet_irreducible_extents())
    if (!member_union.count(e))
      throw SpecError("chains miss meet-irreducible extent " +
                      ctx.render_object_set(e));

  std::vector<std::string> attrs;
  std::vector<std::vector<std::optional<std::string>>> cells(
      n, std::vector<std::optional<std::string>>(chains.size()));
  PreScaling pre;
  for (std::size_t i = 0; i < chains.size(); ++i) {
    attrs.push_back("x" + std::to_string(i + 1));
    const auto& chain = chains[i];
    // One value per chain extent plus a shared top value.
    std::vector<std::string> values;
    for (std::size_t j = 0; j <= chain.size(); ++j)
      values.push_back("v" + std::to_string(j + 1));
    for (std::size_t g = 0; g < n; ++g) {
      std::size_t j = 0;
      while (j < chain.size() && !chain[j].test(g)) ++j;
      cells[g][i] = values[j];
    }
    pre.domains.push_back(AttributeDomain{values, true});
  }
  return {ManyValuedContext(ctx.objects(), std::move(attrs), std::move(cells)),
          std::move(pre)};
}

}  // namespace scaledim
