#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "arcsym/arith.hpp"
#include "arcsym/constructions.hpp"
#include "arcsym/digraph.hpp"
#include "arcsym/group.hpp"

namespace arcsym {

enum class Status { kPass, kFail, kNotApplicable, kVacuous };
const char* to_string(Status s);

/// A group acting on a digraph by automorphisms.
struct DigraphAction {
  Digraph digraph;
  PermutationGroup group;
};

/// Throws ValidationError naming the first generator and arc that break the
/// arc relation; InvalidArgument on degree mismatch.
DigraphAction bind_action(Digraph digraph, PermutationGroup group);
inline DigraphAction bind_action(const DigraphWithAction& d) { return bind_action(d.digraph, d.group); }

enum class Transitivity { kTrue, kFalse, kVacuous };
const char* to_string(Transitivity t);

bool is_vertex_transitive(const DigraphAction& a);

/**
 * Whether the s-arcs form one G-orbit. Exact at any size: the orbit of the
 * first s-arc has length |G| / |G_(v_0,...,v_s)|, compared with the s-arc
 * count. kVacuous when the digraph has no s-arcs.
 */
Transitivity is_s_arc_transitive(const DigraphAction& a, std::size_t s);

/// Number of G-orbits on s-arcs by brute force: every s-arc is ranked and
/// joined to its generator images in a union-find. Bounded by
/// s_arc_enumeration.
std::size_t count_s_arc_orbits(const DigraphAction& a, std::size_t s,
                               const SearchBounds& bounds = default_bounds());

struct TwoArcStabilizerData {
  SArc two_arc;  // (u, v, w)
  SubgroupHandle gv;
  SubgroupHandle guv;
  SubgroupHandle gvw;
  FactoredInteger gv_order;
  FactoredInteger guv_order;
  FactoredInteger gvw_order;
};

/// Throws InvalidArgument unless `two_arc` is a 2-arc of the digraph.
TwoArcStabilizerData two_arc_stabilizer_data(const DigraphAction& a, const SArc& two_arc);

struct ClauseResult {
  Status status = Status::kNotApplicable;
  std::string detail;
};

struct LemmaPrimeFactnReport {
  bool applicable = false;     // connected and (G,2)-arc-transitive
  std::string reason;          // why not, when not applicable
  ClauseResult a;              // G_v = G_uv G_vw
  ClauseResult b;              // |G_uv| = |G_vw|, divisible by ∏ p^⌈f/2⌉
  ClauseResult c;              // conjugate in G, not in G_v (needs G_uv != G_vw)
};

LemmaPrimeFactnReport verify_lemma_prime_factn(const DigraphAction& a,
                                               const TwoArcStabilizerData& data,
                                               const SearchBounds& bounds = default_bounds());

/**
 * H = (H ∩ H^(g^-1)) (H ∩ H^g), decided by orders inside G: the stabilizer
 * factorization at the canonical 2-arc (Hg^-1, H, Hg). Validates the spec.
 */
bool coset_two_arc_criterion(const CosetDigraphSpec& spec,
                             const SearchBounds& bounds = default_bounds());

/**
 * A regular subgroup of G, or nullopt when none exists.
 *
 * Depth-first: the current semiregular subgroup K is extended by an element
 * mapping 0 to the least point outside 0^K (every regular R ⊇ K contains
 * one), candidates taken from the coset G_0 t in chain order, and kept only
 * while <K, x> stays semiregular. Explored subgroups are remembered. Throws
 * SearchExhausted after bounds.regular_search_nodes candidates, and
 * BoundExceeded if |G| > bounds.regular_search_order.
 */
std::optional<SubgroupHandle> find_regular_subgroup(const PermutationGroup& g,
                                                    const SearchBounds& bounds = default_bounds());
inline std::optional<SubgroupHandle> is_cayley(const DigraphAction& a,
                                               const SearchBounds& bounds = default_bounds()) {
  return find_regular_subgroup(a.group, bounds);
}

struct LemmaValReport {
  Status status = Status::kNotApplicable;
  std::string branch;  // "prime-cycle", "valency>=3", or why not applicable / failed
  std::size_t valency = 0;
};
/// Needs a vertex-primitive, 1-arc-transitive action.
LemmaValReport lemma_val_check(const DigraphAction& a);

struct RglrSubgroupReport {
  SubgroupHandle y;
  bool is_whole_group = false;
  std::uint64_t rad_order = 0;
  std::uint64_t top_order = 0;   // |(Y/Rad Y)^(∞)|
  bool top_simple = false;       // nonabelian simple
  bool condition_a = false;
  bool condition_b = false;
  std::optional<std::uint64_t> witness_prime;
};

struct RglrHypothesisReport {
  std::vector<RglrSubgroupReport> subgroups;  // transitive core-free Y, and G itself
  bool holds = false;
  bool vacuous = false;                       // no subgroup to check
};

/**
 * Conditions (a), (b) of the regular-subgroup lemma over one representative
 * of every conjugacy class of transitive core-free subgroups Y, plus G
 * itself when transitive. |(Y/Rad Y)^(∞)| is |Y^(∞)| / |Y^(∞) ∩ Rad Y|.
 */
RglrHypothesisReport lemma_rglr_hypothesis_check(const PermutationGroup& g,
                                                 const SearchBounds& bounds = default_bounds());

/// find_regular_subgroup on G ≀ Sym_m in product action.
std::optional<SubgroupHandle> lemma_rglr_brute_force(const PermutationGroup& g, std::size_t m,
                                                     const SearchBounds& bounds = default_bounds());

}  // namespace arcsym
