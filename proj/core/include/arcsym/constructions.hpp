#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "arcsym/actions.hpp"
#include "arcsym/bigint.hpp"
#include "arcsym/digraph.hpp"
#include "arcsym/group.hpp"

namespace arcsym {

/// (G, H, g) with H <= G, g ∈ G \ H and g^-1 ∉ HgH.
struct CosetDigraphSpec {
  PermutationGroup G;
  PermutationGroup H;
  Permutation g;
};

/// Checks the spec. Throws InvalidArgument when H is not a subgroup of G or g
/// is not in G, ValidationError when g ∈ H (a loop) or g^-1 ∈ HgH (a
/// symmetric pair of arcs).
void validate_coset_spec(const CosetDigraphSpec& spec);
/// Same checks, as a boolean (false for either ValidationError case).
bool is_valid_coset_spec(const CosetDigraphSpec& spec);

/// A digraph together with a group acting on its vertices.
struct DigraphWithAction {
  Digraph digraph;
  PermutationGroup group;
};

struct CosetDigraph {
  Digraph digraph;
  PermutationGroup group;  // G acting on the cosets
  CosetAction cosets;      // labels: coset H*1 is vertex 0
  std::size_t valency = 0; // |HgH| / |H|
  SArc canonical_two_arc;  // (Hg^-1, H, Hg)

  DigraphWithAction with_action() const { return {digraph, group}; }
};

/**
 * Cos(G, H, g): right cosets of H with Hx -> Hy iff yx^-1 ∈ HgH.
 *
 * The arc set is the G-orbit of the arc (H, Hg), collected with the coset
 * action's generator images. Throws as validate_coset_spec, and
 * BoundExceeded on the coset index or digraph size.
 */
CosetDigraph build_coset_digraph(const CosetDigraphSpec& spec,
                                 const SearchBounds& bounds = default_bounds());

/**
 * Cay(R, S): vertices are the elements of R in chain-transversal order, with
 * x -> y iff yx^-1 ∈ S. The returned group is R acting by right
 * multiplication. Throws ValidationError if 1 ∈ S or S ∩ S^-1 is nonempty,
 * InvalidArgument if S is not inside R.
 */
struct CayleyDigraph {
  Digraph digraph;
  PermutationGroup group;
  std::vector<Permutation> elements;  // vertex i is elements[i]
};
CayleyDigraph build_cayley_digraph(const PermutationGroup& r, const std::vector<Permutation>& s,
                                   const SearchBounds& bounds = default_bounds());

/// Cos(T^k, D, (g_0, ..., g_{k-1})) with D the diagonal of T^k, on
/// |T|^(k-1) vertices.
CosetDigraph build_diagonal_coset_digraph(const PermutationGroup& t,
                                          const std::vector<Permutation>& g,
                                          const SearchBounds& bounds = default_bounds());

/**
 * Symbolic facts about Γ(T) = Cos(T^k, D, (t_1, ..., t_k)), k = |T|, computed
 * without building T^k. R = {(t_1, ..., t_{k-1}, 1)}.
 */
struct GammaCertificate {
  std::size_t t_order = 0;                  // k
  BigInt vertex_count;                      // k^(k-1)
  BigInt r_order;                           // k^(k-1)
  BigInt d_order;                           // k
  BigInt g_order;                           // |T^k| = k^k
  std::size_t rd_intersection_order = 0;    // |R ∩ D|
  bool intersection_rd_trivial = false;
  bool product_rd_is_g = false;             // |R||D|/|R∩D| = |T^k|
  std::size_t diag_self_intersection_order = 0;  // |D ∩ D^g|
  std::size_t valency = 0;                  // |D| / |D ∩ D^g|
};

/**
 * Requires T nonabelian simple (checked). `enumeration` fixes the order
 * t_1, ..., t_k; when empty, T's chain-transversal order is used. A supplied
 * enumeration must list every element of T exactly once.
 */
GammaCertificate gamma_certificate(const PermutationGroup& t,
                                   const std::vector<Permutation>& enumeration = {},
                                   const SearchBounds& bounds = default_bounds());

/**
 * (Σ^m, G ≀ Sym_m) in product action. Throws ValidationError if G does not act
 * on Σ by automorphisms, or if a wreath generator fails to preserve Σ^m.
 */
DigraphWithAction product_action_digraph(const Digraph& sigma, const PermutationGroup& g,
                                         std::size_t m,
                                         const SearchBounds& bounds = default_bounds());

/// The digraph of one orbital of a transitive group.
struct OrbitalDigraph {
  Vertex representative = 0;  // the orbital is the G-orbit of (0, representative)
  Vertex paired = 0;          // representative of the paired orbital
  Digraph digraph;
};
/**
 * One digraph per non-self-paired orbital of the transitive group G (the
 * self-paired ones are symmetric relations, not digraphs), ordered by the
 * smallest point of the suborbit of 0.
 */
std::vector<OrbitalDigraph> orbital_digraphs(const PermutationGroup& g,
                                             const SearchBounds& bounds = default_bounds());

}  // namespace arcsym
