#pragma once

#include <optional>
#include <vector>

#include "arcsym/bounds.hpp"
#include "arcsym/group.hpp"
#include "arcsym/group_table.hpp"

namespace arcsym {

// Subgroup-level operations of the kernel. Anything that walks elements or
// a subgroup lattice is bounded by SearchBounds and throws BoundExceeded
// rather than approximating.

/// Exact A ∩ B. Enumerates the smaller factor, so min(|A|,|B|) must be within
/// bounds.element_enumeration. Requires a common parent.
SubgroupHandle subgroup_intersection(const SubgroupHandle& a, const SubgroupHandle& b,
                                     const SearchBounds& bounds = default_bounds());
PermutationGroup intersection(const PermutationGroup& a, const PermutationGroup& b,
                              const SearchBounds& bounds = default_bounds());

/// H^g = g^-1 H g; g must belong to the parent.
SubgroupHandle conjugate_subgroup(const SubgroupHandle& h, const Permutation& g);
PermutationGroup conjugate_group(const PermutationGroup& h, const Permutation& g);

/**
 * Some x in `g` with A^x = B, or nullopt when no such element exists.
 *
 * Depth-first search over base images of `g`'s stabilizer chain, in
 * increasing order of images, pruned by orbit-length compatibility of A and
 * B; the first transporter met is returned (least base-image sequence).
 * Throws SearchExhausted once bounds.transporter_nodes is used up.
 */
std::optional<Permutation> are_conjugate(const PermutationGroup& g, const PermutationGroup& a,
                                         const PermutationGroup& b,
                                         const SearchBounds& bounds = default_bounds());

/// Smallest normal subgroup of `in` containing `h`.
PermutationGroup normal_closure(const PermutationGroup& in, const PermutationGroup& h);
PermutationGroup derived_subgroup(const PermutationGroup& g);
/// G = G^(0) > G^(1) > ... ending at the first repeated term (included once).
std::vector<SubgroupHandle> derived_series(const PermutationGroup& g);
SubgroupHandle perfect_core(const PermutationGroup& g);
bool is_solvable(const PermutationGroup& g);
bool is_perfect(const PermutationGroup& g);

/// All normal subgroups, sorted by order then by element set. |G| bounded by
/// subgroup_enumeration.
std::vector<SubgroupHandle> normal_subgroups(const PermutationGroup& g,
                                             const SearchBounds& bounds = default_bounds());
SubgroupHandle solvable_radical(const PermutationGroup& g,
                                const SearchBounds& bounds = default_bounds());
SubgroupHandle socle(const PermutationGroup& g, const SearchBounds& bounds = default_bounds());
/// C_G(H) by scanning the elements of G (element_enumeration bound).
SubgroupHandle centralizer(const PermutationGroup& g, const PermutationGroup& h,
                           const SearchBounds& bounds = default_bounds());
/// Core_G(H): largest normal subgroup of G inside H.
PermutationGroup normal_core(const PermutationGroup& g, const PermutationGroup& h,
                             const SearchBounds& bounds = default_bounds());
/// Nonabelian simple (nontrivial, perfect, no proper nontrivial normal
/// subgroup). Uses normal closures of class representatives, so |G| is bounded
/// by element_enumeration.
bool is_nonabelian_simple(const PermutationGroup& g, const SearchBounds& bounds = default_bounds());

/**
 * One representative per conjugacy class of subgroups, sorted by order.
 *
 * Cyclic extension: starting from every perfect subgroup (found as perfect
 * cores of two-generator subgroups and their joins), repeatedly adjoin
 * elements that normalize the current subgroup and have prime order modulo
 * it. Requires |G| <= bounds.subgroup_enumeration.
 */
std::vector<SubgroupHandle> subgroups_up_to_conjugacy(const PermutationGroup& g,
                                                      const SearchBounds& bounds = default_bounds());

/// H = AB, tested as |A||B| / |A ∩ B| == |H|. Throws InvalidArgument unless A
/// and B are subgroups of H.
bool check_factorization(const PermutationGroup& h, const PermutationGroup& a,
                         const PermutationGroup& b, const SearchBounds& bounds = default_bounds());

// Table-level forms, working inside one GroupTable so that subgroups of a
// subgroup share element indices with the ambient group.

/// Normal subgroups of `in`, sorted by order.
std::vector<TableSubgroup> table_normal_subgroups(const GroupTable& t, const TableSubgroup& in);
TableSubgroup table_solvable_radical(const GroupTable& t, const TableSubgroup& in);
TableSubgroup table_socle(const GroupTable& t, const TableSubgroup& in);
/// Subgroup class representatives of the whole table group, sorted by order.
std::vector<TableSubgroup> table_subgroup_classes(const GroupTable& t);

}  // namespace arcsym
