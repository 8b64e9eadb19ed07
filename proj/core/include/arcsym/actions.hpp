#pragma once

#include <cstddef>
#include <unordered_map>
#include <vector>

#include "arcsym/bounds.hpp"
#include "arcsym/group.hpp"

namespace arcsym {

/**
 * Canonical representatives of right cosets Hx of H in G.
 *
 * H's chain is rebuilt on G's base; the representative of Hx is the element
 * of Hx whose base images are lexicographically least, found greedily level
 * by level. Two elements lie in the same coset iff their keys agree.
 */
class CosetCanonizer {
 public:
  CosetCanonizer(const PermutationGroup& g, const PermutationGroup& h);

  const PermutationGroup& group() const noexcept { return g_; }
  const PermutationGroup& subgroup() const noexcept { return h_; }
  /// Base of G; keys are images of these points.
  const std::vector<Point>& base() const noexcept { return base_; }

  /// The least element of H*x.
  Permutation canonical(const Permutation& x) const;
  /// Base images of canonical(x).
  std::vector<Point> key(const Permutation& x) const;

  /// True iff y ∈ H x H, decided by walking the H-orbit of the coset Hx
  /// (|HxH|/|H| cosets), never listing HxH itself.
  bool in_double_coset(const Permutation& x, const Permutation& y) const;
  /// |HxH| / |H|: the length of the H-orbit of Hx.
  std::size_t double_coset_size(const Permutation& x) const;

 private:
  std::vector<std::vector<Point>> h_orbit_of(const Permutation& x,
                                             const std::vector<Point>* stop) const;

  PermutationGroup g_;
  PermutationGroup h_;
  std::vector<Point> base_;
  StabilizerChain h_chain_;
};

struct KeyHash {
  std::size_t operator()(const std::vector<Point>& v) const noexcept {
    return PermutationHash{}(v);
  }
};

/// G acting on the right cosets of H by right multiplication.
struct CosetAction {
  PermutationGroup action;                 // image of G, degree [G:H]
  std::vector<Permutation> representatives;  // canonical rep of coset i; rep 0 lies in H
  std::vector<Permutation> images;         // image of each generator of G, in order
  std::unordered_map<std::vector<Point>, std::size_t, KeyHash> label_of;  // key -> label

  std::size_t degree() const noexcept { return representatives.size(); }
};

/**
 * Labels the right cosets of H breadth-first from H*1 (label 0), applying G's
 * generators in sorted order, and returns the induced action. Throws
 * BoundExceeded when [G:H] exceeds bounds.coset_index.
 */
CosetAction action_on_cosets(const PermutationGroup& g, const PermutationGroup& h,
                             const SearchBounds& bounds = default_bounds());

/// Label of the coset H*x in `a` (x must lie in the acting group).
std::size_t coset_label(const CosetAction& a, const CosetCanonizer& c, const Permutation& x);

/**
 * G ≀ Sym_m in product action on V^m, V = {0..n-1}. Tuple (x_0,...,x_{m-1})
 * is point Σ x_i n^(m-1-i), so x_0 is the most significant coordinate.
 * Generators: every generator of G on every coordinate, then the adjacent
 * coordinate transpositions. m = 1 returns G itself.
 */
PermutationGroup wreath_product_action(const PermutationGroup& g, std::size_t m,
                                       const SearchBounds& bounds = default_bounds());

/// Encodes a coordinate tuple as a product-action point.
Point product_point(std::span<const Point> coords, std::size_t n);
std::vector<Point> product_coords(Point p, std::size_t n, std::size_t m);

/// Permutation of V^m induced by applying `g` on every coordinate at once.
Permutation diagonal_power_action(const Permutation& g, std::size_t m);
/// Permutation of V^m permuting coordinates: coordinate i moves to sigma[i].
Permutation coordinate_permutation(std::size_t n, std::span<const std::size_t> sigma);

/// T^k on k disjoint copies of T's domain (copy i holds points i*n..i*n+n-1).
PermutationGroup direct_power(const PermutationGroup& t, std::size_t k);
/// Embeds the k-tuple (t_0,...,t_{k-1}) of elements of T as an element of T^k.
Permutation tuple_element(std::span<const Permutation> parts);
/// The diagonal {(t,...,t)} of T^k.
PermutationGroup diagonal_subgroup(const PermutationGroup& t, std::size_t k);

}  // namespace arcsym
