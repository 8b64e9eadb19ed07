#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "arcsym/bigint.hpp"
#include "arcsym/bounds.hpp"
#include "arcsym/permutation.hpp"
#include "arcsym/stabilizer_chain.hpp"

namespace arcsym {

/**
 * A finite permutation group given by generators, with its stabilizer chain
 * built eagerly at construction. Values are immutable and cheap to copy
 * (shared state), so concurrent reads are safe.
 */
class PermutationGroup {
 public:
  /// Group generated by `generators` on `degree` points; an empty list gives
  /// the trivial group. Throws InvalidArgument on degree mismatch.
  PermutationGroup(std::size_t degree, std::vector<Permutation> generators);

  static PermutationGroup trivial(std::size_t degree) { return {degree, {}}; }

  std::size_t degree() const noexcept;
  const std::vector<Permutation>& generators() const noexcept;
  const StabilizerChain& chain() const noexcept;
  const BigInt& order() const noexcept;
  /// Order narrowed to 64 bits (throws std::overflow_error otherwise).
  std::uint64_t small_order() const;
  std::vector<Point> base() const { return chain().base(); }
  /// Strong generators of the chain (level-0 generators).
  std::vector<Permutation> strong_generators() const;

  bool is_trivial() const noexcept { return chain().length() == 0 || order() == 1; }
  bool contains(const Permutation& p) const;
  bool contains_all(std::span<const Permutation> elements) const;
  bool is_subgroup_of(const PermutationGroup& other) const;

  std::vector<Point> orbit(Point v) const;
  /// Orbits sorted by their smallest point, each orbit sorted.
  const std::vector<std::vector<Point>>& orbits() const;
  bool is_transitive() const;
  bool is_regular() const;

  /// Chain with the given base prefix (same group, different base).
  StabilizerChain chain_with_base(std::span<const Point> prefix) const;
  PermutationGroup stabilizer(Point v) const;
  PermutationGroup pointwise_stabilizer(std::span<const Point> points) const;

  /// Visits every element; throws BoundExceeded if |G| > element_enumeration.
  void for_each_element(const std::function<void(const Permutation&)>& visit,
                        const SearchBounds& bounds = default_bounds()) const;
  std::vector<Permutation> elements(const SearchBounds& bounds = default_bounds()) const;

  /// Same set of elements.
  friend bool operator==(const PermutationGroup& a, const PermutationGroup& b);

 private:
  struct Data;
  std::shared_ptr<const Data> data_;
};

/// Strict constructor: nonempty list of equal-degree permutations.
PermutationGroup group_from_generators(std::vector<Permutation> generators);

/// Throws InvalidArgument unless `p` is a member of `group`.
void require_member(const PermutationGroup& group, const Permutation& p, const char* what);

/**
 * A subgroup remembered together with the group it lives in. Every generator
 * is verified to be a member of the parent.
 */
class SubgroupHandle {
 public:
  SubgroupHandle(PermutationGroup parent, std::vector<Permutation> generators);
  /// Wraps an already-built group, checking containment.
  SubgroupHandle(PermutationGroup parent, PermutationGroup subgroup);

  static SubgroupHandle whole(const PermutationGroup& parent) { return {parent, parent}; }
  static SubgroupHandle trivial(const PermutationGroup& parent) {
    return {parent, PermutationGroup::trivial(parent.degree())};
  }

  const PermutationGroup& parent() const noexcept { return parent_; }
  const PermutationGroup& group() const noexcept { return group_; }
  const std::vector<Permutation>& generators() const noexcept { return group_.generators(); }
  const BigInt& order() const noexcept { return group_.order(); }
  bool contains(const Permutation& p) const { return group_.contains(p); }

  friend bool operator==(const SubgroupHandle& a, const SubgroupHandle& b) {
    return a.group_ == b.group_;
  }

 private:
  PermutationGroup parent_;
  PermutationGroup group_;
};

}  // namespace arcsym
