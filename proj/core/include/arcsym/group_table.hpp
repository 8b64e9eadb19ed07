#pragma once

#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "arcsym/bounds.hpp"
#include "arcsym/group.hpp"

namespace arcsym {

/// Subset of a GroupTable's elements as a bitset over element indices.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe) : words_((universe + 63) / 64, 0) {}

  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1ULL; }
  void set(std::size_t i) {
    std::uint64_t& w = words_[i >> 6];
    const std::uint64_t bit = 1ULL << (i & 63);
    count_ += (w & bit) == 0;
    w |= bit;
  }
  std::size_t count() const noexcept { return count_; }
  bool is_subset_of(const ElementSet& other) const;
  ElementSet intersect(const ElementSet& other) const;
  std::vector<std::uint32_t> members() const;

  friend bool operator==(const ElementSet& a, const ElementSet& b) {
    return a.count_ == b.count_ && a.words_ == b.words_;
  }
  std::size_t hash() const noexcept;

 private:
  std::vector<std::uint64_t> words_;
  std::size_t count_ = 0;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const noexcept { return s.hash(); }
};

/// A subgroup inside a GroupTable: its element set plus a short generating
/// list (element indices).
struct TableSubgroup {
  ElementSet elements;
  std::vector<std::uint32_t> generators;
  std::size_t order() const { return elements.count(); }
};

/**
 * Full multiplication table of a small permutation group.
 *
 * Elements are indexed in increasing lexicographic order of their image
 * lists, so index 0 is the identity. Used for lattice-style computations
 * (normal subgroups, subgroup classes) where |G| is within the configured
 * subgroup_enumeration bound.
 */
class GroupTable {
 public:
  explicit GroupTable(const PermutationGroup& group, const SearchBounds& bounds = default_bounds());

  const PermutationGroup& group() const noexcept { return group_; }
  std::size_t size() const noexcept { return elements_.size(); }
  const Permutation& element(std::size_t i) const { return elements_[i]; }
  /// Throws InvalidArgument if `p` is not in the group.
  std::uint32_t index_of(const Permutation& p) const;

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return table_[static_cast<std::size_t>(b) * size() + a];
  }
  std::uint32_t inverse(std::uint32_t a) const { return inverse_[a]; }
  std::uint32_t conjugate(std::uint32_t a, std::uint32_t by) const {
    return mul(mul(inverse_[by], a), by);
  }
  std::uint32_t commutator(std::uint32_t a, std::uint32_t b) const {
    return mul(mul(inverse_[a], inverse_[b]), mul(a, b));
  }
  std::uint32_t element_order(std::uint32_t a) const { return orders_[a]; }

  TableSubgroup trivial() const;
  TableSubgroup whole() const;
  /// Subgroup generated by the given element indices.
  TableSubgroup closure(std::span<const std::uint32_t> generators) const;
  TableSubgroup join(const TableSubgroup& a, const TableSubgroup& b) const;
  TableSubgroup from_permutations(std::span<const Permutation> generators) const;
  TableSubgroup intersection(const TableSubgroup& a, const TableSubgroup& b) const;
  ElementSet conjugate(const ElementSet& s, std::uint32_t by) const;
  TableSubgroup conjugate(const TableSubgroup& h, std::uint32_t by) const;
  bool normalizes(std::uint32_t x, const TableSubgroup& h) const;
  bool is_normal_in(const TableSubgroup& n, const TableSubgroup& in) const;
  TableSubgroup normal_closure(const TableSubgroup& h, const TableSubgroup& in) const;
  TableSubgroup derived_subgroup(const TableSubgroup& h) const;
  TableSubgroup perfect_core(const TableSubgroup& h) const;
  bool is_solvable(const TableSubgroup& h) const;
  /// Intersection of all conjugates of h by elements of `in`.
  TableSubgroup core(const TableSubgroup& h, const TableSubgroup& in) const;

  /// Conjugacy classes of the whole group, each sorted; ordered by smallest
  /// member.
  const std::vector<std::vector<std::uint32_t>>& conjugacy_classes() const;

  /// Minimal generating list for `s`, chosen greedily in index order.
  std::vector<std::uint32_t> greedy_generators(const ElementSet& s) const;
  PermutationGroup to_group(const TableSubgroup& h) const;
  std::vector<Permutation> to_permutations(std::span<const std::uint32_t> idx) const;

 private:
  PermutationGroup group_;
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, std::uint32_t> index_;
  std::vector<std::uint32_t> table_;
  std::vector<std::uint32_t> inverse_;
  std::vector<std::uint32_t> orders_;
  mutable std::vector<std::vector<std::uint32_t>> classes_;
};

}  // namespace arcsym
