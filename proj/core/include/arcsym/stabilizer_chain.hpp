#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "arcsym/bigint.hpp"
#include "arcsym/permutation.hpp"

namespace arcsym {

/**
 * Base and strong generating set with Schreier-vector transversals.
 *
 * Level i stores base point b_i, the strong generators fixing b_0..b_{i-1},
 * and the orbit of b_i under them as a Schreier tree. Built with the
 * deterministic Schreier-Sims algorithm: Schreier generators are visited in
 * (level, orbit position, generator) order, and every new base point is the
 * smallest point moved by the element that forced it. The same generator list
 * and base prefix always yield the same chain.
 */
class StabilizerChain {
 public:
  struct Level {
    Point base = 0;
    std::vector<Permutation> generators;
    std::vector<Permutation> inverses;
    std::vector<Point> orbit;          // discovery order, orbit[0] == base
    std::vector<std::int32_t> edge;    // kAbsent, kRoot, or generator index
  };

  static constexpr std::int32_t kAbsent = -1;
  static constexpr std::int32_t kRoot = -2;

  explicit StabilizerChain(std::size_t degree = 0) : degree_(degree) {}

  /// Runs Schreier-Sims. The base starts with `base_prefix` (levels whose
  /// orbit is a single point are kept so the prefix is honoured).
  static StabilizerChain build(std::size_t degree, std::span<const Permutation> generators,
                               std::span<const Point> base_prefix = {});

  std::size_t degree() const noexcept { return degree_; }
  std::size_t length() const noexcept { return levels_.size(); }
  const std::vector<Level>& levels() const noexcept { return levels_; }
  const Level& level(std::size_t i) const { return levels_[i]; }
  std::vector<Point> base() const;

  /// Product of basic orbit lengths.
  BigInt order() const;

  struct SiftResult {
    Permutation residue;
    std::size_t level;  // first level where sifting stopped (length() if none)
  };
  SiftResult sift(Permutation g, std::size_t from_level = 0) const;
  bool contains(const Permutation& g) const;

  bool in_orbit(std::size_t level, Point p) const {
    return levels_[level].edge[p] != kAbsent;
  }
  /// The transversal element u with base^u == p.
  Permutation transversal(std::size_t level, Point p) const;
  /// Multiplies `g` on the right by the inverse of transversal(level, p).
  void strip(Permutation& g, std::size_t level, Point p) const;

  /// Generators of the stabilizer of b_0..b_{i-1} (i == length() gives the
  /// trivial group, represented by an empty list).
  std::vector<Permutation> stabilizer_generators(std::size_t i) const;

  /// Calls `visit` on every group element, in transversal order: the choice
  /// at level 0 varies slowest.
  void for_each_element(const std::function<void(const Permutation&)>& visit) const;

 private:
  void add_level(Point base);
  void add_generator(std::size_t level, const Permutation& g);

  std::size_t degree_;
  std::vector<Level> levels_;
};

}  // namespace arcsym
