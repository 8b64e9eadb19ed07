#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace arcsym {

using Point = std::uint32_t;

/**
 * A bijection of {0, ..., degree-1}.
 *
 * Permutations act on the right: `p * q` applies `p` first, then `q`, so
 * `(p * q)[i] == q[p[i]]`. Conjugation follows the same convention,
 * `p.conjugate(g) == g.inverse() * p * g`.
 */
class Permutation {
 public:
  Permutation() = default;

  /// Identity of the given degree.
  explicit Permutation(std::size_t degree);

  /// Takes ownership of an image list; throws InvalidArgument unless it is a
  /// bijection.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree) { return Permutation(degree); }

  /// Builds the permutation from disjoint cycles of 0-based points.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator[](Point x) const noexcept { return images_[x]; }
  std::span<const Point> images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  bool fixes(Point x) const noexcept { return images_[x] == x; }
  /// Smallest moved point, or degree() for the identity.
  Point first_moved() const noexcept;
  std::size_t fixed_point_count() const noexcept;

  Permutation inverse() const;
  Permutation pow(std::int64_t exponent) const;
  Permutation conjugate(const Permutation& g) const;

  /// Order as the lcm of cycle lengths; throws std::overflow_error past 2^64.
  std::uint64_t order() const;

  /// Nontrivial cycles, each starting at its smallest point, sorted by that
  /// point.
  std::vector<std::vector<Point>> cycles() const;

  /// Sorted multiset of cycle lengths including fixed points.
  std::vector<std::size_t> cycle_type() const;

  /// 1-based disjoint-cycle text, "()" for the identity.
  std::string to_cycle_string() const;

  friend Permutation operator*(const Permutation& lhs, const Permutation& rhs);
  Permutation& operator*=(const Permutation& rhs);

  friend bool operator==(const Permutation&, const Permutation&) = default;
  /// Degree first, then images lexicographically.
  friend std::strong_ordering operator<=>(const Permutation& lhs,
                                          const Permutation& rhs);

 private:
  std::vector<Point> images_;
};

/// Parses 1-based disjoint-cycle notation such as "(1 2 3)(4 5)" or "()".
/// Commas are accepted as separators inside a cycle. Throws InvalidArgument on
/// malformed text, repeated points, or points above `degree`.
Permutation parse_permutation(std::string_view text, std::size_t degree);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
  std::size_t operator()(std::span<const Point> images) const noexcept;
};

}  // namespace arcsym

template <>
struct std::hash<arcsym::Permutation> : arcsym::PermutationHash {};
