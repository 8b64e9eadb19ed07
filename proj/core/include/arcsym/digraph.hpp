#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "arcsym/bigint.hpp"
#include "arcsym/bounds.hpp"
#include "arcsym/permutation.hpp"

namespace arcsym {

using Vertex = std::uint32_t;
using Arc = std::pair<Vertex, Vertex>;
/// (v_0, ..., v_s) with v_{i-1} -> v_i.
using SArc = std::vector<Vertex>;

/**
 * A finite digraph in the strict sense: the arc relation is irreflexive and
 * antisymmetric. Stored in compressed rows with each out-neighbour list
 * sorted, so two digraphs with the same arc set are identical objects.
 */
class Digraph {
 public:
  Digraph() = default;
  /// Validates and deduplicates `arcs`. Throws ValidationError on a loop or
  /// a symmetric pair, InvalidArgument on an out-of-range vertex, and
  /// BoundExceeded past bounds.digraph_vertices / digraph_arcs.
  Digraph(std::size_t vertex_count, std::span<const Arc> arcs,
          const SearchBounds& bounds = default_bounds());

  std::size_t vertex_count() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t arc_count() const noexcept { return targets_.size(); }
  std::span<const Vertex> out_neighbors(Vertex v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::size_t out_degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  std::size_t in_degree(Vertex v) const { return in_degree_[v]; }
  bool has_arc(Vertex u, Vertex v) const;
  /// All arcs in lexicographic order.
  std::vector<Arc> arcs() const;

  friend bool operator==(const Digraph&, const Digraph&) = default;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> targets_;
  std::vector<std::size_t> in_degree_;
};

Digraph build_digraph(std::size_t n, std::span<const Arc> arcs,
                      const SearchBounds& bounds = default_bounds());

/// k when every in- and out-degree equals k; otherwise the first offending
/// vertex (in- or out-degree differing from vertex 0's out-degree).
struct ValencyProfile {
  std::optional<std::size_t> valency;
  Vertex offending = 0;
  std::size_t out_degree = 0;
  std::size_t in_degree = 0;
};
ValencyProfile valency_profile(const Digraph& d);

/// Exact number of s-arcs, by dynamic programming over path-extension counts.
BigInt count_s_arcs(const Digraph& d, std::size_t s);
/// All s-arcs in lexicographic order; s = 0 lists the vertices. Throws
/// BoundExceeded when the count exceeds bounds.s_arc_enumeration.
std::vector<SArc> enumerate_s_arcs(const Digraph& d, std::size_t s,
                                   const SearchBounds& bounds = default_bounds());
bool is_s_arc(const Digraph& d, std::span<const Vertex> walk);

bool is_strongly_connected(const Digraph& d);
/// Strongly connected and 1-regular.
bool is_directed_cycle(const Digraph& d);

/// (u,v) is vertex u*|V(Σ)| + v; (u1,v1) -> (u2,v2) iff u1 -> u2 and v1 -> v2.
Digraph direct_product(const Digraph& gamma, const Digraph& sigma,
                       const SearchBounds& bounds = default_bounds());
/// Σ^m = Σ × ... × Σ (left-nested, so coordinates are row-major).
Digraph power(const Digraph& sigma, std::size_t m, const SearchBounds& bounds = default_bounds());

/// An arc u->v whose image under `p` is not an arc, or nullopt when `p`
/// maps the arc set onto itself. Throws InvalidArgument on degree mismatch.
std::optional<Arc> first_unmapped_arc(const Digraph& d, const Permutation& p);
bool is_automorphism(const Digraph& d, const Permutation& p);

/// "n m" followed by one "u v" line per arc, 0-based, lexicographic order.
void write_edge_list(std::ostream& out, const Digraph& d);
Digraph read_edge_list(std::istream& in, const SearchBounds& bounds = default_bounds());
/// Graphviz DOT with every vertex declared, then every arc.
void write_dot(std::ostream& out, const Digraph& d, const std::string& name = "G");

}  // namespace arcsym
