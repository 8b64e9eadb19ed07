#pragma once

#include <cstdint>

namespace arcsym {

// Every limit is checked before work starts (or as the search proceeds);
// crossing one throws BoundExceeded / SearchExhausted naming the field.
struct SearchBounds {
  std::uint64_t subgroup_enumeration = 2000;   // |G| for lattice computations
  std::uint64_t coset_index = 100000;          // [G:H] for coset actions
  std::uint64_t transporter_nodes = 10000000;  // conjugacy backtrack nodes
  std::uint64_t element_enumeration = 2000000; // elements listed by scans
  std::uint64_t regular_search_nodes = 10000000;
  std::uint64_t regular_search_order = 100000000;  // |G| for regular-subgroup search
  std::uint64_t digraph_vertices = 200000;
  std::uint64_t digraph_arcs = 5000000;
  std::uint64_t s_arc_enumeration = 5000000;
  std::uint64_t wreath_degree = 200000;        // |V|^m for product actions
};

inline const SearchBounds& default_bounds() {
  static const SearchBounds bounds{};
  return bounds;
}

}  // namespace arcsym
