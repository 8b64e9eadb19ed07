#pragma once

#include <vector>

#include "arcsym/group.hpp"

namespace arcsym {

/// A G-invariant partition of the points into equal-size cells.
struct BlockSystem {
  std::vector<std::vector<Point>> blocks;  // each sorted; ordered by smallest point
  std::vector<std::size_t> block_of;       // point -> index into blocks
  bool trivial = false;                    // singletons or a single block

  std::size_t block_size() const { return blocks.empty() ? 0 : blocks.front().size(); }
};

/// Finest block system in which `a` and `b` share a block. Requires a
/// transitive group.
BlockSystem minimal_block_system(const PermutationGroup& group, Point a, Point b);

/// True iff the transitive group preserves no nontrivial partition. Throws
/// InvalidArgument for intransitive input.
bool is_primitive(const PermutationGroup& group);

}  // namespace arcsym
