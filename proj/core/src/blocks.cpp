#include "arcsym/blocks.hpp"

#include <numeric>

#include "arcsym/error.hpp"

namespace arcsym {

namespace {

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  std::vector<std::size_t> parent;
};

void require_transitive(const PermutationGroup& group) {
  if (!group.is_transitive()) {
    throw InvalidArgument("block systems require a transitive group");
  }
}

}  // namespace

// Atkinson's merge procedure: whenever two classes fuse, their images under
// every generator must fuse as well.
BlockSystem minimal_block_system(const PermutationGroup& group, Point a, Point b) {
  const std::size_t n = group.degree();
  if (a >= n || b >= n) throw InvalidArgument("seed point out of range");
  require_transitive(group);

  UnionFind uf(n);
  std::vector<std::pair<Point, Point>> queue;
  if (a != b) {
    uf.parent[std::max(a, b)] = std::min(a, b);
    queue.emplace_back(a, b);
  }
  for (std::size_t q = 0; q < queue.size(); ++q) {
    auto [x, y] = queue[q];
    for (const auto& g : group.generators()) {
      std::size_t rx = uf.find(g[x]);
      std::size_t ry = uf.find(g[y]);
      if (rx == ry) continue;
      if (rx > ry) std::swap(rx, ry);
      uf.parent[ry] = rx;
      queue.emplace_back(static_cast<Point>(rx), static_cast<Point>(ry));
    }
  }

  BlockSystem sys;
  sys.block_of.assign(n, 0);
  std::vector<std::size_t> slot(n, n);
  for (Point v = 0; v < n; ++v) {
    std::size_t r = uf.find(v);
    if (slot[r] == n) {
      slot[r] = sys.blocks.size();
      sys.blocks.emplace_back();
    }
    sys.block_of[v] = slot[r];
    sys.blocks[slot[r]].push_back(v);
  }
  sys.trivial = sys.blocks.size() == 1 || sys.blocks.size() == n;
  return sys;
}

bool is_primitive(const PermutationGroup& group) {
  require_transitive(group);
  const std::size_t n = group.degree();
  if (n <= 2) return true;
  // It suffices to test one point from each orbit of the stabilizer of 0.
  auto stab = group.stabilizer(0);
  for (const auto& orb : stab.orbits()) {
    if (orb.front() == 0) continue;
    if (minimal_block_system(group, 0, orb.front()).blocks.size() != 1) return false;
  }
  return true;
}

}  // namespace arcsym
