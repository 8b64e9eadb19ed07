#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "arcsym/blocks.hpp"
#include "arcsym/error.hpp"
#include "arcsym/group.hpp"
#include "oracles.hpp"

using namespace arcsym;

namespace {

std::vector<const CatalogEntry*> groups_up_to(std::uint64_t max_order) {
  std::vector<const CatalogEntry*> out;
  for (const auto* e : oracle::catalog().all()) {
    if (e->group.order() <= max_order) out.push_back(e);
  }
  return out;
}

// All set partitions of {0..n-1} into blocks of equal size s, 1 < s < n, that
// every generator maps to itself. Exhaustive over partitions (restricted
// growth strings).
bool has_invariant_partition(const PermutationGroup& g) {
  const std::size_t n = g.degree();
  std::vector<std::size_t> block(n, 0);
  bool found = false;
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t used) {
    if (found) return;
    if (i == n) {
      if (used == 1 || used == n || n % used != 0) return;
      std::vector<std::size_t> sizes(used, 0);
      for (auto b : block) ++sizes[b];
      for (auto s : sizes) {
        if (s != n / used) return;
      }
      for (const auto& x : g.generators()) {
        // x maps blocks to blocks: block(i)=block(j) implies block(x i)=block(x j)
        std::vector<std::size_t> image(used, n);
        for (Point p = 0; p < n; ++p) {
          auto& im = image[block[p]];
          if (im == n) im = block[x[p]];
          else if (im != block[x[p]]) return;
        }
      }
      found = true;
      return;
    }
    for (std::size_t b = 0; b <= used && b < n; ++b) {
      block[i] = b;
      rec(i + 1, std::max(used, b + 1));
    }
  };
  rec(0, 0);
  return found;
}

}  // namespace

TEST(Group, OrderMatchesElementCountUpTo5000) {
  std::size_t checked = 0;
  for (const auto* e : groups_up_to(5000)) {
    const auto elems = oracle::closure(e->group.degree(), e->group.generators());
    EXPECT_EQ(e->group.order(), BigInt(elems.size())) << e->id;
    ++checked;
  }
  EXPECT_GT(checked, 50u);
}

TEST(Group, ElementsAndMembershipMatchClosure) {
  std::mt19937 rng(5);
  for (const auto* e : groups_up_to(2000)) {
    const auto& g = e->group;
    auto listed = g.elements();
    std::sort(listed.begin(), listed.end());
    const auto brute = oracle::closure(g.degree(), g.generators());
    EXPECT_EQ(listed, brute) << e->id;
    // random permutations: membership agrees with the brute set
    for (int t = 0; t < 20; ++t) {
      std::vector<Point> img(g.degree());
      for (Point i = 0; i < g.degree(); ++i) img[i] = i;
      for (std::size_t i = img.size(); i > 1; --i) std::swap(img[i - 1], img[rng() % i]);
      const Permutation p(std::move(img));
      EXPECT_EQ(g.contains(p), std::binary_search(brute.begin(), brute.end(), p)) << e->id;
    }
  }
}

TEST(Group, OrbitsAndStabilizers) {
  for (const auto* e : oracle::catalog().all()) {
    const auto& g = e->group;
    EXPECT_EQ(g.orbits(), oracle::orbits(g.degree(), g.generators())) << e->id;
    const auto orb = g.orbit(0);
    EXPECT_EQ(g.stabilizer(0).order() * orb.size(), g.order()) << e->id;
  }
  EXPECT_EQ(oracle::catalog().sp6_2.group.stabilizer(0).order(), 23040);
}

TEST(Group, PrimitivityAgreesWithPartitionSearch) {
  std::size_t checked = 0;
  for (const auto* e : oracle::catalog().all()) {
    const auto& g = e->group;
    if (!g.is_transitive() || g.degree() > 9) continue;
    EXPECT_EQ(is_primitive(g), !has_invariant_partition(g)) << e->id;
    ++checked;
  }
  EXPECT_GT(checked, 30u);
  const PermutationGroup c6(6, {parse_permutation("(1 2 3 4 5 6)", 6)});
  EXPECT_FALSE(is_primitive(c6));
  EXPECT_EQ(minimal_block_system(c6, 0, 3).block_size(), 2u);
  EXPECT_EQ(minimal_block_system(c6, 0, 2).block_size(), 3u);
  EXPECT_THROW(is_primitive(PermutationGroup(4, {parse_permutation("(1 2)", 4)})), InvalidArgument);
}

TEST(Group, CatalogPrimitiveEntriesArePrimitive) {
  for (const auto& e : oracle::catalog().primitive) {
    EXPECT_TRUE(e.group.is_transitive()) << e.id;
    EXPECT_TRUE(is_primitive(e.group)) << e.id;
  }
}

TEST(Group, ChainWithBasePrefix) {
  const auto& s5 = oracle::catalog().find("S5").group;
  const std::vector<Point> prefix{4, 2};
  const StabilizerChain c = s5.chain_with_base(prefix);
  ASSERT_GE(c.length(), 2u);
  EXPECT_EQ(c.base()[0], 4u);
  EXPECT_EQ(c.base()[1], 2u);
  EXPECT_EQ(c.order(), 120);
}

TEST(Group, Sp62Order) {
  EXPECT_EQ(oracle::catalog().sp6_2.group.order(), 1451520);
  EXPECT_TRUE(oracle::catalog().sp6_2.group.is_transitive());
}

TEST(Group, SubgroupHandleChecksContainment) {
  const auto& a5 = oracle::catalog().find("A5").group;
  EXPECT_THROW(SubgroupHandle(a5, std::vector<Permutation>{parse_permutation("(1 2)", 5)}),
               InvalidArgument);
  EXPECT_NO_THROW(SubgroupHandle(a5, std::vector<Permutation>{parse_permutation("(1 2 3)", 5)}));
}
