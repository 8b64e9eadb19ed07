#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "arcsym/digraph.hpp"
#include "arcsym/error.hpp"
#include "oracles.hpp"

using namespace arcsym;

namespace {

Digraph cycle(std::size_t n) {
  std::vector<Arc> a;
  for (Vertex i = 0; i < n; ++i) a.emplace_back(i, static_cast<Vertex>((i + 1) % n));
  return Digraph(n, a);
}

Digraph random_digraph(std::mt19937& rng, std::size_t n) {
  std::vector<Arc> a;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      switch (rng() % 3) {
        case 1: a.emplace_back(u, v); break;
        case 2: a.emplace_back(v, u); break;
        default: break;
      }
    }
  }
  return Digraph(n, a);
}

}  // namespace

TEST(Digraph, Validation) {
  const std::vector<Arc> loop{{0, 0}};
  EXPECT_THROW(Digraph(2, loop), ValidationError);
  const std::vector<Arc> sym{{0, 1}, {1, 0}};
  EXPECT_THROW(Digraph(2, sym), ValidationError);
  const std::vector<Arc> out{{0, 5}};
  EXPECT_THROW(Digraph(2, out), InvalidArgument);
  SearchBounds tiny;
  tiny.digraph_vertices = 3;
  EXPECT_THROW(Digraph(4, {}, tiny), BoundExceeded);
  const std::vector<Arc> dup{{0, 1}, {0, 1}};
  EXPECT_EQ(Digraph(2, dup).arc_count(), 1u);
}

TEST(Digraph, SArcCountsMatchEnumeration) {
  std::mt19937 rng(3);
  for (int t = 0; t < 60; ++t) {
    const Digraph d = random_digraph(rng, 2 + rng() % 7);
    for (std::size_t s = 0; s <= 4; ++s) {
      const auto brute = oracle::s_arcs(d, s);
      EXPECT_EQ(count_s_arcs(d, s), BigInt(brute.size()));
      const auto listed = enumerate_s_arcs(d, s);
      EXPECT_EQ(listed, brute);
      for (const auto& a : listed) EXPECT_TRUE(is_s_arc(d, a));
    }
    EXPECT_EQ(is_strongly_connected(d), oracle::strongly_connected(d));
  }
}

TEST(Digraph, ValencyAndCycles) {
  const Digraph c7 = cycle(7);
  EXPECT_TRUE(is_directed_cycle(c7));
  EXPECT_EQ(valency_profile(c7).valency, 1u);
  const std::vector<Arc> path{{0, 1}, {1, 2}};
  const Digraph p(3, path);
  EXPECT_FALSE(is_directed_cycle(p));
  EXPECT_FALSE(valency_profile(p).valency.has_value());
  const std::vector<Arc> two{{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}};
  EXPECT_FALSE(is_directed_cycle(Digraph(6, two)));
}

TEST(Digraph, DirectProductAndPower) {
  const Digraph p = direct_product(cycle(3), cycle(5));
  EXPECT_EQ(p.vertex_count(), 15u);
  EXPECT_TRUE(is_directed_cycle(p));
  EXPECT_FALSE(is_directed_cycle(direct_product(cycle(3), cycle(6))));
  EXPECT_EQ(power(cycle(5), 1), cycle(5));
  EXPECT_EQ(power(cycle(3), 2).arc_count(), 9u);

  std::mt19937 rng(9);
  for (int t = 0; t < 30; ++t) {
    const Digraph a = random_digraph(rng, 2 + rng() % 5);
    const Digraph b = random_digraph(rng, 2 + rng() % 5);
    const Digraph ab = direct_product(a, b);
    // definition: (u,v) -> (u',v') iff u -> u' and v -> v'
    for (Vertex x = 0; x < ab.vertex_count(); ++x) {
      for (Vertex y = 0; y < ab.vertex_count(); ++y) {
        const Vertex u = x / static_cast<Vertex>(b.vertex_count());
        const Vertex v = x % static_cast<Vertex>(b.vertex_count());
        const Vertex u2 = y / static_cast<Vertex>(b.vertex_count());
        const Vertex v2 = y % static_cast<Vertex>(b.vertex_count());
        EXPECT_EQ(ab.has_arc(x, y), a.has_arc(u, u2) && b.has_arc(v, v2));
      }
    }
    for (std::size_t s = 0; s <= 4; ++s) {
      EXPECT_EQ(count_s_arcs(ab, s), count_s_arcs(a, s) * count_s_arcs(b, s));
    }
  }
}

TEST(Digraph, EdgeListRoundTripAndDot) {
  std::mt19937 rng(1);
  const Digraph d = random_digraph(rng, 6);
  std::stringstream ss;
  write_edge_list(ss, d);
  EXPECT_EQ(read_edge_list(ss), d);
  std::stringstream bad("3 1\n0 0\n");
  EXPECT_THROW(read_edge_list(bad), ValidationError);
  std::stringstream dot;
  write_dot(dot, cycle(3), "C3");
  EXPECT_NE(dot.str().find("digraph C3"), std::string::npos);
  EXPECT_NE(dot.str().find("2 -> 0"), std::string::npos);
}

TEST(Digraph, Automorphisms) {
  const Digraph c5 = cycle(5);
  EXPECT_TRUE(is_automorphism(c5, parse_permutation("(1 2 3 4 5)", 5)));
  EXPECT_FALSE(is_automorphism(c5, parse_permutation("(1 2)", 5)));
  EXPECT_TRUE(first_unmapped_arc(c5, parse_permutation("(1 2)", 5)).has_value());
}
