#include <gtest/gtest.h>

#include <random>

#include "arcsym/constructions.hpp"
#include "arcsym/error.hpp"
#include "arcsym/subgroups.hpp"
#include "arcsym/symmetry.hpp"
#include "oracles.hpp"

using namespace arcsym;

namespace {

const PermutationGroup& cat(const std::string& key) { return oracle::catalog().find(key).group; }

}  // namespace

TEST(Constructions, SpecValidation) {
  const auto& f21 = cat("F21");
  const PermutationGroup h(7, {parse_permutation("(2 3 5)(4 7 6)", 7)});
  ASSERT_TRUE(h.is_subgroup_of(f21));
  EXPECT_NO_THROW(validate_coset_spec({f21, h, parse_permutation("(1 2 3 4 5 6 7)", 7)}));
  EXPECT_THROW(validate_coset_spec({f21, h, parse_permutation("(2 3 5)(4 7 6)", 7)}), ValidationError);
  EXPECT_THROW(validate_coset_spec({f21, h, parse_permutation("(1 2)", 7)}), InvalidArgument);
  // g^-1 in HgH: an involution in S3 over the trivial subgroup
  const auto& s3 = cat("S3");
  EXPECT_THROW(validate_coset_spec({s3, PermutationGroup::trivial(3), parse_permutation("(1 2)", 3)}),
               ValidationError);
  EXPECT_FALSE(is_valid_coset_spec({s3, PermutationGroup::trivial(3), parse_permutation("(1 2)", 3)}));
}

// Arcs follow the definition Hx -> Hy iff y x^-1 ∈ HgH, checked on element
// lists for every valid spec in groups of order <= 60.
TEST(Constructions, CosetDigraphMatchesDefinition) {
  std::size_t checked = 0;
  for (const auto* e : oracle::catalog().all()) {
    const auto& g = e->group;
    if (g.order() > 60) continue;
    const auto elems = oracle::closure(g.degree(), g.generators());
    for (const auto& hh : subgroups_up_to_conjugacy(g)) {
      const auto& h = hh.group();
      const auto he = oracle::closure(g.degree(), h.generators());
      for (std::size_t k = 0; k < elems.size(); k += 5) {
        const CosetDigraphSpec spec{g, h, elems[k]};
        if (!is_valid_coset_spec(spec)) continue;
        const CosetDigraph cd = build_coset_digraph(spec);
        std::set<Permutation> dc;
        for (const auto& a : he) {
          for (const auto& b : he) dc.insert(oracle::compose(oracle::compose(a, elems[k]), b));
        }
        const auto& reps = cd.cosets.representatives;
        for (Vertex u = 0; u < reps.size(); ++u) {
          for (Vertex v = 0; v < reps.size(); ++v) {
            const bool arc = dc.contains(oracle::compose(reps[v], oracle::invert(reps[u])));
            ASSERT_EQ(cd.digraph.has_arc(u, v), arc) << e->id;
          }
        }
        EXPECT_EQ(cd.valency * he.size(), dc.size());
        EXPECT_NO_THROW(bind_action(cd.with_action()));
        EXPECT_TRUE(is_s_arc(cd.digraph, cd.canonical_two_arc));
        EXPECT_EQ(cd.canonical_two_arc[1], 0u);
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 100u);
}

TEST(Constructions, CyclicCosetDigraphIsCycle) {
  const auto& z5 = cat("C5");
  const CosetDigraph cd = build_coset_digraph({z5, PermutationGroup::trivial(5), z5.generators()[0]});
  EXPECT_TRUE(is_directed_cycle(cd.digraph));
  EXPECT_EQ(cd.digraph.vertex_count(), 5u);
}

TEST(Constructions, CayleyDigraphMatchesDefinition) {
  const auto& a4 = cat("A4");
  const std::vector<Permutation> s{parse_permutation("(1 2 3)", 4), parse_permutation("(1 2)(3 4)", 4)};
  EXPECT_THROW(build_cayley_digraph(a4, s), ValidationError);  // involution is self-inverse
  const std::vector<Permutation> s2{parse_permutation("(1 2 3)", 4), parse_permutation("(2 3 4)", 4)};
  const CayleyDigraph c = build_cayley_digraph(a4, s2);
  EXPECT_EQ(c.digraph.vertex_count(), 12u);
  for (Vertex x = 0; x < 12; ++x) {
    for (Vertex y = 0; y < 12; ++y) {
      const Permutation q = oracle::compose(c.elements[y], oracle::invert(c.elements[x]));
      EXPECT_EQ(c.digraph.has_arc(x, y), q == s2[0] || q == s2[1]);
    }
  }
  EXPECT_NO_THROW(bind_action(c.digraph, c.group));
  EXPECT_TRUE(c.group.is_regular());
}

TEST(Constructions, GammaCertificateA5) {
  const auto& a5 = cat("A5");
  const GammaCertificate c = gamma_certificate(a5);
  EXPECT_EQ(c.t_order, 60u);
  EXPECT_EQ(c.vertex_count, boost::multiprecision::pow(BigInt(60), 59));
  EXPECT_EQ(c.r_order * c.d_order, boost::multiprecision::pow(BigInt(60), 60));
  EXPECT_EQ(c.rd_intersection_order, 1u);
  EXPECT_TRUE(c.intersection_rd_trivial);
  EXPECT_TRUE(c.product_rd_is_g);
  EXPECT_EQ(c.diag_self_intersection_order, 1u);
  EXPECT_EQ(c.valency, 60u);

  // D ∩ D^g = {(t,...,t) : t^(t_i) equal for all i}: t central, so |Z(T)|.
  const auto elems = oracle::closure(5, a5.generators());
  std::size_t central = 0;
  for (const auto& t : elems) {
    bool ok = true;
    for (const auto& x : elems) ok = ok && oracle::compose(t, x) == oracle::compose(x, t);
    central += ok;
  }
  EXPECT_EQ(c.diag_self_intersection_order, central);

  std::mt19937 rng(42);
  auto shuffled = elems;
  for (int t = 0; t < 10; ++t) {
    for (std::size_t i = shuffled.size(); i > 1; --i) std::swap(shuffled[i - 1], shuffled[rng() % i]);
    const GammaCertificate d = gamma_certificate(a5, shuffled);
    EXPECT_EQ(d.vertex_count, c.vertex_count);
    EXPECT_EQ(d.diag_self_intersection_order, 1u);
    EXPECT_EQ(d.rd_intersection_order, 1u);
  }
  EXPECT_THROW(gamma_certificate(cat("C5")), InvalidArgument);
  EXPECT_THROW(gamma_certificate(cat("S5")), InvalidArgument);
  std::vector<Permutation> missing(elems.begin() + 1, elems.end());
  EXPECT_THROW(gamma_certificate(a5, missing), InvalidArgument);
}

TEST(Constructions, DiagonalDigraphK3) {
  const auto& a5 = cat("A5");
  const std::vector<Permutation> g{Permutation(5), parse_permutation("(2 4 5)", 5),
                                   parse_permutation("(3 4 5)", 5)};
  const CosetDigraph d = build_diagonal_coset_digraph(a5, g);
  EXPECT_EQ(d.digraph.vertex_count(), 3600u);
  EXPECT_EQ(d.valency, 60u);
  EXPECT_EQ(valency_profile(d.digraph).valency, 60u);
  EXPECT_THROW(build_diagonal_coset_digraph(a5, {Permutation(5)}), InvalidArgument);
}

TEST(Constructions, OrbitalDigraphs) {
  const auto& f21 = cat("F21");
  const auto orbitals = orbital_digraphs(f21);
  ASSERT_EQ(orbitals.size(), 2u);
  for (const auto& o : orbitals) {
    EXPECT_EQ(valency_profile(o.digraph).valency, 3u);
    EXPECT_NO_THROW(bind_action(o.digraph, f21));
    // arcs = orbit of (0, representative) under the group
    std::set<Arc> orbit;
    for (const auto& x : oracle::closure(7, f21.generators())) orbit.emplace(x[0], x[o.representative]);
    const auto arcs = o.digraph.arcs();
    EXPECT_EQ(std::set<Arc>(arcs.begin(), arcs.end()), orbit);
  }
  EXPECT_TRUE(orbital_digraphs(cat("S5")).empty());
}

TEST(Constructions, ProductActionDigraph) {
  std::vector<Arc> a;
  for (Vertex i = 0; i < 5; ++i) a.emplace_back(i, (i + 1) % 5);
  const Digraph c5(5, a);
  const auto pa = product_action_digraph(c5, cat("C5"), 2);
  EXPECT_EQ(pa.digraph.vertex_count(), 25u);
  EXPECT_EQ(pa.group.order(), 50);
  EXPECT_EQ(pa.digraph, power(c5, 2));
  EXPECT_THROW(product_action_digraph(c5, cat("S5"), 2), ValidationError);
}
