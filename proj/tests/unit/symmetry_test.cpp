#include <gtest/gtest.h>

#include "arcsym/actions.hpp"
#include "arcsym/error.hpp"
#include "arcsym/subgroups.hpp"
#include "arcsym/symmetry.hpp"
#include "oracles.hpp"

using namespace arcsym;

namespace {

const PermutationGroup& cat(const std::string& key) { return oracle::catalog().find(key).group; }

Digraph cycle(std::size_t n) {
  std::vector<Arc> a;
  for (Vertex i = 0; i < n; ++i) a.emplace_back(i, static_cast<Vertex>((i + 1) % n));
  return Digraph(n, a);
}

}  // namespace

TEST(Symmetry, BindActionRejectsNonAutomorphisms) {
  EXPECT_NO_THROW(bind_action(cycle(5), cat("C5")));
  EXPECT_THROW(bind_action(cycle(5), cat("S5")), ValidationError);
  EXPECT_THROW(bind_action(cycle(4), cat("C5")), InvalidArgument);
}

// Orbit-stabilizer verdicts and the union-find count vs orbits computed by
// applying every group element, on coset digraphs of small groups.
TEST(Symmetry, SArcTransitivityMatchesBruteOrbits) {
  std::size_t checked = 0;
  for (const auto* e : oracle::catalog().all()) {
    const auto& g = e->group;
    if (g.order() > 60) continue;
    const auto elems = oracle::closure(g.degree(), g.generators());
    for (const auto& hh : subgroups_up_to_conjugacy(g)) {
      for (std::size_t k = 0; k < elems.size(); k += 3) {
        const CosetDigraphSpec spec{g, hh.group(), elems[k]};
        if (!is_valid_coset_spec(spec)) continue;
        const CosetDigraph cd = build_coset_digraph(spec);
        const DigraphAction a = bind_action(cd.with_action());
        const auto act = oracle::closure(a.group.degree(), a.group.generators());
        for (std::size_t s = 0; s <= 3; ++s) {
          const std::size_t orbits = oracle::s_arc_orbit_count(a.digraph, act, s);
          EXPECT_EQ(count_s_arc_orbits(a, s), orbits) << e->id;
          EXPECT_EQ(is_s_arc_transitive(a, s) == Transitivity::kTrue, orbits == 1) << e->id;
        }
        EXPECT_EQ(coset_two_arc_criterion(spec), oracle::s_arc_orbit_count(a.digraph, act, 2) == 1)
            << e->id;
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 100u);
}

TEST(Symmetry, VacuousTransitivity) {
  const std::vector<Arc> path{{0, 1}};
  const Digraph d(3, path);
  const DigraphAction a = bind_action(d, PermutationGroup::trivial(3));
  EXPECT_EQ(is_s_arc_transitive(a, 2), Transitivity::kVacuous);
  EXPECT_EQ(is_s_arc_transitive(a, 1), Transitivity::kTrue);
  EXPECT_STREQ(to_string(Transitivity::kVacuous), "vacuous");
  EXPECT_STREQ(to_string(Status::kNotApplicable), "not-applicable");
}

TEST(Symmetry, CycleIsSArcTransitiveForAllS) {
  const DigraphAction a = bind_action(cycle(5), cat("C5"));
  for (std::size_t s = 0; s <= 6; ++s) EXPECT_EQ(is_s_arc_transitive(a, s), Transitivity::kTrue);
  EXPECT_TRUE(is_vertex_transitive(a));
}

TEST(Symmetry, F21Example) {
  const auto& f21 = cat("F21");
  const PermutationGroup h(7, {parse_permutation("(2 3 5)(4 7 6)", 7)});
  const CosetDigraphSpec spec{f21, h, parse_permutation("(1 2 3 4 5 6 7)", 7)};
  const CosetDigraph cd = build_coset_digraph(spec);
  const DigraphAction a = bind_action(cd.with_action());
  EXPECT_EQ(cd.valency, 3u);
  EXPECT_EQ(is_s_arc_transitive(a, 1), Transitivity::kTrue);
  EXPECT_EQ(is_s_arc_transitive(a, 2), Transitivity::kFalse);
  EXPECT_EQ(count_s_arc_orbits(a, 2), 3u);
  EXPECT_FALSE(coset_two_arc_criterion(spec));
  const auto data = two_arc_stabilizer_data(a, cd.canonical_two_arc);
  EXPECT_EQ(data.gv.order(), 3);
  EXPECT_EQ(data.guv.order(), 1);
  const auto rep = verify_lemma_prime_factn(a, data);
  EXPECT_FALSE(rep.applicable);
  const auto lv = lemma_val_check(a);
  EXPECT_EQ(lv.status, Status::kPass);
  EXPECT_EQ(lv.branch, "valency>=3");
}

TEST(Symmetry, LemmaPrimeFactnOnCycle) {
  const DigraphAction a = bind_action(cycle(5), cat("C5"));
  const auto rep = verify_lemma_prime_factn(a, two_arc_stabilizer_data(a, SArc{0, 1, 2}));
  EXPECT_TRUE(rep.applicable);
  EXPECT_EQ(rep.a.status, Status::kPass);
  EXPECT_EQ(rep.b.status, Status::kPass);
  EXPECT_EQ(rep.c.status, Status::kNotApplicable);
  EXPECT_THROW(two_arc_stabilizer_data(a, SArc{0, 2, 3}), InvalidArgument);
  const auto lv = lemma_val_check(a);
  EXPECT_EQ(lv.branch, "prime-cycle");
}

TEST(Symmetry, RegularSubgroupExamples) {
  const auto v4 = find_regular_subgroup(cat("A4"));
  ASSERT_TRUE(v4.has_value());
  EXPECT_EQ(v4->order(), 4);
  EXPECT_TRUE(v4->group().is_regular());
  for (const auto& x : v4->generators()) EXPECT_EQ(x.order(), 2u);

  const auto r9 = find_regular_subgroup(wreath_product_action(cat("S3"), 2));
  ASSERT_TRUE(r9.has_value());
  EXPECT_EQ(r9->order(), 9);
  EXPECT_TRUE(r9->group().is_regular());

  const auto r25 = find_regular_subgroup(wreath_product_action(cat("C5"), 2));
  ASSERT_TRUE(r25.has_value());
  EXPECT_EQ(r25->order(), 25);
  for (const auto& x : r25->generators()) {
    for (const auto& y : r25->generators()) EXPECT_EQ(x * y, y * x);
  }
  EXPECT_FALSE(find_regular_subgroup(PermutationGroup(4, {parse_permutation("(1 2)", 4)})).has_value());
  SearchBounds b;
  b.regular_search_order = 10;
  EXPECT_THROW(find_regular_subgroup(cat("A4"), b), BoundExceeded);
}

// Regular-subgroup answers vs exhaustive semiregular-subgroup search.
TEST(Symmetry, RegularSubgroupMatchesExhaustiveSearch) {
  std::size_t checked = 0;
  for (const auto* e : oracle::catalog().all()) {
    const auto& g = e->group;
    if (g.order() > 2000) continue;
    const auto found = find_regular_subgroup(g);
    const auto brute = oracle::regular_subgroup(oracle::closure(g.degree(), g.generators()));
    EXPECT_EQ(found.has_value(), brute.has_value()) << e->id;
    if (found) {
      EXPECT_EQ(found->order(), BigInt(g.degree())) << e->id;
      EXPECT_TRUE(found->group().is_regular()) << e->id;
      EXPECT_TRUE(found->group().is_subgroup_of(g)) << e->id;
    }
    ++checked;
  }
  EXPECT_GT(checked, 60u);
}

// |(Y/Rad Y)^(∞)| vs the perfect core of an explicit quotient: Y acting on
// the cosets of Rad(Y) is a faithful copy of Y/Rad(Y).
TEST(Symmetry, RglrTopOrderMatchesQuotient) {
  std::size_t checked = 0;
  for (const char* key : {"S5", "A5", "S4", "PSL(2,7)", "S3xA5", "AGL(1,8)"}) {
    const PermutationGroup* g = nullptr;
    try {
      g = &cat(key);
    } catch (const InvalidArgument&) {
      continue;
    }
    const auto rep = lemma_rglr_hypothesis_check(*g);
    for (const auto& y : rep.subgroups) {
      if (y.y.order() > 500) continue;
      const PermutationGroup& yg = y.y.group();
      const auto rad = solvable_radical(yg);
      EXPECT_EQ(rad.order(), BigInt(y.rad_order)) << key;
      const auto q = action_on_cosets(yg, rad.group());
      auto cur = oracle::closure(q.action.degree(), q.action.generators());
      EXPECT_EQ(BigInt(cur.size()) * rad.order(), yg.order());
      while (true) {
        auto next = oracle::derived(cur);
        if (next.size() == cur.size()) break;
        cur = std::move(next);
      }
      EXPECT_EQ(cur.size(), y.top_order) << key;
      ++checked;
    }
  }
  EXPECT_GT(checked, 3u);
}

TEST(Symmetry, RglrHypothesis) {
  const auto s5 = lemma_rglr_hypothesis_check(cat("S5"));
  EXPECT_FALSE(s5.holds);
  bool whole = false;
  for (const auto& y : s5.subgroups) {
    if (!y.is_whole_group) continue;
    whole = true;
    EXPECT_EQ(y.rad_order, 1u);
    EXPECT_EQ(y.top_order, 60u);
    EXPECT_TRUE(y.top_simple);
    EXPECT_TRUE(y.condition_a);
    EXPECT_TRUE(y.condition_b);
  }
  EXPECT_TRUE(whole);
  const auto reg = lemma_rglr_brute_force(cat("S3"), 2);
  ASSERT_TRUE(reg.has_value());
  EXPECT_EQ(reg->order(), 9);
}
