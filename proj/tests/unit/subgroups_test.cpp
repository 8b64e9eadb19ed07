#include <gtest/gtest.h>

#include "arcsym/error.hpp"
#include "arcsym/subgroups.hpp"
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

}  // namespace

// Completeness of the cyclic-extension enumeration against saturation.
TEST(Subgroups, ClassesMatchExhaustiveEnumerationUpTo400) {
  std::size_t checked = 0;
  for (const auto* e : groups_up_to(400)) {
    const oracle::ElementIndex idx(oracle::closure(e->group.degree(), e->group.generators()));
    const auto all = oracle::all_subgroups(idx);
    const auto expected = oracle::class_orders(idx, all);

    const auto reps = subgroups_up_to_conjugacy(e->group);
    std::multiset<std::size_t> got;
    for (const auto& h : reps) got.insert(static_cast<std::size_t>(h.order()));
    EXPECT_EQ(got, expected) << e->id;

    // representatives are pairwise non-conjugate
    std::set<oracle::ElementIndex::Set> seen;
    for (const auto& h : reps) {
      auto s = idx.to_set(oracle::closure(e->group.degree(), h.generators()));
      EXPECT_FALSE(seen.contains(s)) << e->id;
      for (const auto& x : idx.elements()) seen.insert(idx.conjugate(s, x));
    }
    ++checked;
  }
  EXPECT_GT(checked, 40u);
}

TEST(Subgroups, KnownClassCounts) {
  EXPECT_EQ(subgroups_up_to_conjugacy(oracle::catalog().find("S4").group).size(), 11u);
  EXPECT_EQ(subgroups_up_to_conjugacy(oracle::catalog().find("A5").group).size(), 9u);
  EXPECT_EQ(subgroups_up_to_conjugacy(oracle::catalog().find("S5").group).size(), 19u);
  const PermutationGroup z6(6, {parse_permutation("(1 2 3 4 5 6)", 6)});
  EXPECT_EQ(subgroups_up_to_conjugacy(z6).size(), 4u);
  EXPECT_THROW(subgroups_up_to_conjugacy(oracle::catalog().find("S8").group), BoundExceeded);
}

// Transporter search vs scanning every element of G.
TEST(Subgroups, ConjugacyMatchesExhaustiveScanUpTo2000) {
  std::size_t pairs = 0;
  for (const auto* e : groups_up_to(2000)) {
    const auto& g = e->group;
    const auto elems = oracle::closure(g.degree(), g.generators());
    // a few subgroups per group: cyclic subgroups of the generators and
    // their conjugates by a fixed element, plus the class representatives
    // when the lattice is small enough.
    std::vector<PermutationGroup> subs;
    for (const auto& x : g.generators()) subs.emplace_back(g.degree(), std::vector<Permutation>{x});
    const Permutation c = elems[elems.size() / 2];
    const std::size_t base = subs.size();
    for (std::size_t i = 0; i < base; ++i) subs.push_back(conjugate_group(subs[i], c));
    if (g.order() <= 200) {
      for (const auto& h : subgroups_up_to_conjugacy(g)) {
        if (h.order() <= 12) subs.push_back(h.group());
      }
    }
    for (const auto& a : subs) {
      const auto ae = oracle::closure(g.degree(), a.generators());
      for (const auto& b : subs) {
        if (a.order() != b.order()) continue;
        const auto be = oracle::closure(g.degree(), b.generators());
        bool brute = false;
        for (const auto& x : elems) {
          std::vector<Permutation> conj;
          for (const auto& y : ae) conj.push_back(oracle::compose(oracle::compose(oracle::invert(x), y), x));
          std::sort(conj.begin(), conj.end());
          if (conj == be) { brute = true; break; }
        }
        const auto t = are_conjugate(g, a, b);
        ASSERT_EQ(t.has_value(), brute) << e->id;
        if (t) {
          EXPECT_TRUE(g.contains(*t));
          EXPECT_EQ(conjugate_group(a, *t), b) << e->id;
        }
        ++pairs;
      }
    }
  }
  EXPECT_GT(pairs, 500u);
}

TEST(Subgroups, TransporterExamples) {
  const auto& s4 = oracle::catalog().find("S4").group;
  const PermutationGroup a(4, {parse_permutation("(1 2)", 4)});
  const PermutationGroup b(4, {parse_permutation("(3 4)", 4)});
  const PermutationGroup c(4, {parse_permutation("(1 2)(3 4)", 4)});
  const auto t = are_conjugate(s4, a, b);
  ASSERT_TRUE(t.has_value());
  EXPECT_EQ(conjugate_group(a, *t), b);
  EXPECT_FALSE(are_conjugate(s4, a, c).has_value());
}

TEST(Subgroups, IntersectionAndFactorizationMatchProductSets) {
  for (const auto* e : groups_up_to(200)) {
    const auto& g = e->group;
    const auto reps = subgroups_up_to_conjugacy(g);
    const auto elems = oracle::closure(g.degree(), g.generators());
    const Permutation shift = elems[elems.size() / 3];
    for (std::size_t i = 0; i < reps.size(); i += 2) {
      const auto& a = reps[i].group();
      const auto b = conjugate_group(reps[reps.size() - 1 - i].group(), shift);
      const auto ae = oracle::closure(g.degree(), a.generators());
      const auto be = oracle::closure(g.degree(), b.generators());
      std::vector<Permutation> inter;
      std::set_intersection(ae.begin(), ae.end(), be.begin(), be.end(), std::back_inserter(inter));
      EXPECT_EQ(intersection(a, b).order(), BigInt(inter.size())) << e->id;

      std::set<Permutation> product;
      for (const auto& x : ae) {
        for (const auto& y : be) product.insert(x * y);
      }
      EXPECT_EQ(check_factorization(g, a, b), product.size() == elems.size()) << e->id;
    }
  }
}

TEST(Subgroups, DerivedSeriesMatchesCommutatorClosure) {
  for (const auto* e : groups_up_to(1000)) {
    const auto& g = e->group;
    auto cur = oracle::closure(g.degree(), g.generators());
    const auto series = derived_series(g);
    std::size_t i = 0;
    while (true) {
      ASSERT_LT(i, series.size()) << e->id;
      EXPECT_EQ(series[i].order(), BigInt(cur.size())) << e->id;
      auto next = oracle::derived(cur);
      if (next.size() == cur.size()) break;
      cur = std::move(next);
      ++i;
    }
    EXPECT_EQ(series.size(), i + 1) << e->id;
    EXPECT_EQ(is_solvable(g), oracle::is_solvable(oracle::closure(g.degree(), g.generators()))) << e->id;
  }
  std::vector<BigInt> orders;
  for (const auto& h : derived_series(oracle::catalog().find("S4").group)) orders.push_back(h.order());
  EXPECT_EQ(orders, (std::vector<BigInt>{24, 12, 4, 1}));
}

TEST(Subgroups, NormalSubgroupsRadicalSocle) {
  for (const auto* e : groups_up_to(400)) {
    const auto& g = e->group;
    const oracle::ElementIndex idx(oracle::closure(g.degree(), g.generators()));
    std::vector<oracle::ElementIndex::Set> normal;
    for (const auto& s : oracle::all_subgroups(idx)) {
      if (oracle::is_normal(idx, s)) normal.push_back(s);
    }
    EXPECT_EQ(normal_subgroups(g).size(), normal.size()) << e->id;
    // radical: largest solvable normal subgroup
    std::size_t rad = 1;
    for (const auto& s : normal) {
      if (oracle::is_solvable(idx.members(s))) rad = std::max(rad, oracle::count(s));
    }
    EXPECT_EQ(solvable_radical(g).order(), BigInt(rad)) << e->id;
  }
  EXPECT_EQ(solvable_radical(oracle::catalog().find("S4").group).order(), 24);
  EXPECT_EQ(solvable_radical(oracle::catalog().find("S5").group).order(), 1);
  EXPECT_EQ(socle(oracle::catalog().find("S4").group).order(), 4);
  EXPECT_EQ(socle(oracle::catalog().find("A5").group).order(), 60);
}

TEST(Subgroups, SimplicityAndCores) {
  EXPECT_TRUE(is_nonabelian_simple(oracle::catalog().find("A5").group));
  EXPECT_FALSE(is_nonabelian_simple(oracle::catalog().find("S5").group));
  EXPECT_FALSE(is_nonabelian_simple(oracle::catalog().find("C5").group));
  EXPECT_TRUE(is_perfect(oracle::catalog().find("A5").group));
  const auto& s4 = oracle::catalog().find("S4").group;
  const PermutationGroup d8(4, {parse_permutation("(1 2 3 4)", 4), parse_permutation("(1 3)", 4)});
  EXPECT_EQ(normal_core(s4, d8).order(), 4);
  EXPECT_EQ(centralizer(s4, d8).order(), 2);
}
