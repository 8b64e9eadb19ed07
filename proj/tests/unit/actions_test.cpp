#include <gtest/gtest.h>

#include <map>

#include "arcsym/actions.hpp"
#include "arcsym/error.hpp"
#include "arcsym/subgroups.hpp"
#include "oracles.hpp"

using namespace arcsym;

namespace {

// Right cosets Hx as sorted element lists.
std::vector<Permutation> coset(const std::vector<Permutation>& h, const Permutation& x) {
  std::vector<Permutation> c;
  for (const auto& y : h) c.push_back(oracle::compose(y, x));
  std::sort(c.begin(), c.end());
  return c;
}

}  // namespace

// The induced action is equivalent to right multiplication on explicit cosets.
TEST(Actions, CosetActionMatchesExplicitCosets) {
  std::size_t checked = 0;
  for (const auto* e : oracle::catalog().all()) {
    const auto& g = e->group;
    if (g.order() > 360) continue;
    const auto reps = subgroups_up_to_conjugacy(g);
    const auto elems = oracle::closure(g.degree(), g.generators());
    for (std::size_t i = 0; i < reps.size(); i += 3) {
      const auto& h = reps[i].group();
      const auto he = oracle::closure(g.degree(), h.generators());
      const CosetAction a = action_on_cosets(g, h);
      ASSERT_EQ(BigInt(a.degree()) * h.order(), g.order()) << e->id;
      std::vector<std::vector<Permutation>> cosets;
      for (const auto& r : a.representatives) cosets.push_back(coset(he, r));
      EXPECT_TRUE(std::binary_search(cosets[0].begin(), cosets[0].end(), Permutation(g.degree())));
      std::map<std::vector<Permutation>, std::size_t> label;
      for (std::size_t k = 0; k < cosets.size(); ++k) label[cosets[k]] = k;
      EXPECT_EQ(label.size(), cosets.size()) << e->id;  // distinct cosets
      for (std::size_t gi = 0; gi < g.generators().size(); ++gi) {
        const auto& x = g.generators()[gi];
        for (std::size_t k = 0; k < cosets.size(); ++k) {
          const auto image = coset(he, oracle::compose(a.representatives[k], x));
          ASSERT_TRUE(label.contains(image));
          EXPECT_EQ(a.images[gi][static_cast<Point>(k)], label.at(image)) << e->id;
        }
      }
      // canonizer agrees on every element
      const CosetCanonizer canon(g, h);
      for (std::size_t k = 0; k < elems.size(); k += 7) {
        const auto lbl = coset_label(a, canon, elems[k]);
        EXPECT_TRUE(std::binary_search(cosets[lbl].begin(), cosets[lbl].end(), elems[k])) << e->id;
      }
      ++checked;
    }
  }
  EXPECT_GT(checked, 100u);
}

TEST(Actions, DoubleCosetsMatchProductSets) {
  const auto& s5 = oracle::catalog().find("S5").group;
  const auto elems = oracle::closure(5, s5.generators());
  for (const auto& hh : subgroups_up_to_conjugacy(s5)) {
    const auto& h = hh.group();
    if (h.order() == 1 || h.order() == 120) continue;
    const auto he = oracle::closure(5, h.generators());
    const CosetCanonizer c(s5, h);
    for (std::size_t k = 0; k < elems.size(); k += 11) {
      const auto& x = elems[k];
      std::set<Permutation> dc;
      for (const auto& a : he) {
        for (const auto& b : he) dc.insert(oracle::compose(oracle::compose(a, x), b));
      }
      EXPECT_EQ(c.double_coset_size(x) * he.size(), dc.size());
      for (std::size_t j = 0; j < elems.size(); j += 13) {
        EXPECT_EQ(c.in_double_coset(x, elems[j]), dc.contains(elems[j]));
      }
      // canonical is in Hx and independent of the coset representative
      const auto cx = c.canonical(x);
      EXPECT_EQ(c.canonical(oracle::compose(he.back(), x)), cx);
      EXPECT_EQ(coset(he, cx), coset(he, x));
    }
  }
}

TEST(Actions, WreathProductAction) {
  const auto& s3 = oracle::catalog().find("S3").group;
  const PermutationGroup w = wreath_product_action(s3, 2);
  EXPECT_EQ(w.degree(), 9u);
  EXPECT_EQ(w.order(), 72);
  EXPECT_EQ(oracle::closure(9, w.generators()).size(), 72u);
  EXPECT_TRUE(w.is_transitive());
  EXPECT_EQ(wreath_product_action(s3, 1), s3);
  const auto& c5 = oracle::catalog().find("C5").group;
  EXPECT_EQ(wreath_product_action(c5, 2).order(), 50);
  EXPECT_EQ(wreath_product_action(c5, 3).order(), 125 * 6);
  SearchBounds b;
  b.wreath_degree = 100;
  EXPECT_THROW(wreath_product_action(c5, 3, b), BoundExceeded);

  const std::vector<Point> coords{2, 0, 4};
  EXPECT_EQ(product_point(coords, 5), 2u * 25 + 4);
  EXPECT_EQ(product_coords(54, 5, 3), coords);
  const std::size_t sigma[] = {1, 0};
  const Permutation sw = coordinate_permutation(3, sigma);
  EXPECT_EQ(sw[product_point(std::vector<Point>{1, 2}, 3)], product_point(std::vector<Point>{2, 1}, 3));
}

TEST(Actions, DirectPowerAndDiagonal) {
  const auto& a5 = oracle::catalog().find("A5").group;
  const auto p = direct_power(a5, 3);
  EXPECT_EQ(p.degree(), 15u);
  EXPECT_EQ(p.order(), 60 * 60 * 60);
  const auto d = diagonal_subgroup(a5, 3);
  EXPECT_EQ(d.order(), 60);
  EXPECT_TRUE(d.is_subgroup_of(p));
  const Permutation x = parse_permutation("(1 2 3)", 5);
  const Permutation y = parse_permutation("(3 4 5)", 5);
  const std::vector<Permutation> parts{x, Permutation(5), y};
  const Permutation t = tuple_element(parts);
  EXPECT_EQ(t[0], 1u);
  EXPECT_EQ(t[5], 5u);
  EXPECT_EQ(t[12], 13u);
}
