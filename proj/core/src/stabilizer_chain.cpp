#include "arcsym/stabilizer_chain.hpp"

#include <algorithm>

#include "arcsym/error.hpp"

namespace arcsym {

void StabilizerChain::add_level(Point base) {
  Level lvl;
  lvl.base = base;
  lvl.edge.assign(degree_, kAbsent);
  lvl.edge[base] = kRoot;
  lvl.orbit.push_back(base);
  levels_.push_back(std::move(lvl));
}

// Extends the Schreier tree without touching existing edges, so transversal
// elements of points already in the orbit never change.
void StabilizerChain::add_generator(std::size_t level, const Permutation& g) {
  Level& lvl = levels_[level];
  lvl.generators.push_back(g);
  lvl.inverses.push_back(g.inverse());
  const auto j = static_cast<std::int32_t>(lvl.generators.size() - 1);
  const std::size_t old_size = lvl.orbit.size();
  for (std::size_t idx = 0; idx < old_size; ++idx) {
    Point y = g[lvl.orbit[idx]];
    if (lvl.edge[y] == kAbsent) {
      lvl.edge[y] = j;
      lvl.orbit.push_back(y);
    }
  }
  for (std::size_t idx = old_size; idx < lvl.orbit.size(); ++idx) {
    Point x = lvl.orbit[idx];
    for (std::size_t k = 0; k < lvl.generators.size(); ++k) {
      Point y = lvl.generators[k][x];
      if (lvl.edge[y] == kAbsent) {
        lvl.edge[y] = static_cast<std::int32_t>(k);
        lvl.orbit.push_back(y);
      }
    }
  }
}

StabilizerChain StabilizerChain::build(std::size_t degree,
                                       std::span<const Permutation> generators,
                                       std::span<const Point> base_prefix) {
  StabilizerChain chain(degree);
  std::vector<Permutation> gens;
  for (const auto& g : generators) {
    if (g.degree() != degree) {
      throw InvalidArgument("generator degree " + std::to_string(g.degree()) +
                            " differs from " + std::to_string(degree));
    }
    if (!g.is_identity() && std::find(gens.begin(), gens.end(), g) == gens.end()) {
      gens.push_back(g);
    }
  }
  std::vector<bool> used(degree, false);
  for (Point b : base_prefix) {
    if (b >= degree || used[b]) throw InvalidArgument("invalid base prefix");
    used[b] = true;
    chain.add_level(b);
  }
  if (gens.empty()) return chain;

  // Make sure no generator fixes the whole base.
  for (const auto& g : gens) {
    bool fixes_base = true;
    for (const auto& lvl : chain.levels_) {
      if (!g.fixes(lvl.base)) {
        fixes_base = false;
        break;
      }
    }
    if (fixes_base) chain.add_level(g.first_moved());
  }
  for (const auto& g : gens) {
    for (std::size_t i = 0; i < chain.levels_.size(); ++i) {
      chain.add_generator(i, g);
      if (!g.fixes(chain.levels_[i].base)) break;
    }
  }

  // checked[i][a]: number of level-i generators already paired with orbit
  // point a. Verified Schreier generators stay verified as the chain grows.
  std::vector<std::vector<std::size_t>> checked(chain.levels_.size());
  auto i = static_cast<std::ptrdiff_t>(chain.levels_.size()) - 1;
  while (i >= 0) {
    const auto li = static_cast<std::size_t>(i);
    bool restarted = false;
    for (std::size_t a = 0; a < chain.levels_[li].orbit.size() && !restarted; ++a) {
      if (checked[li].size() <= a) checked[li].resize(a + 1, 0);
      const Point beta = chain.levels_[li].orbit[a];
      Permutation u_beta;
      bool have_u = false;
      while (checked[li][a] < chain.levels_[li].generators.size()) {
        const std::size_t k = checked[li][a]++;
        if (!have_u) {
          u_beta = chain.transversal(li, beta);
          have_u = true;
        }
        Permutation h = u_beta * chain.levels_[li].generators[k];
        chain.strip(h, li, h[chain.levels_[li].base]);
        if (h.is_identity()) continue;
        auto [residue, j] = chain.sift(std::move(h), li + 1);
        if (residue.is_identity()) continue;
        if (j == chain.levels_.size()) {
          chain.add_level(residue.first_moved());
          checked.emplace_back();
        }
        for (std::size_t l = li + 1; l <= j; ++l) chain.add_generator(l, residue);
        i = static_cast<std::ptrdiff_t>(j);
        restarted = true;
        break;
      }
    }
    if (!restarted) --i;
  }
  return chain;
}

std::vector<Point> StabilizerChain::base() const {
  std::vector<Point> b;
  b.reserve(levels_.size());
  for (const auto& lvl : levels_) b.push_back(lvl.base);
  return b;
}

BigInt StabilizerChain::order() const {
  BigInt n = 1;
  for (const auto& lvl : levels_) n *= lvl.orbit.size();
  return n;
}

void StabilizerChain::strip(Permutation& g, std::size_t level, Point p) const {
  const Level& lvl = levels_[level];
  while (lvl.edge[p] != kRoot) {
    const auto j = static_cast<std::size_t>(lvl.edge[p]);
    g *= lvl.inverses[j];
    p = lvl.inverses[j][p];
  }
}

Permutation StabilizerChain::transversal(std::size_t level, Point p) const {
  const Level& lvl = levels_[level];
  if (lvl.edge[p] == kAbsent) throw InvalidArgument("point not in basic orbit");
  std::vector<std::size_t> path;
  while (lvl.edge[p] != kRoot) {
    const auto j = static_cast<std::size_t>(lvl.edge[p]);
    path.push_back(j);
    p = lvl.inverses[j][p];
  }
  Permutation u(degree_);
  for (auto it = path.rbegin(); it != path.rend(); ++it) u *= lvl.generators[*it];
  return u;
}

StabilizerChain::SiftResult StabilizerChain::sift(Permutation g, std::size_t from_level) const {
  for (std::size_t i = from_level; i < levels_.size(); ++i) {
    const Point beta = g[levels_[i].base];
    if (levels_[i].edge[beta] == kAbsent) return {std::move(g), i};
    strip(g, i, beta);
  }
  return {std::move(g), levels_.size()};
}

bool StabilizerChain::contains(const Permutation& g) const {
  if (g.degree() != degree_) throw InvalidArgument("degree mismatch in membership test");
  return sift(g).residue.is_identity();
}

std::vector<Permutation> StabilizerChain::stabilizer_generators(std::size_t i) const {
  if (i >= levels_.size()) return {};
  return levels_[i].generators;
}

void StabilizerChain::for_each_element(
    const std::function<void(const Permutation&)>& visit) const {
  std::vector<std::vector<Permutation>> reps(levels_.size());
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    for (Point p : levels_[i].orbit) reps[i].push_back(transversal(i, p));
  }
  // element = h_{k-1} * ... * h_1 * h_0 with h_i from level i.
  std::vector<Permutation> suffix(levels_.size() + 1, Permutation(degree_));
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == levels_.size()) {
      visit(suffix[i]);
      return;
    }
    for (const auto& h : reps[i]) {
      suffix[i + 1] = h * suffix[i];
      rec(i + 1);
    }
  };
  if (levels_.empty()) {
    visit(Permutation(degree_));
    return;
  }
  rec(0);
}

}  // namespace arcsym
