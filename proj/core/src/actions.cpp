#include "arcsym/actions.hpp"

#include <algorithm>
#include <unordered_set>

#include "arcsym/error.hpp"

namespace arcsym {

CosetCanonizer::CosetCanonizer(const PermutationGroup& g, const PermutationGroup& h)
    : g_(g), h_(h), base_(g.base()) {
  if (g.degree() != h.degree()) throw InvalidArgument("coset action: degree mismatch");
  if (!h.is_subgroup_of(g)) throw InvalidArgument("coset action: H is not a subgroup of G");
  h_chain_ = StabilizerChain::build(h.degree(), h.strong_generators(), base_);
}

Permutation CosetCanonizer::canonical(const Permutation& x) const {
  Permutation cur = x;
  const std::size_t levels = std::min(h_chain_.length(), base_.size());
  for (std::size_t i = 0; i < levels; ++i) {
    const auto& orbit = h_chain_.level(i).orbit;
    if (orbit.size() == 1) continue;
    Point best = orbit[0];
    for (Point p : orbit) {
      if (cur[p] < cur[best]) best = p;
    }
    if (best != orbit[0]) cur = h_chain_.transversal(i, best) * cur;
  }
  return cur;
}

std::vector<Point> CosetCanonizer::key(const Permutation& x) const {
  const Permutation c = canonical(x);
  std::vector<Point> k(base_.size());
  for (std::size_t i = 0; i < base_.size(); ++i) k[i] = c[base_[i]];
  return k;
}

std::vector<std::vector<Point>> CosetCanonizer::h_orbit_of(const Permutation& x,
                                                           const std::vector<Point>* stop) const {
  std::vector<Permutation> reps{canonical(x)};
  std::vector<std::vector<Point>> keys{key(reps[0])};
  std::unordered_set<std::vector<Point>, KeyHash> seen{keys[0]};
  if (stop != nullptr && keys[0] == *stop) return keys;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (const auto& s : h_.generators()) {
      Permutation y = canonical(reps[i] * s);
      std::vector<Point> k(base_.size());
      for (std::size_t j = 0; j < base_.size(); ++j) k[j] = y[base_[j]];
      if (seen.insert(k).second) {
        keys.push_back(k);
        reps.push_back(std::move(y));
        if (stop != nullptr && keys.back() == *stop) return keys;
      }
    }
  }
  return keys;
}

bool CosetCanonizer::in_double_coset(const Permutation& x, const Permutation& y) const {
  const auto target = key(y);
  const auto orbit = h_orbit_of(x, &target);
  return orbit.back() == target;
}

std::size_t CosetCanonizer::double_coset_size(const Permutation& x) const {
  return h_orbit_of(x, nullptr).size();
}

CosetAction action_on_cosets(const PermutationGroup& g, const PermutationGroup& h,
                             const SearchBounds& bounds) {
  CosetCanonizer canon(g, h);
  const BigInt index = g.order() / h.order();
  if (index > bounds.coset_index) {
    throw BoundExceeded("coset_index", bounds.coset_index, "index " + index.str());
  }
  const std::size_t n = static_cast<std::size_t>(index);

  // BFS with the generators in sorted order; images are then reported in the
  // caller's generator order.
  std::vector<std::size_t> order(g.generators().size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return g.generators()[a] < g.generators()[b];
  });

  CosetAction out{PermutationGroup::trivial(n), {}, {}, {}};
  out.representatives.reserve(n);
  out.label_of.reserve(n * 2);
  std::vector<std::vector<Point>> img(g.generators().size(), std::vector<Point>(n, 0));

  const Permutation one = canon.canonical(Permutation::identity(g.degree()));
  out.representatives.push_back(one);
  out.label_of.emplace(canon.key(one), 0);
  for (std::size_t i = 0; i < out.representatives.size(); ++i) {
    for (std::size_t s : order) {
      const Permutation y = canon.canonical(out.representatives[i] * g.generators()[s]);
      std::vector<Point> k(canon.base().size());
      for (std::size_t j = 0; j < k.size(); ++j) k[j] = y[canon.base()[j]];
      auto [it, fresh] = out.label_of.emplace(std::move(k), out.representatives.size());
      if (fresh) out.representatives.push_back(y);
      img[s][i] = static_cast<Point>(it->second);
    }
  }
  if (out.representatives.size() != n) {
    throw Error("coset action: labelled " + std::to_string(out.representatives.size()) +
                " cosets, expected " + std::to_string(n));
  }
  for (auto& v : img) out.images.emplace_back(std::move(v));
  out.action = PermutationGroup(n, out.images);
  return out;
}

std::size_t coset_label(const CosetAction& a, const CosetCanonizer& c, const Permutation& x) {
  auto it = a.label_of.find(c.key(x));
  if (it == a.label_of.end()) throw InvalidArgument("coset_label: element not in the group");
  return it->second;
}

Point product_point(std::span<const Point> coords, std::size_t n) {
  std::size_t p = 0;
  for (Point c : coords) p = p * n + c;
  return static_cast<Point>(p);
}

std::vector<Point> product_coords(Point p, std::size_t n, std::size_t m) {
  std::vector<Point> c(m);
  for (std::size_t i = m; i-- > 0;) {
    c[i] = static_cast<Point>(p % n);
    p = static_cast<Point>(p / n);
  }
  return c;
}

namespace {

std::size_t checked_power(std::size_t n, std::size_t m, const SearchBounds& bounds) {
  BigInt total = 1;
  for (std::size_t i = 0; i < m; ++i) total *= n;
  if (total > bounds.wreath_degree) {
    throw BoundExceeded("wreath_degree", bounds.wreath_degree,
                        std::to_string(n) + "^" + std::to_string(m) + " points");
  }
  return static_cast<std::size_t>(total);
}

// Applies f to every coordinate tuple of V^m and collects the induced images.
template <class F>
Permutation induced(std::size_t n, std::size_t m, F f) {
  std::size_t total = 1;
  for (std::size_t i = 0; i < m; ++i) total *= n;
  std::vector<Point> img(total);
  for (std::size_t p = 0; p < total; ++p) {
    auto c = product_coords(static_cast<Point>(p), n, m);
    img[p] = product_point(f(std::move(c)), n);
  }
  return Permutation(std::move(img));
}

}  // namespace

PermutationGroup wreath_product_action(const PermutationGroup& g, std::size_t m,
                                       const SearchBounds& bounds) {
  if (m == 0) throw InvalidArgument("wreath_product_action: m must be positive");
  if (m == 1) return g;
  const std::size_t n = g.degree();
  const std::size_t total = checked_power(n, m, bounds);
  std::vector<Permutation> gens;
  for (std::size_t i = 0; i < m; ++i) {
    for (const auto& x : g.generators()) {
      gens.push_back(induced(n, m, [&](std::vector<Point> c) {
        c[i] = x[c[i]];
        return c;
      }));
    }
  }
  for (std::size_t i = 0; i + 1 < m; ++i) {
    gens.push_back(induced(n, m, [&](std::vector<Point> c) {
      std::swap(c[i], c[i + 1]);
      return c;
    }));
  }
  return PermutationGroup(total, std::move(gens));
}

Permutation diagonal_power_action(const Permutation& g, std::size_t m) {
  return induced(g.degree(), m, [&](std::vector<Point> c) {
    for (auto& x : c) x = g[x];
    return c;
  });
}

Permutation coordinate_permutation(std::size_t n, std::span<const std::size_t> sigma) {
  const std::size_t m = sigma.size();
  return induced(n, m, [&](std::vector<Point> c) {
    std::vector<Point> d(m);
    for (std::size_t i = 0; i < m; ++i) d[sigma[i]] = c[i];
    return d;
  });
}

PermutationGroup direct_power(const PermutationGroup& t, std::size_t k) {
  if (k == 0) throw InvalidArgument("direct_power: k must be positive");
  const std::size_t n = t.degree();
  std::vector<Permutation> gens;
  for (std::size_t i = 0; i < k; ++i) {
    for (const auto& x : t.generators()) {
      std::vector<Point> img(n * k);
      for (std::size_t p = 0; p < n * k; ++p) img[p] = static_cast<Point>(p);
      for (std::size_t p = 0; p < n; ++p) img[i * n + p] = static_cast<Point>(i * n + x[p]);
      gens.emplace_back(std::move(img));
    }
  }
  return PermutationGroup(n * k, std::move(gens));
}

Permutation tuple_element(std::span<const Permutation> parts) {
  if (parts.empty()) throw InvalidArgument("tuple_element: empty tuple");
  const std::size_t n = parts[0].degree();
  std::vector<Point> img(n * parts.size());
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].degree() != n) throw InvalidArgument("tuple_element: degree mismatch");
    for (std::size_t p = 0; p < n; ++p) img[i * n + p] = static_cast<Point>(i * n + parts[i][p]);
  }
  return Permutation(std::move(img));
}

PermutationGroup diagonal_subgroup(const PermutationGroup& t, std::size_t k) {
  if (k == 0) throw InvalidArgument("diagonal_subgroup: k must be positive");
  std::vector<Permutation> gens;
  for (const auto& x : t.generators()) {
    std::vector<Permutation> parts(k, x);
    gens.push_back(tuple_element(parts));
  }
  return PermutationGroup(t.degree() * k, std::move(gens));
}

}  // namespace arcsym
