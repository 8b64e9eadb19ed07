#include "arcsym/subgroups.hpp"

#include <algorithm>
#include <functional>
#include <unordered_set>

#include "arcsym/error.hpp"

namespace arcsym {

namespace {

bool is_prime_small(std::uint64_t k) {
  if (k < 2) return false;
  for (std::uint64_t d = 2; d * d <= k; ++d) {
    if (k % d == 0) return false;
  }
  return true;
}

void require_same_degree(const PermutationGroup& a, const PermutationGroup& b) {
  if (a.degree() != b.degree()) throw InvalidArgument("groups act on different degrees");
}

// Adds `x` to the generators of `cur` unless it is already a member.
void absorb(PermutationGroup& cur, std::vector<Permutation>& gens, const Permutation& x) {
  if (cur.contains(x)) return;
  gens.push_back(x);
  cur = PermutationGroup(cur.degree(), gens);
}

}  // namespace

PermutationGroup intersection(const PermutationGroup& a, const PermutationGroup& b,
                              const SearchBounds& bounds) {
  require_same_degree(a, b);
  if (a.is_subgroup_of(b)) return a;
  if (b.is_subgroup_of(a)) return b;
  const PermutationGroup& small = a.order() <= b.order() ? a : b;
  const PermutationGroup& other = a.order() <= b.order() ? b : a;
  PermutationGroup cur = PermutationGroup::trivial(a.degree());
  std::vector<Permutation> gens;
  small.for_each_element(
      [&](const Permutation& x) {
        if (!x.is_identity() && other.contains(x)) absorb(cur, gens, x);
      },
      bounds);
  return cur;
}

SubgroupHandle subgroup_intersection(const SubgroupHandle& a, const SubgroupHandle& b,
                                     const SearchBounds& bounds) {
  if (!(a.parent() == b.parent())) {
    throw InvalidArgument("subgroup intersection needs a common parent group");
  }
  return SubgroupHandle(a.parent(), intersection(a.group(), b.group(), bounds));
}

PermutationGroup conjugate_group(const PermutationGroup& h, const Permutation& g) {
  if (g.degree() != h.degree()) throw InvalidArgument("conjugating element has wrong degree");
  std::vector<Permutation> gens;
  gens.reserve(h.generators().size());
  for (const auto& x : h.generators()) gens.push_back(x.conjugate(g));
  return PermutationGroup(h.degree(), std::move(gens));
}

SubgroupHandle conjugate_subgroup(const SubgroupHandle& h, const Permutation& g) {
  require_member(h.parent(), g, "conjugating element");
  return SubgroupHandle(h.parent(), conjugate_group(h.group(), g));
}

std::optional<Permutation> are_conjugate(const PermutationGroup& g, const PermutationGroup& a,
                                         const PermutationGroup& b, const SearchBounds& bounds) {
  require_same_degree(g, a);
  require_same_degree(g, b);
  if (!a.is_subgroup_of(g) || !b.is_subgroup_of(g)) {
    throw InvalidArgument("are_conjugate: subgroups must lie in the ambient group");
  }
  if (a.order() != b.order()) return std::nullopt;
  if (a == b) return Permutation(g.degree());

  const std::size_t n = g.degree();
  // Orbit labels and lengths; a transporter maps A-orbits onto B-orbits.
  auto label = [n](const PermutationGroup& h) {
    std::vector<std::size_t> id(n), len(n);
    const auto& orbs = h.orbits();
    for (std::size_t k = 0; k < orbs.size(); ++k) {
      for (Point p : orbs[k]) {
        id[p] = k;
        len[p] = orbs[k].size();
      }
    }
    return std::pair{id, len};
  };
  const auto [a_id, a_len] = label(a);
  const auto [b_id, b_len] = label(b);
  {
    auto shape = [](const PermutationGroup& h) {
      std::vector<std::size_t> s;
      for (const auto& o : h.orbits()) s.push_back(o.size());
      std::sort(s.begin(), s.end());
      return s;
    };
    if (shape(a) != shape(b)) return std::nullopt;
  }

  const StabilizerChain& chain = g.chain();
  const std::size_t depth = chain.length();
  std::vector<Point> base = chain.base();
  std::vector<std::vector<Permutation>> reps(depth);
  for (std::size_t i = 0; i < depth; ++i) {
    for (Point p : chain.level(i).orbit) reps[i].push_back(chain.transversal(i, p));
  }

  std::uint64_t nodes = 0;
  std::vector<Point> images(depth);
  std::optional<Permutation> found;

  auto consistent = [&](std::size_t i, Point gamma) {
    if (a_len[base[i]] != b_len[gamma]) return false;
    for (std::size_t j = 0; j < i; ++j) {
      if ((a_id[base[j]] == a_id[base[i]]) != (b_id[images[j]] == b_id[gamma])) return false;
    }
    return true;
  };

  std::function<bool(std::size_t, const Permutation&)> search =
      [&](std::size_t i, const Permutation& prefix) -> bool {
    if (i == depth) {
      for (const auto& x : a.generators()) {
        if (!b.contains(x.conjugate(prefix))) return false;
      }
      found = prefix;
      return true;
    }
    const auto& orbit = chain.level(i).orbit;
    std::vector<std::pair<Point, std::size_t>> cand;
    cand.reserve(orbit.size());
    for (std::size_t k = 0; k < orbit.size(); ++k) cand.emplace_back(prefix[orbit[k]], k);
    std::sort(cand.begin(), cand.end());
    for (const auto& [gamma, k] : cand) {
      if (++nodes > bounds.transporter_nodes) {
        throw SearchExhausted("transporter_nodes", bounds.transporter_nodes,
                              "conjugacy search did not finish");
      }
      if (!consistent(i, gamma)) continue;
      images[i] = gamma;
      if (search(i + 1, reps[i][k] * prefix)) return true;
    }
    return false;
  };
  search(0, Permutation(n));
  return found;
}

PermutationGroup normal_closure(const PermutationGroup& in, const PermutationGroup& h) {
  require_same_degree(in, h);
  std::vector<Permutation> gens;
  PermutationGroup cur = PermutationGroup::trivial(in.degree());
  for (const auto& x : h.generators()) {
    if (!x.is_identity()) absorb(cur, gens, x);
  }
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (const auto& y : in.generators()) {
      absorb(cur, gens, gens[i].conjugate(y));
    }
  }
  return cur;
}

PermutationGroup derived_subgroup(const PermutationGroup& g) {
  const auto& gens = g.generators();
  std::vector<Permutation> comms;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      Permutation c = gens[i].inverse() * gens[j].inverse() * gens[i] * gens[j];
      if (!c.is_identity()) comms.push_back(std::move(c));
    }
  }
  return normal_closure(g, PermutationGroup(g.degree(), std::move(comms)));
}

std::vector<SubgroupHandle> derived_series(const PermutationGroup& g) {
  std::vector<SubgroupHandle> series{SubgroupHandle::whole(g)};
  for (;;) {
    PermutationGroup next = derived_subgroup(series.back().group());
    if (next.order() == series.back().order()) break;
    series.emplace_back(g, std::move(next));
  }
  return series;
}

SubgroupHandle perfect_core(const PermutationGroup& g) { return derived_series(g).back(); }

bool is_solvable(const PermutationGroup& g) { return perfect_core(g).order() == 1; }

bool is_perfect(const PermutationGroup& g) { return derived_subgroup(g).order() == g.order(); }

// ---------------------------------------------------------------------------
// lattice computations on a table

namespace {

// Conjugacy classes of `in` (under conjugation by its own generators).
std::vector<std::vector<std::uint32_t>> classes_of(const GroupTable& t, const TableSubgroup& in) {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<bool> seen(t.size(), false);
  for (std::uint32_t a : in.elements.members()) {
    if (seen[a]) continue;
    std::vector<std::uint32_t> cls{a};
    seen[a] = true;
    for (std::size_t i = 0; i < cls.size(); ++i) {
      for (std::uint32_t x : in.generators) {
        const std::uint32_t c = t.conjugate(cls[i], x);
        if (!seen[c]) {
          seen[c] = true;
          cls.push_back(c);
        }
      }
    }
    out.push_back(std::move(cls));
  }
  return out;
}

// All conjugates of `h` under conjugation by `by_generators`.
std::vector<ElementSet> conjugates_of(const GroupTable& t, const ElementSet& h,
                                      std::span<const std::uint32_t> by_generators) {
  std::unordered_set<ElementSet, ElementSetHash> seen{h};
  std::vector<ElementSet> out{h};
  for (std::size_t q = 0; q < out.size(); ++q) {
    for (std::uint32_t x : by_generators) {
      ElementSet c = t.conjugate(out[q], x);
      if (seen.insert(c).second) out.push_back(std::move(c));
    }
  }
  return out;
}

bool set_less(const TableSubgroup& a, const TableSubgroup& b) {
  if (a.order() != b.order()) return a.order() < b.order();
  return a.elements.members() < b.elements.members();
}

}  // namespace

std::vector<TableSubgroup> table_normal_subgroups(const GroupTable& t, const TableSubgroup& in) {
  std::vector<TableSubgroup> found;
  std::unordered_set<ElementSet, ElementSetHash> seen;
  auto add = [&](TableSubgroup n) {
    if (seen.insert(n.elements).second) found.push_back(std::move(n));
  };
  add(t.trivial());
  for (const auto& cls : classes_of(t, in)) {
    if (cls.front() == 0) continue;
    const std::uint32_t rep[] = {cls.front()};
    add(t.normal_closure(t.closure(rep), in));
  }
  // Every normal subgroup is a join of normal closures of single elements.
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      add(t.join(found[i], found[j]));
    }
  }
  std::sort(found.begin(), found.end(), set_less);
  return found;
}

TableSubgroup table_solvable_radical(const GroupTable& t, const TableSubgroup& in) {
  TableSubgroup rad = t.trivial();
  for (const auto& n : table_normal_subgroups(t, in)) {
    if (t.is_solvable(n)) rad = t.join(rad, n);
  }
  return rad;
}

TableSubgroup table_socle(const GroupTable& t, const TableSubgroup& in) {
  auto normals = table_normal_subgroups(t, in);
  TableSubgroup soc = t.trivial();
  for (std::size_t i = 1; i < normals.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 1; j < normals.size() && minimal; ++j) {
      if (j != i && normals[j].order() < normals[i].order() &&
          normals[j].elements.is_subset_of(normals[i].elements)) {
        minimal = false;
      }
    }
    if (minimal) soc = t.join(soc, normals[i]);
  }
  return soc;
}

std::vector<TableSubgroup> table_subgroup_classes(const GroupTable& t) {
  const TableSubgroup whole = t.whole();
  const auto& gens = whole.generators;
  std::unordered_set<ElementSet, ElementSetHash> seen;  // every conjugate of every class
  std::vector<TableSubgroup> reps;
  auto add_class = [&](const TableSubgroup& h) {
    if (seen.count(h.elements) != 0) return false;
    for (auto& c : conjugates_of(t, h.elements, gens)) seen.insert(std::move(c));
    reps.push_back(h);
    return true;
  };

  // Perfect seeds.
  std::vector<TableSubgroup> perfect{t.trivial()};
  std::unordered_set<ElementSet, ElementSetHash> perfect_seen;
  for (auto& c : conjugates_of(t, perfect[0].elements, gens)) perfect_seen.insert(std::move(c));
  auto add_perfect = [&](const TableSubgroup& p) {
    if (perfect_seen.count(p.elements) != 0) return;
    for (auto& c : conjugates_of(t, p.elements, gens)) perfect_seen.insert(std::move(c));
    perfect.push_back(p);
  };
  if (!t.is_solvable(whole)) {
    std::unordered_set<ElementSet, ElementSetHash> tried;
    for (const auto& cls : t.conjugacy_classes()) {
      if (cls.front() == 0) continue;
      for (std::uint32_t y = 1; y < t.size(); ++y) {
        const std::uint32_t pair[] = {cls.front(), y};
        TableSubgroup k = t.closure(pair);
        if (!tried.insert(k.elements).second) continue;
        TableSubgroup p = t.perfect_core(k);
        if (p.order() > 1) add_perfect(p);
      }
    }
    // Joins of perfect subgroups with conjugates of one another.
    for (std::size_t i = 1; i < perfect.size(); ++i) {
      for (std::size_t j = 1; j <= i; ++j) {
        for (const auto& c : conjugates_of(t, perfect[j].elements, gens)) {
          TableSubgroup pj{c, t.greedy_generators(c)};
          TableSubgroup p = t.perfect_core(t.join(perfect[i], pj));
          if (p.order() > 1) add_perfect(p);
        }
      }
    }
  }

  std::vector<TableSubgroup> queue;
  for (const auto& p : perfect) {
    if (add_class(p)) queue.push_back(p);
  }
  for (std::size_t q = 0; q < queue.size(); ++q) {
    const TableSubgroup u = queue[q];
    ElementSet covered = u.elements;
    for (std::uint32_t x = 1; x < t.size(); ++x) {
      if (covered.test(x) || !t.normalizes(x, u)) continue;
      std::uint32_t y = x;
      std::uint64_t k = 1;
      while (!u.elements.test(y)) {
        y = t.mul(y, x);
        ++k;
      }
      if (!is_prime_small(k)) continue;
      auto gens_v = u.generators;
      gens_v.push_back(x);
      TableSubgroup v = t.closure(gens_v);
      for (std::uint32_t m : v.elements.members()) covered.set(m);
      if (add_class(v)) queue.push_back(std::move(v));
    }
  }
  std::stable_sort(reps.begin(), reps.end(),
                   [](const TableSubgroup& a, const TableSubgroup& b) { return a.order() < b.order(); });
  return reps;
}

// ---------------------------------------------------------------------------

std::vector<SubgroupHandle> normal_subgroups(const PermutationGroup& g, const SearchBounds& bounds) {
  GroupTable t(g, bounds);
  std::vector<SubgroupHandle> out;
  for (const auto& n : table_normal_subgroups(t, t.whole())) out.emplace_back(g, t.to_group(n));
  return out;
}

SubgroupHandle solvable_radical(const PermutationGroup& g, const SearchBounds& bounds) {
  GroupTable t(g, bounds);
  return SubgroupHandle(g, t.to_group(table_solvable_radical(t, t.whole())));
}

SubgroupHandle socle(const PermutationGroup& g, const SearchBounds& bounds) {
  GroupTable t(g, bounds);
  return SubgroupHandle(g, t.to_group(table_socle(t, t.whole())));
}

std::vector<SubgroupHandle> subgroups_up_to_conjugacy(const PermutationGroup& g,
                                                      const SearchBounds& bounds) {
  GroupTable t(g, bounds);
  std::vector<SubgroupHandle> out;
  for (const auto& h : table_subgroup_classes(t)) out.emplace_back(g, t.to_group(h));
  return out;
}

SubgroupHandle centralizer(const PermutationGroup& g, const PermutationGroup& h,
                           const SearchBounds& bounds) {
  require_same_degree(g, h);
  PermutationGroup cur = PermutationGroup::trivial(g.degree());
  std::vector<Permutation> gens;
  g.for_each_element(
      [&](const Permutation& x) {
        for (const auto& y : h.generators()) {
          if (x * y != y * x) return;
        }
        absorb(cur, gens, x);
      },
      bounds);
  return SubgroupHandle(g, cur);
}

PermutationGroup normal_core(const PermutationGroup& g, const PermutationGroup& h,
                             const SearchBounds& bounds) {
  require_same_degree(g, h);
  PermutationGroup cur = h;
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& y : g.generators()) {
      PermutationGroup conj = conjugate_group(cur, y);
      if (conj == cur) continue;
      cur = intersection(cur, conj, bounds);
      changed = true;
    }
  }
  return cur;
}

bool is_nonabelian_simple(const PermutationGroup& g, const SearchBounds& bounds) {
  if (g.order() == 1 || !is_perfect(g)) return false;
  if (g.order() > bounds.element_enumeration) {
    throw BoundExceeded("element_enumeration", bounds.element_enumeration,
                        "simplicity test on group of order " + g.order().str());
  }
  std::unordered_set<Permutation> seen;
  bool simple = true;
  g.for_each_element(
      [&](const Permutation& x) {
        if (!simple || x.is_identity() || seen.count(x) != 0) return;
        std::vector<Permutation> cls{x};
        seen.insert(x);
        for (std::size_t i = 0; i < cls.size(); ++i) {
          for (const auto& y : g.generators()) {
            Permutation c = cls[i].conjugate(y);
            if (seen.insert(c).second) cls.push_back(std::move(c));
          }
        }
        if (normal_closure(g, PermutationGroup(g.degree(), {x})).order() != g.order()) {
          simple = false;
        }
      },
      bounds);
  return simple;
}

bool check_factorization(const PermutationGroup& h, const PermutationGroup& a,
                         const PermutationGroup& b, const SearchBounds& bounds) {
  if (!a.is_subgroup_of(h) || !b.is_subgroup_of(h)) {
    throw InvalidArgument("factorization check: factors must be subgroups of H");
  }
  const BigInt meet = intersection(a, b, bounds).order();
  return a.order() * b.order() == h.order() * meet;
}

}  // namespace arcsym
