#include "arcsym/group_table.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

#include "arcsym/error.hpp"

namespace arcsym {

bool ElementSet::is_subset_of(const ElementSet& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

ElementSet ElementSet::intersect(const ElementSet& other) const {
  ElementSet r;
  r.words_.resize(words_.size());
  for (std::size_t i = 0; i < words_.size(); ++i) {
    r.words_[i] = words_[i] & other.words_[i];
    r.count_ += static_cast<std::size_t>(std::popcount(r.words_[i]));
  }
  return r;
}

std::vector<std::uint32_t> ElementSet::members() const {
  std::vector<std::uint32_t> out;
  out.reserve(count_);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t bits = words_[w];
    while (bits != 0) {
      out.push_back(static_cast<std::uint32_t>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits))));
      bits &= bits - 1;
    }
  }
  return out;
}

std::size_t ElementSet::hash() const noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ count_;
  for (std::uint64_t w : words_) {
    h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

GroupTable::GroupTable(const PermutationGroup& group, const SearchBounds& bounds)
    : group_(group) {
  if (group.order() > bounds.subgroup_enumeration) {
    throw BoundExceeded("subgroup_enumeration", bounds.subgroup_enumeration,
                        "group of order " + group.order().str() + " is too large for a table");
  }
  elements_ = group.elements(bounds);
  std::sort(elements_.begin(), elements_.end());
  const std::size_t n = elements_.size();
  index_.reserve(n * 2);
  for (std::size_t i = 0; i < n; ++i) index_.emplace(elements_[i], static_cast<std::uint32_t>(i));

  std::vector<Permutation> gens;
  for (const auto& g : group.generators()) {
    if (!g.is_identity()) gens.push_back(g);
  }
  // right[s][i] = index(e_i * s)
  std::vector<std::vector<std::uint32_t>> right(gens.size(), std::vector<std::uint32_t>(n));
  for (std::size_t s = 0; s < gens.size(); ++s) {
    for (std::size_t i = 0; i < n; ++i) right[s][i] = index_.at(elements_[i] * gens[s]);
  }
  // Column j of the table is obtained from the column of its BFS parent p,
  // where e_j = e_p * s, as col_j[i] = right[s][col_p[i]].
  table_.assign(n * n, 0);
  std::vector<bool> done(n, false);
  std::vector<std::uint32_t> queue{0};
  for (std::size_t i = 0; i < n; ++i) table_[i] = static_cast<std::uint32_t>(i);
  done[0] = true;
  for (std::size_t q = 0; q < queue.size(); ++q) {
    const std::uint32_t p = queue[q];
    for (std::size_t s = 0; s < gens.size(); ++s) {
      const std::uint32_t j = right[s][p];
      if (done[j]) continue;
      done[j] = true;
      queue.push_back(j);
      const std::uint32_t* src = &table_[static_cast<std::size_t>(p) * n];
      std::uint32_t* dst = &table_[static_cast<std::size_t>(j) * n];
      for (std::size_t i = 0; i < n; ++i) dst[i] = right[s][src[i]];
    }
  }

  inverse_.assign(n, 0);
  for (std::uint32_t a = 0; a < n; ++a) {
    const std::uint32_t* col = &table_[static_cast<std::size_t>(a) * n];
    for (std::uint32_t i = 0; i < n; ++i) {
      if (col[i] == 0) {
        inverse_[a] = i;
        break;
      }
    }
  }
  orders_.assign(n, 1);
  for (std::uint32_t a = 1; a < n; ++a) {
    std::uint32_t x = a;
    std::uint32_t k = 1;
    while (x != 0) {
      x = mul(x, a);
      ++k;
    }
    orders_[a] = k;
  }
}

std::uint32_t GroupTable::index_of(const Permutation& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) {
    throw InvalidArgument("permutation " + p.to_cycle_string() + " is not in the group");
  }
  return it->second;
}

TableSubgroup GroupTable::trivial() const {
  TableSubgroup t{ElementSet(size()), {}};
  t.elements.set(0);
  return t;
}

TableSubgroup GroupTable::whole() const {
  std::vector<std::uint32_t> gens;
  for (const auto& g : group_.generators()) {
    if (!g.is_identity()) gens.push_back(index_of(g));
  }
  return closure(gens);
}

TableSubgroup GroupTable::closure(std::span<const std::uint32_t> generators) const {
  TableSubgroup h{ElementSet(size()), {}};
  for (std::uint32_t g : generators) {
    if (g != 0 && std::find(h.generators.begin(), h.generators.end(), g) == h.generators.end()) {
      h.generators.push_back(g);
    }
  }
  std::vector<std::uint32_t> list{0};
  h.elements.set(0);
  for (std::size_t i = 0; i < list.size(); ++i) {
    for (std::uint32_t g : h.generators) {
      const std::uint32_t y = mul(list[i], g);
      if (!h.elements.test(y)) {
        h.elements.set(y);
        list.push_back(y);
      }
    }
  }
  return h;
}

TableSubgroup GroupTable::join(const TableSubgroup& a, const TableSubgroup& b) const {
  if (b.elements.is_subset_of(a.elements)) return a;
  if (a.elements.is_subset_of(b.elements)) return b;
  std::vector<std::uint32_t> gens = a.generators;
  for (std::uint32_t g : b.generators) {
    if (!a.elements.test(g)) gens.push_back(g);
  }
  return closure(gens);
}

TableSubgroup GroupTable::from_permutations(std::span<const Permutation> generators) const {
  std::vector<std::uint32_t> idx;
  for (const auto& g : generators) idx.push_back(index_of(g));
  return closure(idx);
}

TableSubgroup GroupTable::intersection(const TableSubgroup& a, const TableSubgroup& b) const {
  ElementSet s = a.elements.intersect(b.elements);
  return TableSubgroup{s, greedy_generators(s)};
}

ElementSet GroupTable::conjugate(const ElementSet& s, std::uint32_t by) const {
  ElementSet r(size());
  for (std::uint32_t m : s.members()) r.set(conjugate(m, by));
  return r;
}

TableSubgroup GroupTable::conjugate(const TableSubgroup& h, std::uint32_t by) const {
  TableSubgroup r{conjugate(h.elements, by), {}};
  for (std::uint32_t g : h.generators) r.generators.push_back(conjugate(g, by));
  return r;
}

bool GroupTable::normalizes(std::uint32_t x, const TableSubgroup& h) const {
  return std::all_of(h.generators.begin(), h.generators.end(),
                     [&](std::uint32_t g) { return h.elements.test(conjugate(g, x)); });
}

bool GroupTable::is_normal_in(const TableSubgroup& n, const TableSubgroup& in) const {
  return std::all_of(in.generators.begin(), in.generators.end(),
                     [&](std::uint32_t x) { return normalizes(x, n); });
}

TableSubgroup GroupTable::normal_closure(const TableSubgroup& h, const TableSubgroup& in) const {
  TableSubgroup cur = closure(h.generators);
  for (std::size_t i = 0; i < cur.generators.size(); ++i) {
    for (std::uint32_t x : in.generators) {
      const std::uint32_t c = conjugate(cur.generators[i], x);
      if (!cur.elements.test(c)) {
        auto gens = cur.generators;
        gens.push_back(c);
        cur = closure(gens);
      }
    }
  }
  return cur;
}

TableSubgroup GroupTable::derived_subgroup(const TableSubgroup& h) const {
  std::vector<std::uint32_t> comms;
  for (std::size_t i = 0; i < h.generators.size(); ++i) {
    for (std::size_t j = i + 1; j < h.generators.size(); ++j) {
      comms.push_back(commutator(h.generators[i], h.generators[j]));
    }
  }
  return normal_closure(closure(comms), h);
}

TableSubgroup GroupTable::perfect_core(const TableSubgroup& h) const {
  TableSubgroup cur = h;
  for (;;) {
    TableSubgroup next = derived_subgroup(cur);
    if (next.order() == cur.order()) return cur;
    cur = std::move(next);
  }
}

bool GroupTable::is_solvable(const TableSubgroup& h) const { return perfect_core(h).order() == 1; }

TableSubgroup GroupTable::core(const TableSubgroup& h, const TableSubgroup& in) const {
  std::unordered_set<ElementSet, ElementSetHash> seen{h.elements};
  std::vector<ElementSet> queue{h.elements};
  ElementSet acc = h.elements;
  for (std::size_t q = 0; q < queue.size(); ++q) {
    for (std::uint32_t x : in.generators) {
      ElementSet c = conjugate(queue[q], x);
      if (seen.insert(c).second) {
        acc = acc.intersect(c);
        queue.push_back(std::move(c));
      }
    }
  }
  return TableSubgroup{acc, greedy_generators(acc)};
}

const std::vector<std::vector<std::uint32_t>>& GroupTable::conjugacy_classes() const {
  if (!classes_.empty()) return classes_;
  std::vector<bool> seen(size(), false);
  auto gens = whole().generators;
  for (std::uint32_t a = 0; a < size(); ++a) {
    if (seen[a]) continue;
    std::vector<std::uint32_t> cls{a};
    seen[a] = true;
    for (std::size_t i = 0; i < cls.size(); ++i) {
      for (std::uint32_t x : gens) {
        const std::uint32_t c = conjugate(cls[i], x);
        if (!seen[c]) {
          seen[c] = true;
          cls.push_back(c);
        }
      }
    }
    std::sort(cls.begin(), cls.end());
    classes_.push_back(std::move(cls));
  }
  return classes_;
}

std::vector<std::uint32_t> GroupTable::greedy_generators(const ElementSet& s) const {
  std::vector<std::uint32_t> gens;
  TableSubgroup cur = trivial();
  for (std::uint32_t m : s.members()) {
    if (cur.elements.count() == s.count()) break;
    if (cur.elements.test(m)) continue;
    gens.push_back(m);
    cur = closure(gens);
  }
  return gens;
}

std::vector<Permutation> GroupTable::to_permutations(std::span<const std::uint32_t> idx) const {
  std::vector<Permutation> out;
  out.reserve(idx.size());
  for (std::uint32_t i : idx) out.push_back(elements_[i]);
  return out;
}

PermutationGroup GroupTable::to_group(const TableSubgroup& h) const {
  return PermutationGroup(group_.degree(), to_permutations(h.generators));
}

}  // namespace arcsym
