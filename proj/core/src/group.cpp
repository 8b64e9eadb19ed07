#include "arcsym/group.hpp"

#include <algorithm>
#include <mutex>

#include "arcsym/error.hpp"

namespace arcsym {

struct PermutationGroup::Data {
  std::size_t degree = 0;
  std::vector<Permutation> generators;
  StabilizerChain chain;
  BigInt order;
  mutable std::once_flag orbits_once;
  mutable std::vector<std::vector<Point>> orbits;
};

PermutationGroup::PermutationGroup(std::size_t degree, std::vector<Permutation> generators) {
  if (degree == 0) throw InvalidArgument("group degree must be positive");
  auto d = std::make_shared<Data>();
  d->degree = degree;
  for (auto& g : generators) {
    if (g.degree() != degree) {
      throw InvalidArgument("generator " + g.to_cycle_string() + " has degree " +
                            std::to_string(g.degree()) + ", expected " +
                            std::to_string(degree));
    }
  }
  d->generators = std::move(generators);
  d->chain = StabilizerChain::build(degree, d->generators);
  d->order = d->chain.order();
  data_ = std::move(d);
}

std::size_t PermutationGroup::degree() const noexcept { return data_->degree; }
const std::vector<Permutation>& PermutationGroup::generators() const noexcept {
  return data_->generators;
}
const StabilizerChain& PermutationGroup::chain() const noexcept { return data_->chain; }
const BigInt& PermutationGroup::order() const noexcept { return data_->order; }
std::uint64_t PermutationGroup::small_order() const { return to_u64(data_->order); }

std::vector<Permutation> PermutationGroup::strong_generators() const {
  return data_->chain.stabilizer_generators(0);
}

bool PermutationGroup::contains(const Permutation& p) const {
  if (p.degree() != degree()) {
    throw InvalidArgument("membership test: degree " + std::to_string(p.degree()) +
                          " does not match group degree " + std::to_string(degree()));
  }
  return data_->chain.contains(p);
}

bool PermutationGroup::contains_all(std::span<const Permutation> elements) const {
  return std::all_of(elements.begin(), elements.end(),
                     [&](const Permutation& p) { return contains(p); });
}

bool PermutationGroup::is_subgroup_of(const PermutationGroup& other) const {
  return degree() == other.degree() && other.contains_all(generators());
}

std::vector<Point> PermutationGroup::orbit(Point v) const {
  if (v >= degree()) throw InvalidArgument("point out of range");
  std::vector<Point> out{v};
  std::vector<bool> seen(degree(), false);
  seen[v] = true;
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const auto& g : generators()) {
      Point y = g[out[i]];
      if (!seen[y]) {
        seen[y] = true;
        out.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

const std::vector<std::vector<Point>>& PermutationGroup::orbits() const {
  std::call_once(data_->orbits_once, [this] {
    std::vector<bool> seen(degree(), false);
    for (Point v = 0; v < degree(); ++v) {
      if (seen[v]) continue;
      auto o = orbit(v);
      for (Point x : o) seen[x] = true;
      data_->orbits.push_back(std::move(o));
    }
  });
  return data_->orbits;
}

bool PermutationGroup::is_transitive() const { return orbits().size() == 1; }

bool PermutationGroup::is_regular() const {
  return is_transitive() && order() == BigInt(degree());
}

StabilizerChain PermutationGroup::chain_with_base(std::span<const Point> prefix) const {
  return StabilizerChain::build(degree(), strong_generators(), prefix);
}

PermutationGroup PermutationGroup::stabilizer(Point v) const {
  if (v >= degree()) throw InvalidArgument("point " + std::to_string(v + 1) + " out of range");
  const Point prefix[] = {v};
  return pointwise_stabilizer(prefix);
}

PermutationGroup PermutationGroup::pointwise_stabilizer(std::span<const Point> points) const {
  for (Point p : points) {
    if (p >= degree()) throw InvalidArgument("point out of range");
  }
  std::vector<Point> prefix;
  for (Point p : points) {
    if (std::find(prefix.begin(), prefix.end(), p) == prefix.end()) prefix.push_back(p);
  }
  if (is_trivial()) return *this;
  auto chain = chain_with_base(prefix);
  return PermutationGroup(degree(), chain.stabilizer_generators(prefix.size()));
}

void PermutationGroup::for_each_element(const std::function<void(const Permutation&)>& visit,
                                        const SearchBounds& bounds) const {
  if (order() > bounds.element_enumeration) {
    throw BoundExceeded("element_enumeration", bounds.element_enumeration,
                        "group of order " + order().str());
  }
  data_->chain.for_each_element(visit);
}

std::vector<Permutation> PermutationGroup::elements(const SearchBounds& bounds) const {
  std::vector<Permutation> out;
  for_each_element([&](const Permutation& p) { out.push_back(p); }, bounds);
  return out;
}

bool operator==(const PermutationGroup& a, const PermutationGroup& b) {
  return a.degree() == b.degree() && a.order() == b.order() && a.is_subgroup_of(b);
}

PermutationGroup group_from_generators(std::vector<Permutation> generators) {
  if (generators.empty()) throw InvalidArgument("generator list is empty");
  const std::size_t n = generators.front().degree();
  for (const auto& g : generators) {
    if (g.degree() != n) throw InvalidArgument("generators have mixed degrees");
  }
  return PermutationGroup(n, std::move(generators));
}

void require_member(const PermutationGroup& group, const Permutation& p, const char* what) {
  if (!group.contains(p)) {
    throw InvalidArgument(std::string(what) + " " + p.to_cycle_string() +
                          " is not a member of the group");
  }
}

SubgroupHandle::SubgroupHandle(PermutationGroup parent, std::vector<Permutation> generators)
    : parent_(std::move(parent)), group_(parent_.degree(), std::move(generators)) {
  for (const auto& g : group_.generators()) require_member(parent_, g, "subgroup generator");
}

SubgroupHandle::SubgroupHandle(PermutationGroup parent, PermutationGroup subgroup)
    : parent_(std::move(parent)), group_(std::move(subgroup)) {
  if (group_.degree() != parent_.degree()) throw InvalidArgument("subgroup degree mismatch");
  for (const auto& g : group_.generators()) require_member(parent_, g, "subgroup generator");
}

}  // namespace arcsym
