#include "arcsym/constructions.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "arcsym/error.hpp"
#include "arcsym/subgroups.hpp"

namespace arcsym {

void validate_coset_spec(const CosetDigraphSpec& spec) {
  if (spec.g.degree() != spec.G.degree()) throw InvalidArgument("coset spec: g has the wrong degree");
  if (!spec.G.contains(spec.g)) throw InvalidArgument("coset spec: g is not in G");
  if (!spec.H.is_subgroup_of(spec.G)) throw InvalidArgument("coset spec: H is not a subgroup of G");
  if (spec.H.contains(spec.g)) {
    throw ValidationError("coset spec: g lies in H, so every coset would be joined to itself");
  }
  CosetCanonizer canon(spec.G, spec.H);
  if (canon.in_double_coset(spec.g, spec.g.inverse())) {
    throw ValidationError("coset spec: g^-1 lies in HgH, so arcs would come in symmetric pairs");
  }
}

bool is_valid_coset_spec(const CosetDigraphSpec& spec) {
  try {
    validate_coset_spec(spec);
    return true;
  } catch (const ValidationError&) {
    return false;
  }
}

CosetDigraph build_coset_digraph(const CosetDigraphSpec& spec, const SearchBounds& bounds) {
  validate_coset_spec(spec);
  CosetCanonizer canon(spec.G, spec.H);
  const std::size_t valency = canon.double_coset_size(spec.g);
  CosetAction ca = action_on_cosets(spec.G, spec.H, bounds);
  const std::size_t n = ca.degree();
  const BigInt arcs_total = BigInt(n) * valency;
  if (arcs_total > bounds.digraph_arcs) {
    throw BoundExceeded("digraph_arcs", bounds.digraph_arcs, arcs_total.str() + " arcs");
  }

  const auto to = static_cast<Vertex>(coset_label(ca, canon, spec.g));
  const auto from = static_cast<Vertex>(coset_label(ca, canon, spec.g.inverse()));
  std::vector<Arc> arcs{{0, to}};
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(static_cast<std::size_t>(arcs_total) * 2);
  seen.insert(static_cast<std::uint64_t>(to));
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    for (const auto& x : ca.images) {
      const Arc a{x[arcs[i].first], x[arcs[i].second]};
      if (seen.insert(static_cast<std::uint64_t>(a.first) * n + a.second).second) arcs.push_back(a);
    }
  }
  Digraph d(n, arcs, bounds);
  return CosetDigraph{std::move(d), ca.action, std::move(ca), valency, SArc{from, 0, to}};
}

CayleyDigraph build_cayley_digraph(const PermutationGroup& r, const std::vector<Permutation>& s,
                                   const SearchBounds& bounds) {
  if (r.order() > bounds.digraph_vertices) {
    throw BoundExceeded("digraph_vertices", bounds.digraph_vertices,
                        "group of order " + r.order().str());
  }
  std::vector<Permutation> conn;
  for (const auto& x : s) {
    if (x.degree() != r.degree() || !r.contains(x)) {
      throw InvalidArgument("connection set element " + x.to_cycle_string() + " is not in R");
    }
    if (x.is_identity()) throw ValidationError("identity in the connection set (loop)");
    if (std::find(conn.begin(), conn.end(), x) == conn.end()) conn.push_back(x);
  }
  for (const auto& x : conn) {
    if (std::find(conn.begin(), conn.end(), x.inverse()) != conn.end()) {
      throw ValidationError("connection set contains " + x.to_cycle_string() +
                            " and its inverse (symmetric arcs)");
    }
  }
  CayleyDigraph out{Digraph{}, PermutationGroup::trivial(1), r.elements(bounds)};
  const std::size_t n = out.elements.size();
  std::unordered_map<Permutation, Vertex> index;
  index.reserve(n * 2);
  for (std::size_t i = 0; i < n; ++i) index.emplace(out.elements[i], static_cast<Vertex>(i));

  std::vector<Arc> arcs;
  arcs.reserve(n * conn.size());
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& x : conn) arcs.emplace_back(static_cast<Vertex>(i), index.at(x * out.elements[i]));
  }
  out.digraph = Digraph(n, arcs, bounds);

  std::vector<Permutation> gens;
  for (const auto& g : r.generators()) {
    std::vector<Point> img(n);
    for (std::size_t i = 0; i < n; ++i) img[i] = index.at(out.elements[i] * g);
    gens.emplace_back(std::move(img));
  }
  out.group = PermutationGroup(n, std::move(gens));
  return out;
}

CosetDigraph build_diagonal_coset_digraph(const PermutationGroup& t,
                                          const std::vector<Permutation>& g,
                                          const SearchBounds& bounds) {
  if (g.size() < 2) throw InvalidArgument("diagonal coset digraph: need k >= 2 coordinates");
  for (const auto& x : g) {
    if (x.degree() != t.degree() || !t.contains(x)) {
      throw InvalidArgument("diagonal coset digraph: " + x.to_cycle_string() + " is not in T");
    }
  }
  const std::size_t k = g.size();
  CosetDigraphSpec spec{direct_power(t, k), diagonal_subgroup(t, k), tuple_element(g)};
  return build_coset_digraph(spec, bounds);
}

GammaCertificate gamma_certificate(const PermutationGroup& t,
                                   const std::vector<Permutation>& enumeration,
                                   const SearchBounds& bounds) {
  bool abelian = true;
  for (const auto& a : t.generators()) {
    for (const auto& b : t.generators()) abelian = abelian && a * b == b * a;
  }
  if (abelian) throw InvalidArgument("gamma_certificate: T is abelian");
  if (!is_nonabelian_simple(t, bounds)) throw InvalidArgument("gamma_certificate: T is not simple");

  std::vector<Permutation> elems = enumeration.empty() ? t.elements(bounds) : enumeration;
  const std::size_t k = static_cast<std::size_t>(t.order());
  if (elems.size() != k) throw InvalidArgument("gamma_certificate: enumeration has the wrong length");
  {
    std::unordered_set<Permutation> distinct;
    for (const auto& x : elems) {
      if (x.degree() != t.degree() || !t.contains(x)) {
        throw InvalidArgument("gamma_certificate: " + x.to_cycle_string() + " is not in T");
      }
      if (!distinct.insert(x).second) {
        throw InvalidArgument("gamma_certificate: " + x.to_cycle_string() + " listed twice");
      }
    }
  }

  GammaCertificate c;
  c.t_order = k;
  c.vertex_count = 1;
  for (std::size_t i = 0; i + 1 < k; ++i) c.vertex_count *= k;
  c.r_order = c.vertex_count;
  c.d_order = k;
  c.g_order = c.vertex_count * k;

  // (t,...,t) lies in R iff its last coordinate t is trivial.
  for (const auto& x : elems) c.rd_intersection_order += x.is_identity() ? 1 : 0;
  c.intersection_rd_trivial = c.rd_intersection_order == 1;
  c.product_rd_is_g = c.r_order * c.d_order / c.rd_intersection_order == c.g_order;

  // (t,...,t)^g = (t^{t_1}, ..., t^{t_k}) lies in D iff all coordinates agree.
  for (const auto& x : elems) {
    const Permutation first = x.conjugate(elems[0]);
    bool same = true;
    for (std::size_t i = 1; i < k && same; ++i) same = x.conjugate(elems[i]) == first;
    c.diag_self_intersection_order += same ? 1 : 0;
  }
  c.valency = k / c.diag_self_intersection_order;
  return c;
}

DigraphWithAction product_action_digraph(const Digraph& sigma, const PermutationGroup& g,
                                         std::size_t m, const SearchBounds& bounds) {
  if (g.degree() != sigma.vertex_count()) {
    throw InvalidArgument("product action: group degree differs from the vertex count");
  }
  for (const auto& x : g.generators()) {
    if (auto bad = first_unmapped_arc(sigma, x)) {
      throw ValidationError("generator " + x.to_cycle_string() + " maps arc " +
                            std::to_string(bad->first) + "->" + std::to_string(bad->second) +
                            " to a non-arc");
    }
  }
  if (m == 0) throw InvalidArgument("product action: m must be positive");
  Digraph d = power(sigma, m, bounds);
  PermutationGroup w = wreath_product_action(g, m, bounds);
  for (const auto& x : w.generators()) {
    if (first_unmapped_arc(d, x)) {
      throw ValidationError("wreath generator " + x.to_cycle_string() + " is not an automorphism");
    }
  }
  return {std::move(d), std::move(w)};
}

std::vector<OrbitalDigraph> orbital_digraphs(const PermutationGroup& g, const SearchBounds& bounds) {
  if (!g.is_transitive()) throw InvalidArgument("orbital digraphs need a transitive group");
  const std::size_t n = g.degree();
  const BigInt pairs = BigInt(n) * n;
  if (pairs > bounds.digraph_arcs) {
    throw BoundExceeded("digraph_arcs", bounds.digraph_arcs, pairs.str() + " ordered pairs");
  }
  const auto suborbits = g.stabilizer(0).orbits();
  std::vector<OrbitalDigraph> out;
  for (const auto& orb : suborbits) {
    const Vertex delta = orb.front();
    if (delta == 0) continue;
    std::vector<char> seen(n * n, 0);
    std::vector<Arc> arcs{{0, delta}};
    seen[delta] = 1;
    for (std::size_t i = 0; i < arcs.size(); ++i) {
      for (const auto& x : g.generators()) {
        const Arc a{x[arcs[i].first], x[arcs[i].second]};
        if (!seen[static_cast<std::size_t>(a.first) * n + a.second]) {
          seen[static_cast<std::size_t>(a.first) * n + a.second] = 1;
          arcs.push_back(a);
        }
      }
    }
    if (seen[static_cast<std::size_t>(delta) * n]) continue;  // self-paired
    Vertex paired = 0;
    for (Vertex p = 1; p < n; ++p) {
      if (seen[static_cast<std::size_t>(p) * n]) {
        paired = p;
        break;
      }
    }
    out.push_back(OrbitalDigraph{delta, paired, Digraph(n, arcs, bounds)});
  }
  return out;
}

}  // namespace arcsym
