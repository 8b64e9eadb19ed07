#include "arcsym/digraph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>

#include "arcsym/error.hpp"

namespace arcsym {

Digraph::Digraph(std::size_t vertex_count, std::span<const Arc> arcs, const SearchBounds& bounds) {
  if (vertex_count == 0) throw InvalidArgument("digraph needs at least one vertex");
  if (vertex_count > bounds.digraph_vertices) {
    throw BoundExceeded("digraph_vertices", bounds.digraph_vertices,
                        std::to_string(vertex_count) + " vertices");
  }
  if (arcs.size() > bounds.digraph_arcs) {
    throw BoundExceeded("digraph_arcs", bounds.digraph_arcs,
                        std::to_string(arcs.size()) + " arcs");
  }
  std::vector<Arc> sorted(arcs.begin(), arcs.end());
  for (const auto& [u, v] : sorted) {
    if (u >= vertex_count || v >= vertex_count) {
      throw InvalidArgument("arc (" + std::to_string(u) + "," + std::to_string(v) +
                            ") out of range for " + std::to_string(vertex_count) + " vertices");
    }
    if (u == v) throw ValidationError("loop at vertex " + std::to_string(u) + " (irreflexivity)");
  }
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  offsets_.assign(vertex_count + 1, 0);
  in_degree_.assign(vertex_count, 0);
  targets_.reserve(sorted.size());
  for (const auto& [u, v] : sorted) {
    ++offsets_[u + 1];
    ++in_degree_[v];
    targets_.push_back(v);
  }
  for (std::size_t i = 0; i < vertex_count; ++i) offsets_[i + 1] += offsets_[i];
  for (const auto& [u, v] : sorted) {
    if (u < v && has_arc(v, u)) {
      throw ValidationError("arcs " + std::to_string(u) + "->" + std::to_string(v) +
                            " and back (antisymmetry)");
    }
  }
}

bool Digraph::has_arc(Vertex u, Vertex v) const {
  auto out = out_neighbors(u);
  return std::binary_search(out.begin(), out.end(), v);
}

std::vector<Arc> Digraph::arcs() const {
  std::vector<Arc> out;
  out.reserve(arc_count());
  for (Vertex u = 0; u < vertex_count(); ++u) {
    for (Vertex v : out_neighbors(u)) out.emplace_back(u, v);
  }
  return out;
}

Digraph build_digraph(std::size_t n, std::span<const Arc> arcs, const SearchBounds& bounds) {
  return Digraph(n, arcs, bounds);
}

ValencyProfile valency_profile(const Digraph& d) {
  ValencyProfile p;
  const std::size_t k = d.out_degree(0);
  for (Vertex v = 0; v < d.vertex_count(); ++v) {
    if (d.out_degree(v) != k || d.in_degree(v) != k) {
      p.offending = v;
      p.out_degree = d.out_degree(v);
      p.in_degree = d.in_degree(v);
      return p;
    }
  }
  p.valency = k;
  p.out_degree = p.in_degree = k;
  return p;
}

BigInt count_s_arcs(const Digraph& d, std::size_t s) {
  const std::size_t n = d.vertex_count();
  // c[v] = number of j-arcs starting at v.
  std::vector<BigInt> c(n, BigInt(1));
  for (std::size_t j = 0; j < s; ++j) {
    std::vector<BigInt> next(n, BigInt(0));
    for (Vertex v = 0; v < n; ++v) {
      for (Vertex w : d.out_neighbors(v)) next[v] += c[w];
    }
    c.swap(next);
  }
  BigInt total = 0;
  for (const auto& x : c) total += x;
  return total;
}

std::vector<SArc> enumerate_s_arcs(const Digraph& d, std::size_t s, const SearchBounds& bounds) {
  const BigInt total = count_s_arcs(d, s);
  if (total > bounds.s_arc_enumeration) {
    throw BoundExceeded("s_arc_enumeration", bounds.s_arc_enumeration,
                        total.str() + " " + std::to_string(s) + "-arcs");
  }
  std::vector<SArc> out;
  out.reserve(static_cast<std::size_t>(total));
  SArc walk(s + 1);
  // Iterative DFS; pos[i] indexes into the out-list of walk[i-1].
  std::vector<std::size_t> pos(s + 1, 0);
  for (Vertex v0 = 0; v0 < d.vertex_count(); ++v0) {
    walk[0] = v0;
    if (s == 0) {
      out.push_back(walk);
      continue;
    }
    std::size_t depth = 1;
    pos[1] = 0;
    while (depth > 0) {
      auto nbrs = d.out_neighbors(walk[depth - 1]);
      if (pos[depth] == nbrs.size()) {
        --depth;
        if (depth > 0) ++pos[depth];
        continue;
      }
      walk[depth] = nbrs[pos[depth]];
      if (depth == s) {
        out.push_back(walk);
        ++pos[depth];
      } else {
        ++depth;
        pos[depth] = 0;
      }
    }
  }
  return out;
}

bool is_s_arc(const Digraph& d, std::span<const Vertex> walk) {
  if (walk.empty()) return false;
  for (Vertex v : walk) {
    if (v >= d.vertex_count()) return false;
  }
  for (std::size_t i = 1; i < walk.size(); ++i) {
    if (!d.has_arc(walk[i - 1], walk[i])) return false;
  }
  return true;
}

namespace {

std::size_t reach_count(const Digraph& d, bool forward) {
  const std::size_t n = d.vertex_count();
  std::vector<std::vector<Vertex>> in;
  if (!forward) {
    in.resize(n);
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v : d.out_neighbors(u)) in[v].push_back(u);
    }
  }
  std::vector<bool> seen(n, false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    const Vertex u = stack.back();
    stack.pop_back();
    auto visit = [&](Vertex v) {
      if (!seen[v]) {
        seen[v] = true;
        ++count;
        stack.push_back(v);
      }
    };
    if (forward) {
      for (Vertex v : d.out_neighbors(u)) visit(v);
    } else {
      for (Vertex v : in[u]) visit(v);
    }
  }
  return count;
}

}  // namespace

bool is_strongly_connected(const Digraph& d) {
  const std::size_t n = d.vertex_count();
  return n > 0 && reach_count(d, true) == n && reach_count(d, false) == n;
}

bool is_directed_cycle(const Digraph& d) {
  const auto p = valency_profile(d);
  return p.valency == 1 && is_strongly_connected(d);
}

Digraph direct_product(const Digraph& gamma, const Digraph& sigma, const SearchBounds& bounds) {
  const BigInt nv = BigInt(gamma.vertex_count()) * sigma.vertex_count();
  const BigInt na = BigInt(gamma.arc_count()) * sigma.arc_count();
  if (nv > bounds.digraph_vertices) {
    throw BoundExceeded("digraph_vertices", bounds.digraph_vertices, nv.str() + " product vertices");
  }
  if (na > bounds.digraph_arcs) {
    throw BoundExceeded("digraph_arcs", bounds.digraph_arcs, na.str() + " product arcs");
  }
  const std::size_t m = sigma.vertex_count();
  std::vector<Arc> arcs;
  arcs.reserve(static_cast<std::size_t>(na));
  for (const auto& [u1, u2] : gamma.arcs()) {
    for (const auto& [v1, v2] : sigma.arcs()) {
      arcs.emplace_back(static_cast<Vertex>(u1 * m + v1), static_cast<Vertex>(u2 * m + v2));
    }
  }
  return Digraph(static_cast<std::size_t>(nv), arcs, bounds);
}

Digraph power(const Digraph& sigma, std::size_t m, const SearchBounds& bounds) {
  if (m == 0) throw InvalidArgument("power: m must be positive");
  Digraph out = sigma;
  for (std::size_t i = 1; i < m; ++i) out = direct_product(out, sigma, bounds);
  return out;
}

std::optional<Arc> first_unmapped_arc(const Digraph& d, const Permutation& p) {
  if (p.degree() != d.vertex_count()) {
    throw InvalidArgument("permutation of degree " + std::to_string(p.degree()) +
                          " on a digraph with " + std::to_string(d.vertex_count()) + " vertices");
  }
  // p is a bijection on vertices, so arc count is preserved and mapping every
  // arc to an arc means the arc set is mapped onto itself.
  for (const auto& [u, v] : d.arcs()) {
    if (!d.has_arc(p[u], p[v])) return Arc{u, v};
  }
  return std::nullopt;
}

bool is_automorphism(const Digraph& d, const Permutation& p) {
  return !first_unmapped_arc(d, p).has_value();
}

void write_edge_list(std::ostream& out, const Digraph& d) {
  out << d.vertex_count() << ' ' << d.arc_count() << '\n';
  for (const auto& [u, v] : d.arcs()) out << u << ' ' << v << '\n';
}

Digraph read_edge_list(std::istream& in, const SearchBounds& bounds) {
  std::size_t n = 0;
  std::size_t m = 0;
  if (!(in >> n >> m)) throw InvalidArgument("edge list: missing 'n m' header");
  if (m > bounds.digraph_arcs) {
    throw BoundExceeded("digraph_arcs", bounds.digraph_arcs, std::to_string(m) + " arcs");
  }
  std::vector<Arc> arcs;
  arcs.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    long long u = 0;
    long long v = 0;
    if (!(in >> u >> v)) {
      throw InvalidArgument("edge list: expected " + std::to_string(m) + " arcs, read " +
                            std::to_string(i));
    }
    if (u < 0 || v < 0) throw InvalidArgument("edge list: negative vertex");
    arcs.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  std::string rest;
  if (in >> rest) throw InvalidArgument("edge list: trailing data '" + rest + "'");
  return Digraph(n, arcs, bounds);
}

void write_dot(std::ostream& out, const Digraph& d, const std::string& name) {
  out << "digraph " << name << " {\n";
  for (Vertex v = 0; v < d.vertex_count(); ++v) out << "  " << v << ";\n";
  for (const auto& [u, v] : d.arcs()) out << "  " << u << " -> " << v << ";\n";
  out << "}\n";
}

}  // namespace arcsym
