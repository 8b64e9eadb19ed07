#include "arcsym/symmetry.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <unordered_set>

#include "arcsym/actions.hpp"
#include "arcsym/blocks.hpp"
#include "arcsym/error.hpp"
#include "arcsym/group_table.hpp"
#include "arcsym/subgroups.hpp"

namespace arcsym {

const char* to_string(Status s) {
  switch (s) {
    case Status::kPass: return "pass";
    case Status::kFail: return "fail";
    case Status::kNotApplicable: return "not-applicable";
    case Status::kVacuous: return "vacuous";
  }
  return "?";
}

const char* to_string(Transitivity t) {
  switch (t) {
    case Transitivity::kTrue: return "true";
    case Transitivity::kFalse: return "false";
    case Transitivity::kVacuous: return "vacuous";
  }
  return "?";
}

DigraphAction bind_action(Digraph digraph, PermutationGroup group) {
  if (group.degree() != digraph.vertex_count()) {
    throw InvalidArgument("group of degree " + std::to_string(group.degree()) + " on " +
                          std::to_string(digraph.vertex_count()) + " vertices");
  }
  for (std::size_t i = 0; i < group.generators().size(); ++i) {
    const auto& x = group.generators()[i];
    if (auto bad = first_unmapped_arc(digraph, x)) {
      throw ValidationError("generator " + std::to_string(i) + " " + x.to_cycle_string() +
                            " maps arc " + std::to_string(bad->first) + "->" +
                            std::to_string(bad->second) + " to " + std::to_string(x[bad->first]) +
                            "->" + std::to_string(x[bad->second]) + ", not an arc");
    }
  }
  return DigraphAction{std::move(digraph), std::move(group)};
}

bool is_vertex_transitive(const DigraphAction& a) { return a.group.is_transitive(); }

namespace {

// c[j][v]: number of j-arcs starting at v.
std::vector<std::vector<BigInt>> arc_counts(const Digraph& d, std::size_t s) {
  const std::size_t n = d.vertex_count();
  std::vector<std::vector<BigInt>> c(s + 1, std::vector<BigInt>(n, BigInt(0)));
  std::fill(c[0].begin(), c[0].end(), BigInt(1));
  for (std::size_t j = 1; j <= s; ++j) {
    for (Vertex v = 0; v < n; ++v) {
      for (Vertex w : d.out_neighbors(v)) c[j][v] += c[j - 1][w];
    }
  }
  return c;
}

}  // namespace

Transitivity is_s_arc_transitive(const DigraphAction& a, std::size_t s) {
  const auto c = arc_counts(a.digraph, s);
  BigInt total = 0;
  for (const auto& x : c[s]) total += x;
  if (total == 0) return Transitivity::kVacuous;

  // First s-arc in lexicographic order.
  SArc walk;
  for (Vertex v = 0; v < a.digraph.vertex_count(); ++v) {
    if (c[s][v] > 0) {
      walk.push_back(v);
      break;
    }
  }
  for (std::size_t i = 1; i <= s; ++i) {
    for (Vertex w : a.digraph.out_neighbors(walk.back())) {
      if (c[s - i][w] > 0) {
        walk.push_back(w);
        break;
      }
    }
  }
  std::vector<Point> pts(walk.begin(), walk.end());
  const BigInt orbit = a.group.order() / a.group.pointwise_stabilizer(pts).order();
  return orbit == total ? Transitivity::kTrue : Transitivity::kFalse;
}

std::size_t count_s_arc_orbits(const DigraphAction& a, std::size_t s, const SearchBounds& bounds) {
  const Digraph& d = a.digraph;
  const auto arcs = enumerate_s_arcs(d, s, bounds);
  if (arcs.empty()) return 0;
  const auto big = arc_counts(d, s);
  std::vector<std::vector<std::uint64_t>> c(s + 1);
  for (std::size_t j = 0; j <= s; ++j) {
    for (const auto& x : big[j]) c[j].push_back(static_cast<std::uint64_t>(x));
  }
  std::vector<std::uint64_t> start(d.vertex_count() + 1, 0);
  for (Vertex v = 0; v < d.vertex_count(); ++v) start[v + 1] = start[v] + c[s][v];

  auto rank = [&](const SArc& w) {
    std::uint64_t r = start[w[0]];
    for (std::size_t i = 1; i <= s; ++i) {
      for (Vertex x : d.out_neighbors(w[i - 1])) {
        if (x >= w[i]) break;
        r += c[s - i][x];
      }
    }
    return r;
  };

  std::vector<std::size_t> parent(arcs.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  std::size_t orbits = arcs.size();
  SArc image(s + 1);
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    for (const auto& g : a.group.generators()) {
      for (std::size_t j = 0; j <= s; ++j) image[j] = g[arcs[i][j]];
      const std::size_t ra = find(i);
      const std::size_t rb = find(static_cast<std::size_t>(rank(image)));
      if (ra != rb) {
        parent[std::max(ra, rb)] = std::min(ra, rb);
        --orbits;
      }
    }
  }
  return orbits;
}

TwoArcStabilizerData two_arc_stabilizer_data(const DigraphAction& a, const SArc& two_arc) {
  if (two_arc.size() != 3 || !is_s_arc(a.digraph, two_arc)) {
    throw InvalidArgument("two_arc_stabilizer_data: not a 2-arc");
  }
  const Point u = two_arc[0];
  const Point v = two_arc[1];
  const Point w = two_arc[2];
  const Point uv[] = {v, u};
  const Point vw[] = {v, w};
  SubgroupHandle gv(a.group, a.group.stabilizer(v));
  SubgroupHandle guv(a.group, a.group.pointwise_stabilizer(uv));
  SubgroupHandle gvw(a.group, a.group.pointwise_stabilizer(vw));
  auto fo = factorize(gv.order());
  auto fuv = factorize(guv.order());
  auto fvw = factorize(gvw.order());
  return TwoArcStabilizerData{two_arc, std::move(gv), std::move(guv), std::move(gvw),
                              std::move(fo), std::move(fuv), std::move(fvw)};
}

LemmaPrimeFactnReport verify_lemma_prime_factn(const DigraphAction& a,
                                               const TwoArcStabilizerData& data,
                                               const SearchBounds& bounds) {
  LemmaPrimeFactnReport r;
  if (!is_strongly_connected(a.digraph)) {
    r.reason = "digraph is not connected";
    return r;
  }
  if (is_s_arc_transitive(a, 2) != Transitivity::kTrue) {
    r.reason = "action is not 2-arc-transitive";
    return r;
  }
  r.applicable = true;

  const auto& gv = data.gv.group();
  const auto& guv = data.guv.group();
  const auto& gvw = data.gvw.group();
  const BigInt meet = intersection(guv, gvw, bounds).order();
  const bool fact = check_factorization(gv, guv, gvw, bounds);
  r.a.status = fact ? Status::kPass : Status::kFail;
  r.a.detail = "|G_v|=" + gv.order().str() + " |G_uv|=" + guv.order().str() +
               " |G_vw|=" + gvw.order().str() + " |G_uv^G_vw|=" + meet.str();

  const BigInt need = half_exponent_divisor(data.gv_order);
  const bool equal = guv.order() == gvw.order();
  const bool divides = guv.order() % need == 0;
  r.b.status = equal && divides ? Status::kPass : Status::kFail;
  r.b.detail = "|G_uv|=" + guv.order().str() + " |G_vw|=" + gvw.order().str() +
               " required divisor " + need.str() + " (|G_v|=" + data.gv_order.to_string() + ")";

  if (guv == gvw) {
    r.c.status = Status::kNotApplicable;
    r.c.detail = "G_uv = G_vw";
  } else {
    const auto in_g = are_conjugate(a.group, guv, gvw, bounds);
    const auto in_gv = are_conjugate(gv, guv, gvw, bounds);
    r.c.status = in_g && !in_gv ? Status::kPass : Status::kFail;
    r.c.detail = std::string("conjugate in G: ") + (in_g ? "yes via " + in_g->to_cycle_string() : "no") +
                 "; conjugate in G_v: " + (in_gv ? "yes via " + in_gv->to_cycle_string() : "no");
  }
  return r;
}

bool coset_two_arc_criterion(const CosetDigraphSpec& spec, const SearchBounds& bounds) {
  validate_coset_spec(spec);
  const auto& h = spec.H;
  const PermutationGroup guv = intersection(h, conjugate_group(h, spec.g.inverse()), bounds);
  const PermutationGroup gvw = intersection(h, conjugate_group(h, spec.g), bounds);
  return check_factorization(h, guv, gvw, bounds);
}

namespace {

class RegularSearch {
 public:
  RegularSearch(const PermutationGroup& g, const SearchBounds& bounds)
      : g_(g), n_(g.degree()), bounds_(bounds) {
    const Point zero[] = {0};
    chain_ = g.chain_with_base(zero);
    // transversals_[i][p]: element of level i mapping its base point to p.
    transversals_.resize(chain_.length());
    for (std::size_t i = 0; i < chain_.length(); ++i) {
      for (Point p : chain_.level(i).orbit) transversals_[i].emplace_back(p, chain_.transversal(i, p));
      std::sort(transversals_[i].begin(), transversals_[i].end(),
                [](const auto& x, const auto& y) { return x.first < y.first; });
    }
  }

  std::optional<std::vector<Permutation>> run() {
    std::vector<Permutation> k{Permutation::identity(n_)};
    if (dfs(k, {})) return found_;
    return std::nullopt;
  }

 private:
  // Closure of `gens`, or nullopt once it stops being semiregular.
  std::optional<std::vector<Permutation>> semiregular_closure(const std::vector<Permutation>& gens) {
    std::vector<Permutation> elems{Permutation::identity(n_)};
    std::unordered_set<Permutation> seen{elems[0]};
    for (std::size_t i = 0; i < elems.size(); ++i) {
      for (const auto& s : gens) {
        Permutation y = elems[i] * s;
        if (seen.contains(y)) continue;
        if (y.fixed_point_count() != 0 || elems.size() + 1 > n_) return std::nullopt;
        seen.insert(y);
        elems.push_back(std::move(y));
      }
    }
    std::sort(elems.begin(), elems.end());
    return elems;
  }

  static bool cycles_uniform(const Permutation& x) {
    const auto t = x.cycle_type();
    return t.front() == t.back() && t.front() > 1;
  }

  bool dfs(const std::vector<Permutation>& k, const std::vector<Permutation>& gens) {
    if (k.size() == n_) {
      found_ = gens;
      return true;
    }
    std::vector<Point> key;
    key.reserve(k.size() * n_);
    for (const auto& x : k) key.insert(key.end(), x.images().begin(), x.images().end());
    if (!explored_.insert(std::move(key)).second) return false;

    std::vector<bool> covered(n_, false);
    for (const auto& x : k) covered[x[0]] = true;
    Point p = 0;
    while (covered[p]) ++p;

    // Candidates: s * t_p for s in G_0, s enumerated level by level.
    const auto& top = transversals_[0];
    auto it = std::lower_bound(top.begin(), top.end(), p,
                               [](const auto& e, Point q) { return e.first < q; });
    bool success = false;
    std::function<void(std::size_t, const Permutation&)> walk = [&](std::size_t level,
                                                                  const Permutation& suffix) {
      if (success) return;
      if (level == transversals_.size()) {
        if (++nodes_ > bounds_.regular_search_nodes) {
          throw SearchExhausted("regular_search_nodes", bounds_.regular_search_nodes,
                                "regular-subgroup search did not finish");
        }
        if (!cycles_uniform(suffix)) return;
        auto next_gens = gens;
        next_gens.push_back(suffix);
        auto closure = semiregular_closure(next_gens);
        if (closure && dfs(*closure, next_gens)) success = true;
        return;
      }
      for (const auto& [q, u] : transversals_[level]) {
        walk(level + 1, u * suffix);
        if (success) return;
      }
    };
    walk(1, it->second);
    return success;
  }

  const PermutationGroup& g_;
  std::size_t n_;
  const SearchBounds& bounds_;
  StabilizerChain chain_;
  std::vector<std::vector<std::pair<Point, Permutation>>> transversals_;
  std::unordered_set<std::vector<Point>, KeyHash> explored_;
  std::vector<Permutation> found_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

std::optional<SubgroupHandle> find_regular_subgroup(const PermutationGroup& g,
                                                    const SearchBounds& bounds) {
  if (g.order() > bounds.regular_search_order) {
    throw BoundExceeded("regular_search_order", bounds.regular_search_order,
                        "group of order " + g.order().str());
  }
  const std::size_t n = g.degree();
  if (n == 1) return SubgroupHandle::trivial(g);
  if (!g.is_transitive() || g.order() % n != 0) return std::nullopt;
  RegularSearch search(g, bounds);
  auto gens = search.run();
  if (!gens) return std::nullopt;
  SubgroupHandle r(g, *gens);
  if (r.order() != BigInt(n) || !r.group().is_regular()) {
    throw Error("regular-subgroup search produced a non-regular witness");
  }
  return r;
}

LemmaValReport lemma_val_check(const DigraphAction& a) {
  LemmaValReport r;
  if (!is_vertex_transitive(a)) {
    r.branch = "not vertex-transitive";
    return r;
  }
  if (!is_primitive(a.group)) {
    r.branch = "not vertex-primitive";
    return r;
  }
  if (is_s_arc_transitive(a, 1) != Transitivity::kTrue) {
    r.branch = "not 1-arc-transitive";
    return r;
  }
  const auto profile = valency_profile(a.digraph);
  r.valency = profile.valency.value_or(0);
  if (is_directed_cycle(a.digraph) && is_prime(a.digraph.vertex_count())) {
    r.status = Status::kPass;
    r.branch = "prime-cycle";
  } else if (profile.valency && *profile.valency >= 3) {
    r.status = Status::kPass;
    r.branch = "valency>=3";
  } else {
    r.status = Status::kFail;
    r.branch = "counterexample: valency " + std::to_string(r.valency);
  }
  return r;
}

RglrHypothesisReport lemma_rglr_hypothesis_check(const PermutationGroup& g,
                                                 const SearchBounds& bounds) {
  GroupTable t(g, bounds);
  const TableSubgroup whole = t.whole();
  const std::uint64_t g_order = g.small_order();
  const std::uint64_t v = g.degree();

  RglrHypothesisReport out;
  for (const auto& y : table_subgroup_classes(t)) {
    const bool is_whole = y.order() == whole.order();
    const PermutationGroup yg = t.to_group(y);
    if (!yg.is_transitive()) continue;
    if (!is_whole && t.core(y, whole).order() != 1) continue;

    const TableSubgroup rad = table_solvable_radical(t, y);
    const TableSubgroup perfect = t.perfect_core(y);
    const TableSubgroup meet = t.intersection(perfect, rad);
    const std::uint64_t top = perfect.order() / meet.order();

    // P/(P ∩ Rad) is simple iff no normal subgroup of P lies strictly between.
    bool simple = top > 1;
    if (simple) {
      for (const auto& nsub : table_normal_subgroups(t, perfect)) {
        if (nsub.order() != meet.order() && nsub.order() != perfect.order() &&
            meet.elements.is_subset_of(nsub.elements)) {
          simple = false;
          break;
        }
      }
    }
    RglrSubgroupReport rep{SubgroupHandle(g, yg), is_whole, rad.order(), top, simple,
                           false, false, std::nullopt};
    rep.condition_a = simple && top > v;
    for (std::uint64_t p : prime_divisors(g_order)) {
      const std::uint64_t gp = p_part(g_order, p);
      if (p_part(top, p) == gp && p_part(v, p) == gp) {
        rep.condition_b = true;
        rep.witness_prime = p;
        break;
      }
    }
    out.subgroups.push_back(std::move(rep));
  }
  out.vacuous = out.subgroups.empty();
  out.holds = std::all_of(out.subgroups.begin(), out.subgroups.end(),
                          [](const auto& r) { return r.condition_a && r.condition_b; });
  return out;
}

std::optional<SubgroupHandle> lemma_rglr_brute_force(const PermutationGroup& g, std::size_t m,
                                                     const SearchBounds& bounds) {
  if (m < 2) throw InvalidArgument("lemma_rglr_brute_force: m must be at least 2");
  return find_regular_subgroup(wreath_product_action(g, m, bounds), bounds);
}

}  // namespace arcsym
