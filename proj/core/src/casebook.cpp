#include "arcsym/casebook.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

#include "arcsym/actions.hpp"
#include "arcsym/arith.hpp"
#include "arcsym/blocks.hpp"
#include "arcsym/catalog.hpp"
#include "arcsym/error.hpp"
#include "arcsym/subgroups.hpp"

namespace arcsym {

namespace {

Claim compare(std::string claim, const std::string& expected, const std::string& actual,
              std::string witness = {}) {
  return Claim{std::move(claim), expected == actual ? Status::kPass : Status::kFail, expected,
               actual, std::move(witness)};
}

Claim verdict(std::string claim, bool ok, std::string expected, std::string actual,
              std::string witness = {}) {
  return Claim{std::move(claim), ok ? Status::kPass : Status::kFail, std::move(expected),
               std::move(actual), std::move(witness)};
}

std::string join(const std::vector<std::uint64_t>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

Digraph directed_cycle(std::size_t n) {
  std::vector<Arc> arcs;
  for (std::size_t i = 0; i < n; ++i) {
    arcs.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n));
  }
  return Digraph(n, arcs);
}

// Small deterministic generator independent of the standard library's
// distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint32_t seed) : engine_(seed) {}
  std::uint32_t below(std::uint32_t n) { return static_cast<std::uint32_t>(engine_() % n); }

 private:
  std::mt19937 engine_;
};

// ---------------------------------------------------------------------------

CaseResult case_sp6_2_arith(const CasebookOptions& opt) {
  CaseResult r{"sp6_2_arith", {}, 0};
  const Catalog cat = load_catalog(opt.catalog_dir);
  const auto& g = cat.sp6_2.group;
  r.claims.push_back(compare("|Sp6(2)| from the bundled degree-63 generators", "1451520",
                             g.order().str()));
  const FactoredInteger f = factorize(g.order());
  r.claims.push_back(compare("factorization of |Sp6(2)|", "2^9 * 3^4 * 5 * 7", f.to_string()));
  r.claims.push_back(compare("pi(|Sp6(2)|)", "{2,3,5,7}", join(prime_divisors(g.small_order()))));
  r.claims.push_back(compare("|Sp6(2)|_2", "512", std::to_string(p_part(g.small_order(), 2))));
  const BigInt half = half_exponent_divisor(f);
  r.claims.push_back(compare("half-exponent divisor of |G_v| = |Sp6(2)|", "10080",
                             half.str(), factorize(half).to_string()));
  r.claims.push_back(compare("Sp6(2) is transitive on 63 points", "true",
                             bool_str(g.degree() == 63 && g.is_transitive())));
  return r;
}

CaseResult case_he_divisor(const CasebookOptions&) {
  CaseResult r{"he_divisor", {}, 0};
  const FactoredInteger n({{2, 9}, {3, 2}, {5, 2}, {17, 1}});
  const BigInt half = half_exponent_divisor(n);
  r.claims.push_back(compare("half-exponent divisor of 2^9 * 3^2 * 5^2 * 17", "8160", half.str(),
                             factorize(half).to_string()));
  r.claims.push_back(compare("divisor factorization", "2^5 * 3 * 5 * 17", factorize(half).to_string()));
  r.claims.push_back(verdict("divisor squared is a multiple of n and divisor divides n",
                             (half * half) % n.value() == 0 && n.value() % half == 0, "true",
                             bool_str((half * half) % n.value() == 0 && n.value() % half == 0)));
  return r;
}

CaseResult case_gamma_a5(const CasebookOptions& opt) {
  CaseResult r{"gamma_a5", {}, 0};
  const Catalog cat = load_catalog(opt.catalog_dir);
  const auto& a5 = cat.find("A5").group;
  const GammaCertificate c = gamma_certificate(a5, {}, opt.bounds);

  const BigInt v = boost::multiprecision::pow(BigInt(60), 59);
  const BigInt m = boost::multiprecision::pow(BigInt(60), 60);
  r.claims.push_back(compare("k = |A5|", "60", std::to_string(c.t_order)));
  r.claims.push_back(compare("vertex count |T|^(k-1) = 60^59", v.str(), c.vertex_count.str()));
  r.claims.push_back(compare("R ∩ D = 1", "1", std::to_string(c.rd_intersection_order)));
  r.claims.push_back(compare("|R|·|D| = |T|^k = 60^60", m.str(), BigInt(c.r_order * c.d_order).str()));
  r.claims.push_back(compare("M = RD (Cayley witness)", "true", bool_str(c.product_rd_is_g)));
  r.claims.push_back(compare("|D ∩ D^g|", "1", std::to_string(c.diag_self_intersection_order)));
  r.claims.push_back(compare("valency |D|/|D ∩ D^g|", "60", std::to_string(c.valency)));

  Rng rng(20240617);
  std::vector<Permutation> elems = a5.elements(opt.bounds);
  std::size_t same = 0;
  for (int trial = 0; trial < 10; ++trial) {
    for (std::size_t i = elems.size(); i > 1; --i) std::swap(elems[i - 1], elems[rng.below(static_cast<std::uint32_t>(i))]);
    const GammaCertificate d = gamma_certificate(a5, elems, opt.bounds);
    same += d.vertex_count == c.vertex_count && d.rd_intersection_order == c.rd_intersection_order &&
            d.product_rd_is_g == c.product_rd_is_g &&
            d.diag_self_intersection_order == c.diag_self_intersection_order && d.valency == c.valency;
  }
  r.claims.push_back(compare("certificate unchanged under 10 random re-enumerations of A5", "10",
                             std::to_string(same)));

  std::string rejected = "accepted";
  try {
    gamma_certificate(cat.find("C5").group, {}, opt.bounds);
  } catch (const InvalidArgument& e) {
    rejected = "rejected";
  }
  r.claims.push_back(compare("abelian T = Z5 is rejected", "rejected", rejected));

  // Desk-scale analogues with k < |T|.
  const auto one = Permutation::identity(a5.degree());
  std::size_t valid2 = 0;
  for (const auto& t : a5.elements(opt.bounds)) {
    CosetDigraphSpec s{direct_power(a5, 2), diagonal_subgroup(a5, 2),
                       tuple_element(std::vector<Permutation>{one, t})};
    valid2 += is_valid_coset_spec(s);
  }
  r.claims.push_back(compare("k = 2: valid g = (1,t) (A5 is real, so t^-1 ~ t always)", "0",
                             std::to_string(valid2)));

  std::vector<Permutation> g3;
  const auto el = a5.elements(opt.bounds);
  for (std::size_t i = 0; i < el.size() && g3.empty(); ++i) {
    for (std::size_t j = 0; j < el.size() && g3.empty(); ++j) {
      CosetDigraphSpec s{direct_power(a5, 3), diagonal_subgroup(a5, 3),
                         tuple_element(std::vector<Permutation>{one, el[i], el[j]})};
      if (is_valid_coset_spec(s)) g3 = {one, el[i], el[j]};
    }
  }
  if (g3.empty()) {
    r.claims.push_back(compare("k = 3: a valid g exists", "true", "false"));
    return r;
  }
  const std::string gdesc = "g = (1, " + g3[1].to_cycle_string() + ", " + g3[2].to_cycle_string() + ")";
  const CosetDigraph d3 = build_diagonal_coset_digraph(a5, g3, opt.bounds);
  const DigraphAction act = bind_action(d3.digraph, d3.group);
  r.claims.push_back(compare("k = 3: vertex count |T|^2", "3600",
                             std::to_string(d3.digraph.vertex_count()), gdesc));
  r.claims.push_back(compare("k = 3: A5^3 acts arc-transitively", "true",
                             to_string(is_s_arc_transitive(act, 1)), gdesc));
  r.claims.push_back(compare("k = 3: valency = |D : D ∩ D^g|", std::to_string(d3.valency),
                             valency_profile(d3.digraph).valency
                                 ? std::to_string(*valency_profile(d3.digraph).valency)
                                 : "irregular",
                             gdesc));
  return r;
}

CaseResult case_lemval_census(const CasebookOptions& opt) {
  CaseResult r{"lemval_census", {}, 0};
  const Catalog cat = load_catalog(opt.catalog_dir);
  std::size_t digraphs = 0;
  std::size_t cycles = 0;
  std::size_t big = 0;
  std::size_t val2 = 0;
  std::size_t failures = 0;
  for (const auto& e : cat.primitive) {
    for (const auto& o : orbital_digraphs(e.group, opt.bounds)) {
      ++digraphs;
      const DigraphAction a = bind_action(o.digraph, e.group);
      const LemmaValReport rep = lemma_val_check(a);
      cycles += rep.branch == "prime-cycle";
      big += rep.branch == "valency>=3";
      val2 += rep.valency == 2;
      failures += rep.status == Status::kFail;
      r.claims.push_back(Claim{e.id + ": orbital digraph of (1," + std::to_string(o.representative + 1) + ")",
                               rep.status, "prime-cycle or valency>=3", rep.branch,
                               "valency " + std::to_string(rep.valency) + ", paired with (1," +
                                   std::to_string(o.paired + 1) + ")"});
    }
  }
  r.claims.push_back(compare("vertex-primitive arc-transitive orbital digraphs of valency 2", "0",
                             std::to_string(val2),
                             std::to_string(digraphs) + " digraphs: " + std::to_string(cycles) +
                                 " prime cycles, " + std::to_string(big) + " of valency >= 3"));
  r.claims.push_back(compare("Lemma counterexamples", "0", std::to_string(failures)));
  return r;
}

// Every valid Cos(G,H,g) over bundled groups of order <= 120 with H running
// over subgroup class representatives of index <= 120 and g over
// double-coset representatives.
struct SweepItem {
  std::string where;
  CosetDigraphSpec spec;
  bool criterion = false;
  std::size_t orbits2 = 0;
  Transitivity fast2 = Transitivity::kFalse;
  std::vector<Transitivity> chain;  // s = 0..4
  bool connected = false;
  std::optional<CosetDigraph> built;
};

struct SweepGroupStats {
  std::string id;
  std::size_t specs = 0;
  std::size_t two_at = 0;
  std::size_t discrepancies = 0;
  std::string first_discrepancy;
};

std::vector<Permutation> double_coset_reps(const PermutationGroup& g, const PermutationGroup& h,
                                           const SearchBounds& bounds) {
  const auto elems = g.elements(bounds);
  const auto helems = h.elements(bounds);
  std::vector<Permutation> sorted = elems;
  std::sort(sorted.begin(), sorted.end());
  std::unordered_set<Permutation> seen;
  std::vector<Permutation> reps;
  for (const auto& x : sorted) {
    if (seen.contains(x)) continue;
    reps.push_back(x);
    for (const auto& a : helems) {
      const Permutation ax = a * x;
      for (const auto& b : helems) seen.insert(ax * b);
    }
  }
  return reps;
}

template <class Visit>
std::vector<SweepGroupStats> coset_sweep(const CasebookOptions& opt, Visit visit) {
  const Catalog cat = load_catalog(opt.catalog_dir);
  std::vector<SweepGroupStats> stats;
  for (const auto* e : cat.all()) {
    const auto& g = e->group;
    if (g.order() > 120) continue;
    SweepGroupStats st{e->id, 0, 0, 0, {}};
    for (const auto& hh : subgroups_up_to_conjugacy(g, opt.bounds)) {
      const auto& h = hh.group();
      if (h.order() == g.order() || g.order() / h.order() > 120) continue;
      for (const auto& x : double_coset_reps(g, h, opt.bounds)) {
        CosetDigraphSpec spec{g, h, x};
        if (!is_valid_coset_spec(spec)) continue;
        SweepItem it{{}, spec, false, 0, Transitivity::kFalse, {}, false, std::nullopt};
        it.where = e->id + " H=<" + std::to_string(h.generators().size()) + " gens, order " +
                   h.order().str() + "> g=" + x.to_cycle_string();
        it.spec = spec;
        it.criterion = coset_two_arc_criterion(spec, opt.bounds);
        CosetDigraph cd = build_coset_digraph(spec, opt.bounds);
        const DigraphAction a = bind_action(cd.digraph, cd.group);
        it.orbits2 = count_s_arc_orbits(a, 2, opt.bounds);
        it.fast2 = is_s_arc_transitive(a, 2);
        for (std::size_t s = 0; s <= 4; ++s) it.chain.push_back(is_s_arc_transitive(a, s));
        it.connected = is_strongly_connected(cd.digraph);
        it.built = std::move(cd);
        ++st.specs;
        const bool brute = it.orbits2 == 1;
        st.two_at += brute;
        if (brute != it.criterion || (it.fast2 == Transitivity::kTrue) != brute) {
          if (st.discrepancies++ == 0) st.first_discrepancy = it.where;
        }
        visit(it);
      }
    }
    stats.push_back(std::move(st));
  }
  return stats;
}

CaseResult case_coset_criterion_sweep(const CasebookOptions& opt) {
  CaseResult r{"coset_criterion_sweep", {}, 0};
  std::size_t chain_violations = 0;
  std::size_t regular_violations = 0;
  std::string chain_witness;
  auto stats = coset_sweep(opt, [&](const SweepItem& it) {
    for (std::size_t s = 1; s < it.chain.size(); ++s) {
      if (it.chain[s] == Transitivity::kTrue && it.chain[s - 1] != Transitivity::kTrue) {
        if (chain_violations++ == 0) chain_witness = it.where;
      }
    }
    if (it.chain[1] == Transitivity::kTrue && !valency_profile(it.built->digraph).valency) {
      ++regular_violations;
    }
  });
  std::size_t total = 0;
  std::size_t discrepancies = 0;
  std::size_t two_at = 0;
  for (const auto& st : stats) {
    total += st.specs;
    discrepancies += st.discrepancies;
    two_at += st.two_at;
    r.claims.push_back(Claim{st.id + ": criterion = brute-force 2-arc-transitivity",
                             st.discrepancies == 0 ? Status::kPass : Status::kFail, "0 discrepancies",
                             std::to_string(st.discrepancies) + " discrepancies",
                             std::to_string(st.specs) + " valid specs, " + std::to_string(st.two_at) +
                                 " 2-arc-transitive" +
                                 (st.first_discrepancy.empty() ? "" : "; first: " + st.first_discrepancy)});
  }
  r.claims.push_back(compare("total discrepancies over all groups of order <= 120", "0",
                             std::to_string(discrepancies),
                             std::to_string(total) + " specs, " + std::to_string(two_at) +
                                 " 2-arc-transitive"));
  r.claims.push_back(compare("s-arc-transitive implies (s-1)-arc-transitive, s <= 4", "0",
                             std::to_string(chain_violations), chain_witness));
  r.claims.push_back(compare("arc-transitive instances are k-regular", "0",
                             std::to_string(regular_violations)));
  return r;
}

CaseResult case_lemma22_sweep(const CasebookOptions& opt) {
  CaseResult r{"lemma22_sweep", {}, 0};
  std::size_t instances = 0;
  std::size_t a_pass = 0;
  std::size_t b_pass = 0;
  std::size_t c_applicable = 0;
  std::size_t c_pass = 0;
  std::string a_fail;
  std::string b_fail;
  std::string c_fail;
  coset_sweep(opt, [&](const SweepItem& it) {
    if (it.orbits2 != 1 || !it.connected) return;
    ++instances;
    const DigraphAction a = bind_action(it.built->digraph, it.built->group);
    const auto data = two_arc_stabilizer_data(a, it.built->canonical_two_arc);
    const auto rep = verify_lemma_prime_factn(a, data, opt.bounds);
    if (rep.a.status == Status::kPass) ++a_pass; else if (a_fail.empty()) a_fail = it.where + ": " + rep.a.detail;
    if (rep.b.status == Status::kPass) ++b_pass; else if (b_fail.empty()) b_fail = it.where + ": " + rep.b.detail;
    if (rep.c.status != Status::kNotApplicable) {
      ++c_applicable;
      if (rep.c.status == Status::kPass) ++c_pass; else if (c_fail.empty()) c_fail = it.where + ": " + rep.c.detail;
    }
  });
  r.claims.push_back(compare("(a) G_v = G_uv G_vw on connected 2-arc-transitive instances",
                             std::to_string(instances), std::to_string(a_pass), a_fail));
  r.claims.push_back(compare("(b) |G_uv| = |G_vw| divisible by ∏ p^⌈f/2⌉",
                             std::to_string(instances), std::to_string(b_pass), b_fail));
  r.claims.push_back(compare("(c) conjugate in G, not in G_v (instances with G_uv != G_vw)",
                             std::to_string(c_applicable), std::to_string(c_pass),
                             c_fail.empty() ? std::to_string(instances - c_applicable) +
                                                  " instances with G_uv = G_vw not applicable"
                                            : c_fail));
  r.claims.push_back(verdict("sweep found connected 2-arc-transitive instances", instances > 0,
                             "> 0", std::to_string(instances)));

  // Degenerate case: directed 5-cycle with its regular group.
  const Catalog cat = load_catalog(opt.catalog_dir);
  const auto& z5 = cat.find("C5").group;
  const DigraphAction c5 = bind_action(directed_cycle(5), z5);
  const auto rep = verify_lemma_prime_factn(c5, two_arc_stabilizer_data(c5, SArc{0, 1, 2}), opt.bounds);
  r.claims.push_back(compare("(C5, Z5): clause (c) with G_uv = G_vw = 1", "not-applicable",
                             to_string(rep.c.status), rep.c.detail));
  r.claims.push_back(compare("(C5, Z5): clauses (a), (b)", "pass pass",
                             std::string(to_string(rep.a.status)) + " " + to_string(rep.b.status)));
  return r;
}

CaseResult case_rglr_tiny(const CasebookOptions& opt) {
  CaseResult r{"rglr_tiny", {}, 0};
  const Catalog cat = load_catalog(opt.catalog_dir);

  auto describe_failure = [](const RglrHypothesisReport& h) {
    for (const auto& y : h.subgroups) {
      if (!y.condition_a || !y.condition_b) {
        return "Y of order " + y.y.order().str() + ": |(Y/Rad Y)^inf| = " + std::to_string(y.top_order) +
               (y.condition_a ? "" : ", (a) fails") + (y.condition_b ? "" : ", (b) fails");
      }
    }
    return std::string("all conditions hold");
  };

  {
    const auto& s3 = cat.find("S3").group;
    const auto h = lemma_rglr_hypothesis_check(s3, opt.bounds);
    r.claims.push_back(compare("S3 on 3 points: hypothesis", "false", bool_str(h.holds), describe_failure(h)));
    const auto reg = lemma_rglr_brute_force(s3, 2, opt.bounds);
    r.claims.push_back(compare("S3 wr S2 on 9 points: regular subgroup order", "9",
                               reg ? reg->order().str() : "none"));
  }
  {
    const auto& z5 = cat.find("C5").group;
    const auto h = lemma_rglr_hypothesis_check(z5, opt.bounds);
    r.claims.push_back(compare("Z5 on 5 points: hypothesis", "false", bool_str(h.holds), describe_failure(h)));
    const auto reg = lemma_rglr_brute_force(z5, 2, opt.bounds);
    bool abelian = reg.has_value();
    if (reg) {
      for (const auto& a : reg->generators()) {
        for (const auto& b : reg->generators()) abelian = abelian && a * b == b * a;
      }
    }
    r.claims.push_back(compare("Z5 wr S2 on 25 points: regular subgroup Z5^2", "25 abelian",
                               reg ? reg->order().str() + (abelian ? " abelian" : " nonabelian") : "none"));
  }
  {
    const auto& s5 = cat.find("S5").group;
    const auto h = lemma_rglr_hypothesis_check(s5, opt.bounds);
    bool cyclic_fails = false;
    for (const auto& y : h.subgroups) cyclic_fails = cyclic_fails || (y.y.order() == 5 && !y.condition_a);
    r.claims.push_back(compare("S5 on 5 points: <5-cycle> transitive core-free, (a) fails", "true",
                               bool_str(cyclic_fails)));
    r.claims.push_back(compare("S5 on 5 points: hypothesis", "false", bool_str(h.holds)));
  }
  {
    const auto& a5 = cat.find("A5").group;
    const auto h = lemma_rglr_hypothesis_check(a5, opt.bounds);
    std::string orders;
    bool solvable = true;
    for (const auto& y : h.subgroups) {
      if (y.is_whole_group) continue;
      orders += (orders.empty() ? "" : ",") + y.y.order().str();
      solvable = solvable && y.top_order == 1;
    }
    r.claims.push_back(compare("A5 on 5 points: transitive core-free proper subgroups", "5,10", orders));
    r.claims.push_back(compare("A5 on 5 points: those subgroups are solvable; hypothesis", "true false",
                               bool_str(solvable) + " " + bool_str(h.holds)));
  }

  // Consistency sweep over every bundled group with |V|^2 <= 100.
  SearchBounds informational = opt.bounds;
  informational.regular_search_nodes = std::min<std::uint64_t>(opt.bounds.regular_search_nodes, 20000);
  informational.regular_search_order = std::min<std::uint64_t>(opt.bounds.regular_search_order, 1000000);
  std::size_t holding = 0;
  std::size_t contradictions = 0;
  std::size_t checked = 0;
  for (const auto* e : cat.all()) {
    const auto& g = e->group;
    if (g.degree() * g.degree() > 100) continue;
    const std::string claim = e->id + ": hypothesis vs regular subgroups of G wr S2";
    RglrHypothesisReport h;
    try {
      h = lemma_rglr_hypothesis_check(g, opt.bounds);
    } catch (const BoundExceeded& ex) {
      r.claims.push_back(Claim{claim, Status::kNotApplicable, "", "hypothesis not evaluated", ex.what()});
      continue;
    }
    ++checked;
    if (h.holds) {
      ++holding;
      std::optional<SubgroupHandle> reg;
      try {
        reg = lemma_rglr_brute_force(g, 2, opt.bounds);
      } catch (const BoundExceeded& ex) {
        r.claims.push_back(Claim{claim, Status::kNotApplicable, "no regular subgroup",
                                 "hypothesis holds; search did not finish", ex.what()});
        continue;
      }
      contradictions += reg.has_value();
      r.claims.push_back(verdict(claim, !reg, "no regular subgroup",
                                 reg ? "regular subgroup of order " + reg->order().str() : "none",
                                 h.vacuous ? "hypothesis holds vacuously" : "hypothesis holds"));
      continue;
    }
    std::string found;
    try {
      const auto reg = lemma_rglr_brute_force(g, 2, informational);
      found = reg ? "regular subgroup of order " + reg->order().str() : "no regular subgroup";
    } catch (const BoundExceeded&) {
      found = "search not attempted or not finished within the informational budget";
    }
    r.claims.push_back(Claim{claim, Status::kNotApplicable, "", "hypothesis fails",
                             describe_failure(h) + "; " + found});
  }
  r.claims.push_back(compare("no bundled G with |V|^2 <= 100 satisfies the hypothesis and has a regular subgroup in G wr S2",
                             "0", std::to_string(contradictions),
                             std::to_string(checked) + " groups evaluated, " + std::to_string(holding) +
                                 " satisfy the hypothesis" +
                                 (holding == 0 ? " (consistency is vacuous at this scale)" : "")));
  return r;
}

CaseResult case_zsigmondy_table(const CasebookOptions&) {
  CaseResult r{"zsigmondy_table", {}, 0};
  std::size_t disagreements = 0;
  std::string exceptions;
  std::string first;
  for (std::uint64_t a = 2; a <= 16; ++a) {
    for (unsigned m = 2; m <= 10; ++m) {
      const bool direct = !primitive_prime_divisors(a, m).empty();
      if (!direct) exceptions += (exceptions.empty() ? "" : " ") + std::string("(") + std::to_string(a) + "," + std::to_string(m) + ")";
      if (direct != zsigmondy_has_ppd(a, m)) {
        if (disagreements++ == 0) first = "(" + std::to_string(a) + "," + std::to_string(m) + ")";
      }
    }
  }
  r.claims.push_back(compare("zsigmondy_has_ppd = direct divisor search, 2<=a<=16, 2<=m<=10", "0",
                             std::to_string(disagreements), first));
  r.claims.push_back(compare("pairs without a primitive prime divisor", "(2,6) (3,2) (7,2) (15,2)",
                             exceptions));
  r.claims.push_back(compare("ppd(2,6)", "{7}", join(ppd(2, 6))));
  r.claims.push_back(compare("ppd(2,4)", "{5}", join(ppd(2, 4))));
  r.claims.push_back(compare("ppd(4,3)", "{7}", join(ppd(4, 3))));
  r.claims.push_back(compare("(7,2): 7^2-1 = 48 has no primitive prime divisor", "false",
                             bool_str(zsigmondy_has_ppd(7, 2))));

  std::size_t bad = 0;
  std::size_t total = 0;
  std::string bad_witness;
  for (std::uint64_t q = 2; q <= 16; ++q) {
    const auto pp = as_prime_power(q);
    if (!pp) continue;
    for (unsigned m = 2; m <= 10; ++m) {
      const unsigned fm = pp->f * m;
      for (std::uint64_t rr : ppd(q, m)) {
        ++total;
        if (rr % fm != 1 || rr <= fm) {
          if (bad++ == 0) bad_witness = std::to_string(rr) + " in ppd(" + std::to_string(q) + "," + std::to_string(m) + ")";
        }
      }
    }
  }
  r.claims.push_back(compare("r ≡ 1 (mod fm) and r > fm for r in ppd(q,m), q <= 16, m <= 10", "0",
                             std::to_string(bad), bad_witness.empty() ? std::to_string(total) + " primes checked" : bad_witness));
  return r;
}

CaseResult case_product_cycles(const CasebookOptions& opt) {
  CaseResult r{"product_cycles", {}, 0};
  const Digraph c3 = directed_cycle(3);
  const Digraph c5 = directed_cycle(5);
  const Digraph p = direct_product(c3, c5, opt.bounds);
  r.claims.push_back(compare("C3 x C5 is a directed cycle", "true", bool_str(is_directed_cycle(p))));
  r.claims.push_back(compare("C3 x C5 vertex count", "15", std::to_string(p.vertex_count())));
  r.claims.push_back(compare("power(C5, 1) = C5", "true", bool_str(power(c5, 1, opt.bounds) == c5)));

  // 3-regular factor: Cay(Z7, {1,2,4}).
  std::vector<Arc> arcs;
  for (Vertex v = 0; v < 7; ++v) {
    for (Vertex s : {1U, 2U, 4U}) arcs.emplace_back(v, (v + s) % 7);
  }
  const Digraph q7(7, arcs);
  const auto prof = valency_profile(direct_product(c5, q7, opt.bounds));
  r.claims.push_back(compare("C5 x Cay(Z7,{1,2,4}) valency", "3",
                             prof.valency ? std::to_string(*prof.valency) : "irregular"));

  Rng rng(7);
  auto random_digraph = [&]() {
    const std::size_t n = 2 + rng.below(6);
    std::vector<Arc> a;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        switch (rng.below(3)) {
          case 1: a.emplace_back(u, v); break;
          case 2: a.emplace_back(v, u); break;
          default: break;
        }
      }
    }
    return Digraph(n, a);
  };
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::string witness;
  for (int pair = 0; pair < 50; ++pair) {
    const Digraph x = random_digraph();
    const Digraph y = random_digraph();
    const Digraph xy = direct_product(x, y, opt.bounds);
    for (std::size_t s = 0; s <= 4; ++s) {
      ++checks;
      const BigInt lhs = count_s_arcs(xy, s);
      const bool ok = lhs == count_s_arcs(x, s) * count_s_arcs(y, s) &&
                      lhs == BigInt(enumerate_s_arcs(xy, s, opt.bounds).size());
      if (!ok && failures++ == 0) witness = "pair " + std::to_string(pair) + ", s = " + std::to_string(s);
    }
  }
  r.claims.push_back(compare("count_s_arcs multiplicative under direct product, 50 random pairs, s <= 4",
                             "0", std::to_string(failures),
                             witness.empty() ? std::to_string(checks) + " checks" : witness));

  const Catalog cat = load_catalog(opt.catalog_dir);
  const auto pa = product_action_digraph(c5, cat.find("C5").group, 2, opt.bounds);
  r.claims.push_back(compare("(C5, Z5), m = 2: vertices and |Z5 wr S2|", "25 50",
                             std::to_string(pa.digraph.vertex_count()) + " " + pa.group.order().str()));
  const std::size_t swap[] = {1, 0};
  r.claims.push_back(compare("coordinate swap is an automorphism of C5^2", "true",
                             bool_str(is_automorphism(pa.digraph, coordinate_permutation(5, swap)))));
  return r;
}

struct Registered {
  std::string id;
  std::string description;
  std::function<CaseResult(const CasebookOptions&)> run;
};

const std::vector<Registered>& registry() {
  static const std::vector<Registered> cases = {
      {"sp6_2_arith", "|Sp6(2)| and its half-exponent divisor", case_sp6_2_arith},
      {"he_divisor", "half-exponent divisor of 2^9*3^2*5^2*17", case_he_divisor},
      {"gamma_a5", "symbolic certificate for Gamma(A5) and small diagonal analogues", case_gamma_a5},
      {"lemval_census", "orbital digraphs of primitive groups of degree <= 12", case_lemval_census},
      {"coset_criterion_sweep", "factorization criterion vs brute-force 2-arc-transitivity",
       case_coset_criterion_sweep},
      {"lemma22_sweep", "stabilizer lemma clauses on 2-arc-transitive coset digraphs",
       case_lemma22_sweep},
      {"rglr_tiny", "regular-subgroup lemma hypothesis and brute force", case_rglr_tiny},
      {"zsigmondy_table", "Zsigmondy exceptions and primitive prime divisors", case_zsigmondy_table},
      {"product_cycles", "direct products of digraphs", case_product_cycles},
  };
  return cases;
}

}  // namespace

bool CaseResult::failed() const {
  return std::any_of(claims.begin(), claims.end(),
                     [](const Claim& c) { return c.status == Status::kFail; });
}

const std::vector<std::string>& case_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const auto& c : registry()) v.push_back(c.id);
    return v;
  }();
  return ids;
}

const std::string& case_description(const std::string& id) {
  for (const auto& c : registry()) {
    if (c.id == id) return c.description;
  }
  throw InvalidArgument("unknown case '" + id + "'");
}

CaseResult run_case(const std::string& id, const CasebookOptions& options) {
  for (const auto& c : registry()) {
    if (c.id != id) continue;
    const auto start = std::chrono::steady_clock::now();
    CaseResult r = c.run(options);
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
  }
  throw InvalidArgument("unknown case '" + id + "'");
}

std::vector<CaseResult> run_all(const CasebookOptions& options) {
  std::vector<CaseResult> out;
  for (const auto& id : case_ids()) out.push_back(run_case(id, options));
  return out;
}

void emit_report(const std::vector<CaseResult>& results, std::ostream& out, ReportFormat format,
                 bool with_timing) {
  if (format == ReportFormat::kJson) {
    for (const auto& r : results) {
      for (const auto& c : r.claims) {
        nlohmann::ordered_json j;
        j["case"] = r.case_id;
        j["claim"] = c.claim;
        j["status"] = to_string(c.status);
        j["expected"] = c.expected;
        j["actual"] = c.actual;
        j["witness"] = c.witness.empty() ? nlohmann::ordered_json() : nlohmann::ordered_json(c.witness);
        if (with_timing) j["elapsed_ms"] = std::round(r.elapsed_ms * 1000) / 1000;
        out << j.dump() << '\n';
      }
    }
    return;
  }
  for (const auto& r : results) {
    out << "== " << r.case_id;
    if (with_timing) out << " (" << static_cast<long long>(r.elapsed_ms) << " ms)";
    out << '\n';
    for (const auto& c : r.claims) {
      out << "  [" << to_string(c.status) << "] " << c.claim;
      if (!c.expected.empty()) out << ": expected " << c.expected << ", got " << c.actual;
      else if (!c.actual.empty()) out << ": " << c.actual;
      if (!c.witness.empty()) out << " (" << c.witness << ")";
      out << '\n';
    }
  }
}

void emit_report(const std::vector<CaseResult>& results, const std::filesystem::path& path,
                 ReportFormat format, bool with_timing) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write report to " + path.string());
  emit_report(results, out, format, with_timing);
  if (!out) throw Error("failed writing report to " + path.string());
}

int exit_code(const std::vector<CaseResult>& results) {
  return std::any_of(results.begin(), results.end(), [](const CaseResult& r) { return r.failed(); })
             ? 1
             : 0;
}

}  // namespace arcsym
