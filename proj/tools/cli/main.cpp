// arcsym: command-line front end to the arcsym core library.
//
//   arcsym group order|orbits|primitive|stabilizer --group KEY
//   arcsym digraph build-coset|build-cayley|product|export ...
//   arcsym check arc-transitivity|lemma22|criterion ...
//   arcsym search regular-subgroup --group KEY
//   arcsym case list|run ID...|run-all
//
// Exit codes: 0 pass / success, 1 a checked property failed, 2 usage or input
// error (including an exceeded --bound-*).

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "arcsym/actions.hpp"
#include "arcsym/blocks.hpp"
#include "arcsym/casebook.hpp"
#include "arcsym/catalog.hpp"
#include "arcsym/constructions.hpp"
#include "arcsym/digraph.hpp"
#include "arcsym/error.hpp"
#include "arcsym/symmetry.hpp"

namespace {

using namespace arcsym;
using Json = nlohmann::ordered_json;
namespace fs = std::filesystem;

constexpr int kExitUsage = 2;

struct Global {
  std::string format = "text";
  std::string out;
  std::string catalog = default_catalog_dir().string();
  SearchBounds bounds;
};

void add_bound_flags(CLI::App& app, SearchBounds& b) {
  auto add = [&](const char* name, std::uint64_t& field, const char* what) {
    app.add_option(std::string("--bound-") + name, field, what)->capture_default_str();
  };
  add("subgroup-enumeration", b.subgroup_enumeration, "max |G| for subgroup lattices");
  add("coset-index", b.coset_index, "max [G:H] for coset actions");
  add("transporter-nodes", b.transporter_nodes, "conjugacy backtrack nodes");
  add("element-enumeration", b.element_enumeration, "max elements listed by scans");
  add("regular-search-nodes", b.regular_search_nodes, "regular-subgroup search nodes");
  add("regular-search-order", b.regular_search_order, "max |G| for regular-subgroup search");
  add("digraph-vertices", b.digraph_vertices, "max digraph vertices");
  add("digraph-arcs", b.digraph_arcs, "max digraph arcs");
  add("s-arc-enumeration", b.s_arc_enumeration, "max s-arcs enumerated");
  add("wreath-degree", b.wreath_degree, "max |V|^m for product actions");
}

// --- output ---------------------------------------------------------------

class Output {
 public:
  explicit Output(const Global& g) : json_(g.format == "json") {
    if (!g.out.empty()) {
      file_.open(g.out);
      if (!file_) throw Error("cannot write " + g.out);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }
  bool json() const { return json_; }

  /// A flat record: one JSON line, or "key: value" lines.
  void record(const Json& j) {
    if (json_) {
      stream() << j.dump() << '\n';
      return;
    }
    for (const auto& [k, v] : j.items()) {
      stream() << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
    }
  }

 private:
  bool json_;
  std::ofstream file_;
};

std::string points_1based(const std::vector<Point>& pts) {
  std::string s;
  for (std::size_t i = 0; i < pts.size(); ++i) s += (i ? " " : "") + std::to_string(pts[i] + 1);
  return s;
}

// --- inputs ---------------------------------------------------------------

PermutationGroup load_group(const std::string& key, const Global& g) {
  if (fs::is_regular_file(key)) return load_group_file(key).group;
  return load_catalog(g.catalog).find(key).group;
}

std::vector<Permutation> parse_list(const std::vector<std::string>& texts, std::size_t degree) {
  std::vector<Permutation> out;
  for (const auto& t : texts) out.push_back(parse_permutation(t, degree));
  return out;
}

Digraph load_digraph(const std::string& path, const Global& g) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open " + path);
  return read_edge_list(in, g.bounds);
}

struct SpecArgs {
  std::string spec_file;
  std::string group;
  std::vector<std::string> subgroup_gens;
  std::string element;

  void attach(CLI::App& app) {
    app.add_option("--spec", spec_file, "coset-digraph spec file (JSON)");
    app.add_option("--group", group, "catalog id/name or group file");
    app.add_option("--subgroup-gen", subgroup_gens, "generator of H (repeatable)");
    app.add_option("--g", element, "element g in cycle notation");
  }

  CosetDigraphSpec resolve(const Global& gl) const {
    if (!spec_file.empty()) return load_coset_spec(spec_file, gl.catalog);
    if (group.empty() || element.empty()) {
      throw InvalidArgument("give --spec FILE, or --group, --subgroup-gen and --g");
    }
    PermutationGroup g = load_group(group, gl);
    PermutationGroup h(g.degree(), parse_list(subgroup_gens, g.degree()));
    return {g, h, parse_permutation(element, g.degree())};
  }
};

// Either a coset spec, or an explicit edge list with a group.
struct ActionArgs {
  SpecArgs spec;
  std::string digraph_file;

  void attach(CLI::App& app) {
    spec.attach(app);
    app.add_option("--digraph", digraph_file, "edge-list file; pair with --group");
  }

  DigraphAction resolve(const Global& gl, std::optional<SArc>* two_arc = nullptr) const {
    if (!digraph_file.empty()) {
      if (spec.group.empty()) throw InvalidArgument("--digraph needs --group");
      return bind_action(load_digraph(digraph_file, gl), load_group(spec.group, gl));
    }
    const CosetDigraph cd = build_coset_digraph(spec.resolve(gl), gl.bounds);
    if (two_arc) *two_arc = cd.canonical_two_arc;
    return bind_action(cd.with_action());
  }
};

// --- commands ---------------------------------------------------------------

int cmd_group(const std::string& verb, const std::string& key, std::size_t point, const Global& gl) {
  const PermutationGroup g = load_group(key, gl);
  Output out(gl);
  Json j;
  j["group"] = key;
  j["degree"] = g.degree();
  if (verb == "order") {
    j["order"] = g.order().str();
    j["factorization"] = factorize(g.order()).to_string();
  } else if (verb == "orbits") {
    Json orbits = Json::array();
    for (const auto& o : g.orbits()) orbits.push_back(points_1based(o));
    j["orbit_count"] = g.orbits().size();
    j["orbits"] = orbits;
  } else if (verb == "primitive") {
    j["transitive"] = g.is_transitive();
    if (!g.is_transitive()) {
      j["primitive"] = false;
    } else {
      const bool prim = is_primitive(g);
      j["primitive"] = prim;
      if (!prim) {
        for (Point b = 1; b < g.degree(); ++b) {
          const BlockSystem bs = minimal_block_system(g, 0, b);
          if (bs.trivial) continue;
          j["block_size"] = bs.block_size();
          j["block_of_1"] = points_1based(bs.blocks.front());
          break;
        }
      }
    }
  } else {
    if (point < 1 || point > g.degree()) throw InvalidArgument("--point must be in 1..degree");
    const PermutationGroup s = g.stabilizer(static_cast<Point>(point - 1));
    j["point"] = point;
    j["stabilizer_order"] = s.order().str();
    Json gens = Json::array();
    for (const auto& x : s.generators()) gens.push_back(x.to_cycle_string());
    j["generators"] = gens;
  }
  out.record(j);
  return 0;
}

void write_digraph(Output& out, const Digraph& d, const std::string& as) {
  if (as == "dot") {
    write_dot(out.stream(), d);
  } else {
    write_edge_list(out.stream(), d);
  }
}

int cmd_digraph(const std::string& verb, const SpecArgs& spec, const std::vector<std::string>& connection,
                const std::string& left, const std::string& right, std::size_t m, const std::string& input,
                const std::string& as, const Global& gl) {
  Output out(gl);
  if (verb == "build-coset") {
    const CosetDigraph cd = build_coset_digraph(spec.resolve(gl), gl.bounds);
    write_digraph(out, cd.digraph, as);
  } else if (verb == "build-cayley") {
    if (spec.group.empty()) throw InvalidArgument("build-cayley needs --group");
    const PermutationGroup r = load_group(spec.group, gl);
    const CayleyDigraph c = build_cayley_digraph(r, parse_list(connection, r.degree()), gl.bounds);
    write_digraph(out, c.digraph, as);
  } else if (verb == "product") {
    if (left.empty()) throw InvalidArgument("product needs --left");
    const Digraph a = load_digraph(left, gl);
    const Digraph d = right.empty() ? power(a, m, gl.bounds)
                                    : direct_product(a, load_digraph(right, gl), gl.bounds);
    write_digraph(out, d, as);
  } else {
    if (input.empty()) throw InvalidArgument("export needs --in");
    write_digraph(out, load_digraph(input, gl), as);
  }
  return 0;
}

int cmd_check(const std::string& verb, const ActionArgs& args, std::size_t s, const Global& gl) {
  Output out(gl);
  Json j;
  if (verb == "criterion") {
    const CosetDigraphSpec spec = args.spec.resolve(gl);
    const bool holds = coset_two_arc_criterion(spec, gl.bounds);
    j["check"] = "criterion";
    j["factorization"] = holds;
    out.record(j);
    return holds ? 0 : 1;
  }
  std::optional<SArc> canonical;
  const DigraphAction a = args.resolve(gl, &canonical);
  if (verb == "arc-transitivity") {
    const Transitivity t = is_s_arc_transitive(a, s);
    j["check"] = "arc-transitivity";
    j["s"] = s;
    j["s_arcs"] = count_s_arcs(a.digraph, s).str();
    j["transitive"] = to_string(t);
    out.record(j);
    return t == Transitivity::kFalse ? 1 : 0;
  }
  // lemma22: at the canonical 2-arc of a coset digraph, else the first 2-arc.
  SArc arc;
  if (canonical) {
    arc = *canonical;
  } else {
    const auto first = enumerate_s_arcs(a.digraph, 2, gl.bounds);
    if (first.empty()) throw InvalidArgument("digraph has no 2-arcs");
    arc = first.front();
  }
  const auto data = two_arc_stabilizer_data(a, arc);
  const auto rep = verify_lemma_prime_factn(a, data, gl.bounds);
  j["check"] = "lemma22";
  j["two_arc"] = points_1based(std::vector<Point>(arc.begin(), arc.end()));
  j["applicable"] = rep.applicable;
  if (!rep.applicable) j["reason"] = rep.reason;
  j["a"] = to_string(rep.a.status);
  j["b"] = to_string(rep.b.status);
  j["c"] = to_string(rep.c.status);
  j["gv"] = data.gv_order.to_string();
  j["guv"] = data.guv_order.to_string();
  j["gvw"] = data.gvw_order.to_string();
  out.record(j);
  const bool failed = rep.a.status == Status::kFail || rep.b.status == Status::kFail ||
                      rep.c.status == Status::kFail;
  return failed ? 1 : 0;
}

int cmd_search(const std::string& key, const Global& gl) {
  const PermutationGroup g = load_group(key, gl);
  Output out(gl);
  Json j;
  j["group"] = key;
  j["degree"] = g.degree();
  const auto r = find_regular_subgroup(g, gl.bounds);
  j["regular_subgroup"] = r.has_value();
  if (r) {
    j["order"] = r->order().str();
    Json gens = Json::array();
    for (const auto& x : r->generators()) gens.push_back(x.to_cycle_string());
    j["generators"] = gens;
  }
  out.record(j);
  return 0;
}

int cmd_case(const std::string& verb, const std::vector<std::string>& ids, bool timing, bool allow_long,
             const Global& gl) {
  Output out(gl);
  if (verb == "list") {
    for (const auto& id : case_ids()) {
      if (out.json()) {
        out.record(Json{{"case", id}, {"description", case_description(id)}});
      } else {
        out.stream() << id << "  " << case_description(id) << '\n';
      }
    }
    return 0;
  }
  CasebookOptions opt{gl.catalog, gl.bounds, allow_long};
  std::vector<CaseResult> results;
  if (verb == "run-all") {
    results = run_all(opt);
  } else {
    if (ids.empty()) throw InvalidArgument("case run needs at least one case id");
    for (const auto& id : ids) case_description(id);  // reject unknown ids before running
    for (const auto& id : ids) results.push_back(run_case(id, opt));
  }
  emit_report(results, out.stream(), out.json() ? ReportFormat::kJson : ReportFormat::kText, timing);
  return exit_code(results);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"arcsym: arc-transitive digraph and permutation group toolkit"};
  app.require_subcommand(1);
  Global gl;
  app.add_option("--format", gl.format, "output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  app.add_option("--out", gl.out, "write output to PATH instead of stdout");
  app.add_option("--catalog", gl.catalog, "catalog directory")->capture_default_str();
  add_bound_flags(app, gl.bounds);

  int rc = 0;
  auto guarded = [&rc](auto&& fn) {
    return [&rc, fn]() { rc = fn(); };
  };

  // group
  auto* group = app.add_subcommand("group", "permutation group queries");
  std::string group_verb;
  std::string group_key;
  std::size_t point = 1;
  group->add_option("verb", group_verb, "order | orbits | primitive | stabilizer")
      ->required()
      ->check(CLI::IsMember({"order", "orbits", "primitive", "stabilizer"}));
  group->add_option("--group", group_key, "catalog id/name or group file")->required();
  group->add_option("--point", point, "1-based point for stabilizer")->capture_default_str();
  group->callback(guarded([&] { return cmd_group(group_verb, group_key, point, gl); }));

  // digraph
  auto* digraph = app.add_subcommand("digraph", "build and convert digraphs");
  std::string digraph_verb;
  SpecArgs spec;
  std::vector<std::string> connection;
  std::string left;
  std::string right;
  std::size_t m = 2;
  std::string input;
  std::string as = "edges";
  digraph->add_option("verb", digraph_verb, "build-coset | build-cayley | product | export")
      ->required()
      ->check(CLI::IsMember({"build-coset", "build-cayley", "product", "export"}));
  spec.attach(*digraph);
  digraph->add_option("--connection", connection, "element of S for Cay(R,S) (repeatable)");
  digraph->add_option("--left", left, "edge-list file");
  digraph->add_option("--right", right, "edge-list file; omit for the power --m of --left");
  digraph->add_option("--m", m, "power for product without --right")->capture_default_str();
  digraph->add_option("--in", input, "edge-list file to export");
  digraph->add_option("--as", as, "edges | dot")
      ->check(CLI::IsMember({"edges", "dot"}))
      ->capture_default_str();
  digraph->callback(guarded([&] {
    return cmd_digraph(digraph_verb, spec, connection, left, right, m, input, as, gl);
  }));

  // check
  auto* check = app.add_subcommand("check", "arc-transitivity and lemma checks");
  std::string check_verb;
  ActionArgs action;
  std::size_t s = 1;
  check->add_option("verb", check_verb, "arc-transitivity | lemma22 | criterion")
      ->required()
      ->check(CLI::IsMember({"arc-transitivity", "lemma22", "criterion"}));
  action.attach(*check);
  check->add_option("--s", s, "arc length")->capture_default_str();
  check->callback(guarded([&] { return cmd_check(check_verb, action, s, gl); }));

  // search
  auto* search = app.add_subcommand("search", "subgroup searches");
  std::string search_verb;
  std::string search_key;
  search->add_option("verb", search_verb, "regular-subgroup")
      ->required()
      ->check(CLI::IsMember({"regular-subgroup"}));
  search->add_option("--group", search_key, "catalog id/name or group file")->required();
  search->callback(guarded([&] { return cmd_search(search_key, gl); }));

  // case
  auto* cases = app.add_subcommand("case", "scripted reproductions");
  std::string case_verb;
  std::vector<std::string> ids;
  bool no_timing = false;
  bool allow_long = false;
  cases->add_option("verb", case_verb, "list | run | run-all")
      ->required()
      ->check(CLI::IsMember({"list", "run", "run-all"}));
  cases->add_option("ids", ids, "case ids for run");
  cases->add_flag("--no-timing", no_timing, "omit elapsed_ms (byte-comparable reports)");
  cases->add_flag("--allow-long", allow_long, "enable long-running cases (none registered)");
  cases->callback(guarded([&] { return cmd_case(case_verb, ids, !no_timing, allow_long, gl); }));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  } catch (const BoundExceeded& e) {
    std::cerr << "arcsym: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "arcsym: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "arcsym: " << e.what() << '\n';
    return kExitUsage;
  }
  return rc;
}
