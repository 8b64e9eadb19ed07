#include "arcsym/catalog.hpp"

#include <algorithm>
#include <fstream>

#include <json.hpp>

#include "arcsym/blocks.hpp"
#include "arcsym/error.hpp"

namespace arcsym {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

json read_json(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InvalidArgument(path.string() + ": " + e.what());
  }
}

std::vector<Permutation> parse_generators(const json& list, std::size_t degree,
                                          const std::string& where) {
  if (!list.is_array()) throw InvalidArgument(where + ": generators must be an array");
  std::vector<Permutation> gens;
  for (const auto& g : list) {
    if (!g.is_string()) throw InvalidArgument(where + ": generator must be a cycle string");
    gens.push_back(parse_permutation(g.get<std::string>(), degree));
  }
  return gens;
}

}  // namespace

CatalogEntry load_group_file(const fs::path& path) {
  const json j = read_json(path);
  const std::string where = path.filename().string();
  if (!j.is_object() || !j.contains("degree") || !j.contains("generators")) {
    throw InvalidArgument(where + ": expected an object with degree and generators");
  }
  if (!j["degree"].is_number_unsigned() || j["degree"].get<std::size_t>() == 0) {
    throw InvalidArgument(where + ": degree must be a positive integer");
  }
  const auto degree = j["degree"].get<std::size_t>();
  CatalogEntry e{path.stem().string(), j.value("name", path.stem().string()),
                 PermutationGroup(degree, parse_generators(j["generators"], degree, where))};
  if (j.contains("order")) {
    const auto& o = j["order"];
    const std::string stated = o.is_string() ? o.get<std::string>() : o.dump();
    if (BigInt(stated) != e.group.order()) {
      throw ValidationError(where + ": stated order " + stated + " but generators give " +
                            e.group.order().str());
    }
  }
  return e;
}

std::vector<CatalogEntry> load_group_dir(const fs::path& dir) {
  if (!fs::is_directory(dir)) throw InvalidArgument("not a directory: " + dir.string());
  std::vector<fs::path> files;
  for (const auto& f : fs::directory_iterator(dir)) {
    if (f.path().extension() == ".json") files.push_back(f.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<CatalogEntry> out;
  for (const auto& f : files) out.push_back(load_group_file(f));
  return out;
}

const CatalogEntry& Catalog::find(const std::string& key) const {
  for (const auto* e : all()) {
    if (e->id == key) return *e;
  }
  if (sp6_2.id == key) return sp6_2;
  for (const auto* e : all()) {
    if (e->name == key) return *e;
  }
  if (sp6_2.name == key) return sp6_2;
  throw InvalidArgument("no catalog group named '" + key + "'");
}

std::vector<const CatalogEntry*> Catalog::all() const {
  std::vector<const CatalogEntry*> out;
  for (const auto& e : primitive) out.push_back(&e);
  for (const auto& e : small) out.push_back(&e);
  return out;
}

Catalog load_catalog(const fs::path& root) {
  Catalog c{root, load_group_dir(root / "primitive"), load_group_dir(root / "small"),
            load_group_file(root / "sp6_2.json")};
  for (const auto& e : c.primitive) {
    if (!e.group.is_transitive() || !is_primitive(e.group)) {
      throw ValidationError("catalog entry " + e.id + " is not a primitive group");
    }
  }
  return c;
}

fs::path default_catalog_dir() {
  // Source tree first (build-tree use), then the installed copy.
  const fs::path source(ARCSYM_DEFAULT_CATALOG_DIR);
  if (fs::is_directory(source)) return source;
  return fs::path(ARCSYM_INSTALLED_CATALOG_DIR);
}

CosetDigraphSpec load_coset_spec(const fs::path& path, const fs::path& catalog_root) {
  const json j = read_json(path);
  const std::string where = path.filename().string();
  if (!j.is_object() || !j.contains("group") || !j.contains("g")) {
    throw InvalidArgument(where + ": expected group, subgroup_gens and g");
  }
  const fs::path ref = j["group"].get<std::string>();
  PermutationGroup g = PermutationGroup::trivial(1);
  if (ref.is_absolute() && fs::exists(ref)) {
    g = load_group_file(ref).group;
  } else if (fs::exists(path.parent_path() / ref)) {
    g = load_group_file(path.parent_path() / ref).group;
  } else if (fs::exists(catalog_root / ref)) {
    g = load_group_file(catalog_root / ref).group;
  } else {
    g = load_catalog(catalog_root).find(ref.string()).group;
  }
  const json gens = j.value("subgroup_gens", json::array());
  PermutationGroup h(g.degree(), parse_generators(gens, g.degree(), where));
  return CosetDigraphSpec{g, h, parse_permutation(j["g"].get<std::string>(), g.degree())};
}

}  // namespace arcsym
