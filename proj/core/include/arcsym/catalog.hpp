#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "arcsym/constructions.hpp"
#include "arcsym/group.hpp"

namespace arcsym {

/// A group read from a catalog file.
struct CatalogEntry {
  std::string id;    // file stem, e.g. "deg05_04_A5"
  std::string name;  // "A5"
  PermutationGroup group;
};

/**
 * Reads a group file: { "name", "degree", "generators": [cycle strings],
 * optional "order" (string or integer) }. A stated order is checked against
 * the stabilizer chain; a mismatch throws ValidationError.
 */
CatalogEntry load_group_file(const std::filesystem::path& path);

/// Every *.json in `dir`, sorted by file name.
std::vector<CatalogEntry> load_group_dir(const std::filesystem::path& dir);

struct Catalog {
  std::filesystem::path root;
  std::vector<CatalogEntry> primitive;  // degree <= 12; transitivity and primitivity re-verified
  std::vector<CatalogEntry> small;
  CatalogEntry sp6_2;

  /// Looks up an entry by id or name across all sections.
  const CatalogEntry& find(const std::string& key) const;
  /// Primitive entries followed by small entries.
  std::vector<const CatalogEntry*> all() const;
};

/// Loads primitive/, small/ and sp6_2.json under `root`.
Catalog load_catalog(const std::filesystem::path& root);

/// Bundled catalog: the source tree when present, else the installed copy.
std::filesystem::path default_catalog_dir();

/**
 * Reads a coset-digraph spec file: { "group": <group file path or catalog
 * id>, "subgroup_gens": [cycles], "g": cycle }. A relative group path is
 * resolved against the spec file's directory, then against `catalog_root`.
 */
CosetDigraphSpec load_coset_spec(const std::filesystem::path& path,
                                 const std::filesystem::path& catalog_root);

}  // namespace arcsym
