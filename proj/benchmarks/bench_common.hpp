#pragma once

#include "arcsym/catalog.hpp"

namespace bench {

inline const arcsym::Catalog& catalog() {
  static const arcsym::Catalog c = arcsym::load_catalog(arcsym::default_catalog_dir());
  return c;
}

inline const arcsym::PermutationGroup& group(const char* key) { return catalog().find(key).group; }

}  // namespace bench
