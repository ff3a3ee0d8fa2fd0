#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "su2erg/twist.hpp"

namespace su2erg {

// Splitting data for one surface: an entry for every index set in
// index_sets(N), plus the pairs of curves known to be disjoint (their twists
// commute).
struct SurfaceCatalog {
  SurfaceId surface;
  std::vector<CurveCatalogEntry> entries;
  std::vector<std::pair<std::string, std::string>> disjoint_pairs;

  // Throws CatalogError for an unknown name ("12" for {1,2}).
  const CurveCatalogEntry& entry(std::string_view name) const;
  // Non-peripheral entries, in catalog order.
  std::vector<const CurveCatalogEntry*> walk_curves() const;
};

// A set of surface catalogs parsed from JSON.
//
// Schema (version 1):
//   { "schema_version": 1,
//     "surfaces": [ { "genus": g, "boundaries": n,
//                     "curves": [ <curve>, ... ],
//                     "disjoint_pairs": [ ["1", "13"], ... ] } ] }
//   <curve> = { "index_set": [i, ...],            required
//               "word": "a2 A3",                 default: A_I
//               "peripheral": true|false,        default false
//               "separating": true|false,        default false
//               "kind": "hnn"|"amalgam",         required unless peripheral
//               "complement", "stable_letter", "alpha_minus", "alpha_plus"   (hnn)
//               "side1", "side2"                                            (amalgam)
//               "reexpressions": ["x1 X3", ...], one per generator, letters xk
//               "flow_sign": -1|1 }              default -1
// Surface words use the a/A grammar of parse_word; re-expressions use x/X.
// Peripheral curves get a collar splitting. Unknown keys, missing or
// duplicated index sets and malformed words raise CatalogError.
class Catalog {
 public:
  static Catalog parse(std::string_view json_text);
  static Catalog load(const std::filesystem::path& path);

  // Throws UnsupportedSurface when the surface has no catalog.
  const SurfaceCatalog& surface(int genus, int boundaries) const;
  const std::vector<SurfaceCatalog>& surfaces() const { return surfaces_; }

 private:
  std::vector<SurfaceCatalog> surfaces_;
};

// The catalog compiled into the library (data/catalog.json).
const Catalog& default_catalog();

// default_catalog().surface(genus, boundaries).
const SurfaceCatalog& catalog(int genus, int boundaries);

}  // namespace su2erg
