#include "su2erg/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "su2erg/error.hpp"

namespace su2erg {
namespace detail {
extern const std::string_view kEmbeddedCatalog;
}  // namespace detail

namespace {

using nlohmann::json;

void check_keys(const json& object, const std::set<std::string>& allowed, const std::string& where) {
  if (!object.is_object()) throw CatalogError(where + ": expected an object");
  for (const auto& [key, value] : object.items()) {
    if (!allowed.contains(key)) throw CatalogError(where + ": unknown key '" + key + "'");
  }
}

const json& require(const json& object, const std::string& key, const std::string& where) {
  if (!object.contains(key)) throw CatalogError(where + ": missing key '" + key + "'");
  return object.at(key);
}

Word word_field(const json& value, char prefix, int max_index, const std::string& where) {
  if (!value.is_string()) throw CatalogError(where + ": expected a word string");
  Word w;
  try {
    w = parse_word(value.get<std::string>(), prefix);
  } catch (const Error& e) {
    throw CatalogError(where + ": " + e.what());
  }
  if (max_index > 0 && w.max_index() > max_index) {
    throw CatalogError(where + ": word '" + value.get<std::string>() + "' uses a letter above " +
                       std::to_string(max_index));
  }
  return w;
}

std::vector<Word> words_field(const json& value, char prefix, int max_index,
                              const std::string& where) {
  if (!value.is_array()) throw CatalogError(where + ": expected a list of words");
  std::vector<Word> out;
  for (std::size_t i = 0; i < value.size(); ++i) {
    out.push_back(word_field(value[i], prefix, max_index, where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

CurveCatalogEntry parse_curve(const json& c, SurfaceId id, int rank, const std::string& where) {
  check_keys(c,
             {"index_set", "word", "peripheral", "separating", "kind", "complement",
              "stable_letter", "alpha_minus", "alpha_plus", "side1", "side2", "reexpressions",
              "flow_sign"},
             where);
  CurveCatalogEntry entry;
  entry.surface = id;
  try {
    entry.index_set = IndexSet(require(c, "index_set", where).get<std::vector<int>>());
  } catch (const std::exception& e) {
    throw CatalogError(where + ": bad index_set: " + e.what());
  }
  if (entry.index_set.max_index() > rank) throw CatalogError(where + ": index_set above rank");
  const std::string here = where + " (f" + entry.index_set.name() + ")";
  entry.curve = c.contains("word") ? word_field(c["word"], 'a', rank, here + ".word")
                                   : curve_word(entry.index_set);
  entry.peripheral = c.value("peripheral", false);
  entry.separating = c.value("separating", false);
  if (entry.peripheral) {
    if (c.contains("kind")) throw CatalogError(here + ": peripheral curves take no splitting");
    entry.splitting = collar_splitting(entry.curve, rank);
    return entry;
  }

  SplittingDatum& s = entry.splitting;
  s.curve = entry.curve;
  const std::string kind = require(c, "kind", here).get<std::string>();
  std::size_t alphabet_size = 0;
  if (kind == "hnn") {
    s.kind = SplittingKind::Hnn;
    s.complement = words_field(require(c, "complement", here), 'a', rank, here + ".complement");
    s.stable_letter = word_field(require(c, "stable_letter", here), 'a', rank, here + ".stable_letter");
    s.alpha_minus = word_field(require(c, "alpha_minus", here), 'a', rank, here + ".alpha_minus");
    s.alpha_plus = word_field(require(c, "alpha_plus", here), 'a', rank, here + ".alpha_plus");
    alphabet_size = s.complement.size() + 1;
  } else if (kind == "amalgam") {
    s.kind = SplittingKind::Amalgam;
    s.side1 = words_field(require(c, "side1", here), 'a', rank, here + ".side1");
    s.side2 = words_field(require(c, "side2", here), 'a', rank, here + ".side2");
    alphabet_size = s.side1.size() + s.side2.size();
  } else {
    throw CatalogError(here + ": kind must be \"hnn\" or \"amalgam\", got \"" + kind + "\"");
  }
  s.reexpressions = words_field(require(c, "reexpressions", here), 'x',
                                static_cast<int>(alphabet_size), here + ".reexpressions");
  if (s.reexpressions.size() != static_cast<std::size_t>(rank)) {
    throw CatalogError(here + ": need " + std::to_string(rank) + " reexpressions");
  }
  s.flow_sign = c.value("flow_sign", -1);
  if (s.flow_sign != 1 && s.flow_sign != -1) throw CatalogError(here + ": flow_sign must be +-1");
  return entry;
}

SurfaceCatalog parse_surface(const json& j, std::size_t position) {
  const std::string where = "surfaces[" + std::to_string(position) + "]";
  check_keys(j, {"genus", "boundaries", "curves", "disjoint_pairs"}, where);
  SurfaceCatalog out;
  const int genus = require(j, "genus", where).get<int>();
  const int boundaries = require(j, "boundaries", where).get<int>();
  const SurfacePresentation pres = surface_presentation(genus, boundaries);
  out.surface = pres.id();
  const json& curves = require(j, "curves", where);
  if (!curves.is_array()) throw CatalogError(where + ".curves: expected a list");
  for (std::size_t i = 0; i < curves.size(); ++i) {
    out.entries.push_back(
        parse_curve(curves[i], out.surface, pres.rank(), where + ".curves[" + std::to_string(i) + "]"));
  }
  std::sort(out.entries.begin(), out.entries.end(),
            [](const CurveCatalogEntry& a, const CurveCatalogEntry& b) { return a.index_set < b.index_set; });
  const std::vector<IndexSet> expected = index_sets(pres.rank());
  std::vector<IndexSet> found;
  for (const auto& e : out.entries) found.push_back(e.index_set);
  if (found != expected) {
    throw CatalogError(where + ": curves must cover every index set exactly once");
  }
  if (j.contains("disjoint_pairs")) {
    for (const json& pair : j["disjoint_pairs"]) {
      const auto names = pair.get<std::vector<std::string>>();
      if (names.size() != 2) throw CatalogError(where + ".disjoint_pairs: expected pairs");
      out.entry(names[0]);
      out.entry(names[1]);
      out.disjoint_pairs.emplace_back(names[0], names[1]);
    }
  }
  return out;
}

}  // namespace

const CurveCatalogEntry& SurfaceCatalog::entry(std::string_view name) const {
  for (const auto& e : entries) {
    if (e.name() == name) return e;
  }
  throw CatalogError("no curve f" + std::string(name) + " in the catalog of " + to_string(surface));
}

std::vector<const CurveCatalogEntry*> SurfaceCatalog::walk_curves() const {
  std::vector<const CurveCatalogEntry*> out;
  for (const auto& e : entries) {
    if (!e.peripheral) out.push_back(&e);
  }
  return out;
}

Catalog Catalog::parse(std::string_view json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::exception& e) {
    throw CatalogError(std::string("catalog is not valid JSON: ") + e.what());
  }
  check_keys(root, {"schema_version", "surfaces"}, "catalog");
  if (require(root, "schema_version", "catalog") != 1) {
    throw CatalogError("catalog: unsupported schema_version");
  }
  Catalog out;
  const json& surfaces = require(root, "surfaces", "catalog");
  try {
    for (std::size_t i = 0; i < surfaces.size(); ++i) out.surfaces_.push_back(parse_surface(surfaces[i], i));
  } catch (const json::exception& e) {
    throw CatalogError(std::string("catalog: ") + e.what());
  }
  return out;
}

Catalog Catalog::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw CatalogError("cannot read catalog " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse(text.str());
}

const SurfaceCatalog& Catalog::surface(int genus, int boundaries) const {
  for (const auto& s : surfaces_) {
    if (s.surface == SurfaceId{genus, boundaries}) return s;
  }
  throw UnsupportedSurface("no splitting catalog for " + to_string(SurfaceId{genus, boundaries}));
}

const Catalog& default_catalog() {
  static const Catalog instance = Catalog::parse(detail::kEmbeddedCatalog);
  return instance;
}

const SurfaceCatalog& catalog(int genus, int boundaries) {
  return default_catalog().surface(genus, boundaries);
}

}  // namespace su2erg
