#include "run_config.hpp"

#include <fstream>
#include <sstream>

#include "su2erg/error.hpp"

namespace su2erg::cli {

const nlohmann::json& config_defaults() {
  static const nlohmann::json defaults = {
      {"genus", 1},
      {"boundaries", 1},
      {"b", 0.47},
      {"epsilon", 1e-2},
      {"seed", 1},
      {"seed2", nullptr},
      {"out_dir", "out"},
      {"chains", 1},
      {"proposal_budget", 10'000'000},
      {"catalog", nullptr},
      {"record_runtime", false},
      {"steps", 100'000},
      {"burn_in", 1'000},
      {"thinning", 10},
      {"curves", nlohmann::json::array()},
      {"reference_samples", 10'000},
      {"ks_threshold", nullptr},
      {"min_samples", 1'000},
      {"samples", nullptr},
      {"points", 100},
      {"curve", nullptr},
      {"iterations", 10'000},
      {"word", nullptr},
      {"n", nullptr},
  };
  return defaults;
}

namespace {

void merge(nlohmann::json& into, std::set<std::string>& keys, const nlohmann::json& from,
           const std::string& origin) {
  if (!from.is_object()) throw ConfigError(origin + " must be a JSON object");
  for (const auto& [key, value] : from.items()) {
    if (!config_defaults().contains(key)) {
      throw ConfigError("unknown config key '" + key + "' in " + origin);
    }
    into[key] = value;
    keys.insert(key);
  }
}

}  // namespace

RunConfig RunConfig::resolve(const std::string& subcommand,
                             const std::optional<std::filesystem::path>& config_file,
                             const nlohmann::json& overrides) {
  RunConfig rc;
  rc.subcommand = subcommand;
  rc.values = config_defaults();
  if (subcommand == "invariance") {
    rc.values["ks_threshold"] = 0.02;
    rc.values["samples"] = 10'000;
  } else {
    rc.values["ks_threshold"] = 0.03;
    rc.values["samples"] = 1'000;
  }
  if (config_file) {
    std::ifstream in(*config_file);
    if (!in) throw ConfigError("cannot read config file " + config_file->string());
    nlohmann::json file;
    try {
      file = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      throw ConfigError("config file " + config_file->string() + " is not valid JSON: " + e.what());
    }
    merge(rc.values, rc.explicit_keys, file, config_file->string());
  }
  merge(rc.values, rc.explicit_keys, overrides, "command-line overrides");
  if (rc.values["seed2"].is_null()) rc.values["seed2"] = rc.count("seed") + 1;
  if (!rc.values["catalog"].is_null()) {
    rc.custom_catalog_ = Catalog::load(rc.get<std::string>("catalog"));
  }
  return rc;
}

std::uint64_t RunConfig::count(const std::string& key) const {
  const nlohmann::json& v = values.at(key);
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0) {
    throw ConfigError("config key '" + key + "' must be a nonnegative integer");
  }
  return v.get<std::uint64_t>();
}

nlohmann::ordered_json RunConfig::echo() const {
  nlohmann::ordered_json j;
  j["subcommand"] = subcommand;
  for (const auto& [key, value] : values.items()) {
    if (key != "out_dir" && key != "record_runtime") j[key] = value;
  }
  return j;
}

std::filesystem::path RunConfig::out_dir() const { return get<std::string>("out_dir"); }

const Catalog& RunConfig::catalog() const {
  return custom_catalog_ ? *custom_catalog_ : default_catalog();
}

SurfacePresentation RunConfig::surface() const {
  return surface_presentation(get<int>("genus"), get<int>("boundaries"));
}

BoundaryCondition RunConfig::boundary() const {
  const int n = get<int>("boundaries");
  const nlohmann::json& b = values.at("b");
  try {
    if (b.is_number()) return BoundaryCondition::uniform(n, b.get<double>());
    const auto list = b.get<std::vector<double>>();
    if (list.size() == 1) return BoundaryCondition::uniform(n, list[0]);
    if (list.size() != static_cast<std::size_t>(n)) {
      throw ConfigError("b has " + std::to_string(list.size()) + " values, expected " +
                        std::to_string(n));
    }
    return BoundaryCondition(list);
  } catch (const nlohmann::json::exception&) {
    throw ConfigError("config key 'b' must be a number or a list of numbers");
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

WalkConfig RunConfig::walk_config() const {
  WalkConfig cfg;
  cfg.surface = {get<int>("genus"), get<int>("boundaries")};
  const BoundaryCondition bc = boundary();
  cfg.b.assign(bc.values().begin(), bc.values().end());
  cfg.epsilon = get<double>("epsilon");
  cfg.seed = seed();
  cfg.steps = count("steps");
  cfg.burn_in = count("burn_in");
  cfg.thinning = count("thinning");
  cfg.curves = get<std::vector<std::string>>("curves");
  cfg.reference_samples = count("reference_samples");
  cfg.ks_threshold = get<double>("ks_threshold");
  cfg.min_samples = count("min_samples");
  cfg.proposal_budget = count("proposal_budget");
  cfg.chains = static_cast<int>(count("chains"));
  cfg.validate();
  return cfg;
}

}  // namespace su2erg::cli
