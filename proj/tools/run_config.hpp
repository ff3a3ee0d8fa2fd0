#pragma once

#include <filesystem>
#include <optional>
#include <set>
#include <string>

#include <json.hpp>

#include "su2erg/catalog.hpp"
#include "su2erg/ergolab.hpp"
#include "su2erg/error.hpp"

namespace su2erg::cli {

// Resolved settings of one CLI run: defaults, then the config file, then
// command-line overrides. Unknown config keys raise ConfigError naming the
// key.
struct RunConfig {
  std::string subcommand;
  nlohmann::json values;
  // Keys set by the config file or on the command line.
  std::set<std::string> explicit_keys;

  static RunConfig resolve(const std::string& subcommand,
                           const std::optional<std::filesystem::path>& config_file,
                           const nlohmann::json& overrides);

  bool has(const std::string& key) const { return values.contains(key); }
  template <class T>
  T get(const std::string& key) const {
    try {
      return values.at(key).get<T>();
    } catch (const nlohmann::json::exception&) {
      throw ConfigError("config key '" + key + "' has the wrong type");
    }
  }

  // A nonnegative integer setting.
  std::uint64_t count(const std::string& key) const;

  std::filesystem::path out_dir() const;
  WalkConfig walk_config() const;
  BoundaryCondition boundary() const;
  SurfacePresentation surface() const;
  std::uint64_t seed() const { return count("seed"); }
  bool record_runtime() const { return get<bool>("record_runtime"); }
  const Catalog& catalog() const;
  // values without out_dir and record_runtime, plus the subcommand; embedded
  // in every report.
  nlohmann::ordered_json echo() const;

 private:
  std::optional<Catalog> custom_catalog_;
};

// Every accepted config key with its default (null when there is none).
const nlohmann::json& config_defaults();

}  // namespace su2erg::cli
