#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "su2erg/catalog.hpp"
#include "su2erg/repvar.hpp"
#include "su2erg/trace_polynomial.hpp"

namespace su2erg {

enum class Verdict { Pass, Fail, InsufficientPower };

std::string to_string(Verdict v);

// Common report shape for every experiment. Serialized with keys
// "experiment", "config", "seed", "ks", "verdict", "runtime_seconds",
// "acceptance_rate", "details" (schema_version 1). runtime_seconds is null
// unless a caller fills it, so reports stay byte-identical across reruns.
struct ExperimentReport {
  std::string experiment;
  nlohmann::ordered_json config;
  std::uint64_t seed = 0;
  // Coordinate name -> statistic, in coordinate order.
  std::vector<std::pair<std::string, double>> ks;
  Verdict verdict = Verdict::Pass;
  std::optional<double> acceptance_rate;
  std::optional<double> runtime_seconds;
  nlohmann::ordered_json details = nlohmann::ordered_json::object();

  nlohmann::ordered_json to_json() const;
  // to_json() with two-space indent and a trailing newline.
  std::string dump() const;
};

struct WalkConfig {
  SurfaceId surface{1, 1};
  // Empty means 0.47 on every boundary component.
  std::vector<double> b;
  double epsilon = 1e-2;
  std::uint64_t seed = 1;
  std::uint64_t steps = 100'000;
  std::uint64_t burn_in = 1'000;
  std::uint64_t thinning = 10;
  // Curve names ("1", "12") to walk with; empty means every non-peripheral
  // catalog curve.
  std::vector<std::string> curves;
  std::size_t reference_samples = 10'000;
  double ks_threshold = 0.03;
  std::size_t min_samples = 1'000;
  std::uint64_t proposal_budget = 10'000'000;
  // Independent chains, each `steps` long, merged in chain order.
  int chains = 1;

  // Throws ConfigError on inconsistent values.
  void validate() const;
  BoundaryCondition boundary() const;
  nlohmann::ordered_json to_json() const;
};

struct WalkResult {
  ExperimentReport report;
  std::vector<CharacterPoint> orbit;
  std::vector<CharacterPoint> reference;
};

// Character-level action of a Dehn twist: polynomial p_I with
// f_I(tau(rho)) = p_I(f(rho)), in index_sets(N) order.
std::vector<TracePolynomial> coordinate_action(const SplittingDatum& s, int rank, int power);

// Dehn-twist random walk from one fiber point, steps tau^{+-1} chosen
// uniformly over the walk curves. Coordinates are recorded every `thinning`
// steps after burn-in and compared per coordinate with reference fiber
// samples by two-sample KS.
//
// The verdict uses the coordinates that are not traces of peripheral curves;
// those are constant along every walk and are reported separately. It also
// requires that after every step the image of the previous coordinates under
// coordinate_action matches the recomputed coordinates to 1e-9, and that no
// step moves a boundary trace by more than 1e-12.
//
// Throws TrivialWalkGroup when no non-peripheral curve is available,
// FiberEmptyOrThin from sampling, ConfigError on a bad config.
WalkResult run_random_walk(const WalkConfig& cfg, const Catalog& catalog = default_catalog());

// Two walks with seeds cfg.seed and seed2; KS between their orbit marginals.
ExperimentReport two_start_test(const WalkConfig& cfg, std::uint64_t seed2,
                                const Catalog& catalog = default_catalog());

struct CircleOrbitResult {
  double discrepancy = 0.0;
  // max over k of the character distance between tau^k(rho) and the flow at
  // the matching circle parameter.
  double max_cross_check_error = 0.0;
  // Distinct circle parameters (to 1e-9 of a period).
  std::size_t distinct_points = 0;
  // s / T = theta / (2 pi).
  double rotation_number = 0.0;
  double twist_time = 0.0;
  double period = 0.0;
};

// Iterates the Dehn twist K times; iterate k corresponds to the circle
// parameter t_k = flow_sign * k * s mod T. Returns the star discrepancy of
// {t_k / T}. Throws CentralElement when rho(alpha) is central.
CircleOrbitResult circle_orbit_test(const Representation& rho, const CurveCatalogEntry& entry,
                                    int iterations);

struct InvarianceOptions {
  double epsilon = 1e-2;
  double ks_threshold = 0.02;
  std::size_t min_samples = 1'000;
  std::uint64_t proposal_budget = 10'000'000;
};

// KS per coordinate between fresh fiber samples and their images under one
// Dehn twist (images computed with coordinate_action). Fewer than
// min_samples samples gives InsufficientPower.
ExperimentReport invariance_test(const SurfacePresentation& surface, const BoundaryCondition& b,
                                 const CurveCatalogEntry& entry, std::size_t samples, Rng& rng,
                                 const InvarianceOptions& options = {});

}  // namespace su2erg
