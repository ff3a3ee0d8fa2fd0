#include "su2erg/ergolab.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "su2erg/error.hpp"
#include "su2erg/stats.hpp"
#include "su2erg/trace_reducer.hpp"

namespace su2erg {
namespace {

using nlohmann::ordered_json;

constexpr double kTrackTolerance = 1e-9;
constexpr double kStepDriftTolerance = 1e-12;
constexpr std::size_t kAutocorrelationLags[] = {1, 10, 50};

// Flat form of a TracePolynomial over coordinate positions.
class CompiledPolynomial {
 public:
  CompiledPolynomial(const TracePolynomial& p, const std::map<IndexSet, std::size_t>& position) {
    offsets_.push_back(0);
    for (const auto& [monomial, c] : p.terms()) {
      coefficients_.push_back(c.to_double());
      for (const IndexSet& v : monomial) vars_.push_back(position.at(v));
      offsets_.push_back(vars_.size());
    }
  }

  double operator()(std::span<const double> x) const {
    double sum = 0.0;
    for (std::size_t t = 0; t < coefficients_.size(); ++t) {
      double term = coefficients_[t];
      for (std::size_t k = offsets_[t]; k < offsets_[t + 1]; ++k) term *= x[vars_[k]];
      sum += term;
    }
    return sum;
  }

 private:
  std::vector<double> coefficients_;
  std::vector<std::size_t> offsets_;
  std::vector<std::size_t> vars_;
};

using CompiledAction = std::vector<CompiledPolynomial>;

CompiledAction compile_action(const SplittingDatum& s, int rank, int power) {
  std::map<IndexSet, std::size_t> position;
  const auto sets = index_sets(rank);
  for (std::size_t i = 0; i < sets.size(); ++i) position.emplace(sets[i], i);
  CompiledAction out;
  for (const TracePolynomial& p : coordinate_action(s, rank, power)) out.emplace_back(p, position);
  return out;
}

std::vector<double> apply_action(const CompiledAction& action, std::span<const double> x) {
  std::vector<double> out;
  out.reserve(action.size());
  for (const auto& p : action) out.push_back(p(x));
  return out;
}

std::vector<double> column(const std::vector<CharacterPoint>& points, std::size_t i) {
  std::vector<double> out;
  out.reserve(points.size());
  for (const auto& p : points) out.push_back(p.coords()[i]);
  return out;
}

std::vector<bool> peripheral_coordinates(const SurfaceCatalog& sc, int rank) {
  std::vector<bool> out;
  for (const IndexSet& s : index_sets(rank)) {
    const auto it = std::find_if(sc.entries.begin(), sc.entries.end(),
                                 [&](const CurveCatalogEntry& e) { return e.index_set == s; });
    out.push_back(it != sc.entries.end() && it->peripheral && it->curve == curve_word(s));
  }
  return out;
}

struct Walker {
  SurfacePresentation surface;
  BoundaryCondition b;
  std::vector<const CurveCatalogEntry*> curves;
  std::vector<CompiledAction> forward;
  std::vector<CompiledAction> backward;
};

Walker make_walker(const WalkConfig& cfg, const Catalog& catalog) {
  cfg.validate();
  const SurfaceCatalog& sc = catalog.surface(cfg.surface.genus, cfg.surface.boundaries);
  Walker w{surface_presentation(cfg.surface.genus, cfg.surface.boundaries), cfg.boundary(), {}, {}, {}};
  if (w.b.size() != static_cast<std::size_t>(w.surface.boundary_count())) {
    throw ConfigError("b has " + std::to_string(w.b.size()) + " values but " +
                      to_string(cfg.surface) + " has " +
                      std::to_string(w.surface.boundary_count()) + " boundary components");
  }
  if (cfg.curves.empty()) {
    w.curves = sc.walk_curves();
  } else {
    for (const std::string& name : cfg.curves) {
      const CurveCatalogEntry& e = sc.entry(name);
      if (!e.peripheral) w.curves.push_back(&e);
    }
  }
  if (w.curves.empty()) {
    throw TrivialWalkGroup("no non-peripheral curve to twist on " + to_string(cfg.surface) +
                           ": the walk is trivial");
  }
  for (const auto* e : w.curves) {
    w.forward.push_back(compile_action(e->splitting, w.surface.rank(), 1));
    w.backward.push_back(compile_action(e->splitting, w.surface.rank(), -1));
  }
  return w;
}

struct ChainOutput {
  std::vector<CharacterPoint> points;
  std::vector<double> start_boundary;
  std::uint64_t start_proposals = 0;
  double max_tracked_error = 0.0;
  double max_step_drift = 0.0;
  double max_window_offset = 0.0;
};

ChainOutput run_chain(const WalkConfig& cfg, const Walker& w, Rng rng) {
  ChainOutput out;
  const SamplerOptions sampler{cfg.proposal_budget};
  FiberDraw start = sample_representation(w.surface, w.b, cfg.epsilon, rng, sampler);
  out.start_proposals = start.proposals;
  Representation rho = std::move(start.representation);
  out.start_boundary = rho.boundary_traces();
  std::vector<double> previous = out.start_boundary;
  const CharacterPoint origin = trace_coordinates(rho);
  std::vector<double> tracked(origin.coords().begin(), origin.coords().end());

  for (std::uint64_t step = 1; step <= cfg.steps; ++step) {
    const std::size_t k = rng.below(w.curves.size());
    const int power = rng.coin() ? 1 : -1;
    rho = apply_dehn_twist(rho, w.curves[k]->splitting, power);
    const std::vector<double> predicted =
        apply_action(power > 0 ? w.forward[k] : w.backward[k], tracked);

    const std::vector<double> now = rho.boundary_traces();
    for (std::size_t i = 0; i < now.size(); ++i) {
      out.max_step_drift = std::max(out.max_step_drift, std::abs(now[i] - previous[i]));
      out.max_window_offset = std::max(out.max_window_offset, std::abs(now[i] - w.b[i]));
    }
    previous = now;

    // The action is chaotic: rounding grows by a sizeable factor per step, so
    // the polynomial prediction is checked and resynchronized every step.
    CharacterPoint point = trace_coordinates(rho);
    for (std::size_t i = 0; i < predicted.size(); ++i) {
      out.max_tracked_error =
          std::max(out.max_tracked_error, std::abs(predicted[i] - point.coords()[i]));
    }
    tracked.assign(point.coords().begin(), point.coords().end());
    if (step > cfg.burn_in && step % cfg.thinning == 0) out.points.push_back(std::move(point));
  }
  return out;
}

std::vector<ChainOutput> run_chains(const WalkConfig& cfg, const Walker& w, std::uint64_t seed) {
  std::vector<ChainOutput> outputs(static_cast<std::size_t>(cfg.chains));
  auto run = [&](std::size_t c) { outputs[c] = run_chain(cfg, w, Rng::stream(seed, c + 1)); };
  if (cfg.chains == 1) {
    run(0);
    return outputs;
  }
  std::vector<std::exception_ptr> errors(outputs.size());
  std::vector<std::thread> threads;
  for (std::size_t c = 0; c < outputs.size(); ++c) {
    threads.emplace_back([&, c] {
      try {
        run(c);
      } catch (...) {
        errors[c] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return outputs;
}

std::vector<CharacterPoint> merged_points(const std::vector<ChainOutput>& chains) {
  std::vector<CharacterPoint> out;
  for (const auto& c : chains) out.insert(out.end(), c.points.begin(), c.points.end());
  return out;
}

ordered_json consistency_json(const std::vector<ChainOutput>& chains, double epsilon) {
  double tracked = 0.0;
  double drift = 0.0;
  double offset = 0.0;
  for (const auto& c : chains) {
    tracked = std::max(tracked, c.max_tracked_error);
    drift = std::max(drift, c.max_step_drift);
    offset = std::max(offset, c.max_window_offset);
  }
  ordered_json j;
  j["max_tracked_error"] = tracked;
  j["tracked_tolerance"] = kTrackTolerance;
  j["max_boundary_step_drift"] = drift;
  j["step_drift_tolerance"] = kStepDriftTolerance;
  j["max_boundary_offset"] = offset;
  j["within_window"] = offset <= epsilon;
  j["passed"] = tracked <= kTrackTolerance && drift <= kStepDriftTolerance && offset <= epsilon;
  return j;
}

ordered_json starts_json(const std::vector<ChainOutput>& chains) {
  ordered_json j = ordered_json::array();
  for (const auto& c : chains) {
    j.push_back({{"boundary_traces", c.start_boundary}, {"proposals", c.start_proposals}});
  }
  return j;
}

ordered_json autocorrelation_json(const std::vector<CharacterPoint>& series, int rank,
                                  const std::vector<bool>& peripheral) {
  ordered_json j = ordered_json::object();
  const auto sets = index_sets(rank);
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (peripheral[i]) continue;
    const std::vector<double> x = column(series, i);
    ordered_json lags = ordered_json::object();
    for (std::size_t lag : kAutocorrelationLags) lags[std::to_string(lag)] = autocorrelation(x, lag);
    j["f" + sets[i].name()] = lags;
  }
  return j;
}

ordered_json curve_names(const std::vector<const CurveCatalogEntry*>& curves) {
  ordered_json j = ordered_json::array();
  for (const auto* e : curves) j.push_back(format_word(e->curve));
  return j;
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass:
      return "pass";
    case Verdict::Fail:
      return "fail";
    case Verdict::InsufficientPower:
      return "insufficient_power";
  }
  return "fail";
}

ordered_json ExperimentReport::to_json() const {
  ordered_json j;
  j["schema_version"] = 1;
  j["experiment"] = experiment;
  j["config"] = config;
  j["seed"] = seed;
  ordered_json k = ordered_json::object();
  for (const auto& [name, value] : ks) k[name] = value;
  j["ks"] = k;
  j["verdict"] = su2erg::to_string(verdict);
  j["runtime_seconds"] = runtime_seconds ? ordered_json(*runtime_seconds) : ordered_json(nullptr);
  j["acceptance_rate"] = acceptance_rate ? ordered_json(*acceptance_rate) : ordered_json(nullptr);
  j["details"] = details;
  return j;
}

std::string ExperimentReport::dump() const { return to_json().dump(2) + "\n"; }

void WalkConfig::validate() const {
  if (!(epsilon > 0.0)) throw ConfigError("epsilon must be positive");
  if (steps <= burn_in) throw ConfigError("steps must exceed burn_in");
  if (thinning < 1) throw ConfigError("thinning must be at least 1");
  if (chains < 1) throw ConfigError("chains must be at least 1");
  if (reference_samples < 1) throw ConfigError("reference_samples must be at least 1");
  if (!(ks_threshold > 0.0)) throw ConfigError("ks_threshold must be positive");
  try {
    boundary();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

BoundaryCondition WalkConfig::boundary() const {
  if (b.empty()) return BoundaryCondition::uniform(surface.boundaries, 0.47);
  if (b.size() == 1) return BoundaryCondition::uniform(surface.boundaries, b[0]);
  return BoundaryCondition(b);
}

ordered_json WalkConfig::to_json() const {
  ordered_json j;
  j["genus"] = surface.genus;
  j["boundaries"] = surface.boundaries;
  const BoundaryCondition bc = boundary();
  j["b"] = std::vector<double>(bc.values().begin(), bc.values().end());
  j["epsilon"] = epsilon;
  j["seed"] = seed;
  j["steps"] = steps;
  j["burn_in"] = burn_in;
  j["thinning"] = thinning;
  j["curves"] = curves;
  j["reference_samples"] = reference_samples;
  j["ks_threshold"] = ks_threshold;
  j["min_samples"] = min_samples;
  j["proposal_budget"] = proposal_budget;
  j["chains"] = chains;
  return j;
}

std::vector<TracePolynomial> coordinate_action(const SplittingDatum& s, int rank, int power) {
  const std::vector<Word> images = twist_automorphism(s, power);
  std::vector<TracePolynomial> out;
  for (const IndexSet& i : index_sets(rank)) {
    out.push_back(reduce_trace(substitute(curve_word(i), images), rank));
  }
  return out;
}

WalkResult run_random_walk(const WalkConfig& cfg, const Catalog& catalog) {
  const Walker w = make_walker(cfg, catalog);
  const int rank = w.surface.rank();
  const SurfaceCatalog& sc = catalog.surface(cfg.surface.genus, cfg.surface.boundaries);
  const std::vector<bool> peripheral = peripheral_coordinates(sc, rank);

  const std::vector<ChainOutput> chains = run_chains(cfg, w, cfg.seed);

  WalkResult result;
  result.orbit = merged_points(chains);
  Rng reference_rng = Rng::stream(cfg.seed, 0);
  std::uint64_t proposals = 0;
  for (std::size_t i = 0; i < cfg.reference_samples; ++i) {
    FiberDraw d = sample_representation(w.surface, w.b, cfg.epsilon, reference_rng,
                                        SamplerOptions{cfg.proposal_budget});
    proposals += d.proposals;
    result.reference.push_back(trace_coordinates(d.representation));
  }

  ExperimentReport& r = result.report;
  r.experiment = "walk";
  r.config = cfg.to_json();
  r.seed = cfg.seed;
  r.acceptance_rate = static_cast<double>(cfg.reference_samples) / static_cast<double>(proposals);

  const auto sets = index_sets(rank);
  bool ks_ok = true;
  ordered_json boundary_coords = ordered_json::object();
  for (std::size_t i = 0; i < sets.size(); ++i) {
    const std::string name = "f" + sets[i].name();
    const std::vector<double> walk = column(result.orbit, i);
    const double ks = result.orbit.empty() ? 1.0 : ks_statistic(walk, column(result.reference, i));
    if (peripheral[i]) {
      const auto [lo, hi] = std::minmax_element(walk.begin(), walk.end());
      boundary_coords[name] = {{"walk_min", walk.empty() ? 0.0 : *lo},
                               {"walk_max", walk.empty() ? 0.0 : *hi},
                               {"ks", ks}};
      continue;
    }
    r.ks.emplace_back(name, ks);
    if (!(ks <= cfg.ks_threshold)) ks_ok = false;
  }

  const ordered_json consistency = consistency_json(chains, cfg.epsilon);
  r.details["orbit_samples"] = result.orbit.size();
  r.details["reference_samples"] = result.reference.size();
  r.details["walk_curves"] = curve_names(w.curves);
  r.details["starts"] = starts_json(chains);
  r.details["consistency"] = consistency;
  r.details["boundary_coordinates"] = boundary_coords;
  r.details["autocorrelation"] = autocorrelation_json(chains.front().points, rank, peripheral);
  std::vector<std::size_t> free_coords;
  for (std::size_t i = 0; i < peripheral.size(); ++i) {
    if (!peripheral[i]) free_coords.push_back(i);
  }
  if (!result.orbit.empty() && free_coords.size() >= 2) {
    const std::size_t x = free_coords[0];
    const std::size_t y = free_coords[1];
    r.details["binned_chi2"] = {
        {"pair", {"f" + sets[x].name(), "f" + sets[y].name()}},
        {"bins", 16},
        {"distance", binned_chi2_distance(column(result.orbit, x), column(result.orbit, y),
                                          column(result.reference, x), column(result.reference, y))}};
  }

  if (result.orbit.size() < cfg.min_samples) {
    r.verdict = Verdict::InsufficientPower;
  } else {
    r.verdict = ks_ok && consistency["passed"].get<bool>() ? Verdict::Pass : Verdict::Fail;
  }
  return result;
}

ExperimentReport two_start_test(const WalkConfig& cfg, std::uint64_t seed2, const Catalog& catalog) {
  const Walker w = make_walker(cfg, catalog);
  const int rank = w.surface.rank();
  const SurfaceCatalog& sc = catalog.surface(cfg.surface.genus, cfg.surface.boundaries);
  const std::vector<bool> peripheral = peripheral_coordinates(sc, rank);

  const std::vector<ChainOutput> first = run_chains(cfg, w, cfg.seed);
  const std::vector<ChainOutput> second = run_chains(cfg, w, seed2);
  const std::vector<CharacterPoint> a = merged_points(first);
  const std::vector<CharacterPoint> b = merged_points(second);

  ExperimentReport r;
  r.experiment = "two-start";
  r.config = cfg.to_json();
  r.config["seed2"] = seed2;
  r.seed = cfg.seed;

  const auto sets = index_sets(rank);
  bool ks_ok = true;
  ordered_json boundary_coords = ordered_json::object();
  for (std::size_t i = 0; i < sets.size(); ++i) {
    const std::string name = "f" + sets[i].name();
    const double ks = a.empty() || b.empty() ? 1.0 : ks_statistic(column(a, i), column(b, i));
    if (peripheral[i]) {
      boundary_coords[name] = {{"ks", ks}};
      continue;
    }
    r.ks.emplace_back(name, ks);
    if (!(ks <= cfg.ks_threshold)) ks_ok = false;
  }
  const ordered_json c1 = consistency_json(first, cfg.epsilon);
  const ordered_json c2 = consistency_json(second, cfg.epsilon);
  r.details["orbit_samples"] = {a.size(), b.size()};
  r.details["walk_curves"] = curve_names(w.curves);
  r.details["starts"] = {starts_json(first), starts_json(second)};
  r.details["consistency"] = {c1, c2};
  r.details["boundary_coordinates"] = boundary_coords;

  if (std::min(a.size(), b.size()) < cfg.min_samples) {
    r.verdict = Verdict::InsufficientPower;
  } else {
    const bool ok = ks_ok && c1["passed"].get<bool>() && c2["passed"].get<bool>();
    r.verdict = ok ? Verdict::Pass : Verdict::Fail;
  }
  return r;
}

CircleOrbitResult circle_orbit_test(const Representation& rho, const CurveCatalogEntry& entry,
                                    int iterations) {
  if (iterations < 1) throw std::invalid_argument("circle orbit needs at least one iteration");
  const SplittingDatum& s = entry.splitting;
  const GroupElement a = rho.evaluate(s.curve);
  CircleOrbitResult out;
  out.twist_time = twist_time(a);
  out.period = period(a);
  out.rotation_number = out.twist_time / out.period;

  std::vector<double> fractions;
  fractions.reserve(static_cast<std::size_t>(iterations));
  Representation current = rho;
  for (int k = 1; k <= iterations; ++k) {
    current = apply_dehn_twist(current, s, 1);
    double t = std::fmod(s.flow_sign * k * out.twist_time, out.period);
    if (t < 0.0) t += out.period;
    fractions.push_back(std::min(t / out.period, std::nextafter(1.0, 0.0)));
    const double err = character_distance(trace_coordinates(current),
                                          trace_coordinates(apply_twist_flow(rho, s, t)));
    out.max_cross_check_error = std::max(out.max_cross_check_error, err);
  }
  out.discrepancy = star_discrepancy(fractions);

  std::vector<double> sorted = fractions;
  std::sort(sorted.begin(), sorted.end());
  constexpr double kSamePoint = 1e-9;
  out.distinct_points = 1;
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i] - sorted[i - 1] > kSamePoint) ++out.distinct_points;
  }
  if (out.distinct_points > 1 && sorted.front() + 1.0 - sorted.back() <= kSamePoint) {
    --out.distinct_points;
  }
  return out;
}

ExperimentReport invariance_test(const SurfacePresentation& surface, const BoundaryCondition& b,
                                 const CurveCatalogEntry& entry, std::size_t samples, Rng& rng,
                                 const InvarianceOptions& options) {
  const int rank = surface.rank();
  const CompiledAction action = compile_action(entry.splitting, rank, 1);
  std::vector<CharacterPoint> before;
  std::vector<CharacterPoint> after;
  std::uint64_t proposals = 0;
  double action_error = 0.0;
  for (std::size_t i = 0; i < samples; ++i) {
    FiberDraw d = sample_representation(surface, b, options.epsilon, rng,
                                        SamplerOptions{options.proposal_budget});
    proposals += d.proposals;
    CharacterPoint p = trace_coordinates(d.representation);
    CharacterPoint q(surface.id(), rank, apply_action(action, p.coords()));
    action_error = std::max(
        action_error,
        character_distance(q, trace_coordinates(apply_dehn_twist(d.representation, entry.splitting, 1))));
    before.push_back(std::move(p));
    after.push_back(std::move(q));
  }

  ExperimentReport r;
  r.experiment = "invariance";
  r.config = {{"genus", surface.genus()},
              {"boundaries", surface.boundary_count()},
              {"b", std::vector<double>(b.values().begin(), b.values().end())},
              {"curve", entry.name()},
              {"samples", samples},
              {"epsilon", options.epsilon},
              {"ks_threshold", options.ks_threshold},
              {"min_samples", options.min_samples}};
  r.seed = rng.seed();
  if (samples > 0) r.acceptance_rate = static_cast<double>(samples) / static_cast<double>(proposals);
  bool ok = true;
  const auto sets = index_sets(rank);
  for (std::size_t i = 0; i < sets.size() && samples > 0; ++i) {
    const double ks = ks_statistic(column(before, i), column(after, i));
    r.ks.emplace_back("f" + sets[i].name(), ks);
    if (!(ks <= options.ks_threshold)) ok = false;
  }
  r.details["curve_word"] = format_word(entry.curve);
  r.details["peripheral"] = entry.peripheral;
  r.details["max_action_error"] = action_error;
  if (samples < options.min_samples) {
    r.verdict = Verdict::InsufficientPower;
    r.details["note"] = "fewer than min_samples samples; no verdict";
  } else {
    r.verdict = ok && action_error <= kTrackTolerance ? Verdict::Pass : Verdict::Fail;
  }
  return r;
}

}  // namespace su2erg
