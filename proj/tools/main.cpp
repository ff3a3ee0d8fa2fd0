// su2erg: command-line driver for sampling, twist-catalog validation and the
// ergodicity experiments. Exit status: 0 pass, 2 verdict fail, 1 usage or
// configuration error.

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "run_config.hpp"
#include "su2erg/error.hpp"
#include "su2erg/trace_reducer.hpp"

namespace {

using namespace su2erg;
using cli::RunConfig;
using nlohmann::ordered_json;

constexpr int kExitPass = 0;
constexpr int kExitUsage = 1;
constexpr int kExitFail = 2;

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write " + path.string());
  out << text;
}

std::string csv(const std::vector<CharacterPoint>& points, int rank) {
  std::ostringstream os;
  write_csv_header(os, rank);
  write_csv_rows(os, points);
  return os.str();
}

int exit_for(Verdict v) { return v == Verdict::Pass ? kExitPass : kExitFail; }

Verdict combine(Verdict a, Verdict b) {
  if (a == Verdict::Fail || b == Verdict::Fail) return Verdict::Fail;
  if (a == Verdict::InsufficientPower || b == Verdict::InsufficientPower) {
    return Verdict::InsufficientPower;
  }
  return Verdict::Pass;
}

ExperimentReport base_report(const RunConfig& rc, const std::string& experiment) {
  ExperimentReport r;
  r.experiment = experiment;
  r.config = rc.echo();
  r.seed = rc.seed();
  return r;
}

// Surfaces a catalog-wide command runs on: the configured one when genus or
// boundaries were given, otherwise every catalog surface.
std::vector<SurfaceId> target_surfaces(const RunConfig& rc) {
  if (rc.explicit_keys.contains("genus") || rc.explicit_keys.contains("boundaries")) {
    return {rc.surface().id()};
  }
  std::vector<SurfaceId> out;
  for (const auto& sc : rc.catalog().surfaces()) out.push_back(sc.surface);
  return out;
}

BoundaryCondition boundary_for(const RunConfig& rc, SurfaceId id) {
  const nlohmann::json& b = rc.values.at("b");
  if (b.is_number()) return BoundaryCondition::uniform(id.boundaries, b.get<double>());
  if (id == rc.surface().id()) return rc.boundary();
  throw ConfigError("a list-valued 'b' needs genus and boundaries to select one surface");
}

struct Outcome {
  int exit_code = kExitPass;
  // Report and file name, written with the runtime filled in when requested.
  std::optional<ExperimentReport> report;
  std::string report_name;
};

Outcome run_sample(const RunConfig& rc) {
  const SurfacePresentation surface = rc.surface();
  const BoundaryCondition b = rc.boundary();
  Rng rng = Rng::stream(rc.seed(), 0);
  const std::uint64_t samples = rc.count("samples");
  std::vector<CharacterPoint> points;
  std::uint64_t proposals = 0;
  for (std::uint64_t i = 0; i < samples; ++i) {
    FiberDraw d = sample_representation(surface, b, rc.get<double>("epsilon"), rng,
                                        SamplerOptions{rc.count("proposal_budget")});
    proposals += d.proposals;
    points.push_back(trace_coordinates(d.representation));
  }
  write_file(rc.out_dir() / "sample.csv", csv(points, surface.rank()));
  ExperimentReport r = base_report(rc, "sample");
  if (samples > 0) r.acceptance_rate = static_cast<double>(samples) / static_cast<double>(proposals);
  r.details["samples"] = samples;
  r.details["proposals"] = proposals;
  r.details["csv"] = "sample.csv";
  return {kExitPass, r, "sample.json"};
}

Outcome run_walk(const RunConfig& rc) {
  const WalkConfig cfg = rc.walk_config();
  WalkResult result = run_random_walk(cfg, rc.catalog());
  write_file(rc.out_dir() / "walk.csv", csv(result.orbit, 2 * cfg.surface.genus + cfg.surface.boundaries - 1));
  ExperimentReport& r = result.report;
  r.config = rc.echo();
  r.details["csv"] = "walk.csv";
  return {exit_for(r.verdict), r, "walk.json"};
}

Outcome run_two_start(const RunConfig& rc) {
  ExperimentReport r = two_start_test(rc.walk_config(), rc.count("seed2"), rc.catalog());
  r.config = rc.echo();
  return {exit_for(r.verdict), r, "two_start.json"};
}

Outcome run_verify_recipes(const RunConfig& rc) {
  const int points = static_cast<int>(rc.count("points"));
  const double epsilon = rc.get<double>("epsilon");
  ExperimentReport r = base_report(rc, "verify-recipes");
  ordered_json surfaces = ordered_json::array();
  bool all_passed = true;
  std::uint64_t stream = 0;
  for (const SurfaceId id : target_surfaces(rc)) {
    const SurfaceCatalog& sc = rc.catalog().surface(id.genus, id.boundaries);
    const SurfacePresentation pres = surface_presentation(id.genus, id.boundaries);
    const BoundaryCondition b = boundary_for(rc, id);
    ordered_json entries = ordered_json::array();
    for (const auto& e : sc.entries) {
      Rng rng = Rng::stream(rc.seed(), stream++);
      const ValidationReport v = validate_splitting(pres, e.splitting, b, epsilon, points, rng);
      ordered_json checks = ordered_json::array();
      for (const auto& c : v.checks) {
        checks.push_back({{"name", c.name}, {"passed", c.passed}, {"worst", c.worst},
                          {"tolerance", c.tolerance}, {"detail", c.detail}});
      }
      entries.push_back({{"curve", "f" + e.name()},
                         {"word", format_word(e.curve)},
                         {"peripheral", e.peripheral},
                         {"kind", e.splitting.kind == SplittingKind::Hnn ? "hnn" : "amalgam"},
                         {"passed", v.passed()},
                         {"checks", checks}});
      all_passed = all_passed && v.passed();
    }

    // Twists along disjoint curves commute on characters; peripheral twists
    // fix characters.
    Rng rng = Rng::stream(rc.seed(), stream++);
    std::vector<double> commute(sc.disjoint_pairs.size(), 0.0);
    double peripheral = 0.0;
    for (int k = 0; k < points; ++k) {
      const Representation rho = sample_representation(pres, b, epsilon, rng).representation;
      const CharacterPoint base = trace_coordinates(rho);
      for (std::size_t i = 0; i < sc.disjoint_pairs.size(); ++i) {
        const auto& s1 = sc.entry(sc.disjoint_pairs[i].first).splitting;
        const auto& s2 = sc.entry(sc.disjoint_pairs[i].second).splitting;
        const double d = character_distance(
            trace_coordinates(apply_dehn_twist(apply_dehn_twist(rho, s1, 1), s2, 1)),
            trace_coordinates(apply_dehn_twist(apply_dehn_twist(rho, s2, 1), s1, 1)));
        commute[i] = std::max(commute[i], d);
      }
      for (const auto& e : sc.entries) {
        if (!e.peripheral) continue;
        peripheral = std::max(
            peripheral, character_distance(trace_coordinates(apply_dehn_twist(rho, e.splitting, 1)), base));
      }
    }
    ordered_json pairs = ordered_json::array();
    for (std::size_t i = 0; i < commute.size(); ++i) {
      const bool ok = commute[i] <= 1e-9;
      all_passed = all_passed && ok;
      pairs.push_back({{"pair", {sc.disjoint_pairs[i].first, sc.disjoint_pairs[i].second}},
                       {"worst", commute[i]},
                       {"passed", ok}});
    }
    const bool peripheral_ok = peripheral <= 1e-12;
    all_passed = all_passed && peripheral_ok;
    surfaces.push_back({{"surface", to_string(id)},
                        {"entries", entries},
                        {"disjoint_pairs", pairs},
                        {"peripheral_fixes_characters", {{"worst", peripheral}, {"passed", peripheral_ok}}}});
  }
  r.details["points"] = points;
  r.details["surfaces"] = surfaces;
  r.verdict = all_passed ? Verdict::Pass : Verdict::Fail;
  std::cerr << "verify-recipes: " << (all_passed ? "all checks passed" : "FAILURES, see report") << '\n';
  return {exit_for(r.verdict), r, "verify_recipes.json"};
}

Outcome run_rank_check(const RunConfig& rc) {
  const int points = static_cast<int>(rc.count("points"));
  const double epsilon = rc.get<double>("epsilon");
  ExperimentReport r = base_report(rc, "rank-check");
  ordered_json surfaces = ordered_json::array();
  bool all_passed = true;
  std::uint64_t stream = 0;
  for (const SurfaceId id : target_surfaces(rc)) {
    const SurfacePresentation pres = surface_presentation(id.genus, id.boundaries);
    const BoundaryCondition b = boundary_for(rc, id);
    Rng rng = Rng::stream(rc.seed(), stream++);
    std::map<int, int> histogram;
    int full = 0;
    for (int k = 0; k < points; ++k) {
      const Representation rho = sample_representation(pres, b, epsilon, rng).representation;
      const TangentRankReport t = tangent_rank_report(rho, b);
      ++histogram[t.rank];
      if (t.rank == t.expected) ++full;
    }
    const bool ok = points > 0 && 100 * full >= 95 * points;
    all_passed = all_passed && ok;
    ordered_json hist = ordered_json::object();
    for (const auto& [rank, count] : histogram) hist[std::to_string(rank)] = count;
    surfaces.push_back({{"surface", to_string(id)},
                        {"expected_rank", expected_dimension(id)},
                        {"full_rank_points", full},
                        {"points", points},
                        {"rank_histogram", hist},
                        {"passed", ok}});
  }
  r.details["required_fraction"] = 0.95;
  r.details["surfaces"] = surfaces;
  r.verdict = all_passed ? Verdict::Pass : Verdict::Fail;
  return {exit_for(r.verdict), r, "rank_check.json"};
}

Outcome run_reduce_trace(const RunConfig& rc) {
  if (rc.values.at("word").is_null()) throw ConfigError("reduce-trace needs --word");
  const Word w = parse_word(rc.get<std::string>("word"));
  const int n = rc.values.at("n").is_null() ? std::max(1, w.max_index())
                                            : static_cast<int>(rc.count("n"));
  std::cout << reduce_trace(w, n) << '\n';
  return {kExitPass, std::nullopt, ""};
}

const CurveCatalogEntry& selected_curve(const RunConfig& rc, const SurfaceCatalog& sc) {
  if (!rc.values.at("curve").is_null()) return sc.entry(rc.get<std::string>("curve"));
  const auto curves = sc.walk_curves();
  return curves.empty() ? sc.entries.front() : *curves.front();
}

Outcome run_orbit_circle(const RunConfig& rc) {
  const SurfacePresentation pres = rc.surface();
  const SurfaceCatalog& sc = rc.catalog().surface(pres.genus(), pres.boundary_count());
  const CurveCatalogEntry& entry = selected_curve(rc, sc);
  const int iterations = static_cast<int>(rc.count("iterations"));
  Rng rng = Rng::stream(rc.seed(), 0);
  const Representation rho =
      sample_representation(pres, rc.boundary(), rc.get<double>("epsilon"), rng).representation;
  const CircleOrbitResult c = circle_orbit_test(rho, entry, iterations);
  ExperimentReport r = base_report(rc, "orbit-circle");
  const double bound = 5.0 / std::sqrt(static_cast<double>(iterations));
  r.details = {{"curve", "f" + entry.name()},
               {"trace", rho.evaluate(entry.curve).trace()},
               {"twist_time", c.twist_time},
               {"period", c.period},
               {"rotation_number", c.rotation_number},
               {"iterations", iterations},
               {"distinct_points", c.distinct_points},
               {"discrepancy", c.discrepancy},
               {"discrepancy_bound", bound},
               {"max_cross_check_error", c.max_cross_check_error}};
  r.verdict = c.max_cross_check_error <= 1e-6 && c.discrepancy <= bound ? Verdict::Pass : Verdict::Fail;
  return {exit_for(r.verdict), r, "orbit_circle.json"};
}

Outcome run_invariance(const RunConfig& rc) {
  const SurfacePresentation pres = rc.surface();
  const SurfaceCatalog& sc = rc.catalog().surface(pres.genus(), pres.boundary_count());
  std::vector<const CurveCatalogEntry*> curves;
  if (!rc.values.at("curve").is_null()) {
    curves.push_back(&sc.entry(rc.get<std::string>("curve")));
  } else {
    curves = sc.walk_curves();
  }
  if (curves.empty()) throw TrivialWalkGroup("no non-peripheral curve on " + to_string(pres.id()));
  InvarianceOptions options;
  options.epsilon = rc.get<double>("epsilon");
  options.ks_threshold = rc.get<double>("ks_threshold");
  options.min_samples = rc.count("min_samples");
  options.proposal_budget = rc.count("proposal_budget");
  ExperimentReport r = base_report(rc, "invariance");
  ordered_json per_curve = ordered_json::array();
  Verdict verdict = Verdict::Pass;
  std::uint64_t accepted = 0;
  double proposals = 0.0;
  for (std::size_t i = 0; i < curves.size(); ++i) {
    Rng rng = Rng::stream(rc.seed(), i);
    const ExperimentReport one =
        invariance_test(pres, rc.boundary(), *curves[i], rc.count("samples"), rng, options);
    for (const auto& [name, ks] : one.ks) r.ks.emplace_back("tau" + curves[i]->name() + ":" + name, ks);
    if (one.acceptance_rate) {
      accepted += rc.count("samples");
      proposals += static_cast<double>(rc.count("samples")) / *one.acceptance_rate;
    }
    verdict = combine(verdict, one.verdict);
    ordered_json j = one.to_json();
    j.erase("config");
    j.erase("runtime_seconds");
    per_curve.push_back(j);
  }
  if (proposals > 0.0) r.acceptance_rate = static_cast<double>(accepted) / proposals;
  r.details["curves"] = per_curve;
  r.verdict = verdict;
  return {exit_for(verdict), r, "invariance.json"};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"SU(2) relative character varieties: twist dynamics and ergodicity experiments"};
  app.require_subcommand(1);
  app.fallthrough();

  std::optional<std::filesystem::path> config_path;
  nlohmann::json overrides = nlohmann::json::object();
  auto set = [&overrides](const char* key) {
    return [&overrides, key](const auto& v) { overrides[key] = v; };
  };

  app.add_option_function<std::string>(
      "--config", [&](const std::string& p) { config_path = p; }, "JSON config file");
  app.add_option_function<std::uint64_t>("--seed", set("seed"), "master seed");
  app.add_option_function<std::string>("--out-dir", set("out_dir"), "artifact directory");
  app.add_option_function<std::uint64_t>("--chains", set("chains"), "independent walk chains");
  app.add_option_function<int>("--genus", set("genus"), "surface genus");
  app.add_option_function<int>("--boundaries", set("boundaries"), "boundary components");
  app.add_option_function<std::vector<double>>("--b", set("b"), "boundary traces (comma list)")
      ->delimiter(',');
  app.add_option_function<double>("--epsilon", set("epsilon"), "fiber tolerance");
  app.add_option_function<std::uint64_t>("--proposal-budget", set("proposal_budget"),
                                         "fiber sampler proposal budget");
  app.add_option_function<std::string>("--catalog", set("catalog"), "splitting catalog JSON");
  app.add_flag_function(
      "--record-runtime", [&](std::int64_t) { overrides["record_runtime"] = true; },
      "fill runtime_seconds in reports (breaks byte-identical reruns)");

  auto* sample = app.add_subcommand("sample", "draw fiber points, write sample.csv");
  sample->add_option_function<std::uint64_t>("--samples", set("samples"), "number of points");

  auto* walk = app.add_subcommand("walk", "Dehn-twist random walk vs reference samples");
  auto* two_start = app.add_subcommand("two-start", "compare walks from two starting points");
  for (auto* sub : {walk, two_start}) {
    sub->add_option_function<std::uint64_t>("--steps", set("steps"), "walk length");
    sub->add_option_function<std::uint64_t>("--burn-in", set("burn_in"), "steps discarded");
    sub->add_option_function<std::uint64_t>("--thinning", set("thinning"), "record every k steps");
    sub->add_option_function<std::vector<std::string>>("--curves", set("curves"),
                                                       "curve names, e.g. 1,12")
        ->delimiter(',');
    sub->add_option_function<std::uint64_t>("--reference-samples", set("reference_samples"),
                                            "reference fiber samples");
    sub->add_option_function<double>("--ks-threshold", set("ks_threshold"), "KS pass threshold");
  }
  two_start->add_option_function<std::uint64_t>("--seed2", set("seed2"), "second walk seed");

  auto* verify = app.add_subcommand("verify-recipes", "validate every splitting in the catalog");
  auto* rank = app.add_subcommand("rank-check", "tangent rank at sampled fiber points");
  for (auto* sub : {verify, rank}) {
    sub->add_option_function<std::uint64_t>("--points", set("points"), "fiber points");
  }

  auto* reduce = app.add_subcommand("reduce-trace", "print tr(word) as a polynomial in f_I");
  reduce->add_option_function<std::string>("--word", set("word"), "word, e.g. \"a1 a2 A1 A2\"");
  reduce->add_option_function<std::uint64_t>("--n", set("n"), "free rank");

  auto* orbit = app.add_subcommand("orbit-circle", "Dehn-twist orbit on the flow circle");
  orbit->add_option_function<std::string>("--curve", set("curve"), "curve name, e.g. 1");
  orbit->add_option_function<std::uint64_t>("--iterations", set("iterations"), "twist iterations");

  auto* invariance = app.add_subcommand("invariance", "KS of fiber samples vs their twist images");
  invariance->add_option_function<std::string>("--curve", set("curve"), "curve name, e.g. 1");
  invariance->add_option_function<std::uint64_t>("--samples", set("samples"), "fiber samples");
  invariance->add_option_function<double>("--ks-threshold", set("ks_threshold"), "KS pass threshold");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  try {
    const RunConfig rc = RunConfig::resolve(name, config_path, overrides);
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    if (name == "sample") outcome = run_sample(rc);
    else if (name == "walk") outcome = run_walk(rc);
    else if (name == "two-start") outcome = run_two_start(rc);
    else if (name == "verify-recipes") outcome = run_verify_recipes(rc);
    else if (name == "rank-check") outcome = run_rank_check(rc);
    else if (name == "reduce-trace") outcome = run_reduce_trace(rc);
    else if (name == "orbit-circle") outcome = run_orbit_circle(rc);
    else outcome = run_invariance(rc);
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    if (outcome.report) {
      if (rc.record_runtime()) outcome.report->runtime_seconds = seconds;
      write_file(rc.out_dir() / outcome.report_name, outcome.report->dump());
      std::cerr << name << ": verdict " << to_string(outcome.report->verdict) << ", "
                << (rc.out_dir() / outcome.report_name).string() << ", " << seconds << " s\n";
    }
    return outcome.exit_code;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
  }
  return kExitUsage;
}
