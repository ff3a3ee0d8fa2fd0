// Acceptance harness: one [PASS]/[FAIL] line per criterion, non-zero exit on
// any failure. Seeds are fixed: master seed 2026, stream k for criterion k.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "su2erg/catalog.hpp"
#include "su2erg/ergolab.hpp"
#include "su2erg/error.hpp"
#include "su2erg/repvar.hpp"
#include "su2erg/su2.hpp"
#include "su2erg/trace_reducer.hpp"
#include "su2erg/twist.hpp"

namespace {

using namespace su2erg;

constexpr std::uint64_t kMasterSeed = 2026;
constexpr double kB = 0.47;
constexpr double kEps = 1e-2;

struct Outcome {
  bool passed = true;
  std::string summary;
};

std::string fmt(const char* format, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

Rng stream(std::uint64_t criterion) { return Rng::stream(kMasterSeed, criterion); }

const std::vector<SurfaceId> kSurfaces = {{0, 3}, {0, 4}, {1, 1}, {1, 2}};

Representation fiber_point(SurfaceId id, Rng& rng) {
  return sample_representation(surface_presentation(id.genus, id.boundaries),
                               BoundaryCondition::uniform(id.boundaries, kB), kEps, rng)
      .representation;
}

Outcome formula_suite() {
  Rng rng = stream(1);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const GroupElement g = haar_sample(rng);
    const double t = rng.uniform(-10.0, 10.0);
    const double u = rng.uniform(-10.0, 10.0);
    worst = std::max({worst, distance(one_param(g, 0.0), GroupElement::identity()),
                      distance(one_param(g, twist_time(g)), g),
                      distance(one_param(g, period(g)), GroupElement::identity()),
                      distance(one_param(g, t + u), one_param(g, t) * one_param(g, u))});
  }
  return {worst <= 1e-12, fmt("1000 Haar elements, worst error %.2e (tol 1e-12)", worst)};
}

Outcome variation_function() {
  Rng rng = stream(2);
  const double h = 1e-6;
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const GroupElement g = haar_sample(rng);
    for (const TangentElement& v : tangent_basis()) {
      const double fd = ((g * exp(h * v)).trace() - (g * exp(-h * v)).trace()) / (2 * h);
      worst = std::max(worst, std::abs(pairing(variation(g), v) - fd));
    }
  }
  return {worst <= 1e-6, fmt("300 directional derivatives, worst error %.2e (tol 1e-6)", worst)};
}

Outcome trace_reducer_sweep() {
  Rng rng = stream(3);
  const std::vector<int> letters = {1, -1, 2, -2, 3, -3};
  std::vector<Word> frontier = {Word()};
  std::size_t words = 0;
  double worst = 0.0;
  bool shapes_ok = true;
  for (int len = 1; len <= 6; ++len) {
    std::vector<Word> next;
    for (const Word& w : frontier) {
      for (int a : letters) {
        if (!w.empty() && w[w.size() - 1] == -a) continue;
        Word v = w * Word::letter(a);
        worst = std::max(worst, verify_reduction(v, 3, 100, rng));
        for (const IndexSet& s : reduce_trace(v, 3).variables()) {
          if (s.size() > 3 || s.max_index() > 3 || !std::is_sorted(s.begin(), s.end())) shapes_ok = false;
        }
        ++words;
        next.push_back(std::move(v));
      }
    }
    frontier = std::move(next);
  }
  return {worst <= 1e-9 && shapes_ok,
          fmt("%zu words of length <= 6 over N = 3, worst error %.2e (tol 1e-9), variables %s", words, worst,
              shapes_ok ? "ok" : "malformed")};
}

Outcome catalog_validation() {
  Rng rng = stream(4);
  int entries = 0;
  int failed = 0;
  std::string first_failure;
  for (SurfaceId id : kSurfaces) {
    const SurfacePresentation s = surface_presentation(id.genus, id.boundaries);
    for (const auto& e : catalog(id.genus, id.boundaries).entries) {
      ++entries;
      const ValidationReport r =
          validate_splitting(s, e.splitting, BoundaryCondition::uniform(id.boundaries, kB), kEps, 100, rng);
      if (!r.passed()) {
        ++failed;
        if (first_failure.empty()) first_failure = " first failure " + to_string(id) + " " + e.name();
      }
    }
  }
  return {failed == 0, fmt("%d entries on 4 surfaces, 100 points each, %d failed%s", entries, failed,
                           first_failure.c_str())};
}

Outcome dehn_vs_flow() {
  Rng rng = stream(5);
  double worst = 0.0;
  int curves = 0;
  for (SurfaceId id : kSurfaces) {
    for (const CurveCatalogEntry* e : catalog(id.genus, id.boundaries).walk_curves()) {
      ++curves;
      for (int i = 0; i < 100; ++i) {
        const Representation rho = fiber_point(id, rng);
        const double s = twist_time(rho.evaluate(e->splitting.curve));
        worst = std::max(worst, character_distance(trace_coordinates(apply_dehn_twist(rho, e->splitting, 1)),
                                                   trace_coordinates(apply_twist_flow(
                                                       rho, e->splitting, e->splitting.flow_sign * s))));
      }
    }
  }
  return {worst <= 1e-9, fmt("%d non-peripheral curves x 100 points, worst distance %.2e (tol 1e-9)", curves, worst)};
}

Outcome tangent_ranks() {
  Rng rng = stream(6);
  bool ok = true;
  std::string parts;
  for (SurfaceId id : std::vector<SurfaceId>{{1, 1}, {0, 4}, {1, 2}}) {
    const BoundaryCondition b = BoundaryCondition::uniform(id.boundaries, kB);
    const int expected = expected_dimension(id);
    int hits = 0;
    for (int i = 0; i < 100; ++i) {
      if (tangent_rank(fiber_point(id, rng), b) == expected) ++hits;
    }
    ok = ok && hits >= 95;
    parts += fmt(" %s rank %d at %d/100;", to_string(id).c_str(), expected, hits);
  }
  parts.pop_back();
  return {ok, "need >= 95/100:" + parts};
}

Outcome measure_invariance() {
  Rng rng = stream(7);
  bool ok = true;
  double worst = 0.0;
  std::string worst_at;
  for (SurfaceId id : std::vector<SurfaceId>{{1, 1}, {0, 4}}) {
    const SurfacePresentation s = surface_presentation(id.genus, id.boundaries);
    for (const CurveCatalogEntry* e : catalog(id.genus, id.boundaries).walk_curves()) {
      const ExperimentReport r =
          invariance_test(s, BoundaryCondition::uniform(id.boundaries, kB), *e, 10'000, rng);
      ok = ok && r.verdict == Verdict::Pass;
      for (const auto& [name, ks] : r.ks) {
        if (ks > worst) {
          worst = ks;
          worst_at = to_string(id) + " curve " + e->name() + " " + name;
        }
      }
    }
  }
  return {ok, fmt("10^4 samples per curve, max KS %.4f at %s (tol 0.02)", worst, worst_at.c_str())};
}

double max_ks(const ExperimentReport& r) {
  double m = 0.0;
  for (const auto& [name, ks] : r.ks) m = std::max(m, ks);
  return m;
}

Outcome ergodicity() {
  bool ok = true;
  std::string parts;
  for (SurfaceId id : std::vector<SurfaceId>{{1, 1}, {0, 4}}) {
    WalkConfig cfg;
    cfg.surface = id;
    cfg.seed = kMasterSeed;
    const auto t0 = std::chrono::steady_clock::now();
    const WalkResult walk = run_random_walk(cfg);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const ExperimentReport two = two_start_test(cfg, kMasterSeed + 1);
    ok = ok && walk.report.verdict == Verdict::Pass && two.verdict == Verdict::Pass && seconds <= 300.0;
    parts += fmt(" %s walk KS %.4f (%.1fs), two-start KS %.4f;", to_string(id).c_str(), max_ks(walk.report),
                 seconds, max_ks(two));

    // Conditioning-bias control: the same walk at half the window.
    WalkConfig half = cfg;
    half.epsilon = cfg.epsilon / 2;
    const WalkResult narrow = run_random_walk(half);
    parts += fmt(" eps/2 walk KS %.4f (%s);", max_ks(narrow.report), to_string(narrow.report.verdict).c_str());
  }
  parts.pop_back();
  return {ok, "tol 0.03, limit 300s:" + parts};
}

Outcome circle_dynamics() {
  Rng rng = stream(9);
  const CurveCatalogEntry& entry = catalog(1, 1).entry("1");
  auto torus = [&](double trace) {
    return Representation(surface_presentation(1, 1),
                          {GroupElement::from_axis_angle({0.3, -0.5, 0.8}, std::acos(trace / 2)), haar_sample(rng)});
  };
  const int k = 10'000;
  const CircleOrbitResult irrational = circle_orbit_test(torus(2 * std::cos(1.0)), entry, k);
  const CircleOrbitResult rational = circle_orbit_test(torus(0.0), entry, k);
  const double bound = 5.0 / std::sqrt(k);
  const double cross = std::max(irrational.max_cross_check_error, rational.max_cross_check_error);
  const bool ok = irrational.discrepancy <= bound && rational.distinct_points == 4 &&
                  rational.discrepancy >= 1.0 / 8.0 && cross <= 1e-6;
  return {ok, fmt("irrational discrepancy %.4f (bound %.3f); tr 0 orbit %zu points, discrepancy %.3f; "
                  "cross-check %.2e (tol 1e-6)",
                  irrational.discrepancy, bound, rational.distinct_points, rational.discrepancy, cross)};
}

Outcome degenerate_cases() {
  Rng rng = stream(10);
  bool trivial = false;
  try {
    WalkConfig cfg;
    cfg.surface = {0, 3};
    run_random_walk(cfg);
  } catch (const TrivialWalkGroup&) {
    trivial = true;
  }
  // Pants: every twist is peripheral; coordinates must not move at all.
  double pants_motion = 0.0;
  {
    Representation rho = fiber_point({0, 3}, rng);
    const CharacterPoint start = trace_coordinates(rho);
    const auto& entries = catalog(0, 3).entries;
    for (int step = 0; step < 1000; ++step) {
      rho = apply_dehn_twist(rho, entries[rng.below(entries.size())].splitting, rng.coin() ? 1 : -1);
      pants_motion = std::max(pants_motion, character_distance(start, trace_coordinates(rho)));
    }
  }
  double peripheral = 0.0;
  for (SurfaceId id : kSurfaces) {
    for (const auto& e : catalog(id.genus, id.boundaries).entries) {
      if (!e.peripheral) continue;
      for (int i = 0; i < 20; ++i) {
        const Representation rho = fiber_point(id, rng);
        peripheral = std::max(peripheral, character_distance(trace_coordinates(rho),
                                                             trace_coordinates(apply_dehn_twist(rho, e.splitting, 1))));
      }
    }
  }
  double central = 0.0;
  for (SurfaceId id : std::vector<SurfaceId>{{1, 1}, {0, 4}, {1, 2}}) {
    const SurfacePresentation s = surface_presentation(id.genus, id.boundaries);
    for (const CurveCatalogEntry* e : catalog(id.genus, id.boundaries).walk_curves()) {
      for (const GroupElement& z : {GroupElement::identity(), GroupElement::minus_identity()}) {
        std::vector<GroupElement> values(static_cast<std::size_t>(s.rank()), z);
        const Representation rho(s, values);
        for (double t : {0.37, 2.5, -11.0}) {
          const Representation out = apply_twist_flow(rho, e->splitting, t);
          for (int k = 0; k < s.rank(); ++k) central = std::max(central, distance(out.values()[k], rho.values()[k]));
        }
      }
    }
  }
  const bool ok = trivial && pants_motion <= 1e-12 && peripheral <= 1e-12 && central <= 1e-12;
  return {ok, fmt("pants walk group %s, pants drift %.2e, peripheral twist distance %.2e, central flow motion %.2e "
                  "(tol 1e-12)",
                  trivial ? "trivial" : "NOT trivial", pants_motion, peripheral, central)};
}

std::string artifacts(const WalkConfig& cfg) {
  const WalkResult r = run_random_walk(cfg);
  std::ostringstream os;
  write_csv_header(os, surface_presentation(cfg.surface.genus, cfg.surface.boundaries).rank());
  write_csv_rows(os, r.orbit);
  os << r.report.dump();
  return os.str();
}

Outcome reproducibility() {
  WalkConfig cfg;
  cfg.surface = {1, 2};
  cfg.seed = kMasterSeed + 11;
  cfg.steps = 5'000;
  cfg.burn_in = 100;
  cfg.reference_samples = 500;
  cfg.min_samples = 100;
  cfg.chains = 2;
  const std::string a = artifacts(cfg);
  const std::string b = artifacts(cfg);
  return {a == b, fmt("two runs of the same config, %zu bytes, %s", a.size(), a == b ? "identical" : "DIFFERENT")};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"formula suite", formula_suite},
      {"variation function", variation_function},
      {"trace reducer sweep", trace_reducer_sweep},
      {"splitting catalog", catalog_validation},
      {"Dehn twist vs flow", dehn_vs_flow},
      {"tangent rank", tangent_ranks},
      {"measure invariance", measure_invariance},
      {"ergodicity walks", ergodicity},
      {"circle dynamics", circle_dynamics},
      {"degenerate cases", degenerate_cases},
      {"reproducibility", reproducibility},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    if (!o.passed) ++failures;
    std::printf("[%s] %zu %s: %s\n", o.passed ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.summary.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
