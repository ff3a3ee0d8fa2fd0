#include "su2erg/twist.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <sstream>

#include "su2erg/subgroup.hpp"

namespace su2erg {
namespace {

constexpr double kTightTolerance = 1e-12;
constexpr double kLooseTolerance = 1e-9;

std::vector<GroupElement> alphabet_values(const Representation& rho, const SplittingDatum& s) {
  std::vector<GroupElement> out;
  for (const Word& w : s.alphabet()) out.push_back(rho.evaluate(w));
  return out;
}

Representation recompose(const Representation& rho, const SplittingDatum& s,
                         const std::vector<GroupElement>& x) {
  std::vector<GroupElement> values;
  values.reserve(s.reexpressions.size());
  for (const Word& w : s.reexpressions) values.push_back(evaluate(w, x));
  return rho.with_values(std::move(values));
}

double max_value_distance(const Representation& a, const Representation& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.values().size(); ++i) {
    d = std::max(d, distance(a.values()[i], b.values()[i]));
  }
  return d;
}

void record(ValidationCheck& check, double error) {
  check.worst = std::max(check.worst, error);
  if (!(error <= check.tolerance)) check.passed = false;
}

void fail(ValidationCheck& check, const std::string& why) {
  check.passed = false;
  if (!check.detail.empty()) check.detail += "; ";
  check.detail += why;
}

}  // namespace

std::vector<Word> SplittingDatum::alphabet() const {
  std::vector<Word> out;
  if (kind == SplittingKind::Hnn) {
    out = complement;
    out.push_back(stable_letter);
  } else {
    out = side1;
    out.insert(out.end(), side2.begin(), side2.end());
  }
  return out;
}

SplittingDatum collar_splitting(const Word& curve, int rank) {
  SplittingDatum s;
  s.kind = SplittingKind::Amalgam;
  s.curve = curve;
  s.side1 = {curve};
  s.side2 = {curve};
  for (int k = 1; k <= rank; ++k) {
    s.side2.push_back(Word::letter(k));
    s.reexpressions.push_back(Word::letter(k + 2));
  }
  s.flow_sign = -1;
  return s;
}

Representation apply_twist_flow(const Representation& rho, const SplittingDatum& s, double t) {
  std::vector<GroupElement> x = alphabet_values(rho, s);
  if (s.kind == SplittingKind::Hnn) {
    const GroupElement z = one_param(rho.evaluate(s.alpha_minus), t);
    x.back() = x.back() * z;
  } else {
    const GroupElement z = one_param(rho.evaluate(s.curve), t);
    for (std::size_t i = s.side1.size(); i < x.size(); ++i) x[i] = conjugate(z, x[i]);
  }
  return recompose(rho, s, x);
}

Representation apply_dehn_twist(const Representation& rho, const SplittingDatum& s, int power) {
  Representation current = rho;
  const int steps = std::abs(power);
  for (int step = 0; step < steps; ++step) {
    std::vector<GroupElement> x = alphabet_values(current, s);
    if (s.kind == SplittingKind::Hnn) {
      const GroupElement a = current.evaluate(s.alpha_minus);
      x.back() = x.back() * (power > 0 ? a.inverse() : a);
    } else {
      const GroupElement a = current.evaluate(s.curve);
      const GroupElement h = power > 0 ? a.inverse() : a;
      for (std::size_t i = s.side1.size(); i < x.size(); ++i) x[i] = conjugate(h, x[i]);
    }
    current = recompose(current, s, x);
  }
  return current;
}

std::vector<Word> twist_automorphism(const SplittingDatum& s, int power) {
  std::vector<Word> images = s.alphabet();
  if (s.kind == SplittingKind::Hnn) {
    images.back() = images.back() * s.alpha_minus.pow(-power);
  } else {
    const Word left = s.curve.pow(-power);
    const Word right = s.curve.pow(power);
    for (std::size_t i = s.side1.size(); i < images.size(); ++i) {
      images[i] = left * images[i] * right;
    }
  }
  std::vector<Word> out;
  out.reserve(s.reexpressions.size());
  for (const Word& w : s.reexpressions) out.push_back(substitute(w, images));
  return out;
}

bool ValidationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const ValidationCheck& c) { return c.passed; });
}

ValidationReport validate_splitting(const SurfacePresentation& surface, const SplittingDatum& s,
                                    const BoundaryCondition& b, double epsilon, int trials,
                                    Rng& rng) {
  ValidationReport report;
  report.checks = {
      {"a_relation", true, 0.0, 0.0, ""},     {"b_round_trip", true, 0.0, 0.0, ""},
      {"c_boundary", true, 0.0, kTightTolerance, ""},
      {"d_flow_law", true, 0.0, kLooseTolerance, ""},
      {"e_period", true, 0.0, kLooseTolerance, ""},
      {"f_dehn_vs_flow", true, 0.0, kLooseTolerance, ""},
      {"g_f_alpha", true, 0.0, kTightTolerance, ""},
  };
  ValidationCheck& relation = report.checks[0];
  ValidationCheck& round_trip = report.checks[1];
  ValidationCheck& boundary = report.checks[2];
  ValidationCheck& flow_law = report.checks[3];
  ValidationCheck& period_check = report.checks[4];
  ValidationCheck& dehn = report.checks[5];
  ValidationCheck& f_alpha = report.checks[6];

  const int rank = surface.rank();
  const std::vector<Word> alphabet = s.alphabet();

  // (a)
  if (s.kind == SplittingKind::Hnn) {
    if (s.stable_letter * s.alpha_minus * s.stable_letter.inverse() != s.alpha_plus) {
      fail(relation, "beta alpha_minus beta^-1 = " +
                         format_word(s.stable_letter * s.alpha_minus * s.stable_letter.inverse()) +
                         " differs from alpha_plus = " + format_word(s.alpha_plus));
    }
    const FoldedSubgroup complement(s.complement);
    if (!complement.contains(s.alpha_minus)) fail(relation, "alpha_minus not in the complement");
    if (!complement.contains(s.alpha_plus)) fail(relation, "alpha_plus not in the complement");
    if (s.alpha_minus.cyclic_canonical() != s.curve.cyclic_canonical()) {
      fail(relation, "alpha_minus is not conjugate to the curve");
    }
  } else {
    if (!FoldedSubgroup(s.side1).contains(s.curve)) fail(relation, "curve not in side 1");
    if (!FoldedSubgroup(s.side2).contains(s.curve)) fail(relation, "curve not in side 2");
  }

  // (b)
  if (s.reexpressions.size() != static_cast<std::size_t>(rank)) {
    fail(round_trip, "expected " + std::to_string(rank) + " re-expressions");
  } else {
    for (int k = 1; k <= rank; ++k) {
      const Word& w = s.reexpressions[static_cast<std::size_t>(k - 1)];
      if (w.max_index() > static_cast<int>(alphabet.size())) {
        fail(round_trip, "A" + std::to_string(k) + " uses a letter outside the alphabet");
        continue;
      }
      const Word back = substitute(w, alphabet);
      if (back != Word::letter(k)) {
        fail(round_trip, "A" + std::to_string(k) + " re-expression gives " + format_word(back));
      }
    }
    if (round_trip.passed) {
      const std::vector<Word> forward = twist_automorphism(s, 1);
      const std::vector<Word> backward = twist_automorphism(s, -1);
      for (int k = 1; k <= rank; ++k) {
        if (substitute(forward[static_cast<std::size_t>(k - 1)], backward) != Word::letter(k)) {
          fail(round_trip, "twist and inverse twist do not compose to the identity");
          break;
        }
      }
    }
  }

  if (!relation.passed || !round_trip.passed) {
    for (std::size_t i = 2; i < report.checks.size(); ++i) {
      fail(report.checks[i], "skipped: formal checks failed");
    }
    return report;
  }

  const std::vector<Word> forward = twist_automorphism(s, 1);
  for (int trial = 0; trial < trials; ++trial) {
    const Representation rho = sample_representation(surface, b, epsilon, rng).representation;
    const GroupElement a = rho.evaluate(s.curve);
    const CharacterPoint base = trace_coordinates(rho);
    const std::vector<double> base_boundary = rho.boundary_traces();

    // (c), (g)
    const double t = rng.uniform(-10.0, 10.0);
    const Representation moved = apply_twist_flow(rho, s, t);
    const std::vector<double> moved_boundary = moved.boundary_traces();
    for (std::size_t i = 0; i < base_boundary.size(); ++i) {
      record(boundary, std::abs(moved_boundary[i] - base_boundary[i]));
    }
    record(f_alpha, std::abs(moved.evaluate(s.curve).trace() - a.trace()));

    // (d)
    const double u = rng.uniform(-10.0, 10.0);
    record(flow_law, max_value_distance(apply_twist_flow(rho, s, t + u),
                                        apply_twist_flow(apply_twist_flow(rho, s, u), s, t)));

    if (is_central(a)) continue;
    // (e)
    record(period_check,
           character_distance(trace_coordinates(apply_twist_flow(rho, s, period(a))), base));

    // (f)
    const double st = twist_time(a);
    const Representation twisted = apply_dehn_twist(rho, s, 1);
    record(dehn, character_distance(trace_coordinates(twisted),
                                    trace_coordinates(apply_twist_flow(rho, s, s.flow_sign * st))));
    record(dehn,
           character_distance(trace_coordinates(apply_dehn_twist(rho, s, -1)),
                              trace_coordinates(apply_twist_flow(rho, s, -s.flow_sign * st))));
    for (int k = 1; k <= rank; ++k) {
      record(dehn, distance(rho.evaluate(forward[static_cast<std::size_t>(k - 1)]),
                            twisted.value(k)));
    }
  }
  report.points = trials;
  for (auto& check : report.checks) {
    if (!check.passed && check.detail.empty()) {
      std::ostringstream os;
      os << "worst error " << check.worst << " exceeds " << check.tolerance;
      check.detail = os.str();
    }
  }
  return report;
}

}  // namespace su2erg
