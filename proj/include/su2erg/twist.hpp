#pragma once

#include <string>
#include <vector>

#include "su2erg/random.hpp"
#include "su2erg/repvar.hpp"
#include "su2erg/word.hpp"

namespace su2erg {

enum class SplittingKind { Hnn, Amalgam };

// How the surface group splits along a simple closed curve alpha.
//
// HNN (alpha nonseparating): the complement Sigma|alpha has fundamental group
// generated by `complement`, which contains the two sides alpha_minus and
// alpha_plus of the cut, and the stable letter beta satisfies
// beta alpha_minus beta^{-1} = alpha_plus. Splitting alphabet:
// x_1 .. x_m = complement, x_{m+1} = beta.
//
// Amalgam (alpha separating): the two sides are generated by `side1` and
// `side2`, both containing alpha. Splitting alphabet: side1 then side2.
//
// `reexpressions[k-1]` writes surface generator A_k as a word in the
// splitting alphabet (letters x1, x2, ..., inverses X1, ...).
struct SplittingDatum {
  SplittingKind kind = SplittingKind::Hnn;
  Word curve;

  std::vector<Word> complement;
  Word stable_letter;
  Word alpha_minus;
  Word alpha_plus;

  std::vector<Word> side1;
  std::vector<Word> side2;

  std::vector<Word> reexpressions;

  // The Dehn twist equals the flow at time flow_sign * s(rho(alpha)).
  int flow_sign = -1;

  // The splitting alphabet as words in the surface generators.
  std::vector<Word> alphabet() const;
};

struct CurveCatalogEntry {
  SurfaceId surface;
  IndexSet index_set;
  // Trace coordinate on the orbit of this twist: tr(rho(curve)) = f_I unless
  // the catalog substitutes another simple representative.
  Word curve;
  bool peripheral = false;
  bool separating = false;
  // Peripheral entries carry a collar splitting (see collar_splitting), so
  // their twists can still be applied and checked.
  SplittingDatum splitting;

  std::string name() const { return index_set.name(); }
};

// Splitting along a boundary-parallel curve: side1 = <alpha>, side2 = the
// whole group. Its twist is conjugation by rho(alpha)^{-1}.
SplittingDatum collar_splitting(const Word& curve, int rank);

// HNN: complement values fixed, beta -> beta zeta^t(rho(alpha_minus)).
// Amalgam: side1 fixed, side2 values -> zeta^t(rho(alpha)) s zeta^{-t}(rho(alpha)).
// Generator values are then recomposed from the re-expressions.
Representation apply_twist_flow(const Representation& rho, const SplittingDatum& s, double t);

// HNN: beta -> beta rho(alpha_minus)^{-1}. Amalgam: side2 values s ->
// rho(alpha)^{-1} s rho(alpha). Iterated |power| times; negative powers use
// the inverse substitution.
Representation apply_dehn_twist(const Representation& rho, const SplittingDatum& s, int power);

// Images of A_1 .. A_N under the substitution inducing apply_dehn_twist with
// the given power (+1 or -1): rho' (A_k) = rho(image[k-1]).
std::vector<Word> twist_automorphism(const SplittingDatum& s, int power = 1);

struct ValidationCheck {
  std::string name;
  bool passed = true;
  double worst = 0.0;  // largest observed error (0 for formal checks)
  double tolerance = 0.0;
  std::string detail;
};

struct ValidationReport {
  // (a) relation, (b) round trip, (c) boundary, (d) flow law, (e) period,
  // (f) Dehn twist vs flow, (g) f_alpha invariance.
  std::vector<ValidationCheck> checks;
  int points = 0;
  bool passed() const;
};

// Runs checks (a)-(g) on `trials` fiber points drawn with sample_representation.
ValidationReport validate_splitting(const SurfacePresentation& surface, const SplittingDatum& s,
                                    const BoundaryCondition& b, double epsilon, int trials,
                                    Rng& rng);

}  // namespace su2erg
