#pragma once

#include <cstdint>
#include <map>
#include <utility>

#include "su2erg/random.hpp"
#include "su2erg/trace_polynomial.hpp"
#include "su2erg/word.hpp"

namespace su2erg {

// Expresses tr(rho(w)) for a word w in a free group of rank N as a polynomial
// in the coordinates f_I = tr(rho(A_I)), |I| <= 3, valid for every
// representation into SL(2, C).
//
// Words are first brought to cyclic canonical form (trace is invariant under
// conjugation and inversion), then rewritten with the SL(2) identities
//   tr(uv) + tr(uv^-1) = tr(u) tr(v),   tr(u^-1) = tr(u),   tr(uv) = tr(vu)
// in priority order:
//   R2  a signed letter occurring twice: w ~ aUaV,
//       tr(w) = tr(aU) tr(aV) - tr(UV^-1)                (all shorter);
//   R1  an inverse letter: w ~ X a^-1,
//       tr(w) = tr(X) tr(a) - tr(Xa)      (shorter, or one fewer inverse);
//       rules run on whichever orientation of w has fewer inverse letters;
//   R3  three distinct positive letters a < b < c in the order acb:
//       tr(acb) = tr(a) tr(bc) + tr(b) tr(ac) + tr(c) tr(ab)
//                 - tr(a) tr(b) tr(c) - f_abc;
//   R4  four or more distinct positive letters, w = A B C D with D the tail:
//       the 2x2 four-product identity (coefficient 1/2), all terms shorter.
// Distinct positive letters in ascending cyclic order with k <= 3 are the
// variables themselves. R4 never fires when N <= 3, so outputs for N <= 3
// have integer coefficients.
//
// Every rule strictly lowers (length, inverse count) on each produced word.
// Results are memoized on (N, canonical word). A TraceReducer is not
// thread-safe; use one per thread (reduce_trace does this).
class TraceReducer {
 public:
  TracePolynomial reduce(const Word& w, int rank);

  // Number of rewrite rule applications performed (memo hits excluded).
  std::uint64_t rule_applications() const { return rule_applications_; }
  std::size_t memo_size() const { return memo_.size(); }

 private:
  TracePolynomial reduce_canonical(const Word& canonical);
  TracePolynomial tr(const Word& w);

  int rank_ = 0;
  std::map<std::pair<int, Word>, TracePolynomial> memo_;
  std::uint64_t rule_applications_ = 0;
};

// Thread-local memoized reduction. Throws InvalidWord when w uses a
// generator index above `rank`.
TracePolynomial reduce_trace(const Word& w, int rank);

// max over `trials` Haar-random rho in SU(2)^N of
// |reduce_trace(w)(f_I(rho)) - tr(rho(w))|.
double verify_reduction(const Word& w, int rank, int trials, Rng& rng);

}  // namespace su2erg
