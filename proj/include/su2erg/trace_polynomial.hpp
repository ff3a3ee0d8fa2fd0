#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "su2erg/surface.hpp"

namespace su2erg {

// Exact rational coefficient, always in lowest terms with positive
// denominator. Arithmetic throws std::overflow_error instead of wrapping.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t n) : num_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t num, std::int64_t den);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string to_string() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  Rational operator-() const;

  friend bool operator==(const Rational&, const Rational&) = default;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

// A monomial in the trace coordinates: the multiset of its variables, kept
// sorted in IndexSet order (so f1^2 f12 is {1, 1, 12}).
using Monomial = std::vector<IndexSet>;

// Graded lexicographic order on monomials: total degree first, then the
// sorted variable lists lexicographically.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

// Polynomial in the variables f_I. Zero coefficients are never stored.
class TracePolynomial {
 public:
  using Terms = std::map<Monomial, Rational, MonomialOrder>;

  TracePolynomial() = default;

  static TracePolynomial constant(Rational c);
  static TracePolynomial variable(const IndexSet& index_set);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  int degree() const;

  // True when every coefficient is an integer.
  bool has_integer_coefficients() const;

  // Distinct variables, in IndexSet order.
  std::vector<IndexSet> variables() const;

  TracePolynomial& operator+=(const TracePolynomial& other);
  TracePolynomial& operator-=(const TracePolynomial& other);
  friend TracePolynomial operator+(TracePolynomial a, const TracePolynomial& b) { return a += b; }
  friend TracePolynomial operator-(TracePolynomial a, const TracePolynomial& b) { return a -= b; }
  friend TracePolynomial operator*(const TracePolynomial& a, const TracePolynomial& b);
  friend TracePolynomial operator*(Rational c, const TracePolynomial& p);

  friend bool operator==(const TracePolynomial& a, const TracePolynomial& b) {
    return a.terms_ == b.terms_;
  }

  // Evaluates with the given coordinate values; throws MissingVariable when
  // a variable has no value.
  double evaluate(const std::map<IndexSet, double>& coords) const;

  // Text form, e.g. "f1^2 + f2^2 + f12^2 - f1*f2*f12 - 2". Terms with
  // positive coefficients come first, then negative ones; within each group
  // by descending degree, ties in graded-lex order of the variable lists.
  // Non-integer coefficients print as "1/2*f1*f2". The zero polynomial is "0".
  std::string to_string() const;

 private:
  void add_term(const Monomial& m, const Rational& c);

  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const TracePolynomial& p);

// Free-function spelling used by the CLI and tests.
double evaluate_polynomial(const TracePolynomial& p, const std::map<IndexSet, double>& coords);

}  // namespace su2erg
