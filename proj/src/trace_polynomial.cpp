#include "su2erg/trace_polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "su2erg/error.hpp"

namespace su2erg {
namespace {

std::int64_t checked(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("trace polynomial coefficient overflow");
  return static_cast<std::int64_t>(v);
}

Rational make(__int128 num, __int128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  __int128 a = num < 0 ? -num : num;
  __int128 b = den;
  while (b != 0) {
    const __int128 t = a % b;
    a = b;
    b = t;
  }
  if (a > 1) {
    num /= a;
    den /= a;
  }
  return Rational(checked(num), checked(den));
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = g > 1 ? num / g : num;
  den_ = g > 1 ? den / g : den;
}

std::string Rational::to_string() const {
  return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
}

Rational operator+(const Rational& a, const Rational& b) {
  return make(static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
              static_cast<__int128>(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  return make(static_cast<__int128>(a.num_) * b.num_, static_cast<__int128>(a.den_) * b.den_);
}

Rational Rational::operator-() const { return Rational(checked(-static_cast<__int128>(num_)), den_); }

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

TracePolynomial TracePolynomial::constant(Rational c) {
  TracePolynomial p;
  p.add_term({}, c);
  return p;
}

TracePolynomial TracePolynomial::variable(const IndexSet& index_set) {
  TracePolynomial p;
  p.add_term({index_set}, 1);
  return p;
}

void TracePolynomial::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

int TracePolynomial::degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.size()));
  return d;
}

bool TracePolynomial::has_integer_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& term) { return term.second.is_integer(); });
}

std::vector<IndexSet> TracePolynomial::variables() const {
  std::vector<IndexSet> vars;
  for (const auto& [m, c] : terms_) vars.insert(vars.end(), m.begin(), m.end());
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return vars;
}

TracePolynomial& TracePolynomial::operator+=(const TracePolynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

TracePolynomial& TracePolynomial::operator-=(const TracePolynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

TracePolynomial operator*(const TracePolynomial& a, const TracePolynomial& b) {
  TracePolynomial out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m;
      m.reserve(ma.size() + mb.size());
      std::merge(ma.begin(), ma.end(), mb.begin(), mb.end(), std::back_inserter(m));
      out.add_term(m, ca * cb);
    }
  }
  return out;
}

TracePolynomial operator*(Rational c, const TracePolynomial& p) {
  TracePolynomial out;
  for (const auto& [m, coeff] : p.terms_) out.add_term(m, c * coeff);
  return out;
}

double TracePolynomial::evaluate(const std::map<IndexSet, double>& coords) const {
  double total = 0.0;
  for (const auto& [m, c] : terms_) {
    double v = c.to_double();
    for (const IndexSet& var : m) {
      const auto it = coords.find(var);
      if (it == coords.end()) throw MissingVariable("no value for variable f" + var.name());
      v *= it->second;
    }
    total += v;
  }
  return total;
}

std::string TracePolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Monomial, Rational>> ordered(terms_.begin(), terms_.end());
  std::stable_sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
    const bool pa = a.second.num() > 0;
    const bool pb = b.second.num() > 0;
    if (pa != pb) return pa;
    if (a.first.size() != b.first.size()) return a.first.size() > b.first.size();
    return MonomialOrder{}(a.first, b.first);
  });

  std::string out;
  for (std::size_t t = 0; t < ordered.size(); ++t) {
    const auto& [m, c] = ordered[t];
    const bool negative = c.num() < 0;
    if (t == 0) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const Rational magnitude = negative ? -c : c;

    std::string body;
    for (std::size_t i = 0; i < m.size();) {
      std::size_t j = i;
      while (j < m.size() && m[j] == m[i]) ++j;
      if (!body.empty()) body += '*';
      body += "f" + m[i].name();
      if (j - i > 1) body += "^" + std::to_string(j - i);
      i = j;
    }

    if (body.empty()) {
      out += magnitude.to_string();
    } else if (magnitude == Rational(1)) {
      out += body;
    } else {
      out += magnitude.to_string() + "*" + body;
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const TracePolynomial& p) { return os << p.to_string(); }

double evaluate_polynomial(const TracePolynomial& p, const std::map<IndexSet, double>& coords) {
  return p.evaluate(coords);
}

}  // namespace su2erg
