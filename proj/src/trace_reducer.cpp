#include "su2erg/trace_reducer.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <vector>

#include "su2erg/error.hpp"

namespace su2erg {
namespace {

Word slice(const Word& w, std::size_t from, std::size_t to) {
  return Word(w.letters().subspan(from, to - from));
}

std::size_t inverse_count(const Word& w) {
  return static_cast<std::size_t>(
      std::count_if(w.letters().begin(), w.letters().end(), [](int x) { return x < 0; }));
}

// Distinct positive letters whose cyclic order is ascending, i.e. some
// rotation is strictly increasing.
bool cyclically_ascending(const Word& w) {
  std::size_t descents = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] > w[(i + 1) % w.size()]) ++descents;
  }
  return descents <= 1;
}

}  // namespace

TracePolynomial TraceReducer::reduce(const Word& w, int rank) {
  if (w.max_index() > rank) {
    throw InvalidWord("word " + format_word(w) + " uses a generator above rank " +
                      std::to_string(rank));
  }
  rank_ = rank;
  return tr(w);
}

TracePolynomial TraceReducer::tr(const Word& w) {
  const Word canonical = w.cyclic_canonical();
  if (canonical.empty()) return TracePolynomial::constant(2);
  const auto key = std::make_pair(rank_, canonical);
  if (const auto it = memo_.find(key); it != memo_.end()) return it->second;
  // Rules run on the orientation with fewer inverse letters, so R1 strictly
  // lowers the inverse count.
  const Word flipped = canonical.inverse();
  const Word& oriented = inverse_count(flipped) < inverse_count(canonical) ? flipped : canonical;
  TracePolynomial result = reduce_canonical(oriented);
  memo_.emplace(key, result);
  return result;
}

TracePolynomial TraceReducer::reduce_canonical(const Word& w) {
  const std::size_t n = w.size();

  // R2: a repeated signed letter.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (w[i] != w[j]) continue;
      ++rule_applications_;
      const Word r = w.rotated(i);  // a U a V with the second a at j - i
      const std::size_t second = j - i;
      const Word a = Word::letter(r[0]);
      const Word u = slice(r, 1, second);
      const Word v = slice(r, second + 1, n);
      return tr(a * u) * tr(a * v) - tr(u * v.inverse());
    }
  }

  // R1: an inverse letter, rotated to the end.
  for (std::size_t i = 0; i < n; ++i) {
    if (w[i] > 0) continue;
    ++rule_applications_;
    const Word r = w.rotated(i + 1);  // X a^-1
    const Word a = Word::letter(-r[n - 1]);
    const Word x = slice(r, 0, n - 1);
    return tr(x) * tr(a) - tr(x * a);
  }

  // Distinct positive letters from here on.
  if (n <= 3 && cyclically_ascending(w)) {
    std::vector<int> sorted(w.letters().begin(), w.letters().end());
    std::sort(sorted.begin(), sorted.end());
    return TracePolynomial::variable(IndexSet(sorted));
  }

  ++rule_applications_;
  if (n == 3) {
    // R3: tr(acb) = tA tBC + tB tAC + tC tAB - tA tB tC - tr(abc), abc ascending.
    std::vector<int> sorted(w.letters().begin(), w.letters().end());
    std::sort(sorted.begin(), sorted.end());
    const Word a = Word::letter(sorted[0]);
    const Word b = Word::letter(sorted[1]);
    const Word c = Word::letter(sorted[2]);
    return tr(a) * tr(b * c) + tr(b) * tr(a * c) + tr(c) * tr(a * b) -
           tr(a) * tr(b) * tr(c) - TracePolynomial::variable(IndexSet(sorted));
  }

  // R4: 2 tr(ABCD) = tA tBCD + tB tACD + tC tABD + tD tABC + tAB tCD - tAC tBD
  //   + tAD tBC - tA tB tCD - tA tD tBC - tB tC tAD - tC tD tAB + tA tB tC tD.
  const Word a = Word::letter(w[0]);
  const Word b = Word::letter(w[1]);
  const Word c = Word::letter(w[2]);
  const Word d = slice(w, 3, n);
  const TracePolynomial ta = tr(a);
  const TracePolynomial tb = tr(b);
  const TracePolynomial tc = tr(c);
  const TracePolynomial td = tr(d);
  TracePolynomial twice = ta * tr(b * c * d) + tb * tr(a * c * d) + tc * tr(a * b * d) +
                          td * tr(a * b * c) + tr(a * b) * tr(c * d) - tr(a * c) * tr(b * d) +
                          tr(a * d) * tr(b * c) - ta * tb * tr(c * d) - ta * td * tr(b * c) -
                          tb * tc * tr(a * d) - tc * td * tr(a * b) + ta * tb * tc * td;
  return Rational(1, 2) * twice;
}

TracePolynomial reduce_trace(const Word& w, int rank) {
  thread_local TraceReducer reducer;
  return reducer.reduce(w, rank);
}

double verify_reduction(const Word& w, int rank, int trials, Rng& rng) {
  const TracePolynomial p = reduce_trace(w, rank);
  const std::vector<IndexSet> sets = index_sets(rank);
  double worst = 0.0;
  std::vector<GroupElement> values(static_cast<std::size_t>(rank));
  for (int t = 0; t < trials; ++t) {
    for (auto& v : values) v = haar_sample(rng);
    std::map<IndexSet, double> coords;
    for (const IndexSet& s : sets) coords.emplace(s, evaluate(curve_word(s), values).trace());
    worst = std::max(worst, std::abs(p.evaluate(coords) - evaluate(w, values).trace()));
  }
  return worst;
}

}  // namespace su2erg
