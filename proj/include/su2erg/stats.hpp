#pragma once

#include <algorithm>
#include <span>
#include <vector>

#include "su2erg/error.hpp"

namespace su2erg {

// Two-sample Kolmogorov-Smirnov statistic sup_x |F_a(x) - F_b(x)|.
// Throws EmptySample when either sample is empty.
double ks_statistic(std::span<const double> a, std::span<const double> b);

// KS statistic of a sample against a continuous CDF.
template <class Cdf>
double ks_statistic_against(std::span<const double> sample, Cdf cdf) {
  if (sample.empty()) throw EmptySample("KS statistic of an empty sample");
  std::vector<double> sorted(sample.begin(), sample.end());
  std::sort(sorted.begin(), sorted.end());
  const double n = static_cast<double>(sorted.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double f = cdf(sorted[i]);
    d = std::max({d, static_cast<double>(i + 1) / n - f, f - static_cast<double>(i) / n});
  }
  return d;
}

// Star discrepancy of points in [0, 1) against the uniform distribution:
// max_i max(i/K - x_(i), x_(i) - (i-1)/K) over the sorted points.
// Throws EmptySample on an empty input.
double star_discrepancy(std::span<const double> points);

// Sample autocorrelation at the given lag (0 when the series is constant or
// shorter than lag + 2).
double autocorrelation(std::span<const double> series, std::size_t lag);

// Binned distance between two 2-D samples on [-2, 2]^2 with bins x bins cells:
// (1/2) sum (p - q)^2 / (p + q) over the normalized cell frequencies p, q.
// 0 for identical histograms, 1 for disjoint ones.
double binned_chi2_distance(std::span<const double> ax, std::span<const double> ay,
                            std::span<const double> bx, std::span<const double> by,
                            int bins = 16);

}  // namespace su2erg
