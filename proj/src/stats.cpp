#include "su2erg/stats.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "su2erg/error.hpp"

namespace su2erg {

double ks_statistic(std::span<const double> a, std::span<const double> b) {
  if (a.empty() || b.empty()) throw EmptySample("KS statistic needs two nonempty samples");
  std::vector<double> x(a.begin(), a.end());
  std::vector<double> y(b.begin(), b.end());
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  // Track |i ny - j nx| in integers so the result is the correctly rounded
  // value of an exact fraction.
  const auto nx = static_cast<std::int64_t>(x.size());
  const auto ny = static_cast<std::int64_t>(y.size());
  std::size_t i = 0;
  std::size_t j = 0;
  std::int64_t best = 0;
  while (i < x.size() && j < y.size()) {
    const double v = std::min(x[i], y[j]);
    while (i < x.size() && x[i] == v) ++i;
    while (j < y.size() && y[j] == v) ++j;
    const std::int64_t gap = static_cast<std::int64_t>(i) * ny - static_cast<std::int64_t>(j) * nx;
    best = std::max(best, gap < 0 ? -gap : gap);
  }
  return static_cast<double>(best) / static_cast<double>(nx * ny);
}

double star_discrepancy(std::span<const double> points) {
  if (points.empty()) throw EmptySample("discrepancy of an empty point set");
  std::vector<double> sorted(points.begin(), points.end());
  std::sort(sorted.begin(), sorted.end());
  const double k = static_cast<double>(sorted.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    d = std::max({d, static_cast<double>(i + 1) / k - sorted[i],
                  sorted[i] - static_cast<double>(i) / k});
  }
  return d;
}

double autocorrelation(std::span<const double> series, std::size_t lag) {
  if (series.size() < lag + 2) return 0.0;
  const double n = static_cast<double>(series.size());
  double mean = 0.0;
  for (double v : series) mean += v;
  mean /= n;
  double var = 0.0;
  for (double v : series) var += (v - mean) * (v - mean);
  if (var == 0.0) return 0.0;
  double cov = 0.0;
  for (std::size_t i = 0; i + lag < series.size(); ++i) {
    cov += (series[i] - mean) * (series[i + lag] - mean);
  }
  return cov / var;
}

double binned_chi2_distance(std::span<const double> ax, std::span<const double> ay,
                            std::span<const double> bx, std::span<const double> by, int bins) {
  if (ax.empty() || bx.empty()) throw EmptySample("binned distance needs two nonempty samples");
  const auto cells = static_cast<std::size_t>(bins * bins);
  auto histogram = [&](std::span<const double> xs, std::span<const double> ys) {
    std::vector<double> h(cells, 0.0);
    auto bin = [&](double v) {
      const int k = static_cast<int>(std::floor((v + 2.0) / 4.0 * bins));
      return static_cast<std::size_t>(std::clamp(k, 0, bins - 1));
    };
    for (std::size_t i = 0; i < xs.size(); ++i) {
      h[bin(xs[i]) * static_cast<std::size_t>(bins) + bin(ys[i])] += 1.0;
    }
    for (double& v : h) v /= static_cast<double>(xs.size());
    return h;
  };
  const std::vector<double> p = histogram(ax, ay);
  const std::vector<double> q = histogram(bx, by);
  double d = 0.0;
  for (std::size_t i = 0; i < cells; ++i) {
    if (p[i] + q[i] > 0.0) d += (p[i] - q[i]) * (p[i] - q[i]) / (p[i] + q[i]);
  }
  return 0.5 * d;
}

}  // namespace su2erg
