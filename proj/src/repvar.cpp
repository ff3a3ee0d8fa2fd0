#include "su2erg/repvar.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <stdexcept>
#include <string>

#include <Eigen/SVD>

#include "su2erg/error.hpp"

namespace su2erg {
namespace {

constexpr double kRankThreshold = 1e-7;
constexpr double kRankFloor = 1e-8;
constexpr double kStep = 1e-5;

void check_fiber(const SurfacePresentation& surface, std::span<const GroupElement> values,
                 const BoundaryCondition& b, double epsilon) {
  if (b.size() != static_cast<std::size_t>(surface.boundary_count())) {
    throw std::invalid_argument("boundary condition has " + std::to_string(b.size()) +
                                " values for " + to_string(surface.id()));
  }
  for (int i = 1; i <= surface.boundary_count(); ++i) {
    const double t = evaluate(surface.boundary_word(i), values).trace();
    if (std::abs(t - b[static_cast<std::size_t>(i - 1)]) > epsilon) {
      throw std::invalid_argument("boundary " + std::to_string(i) + " has trace " +
                                  std::to_string(t) + ", outside the fiber window");
    }
  }
}

// Haar measure conditioned on tr in [lo, hi].
GroupElement sample_in_trace_window(double lo, double hi, Rng& rng) {
  const double nearest_zero = std::clamp(0.0, lo, hi);
  const double peak = std::sqrt(4.0 - nearest_zero * nearest_zero);
  double t = lo;
  for (;;) {
    t = rng.uniform(lo, hi);
    if (rng.uniform() * peak < std::sqrt(std::max(0.0, 4.0 - t * t))) break;
  }
  const double z = rng.uniform(-1.0, 1.0);
  const double phi = 2.0 * std::numbers::pi * rng.uniform();
  const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
  const double w = 0.5 * t;
  const double s = std::sqrt(std::max(0.0, 1.0 - w * w));
  return GroupElement::from_quaternion(w, s * r * std::cos(phi), s * r * std::sin(phi), s * z);
}

std::size_t coordinate_position(const IndexSet& s, int n) {
  std::size_t pos = 0;
  const int i = s[0];
  if (s.size() == 1) return static_cast<std::size_t>(i - 1);
  pos += static_cast<std::size_t>(n);
  if (s.size() == 2) {
    for (int a = 1; a < i; ++a) pos += static_cast<std::size_t>(n - a);
    return pos + static_cast<std::size_t>(s[1] - i - 1);
  }
  pos += static_cast<std::size_t>(n * (n - 1) / 2);
  for (int a = 1; a < i; ++a) pos += static_cast<std::size_t>((n - a) * (n - a - 1) / 2);
  for (int b = i + 1; b < s[1]; ++b) pos += static_cast<std::size_t>(n - b);
  return pos + static_cast<std::size_t>(s[2] - s[1] - 1);
}

int numerical_rank(const Eigen::VectorXd& singular) {
  if (singular.size() == 0 || singular(0) <= kRankFloor) return 0;
  int r = 0;
  for (Eigen::Index i = 0; i < singular.size(); ++i) {
    if (singular(i) > kRankThreshold * singular(0)) ++r;
  }
  return r;
}

}  // namespace

BoundaryCondition::BoundaryCondition(std::vector<double> values) : values_(std::move(values)) {
  for (double v : values_) {
    if (!(v >= -2.0 && v <= 2.0)) {
      throw std::invalid_argument("boundary trace " + std::to_string(v) + " outside [-2, 2]");
    }
  }
}

BoundaryCondition BoundaryCondition::uniform(int boundaries, double value) {
  return BoundaryCondition(std::vector<double>(static_cast<std::size_t>(boundaries), value));
}

Representation::Representation(SurfacePresentation surface, std::vector<GroupElement> values)
    : surface_(std::move(surface)), values_(std::move(values)) {
  if (values_.size() != static_cast<std::size_t>(surface_.rank())) {
    throw std::invalid_argument("representation of " + to_string(surface_.id()) + " needs " +
                                std::to_string(surface_.rank()) + " values");
  }
}

Representation::Representation(SurfacePresentation surface, std::vector<GroupElement> values,
                               BoundaryCondition boundary, double epsilon)
    : Representation(std::move(surface), std::move(values)) {
  check_fiber(surface_, values_, boundary, epsilon);
  boundary_ = std::move(boundary);
  epsilon_ = epsilon;
}

GroupElement Representation::evaluate(const Word& w) const { return su2erg::evaluate(w, values_); }

std::vector<double> Representation::boundary_traces() const {
  std::vector<double> out;
  for (const Word& w : surface_.boundary_words()) out.push_back(evaluate(w).trace());
  return out;
}

Representation Representation::with_values(std::vector<GroupElement> values) const {
  Representation copy = *this;
  if (values.size() != values_.size()) throw std::invalid_argument("wrong number of values");
  copy.values_ = std::move(values);
  return copy;
}

Representation Representation::conjugated(const GroupElement& h) const {
  std::vector<GroupElement> values;
  values.reserve(values_.size());
  for (const GroupElement& g : values_) values.push_back(conjugate(h, g));
  return with_values(std::move(values));
}

CharacterPoint::CharacterPoint(SurfaceId surface, int rank, std::vector<double> coords)
    : surface_(surface), rank_(rank), coords_(std::move(coords)) {}

double CharacterPoint::operator[](const IndexSet& index_set) const {
  if (index_set.max_index() > rank_) {
    throw MissingVariable("f" + index_set.name() + " is not a coordinate on " +
                          to_string(surface_));
  }
  return coords_[coordinate_position(index_set, rank_)];
}

std::map<IndexSet, double> CharacterPoint::as_map() const {
  std::map<IndexSet, double> out;
  const auto sets = index_sets(rank_);
  for (std::size_t i = 0; i < sets.size(); ++i) out.emplace(sets[i], coords_[i]);
  return out;
}

FiberDraw sample_representation(const SurfacePresentation& surface, const BoundaryCondition& b,
                                double epsilon, Rng& rng, const SamplerOptions& options) {
  if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
  const int n = surface.boundary_count();
  if (b.size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("boundary condition has " + std::to_string(b.size()) +
                                " values for " + to_string(surface.id()));
  }
  std::vector<double> lo(static_cast<std::size_t>(n));
  std::vector<double> hi(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < lo.size(); ++i) {
    lo[i] = std::max(-2.0, b[i] - epsilon);
    hi[i] = std::min(2.0, b[i] + epsilon);
  }

  const int first_boundary_letter = 2 * surface.genus() + 1;
  const Word& last = surface.boundary_word(n);
  std::vector<GroupElement> values(static_cast<std::size_t>(surface.rank()));
  for (std::uint64_t proposal = 1; proposal <= options.proposal_budget; ++proposal) {
    for (int k = 1; k <= surface.rank(); ++k) {
      GroupElement& v = values[static_cast<std::size_t>(k - 1)];
      if (k >= first_boundary_letter) {
        const auto i = static_cast<std::size_t>(k - first_boundary_letter);
        v = sample_in_trace_window(lo[i], hi[i], rng);
      } else {
        v = haar_sample(rng);
      }
    }
    const double t = evaluate(last, values).trace();
    const auto i = static_cast<std::size_t>(n - 1);
    if (t >= lo[i] && t <= hi[i]) {
      return {Representation(surface, values, b, epsilon), proposal};
    }
  }
  throw FiberEmptyOrThin("no point of the " + std::to_string(epsilon) + "-fiber over " +
                         to_string(surface.id()) + " found in " +
                         std::to_string(options.proposal_budget) + " proposals");
}

CharacterPoint trace_coordinates(const Representation& rho) {
  const int rank = rho.surface().rank();
  std::vector<double> coords;
  for (const IndexSet& s : index_sets(rank)) coords.push_back(rho.evaluate(curve_word(s)).trace());
  return CharacterPoint(rho.surface().id(), rank, std::move(coords));
}

double character_distance(const CharacterPoint& p, const CharacterPoint& q) {
  if (p.surface() != q.surface() || p.rank() != q.rank()) {
    throw SurfaceMismatch("cannot compare characters on " + to_string(p.surface()) + " and " +
                          to_string(q.surface()));
  }
  double d = 0.0;
  for (std::size_t i = 0; i < p.coords().size(); ++i) {
    d = std::max(d, std::abs(p.coords()[i] - q.coords()[i]));
  }
  return d;
}

int expected_dimension(SurfaceId surface) {
  return 6 * surface.genus - 6 + 2 * surface.boundaries;
}

TangentRankReport tangent_rank_report(const Representation& rho, const BoundaryCondition& b) {
  const SurfacePresentation& surface = rho.surface();
  if (b.size() != static_cast<std::size_t>(surface.boundary_count())) {
    throw SurfaceMismatch("boundary condition does not match " + to_string(surface.id()));
  }
  const int rank = surface.rank();
  const auto sets = index_sets(rank);
  const auto rows_f = static_cast<Eigen::Index>(sets.size());
  const auto rows_b = static_cast<Eigen::Index>(surface.boundary_count());
  const Eigen::Index cols = 3 * rank;

  Eigen::MatrixXd jf(rows_f, cols);
  Eigen::MatrixXd jb(rows_b, cols);
  const auto basis = tangent_basis();
  std::vector<GroupElement> plus(rho.values().begin(), rho.values().end());
  std::vector<GroupElement> minus = plus;
  for (int k = 0; k < rank; ++k) {
    for (int j = 0; j < 3; ++j) {
      const auto col = static_cast<Eigen::Index>(3 * k + j);
      const auto uk = static_cast<std::size_t>(k);
      plus[uk] = rho.values()[uk] * exp(kStep * basis[static_cast<std::size_t>(j)]);
      minus[uk] = rho.values()[uk] * exp(-kStep * basis[static_cast<std::size_t>(j)]);
      for (Eigen::Index r = 0; r < rows_f; ++r) {
        const Word w = curve_word(sets[static_cast<std::size_t>(r)]);
        jf(r, col) = (evaluate(w, plus).trace() - evaluate(w, minus).trace()) / (2.0 * kStep);
      }
      for (Eigen::Index r = 0; r < rows_b; ++r) {
        const Word& w = surface.boundary_word(static_cast<int>(r) + 1);
        jb(r, col) = (evaluate(w, plus).trace() - evaluate(w, minus).trace()) / (2.0 * kStep);
      }
      plus[uk] = rho.values()[uk];
      minus[uk] = rho.values()[uk];
    }
  }

  TangentRankReport report;
  report.expected = expected_dimension(surface.id());
  Eigen::JacobiSVD<Eigen::MatrixXd> boundary_svd(jb, Eigen::ComputeFullV);
  report.boundary_rank = numerical_rank(boundary_svd.singularValues());
  const Eigen::MatrixXd kernel =
      boundary_svd.matrixV().rightCols(cols - report.boundary_rank);
  const Eigen::MatrixXd restricted = jf * kernel;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(restricted);
  const Eigen::VectorXd singular = svd.singularValues();
  report.rank = numerical_rank(singular);
  report.singular_values.assign(singular.data(), singular.data() + singular.size());
  return report;
}

int tangent_rank(const Representation& rho, const BoundaryCondition& b) {
  return tangent_rank_report(rho, b).rank;
}

void write_csv_header(std::ostream& os, int rank) {
  os << "sample";
  for (const IndexSet& s : index_sets(rank)) os << ",f" << s.name();
  os << '\n';
}

void write_csv_rows(std::ostream& os, std::span<const CharacterPoint> points,
                    std::size_t first_index) {
  char buffer[32];
  for (std::size_t i = 0; i < points.size(); ++i) {
    os << (first_index + i);
    for (double v : points[i].coords()) {
      std::snprintf(buffer, sizeof buffer, "%.17g", v);
      os << ',' << buffer;
    }
    os << '\n';
  }
}

}  // namespace su2erg
