#include "su2erg/su2.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "su2erg/error.hpp"

namespace su2erg {
namespace {

constexpr int kRenormalizeDepth = 64;
constexpr double kNormDrift = 1e-13;
constexpr double kCentralTolerance = 1e-12;

}  // namespace

GroupElement GroupElement::from_quaternion(double w, double x, double y, double z) {
  const double n = std::sqrt(w * w + x * x + y * y + z * z);
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw std::invalid_argument("quaternion must be finite and nonzero");
  }
  return GroupElement(w / n, x / n, y / n, z / n, 0);
}

GroupElement GroupElement::from_axis_angle(std::array<double, 3> axis, double angle) {
  const double s = std::sin(angle);
  const double c = std::cos(angle);
  const double n = std::hypot(axis[0], axis[1], axis[2]);
  if (n == 0.0) {
    if (s != 0.0) throw std::invalid_argument("axis must be nonzero");
    return GroupElement(c, 0.0, 0.0, 0.0, 0);
  }
  return from_quaternion(c, s * axis[0] / n, s * axis[1] / n, s * axis[2] / n);
}

GroupElement GroupElement::pow(std::int64_t exponent) const {
  GroupElement base = exponent < 0 ? inverse() : *this;
  std::uint64_t e = exponent < 0 ? static_cast<std::uint64_t>(-(exponent + 1)) + 1
                                 : static_cast<std::uint64_t>(exponent);
  GroupElement result;
  while (e != 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e != 0) base = base * base;
  }
  return result;
}

double GroupElement::sin_angle() const { return std::hypot(x_, y_, z_); }

double GroupElement::angle() const { return std::atan2(sin_angle(), w_); }

GroupElement operator*(const GroupElement& a, const GroupElement& b) {
  const double w = a.w_ * b.w_ - a.x_ * b.x_ - a.y_ * b.y_ - a.z_ * b.z_;
  const double x = a.w_ * b.x_ + a.x_ * b.w_ + a.y_ * b.z_ - a.z_ * b.y_;
  const double y = a.w_ * b.y_ - a.x_ * b.z_ + a.y_ * b.w_ + a.z_ * b.x_;
  const double z = a.w_ * b.z_ + a.x_ * b.y_ - a.y_ * b.x_ + a.z_ * b.w_;
  const int depth = std::max(a.depth_, b.depth_) + 1;
  const double n2 = w * w + x * x + y * y + z * z;
  // |n - 1| > d  <=>  |n^2 - 1| > ~2d for n near 1.
  if (depth >= kRenormalizeDepth || std::abs(n2 - 1.0) > 2.0 * kNormDrift) {
    const double n = std::sqrt(n2);
    return GroupElement(w / n, x / n, y / n, z / n, 0);
  }
  return GroupElement(w, x, y, z, static_cast<std::uint8_t>(depth));
}

std::ostream& operator<<(std::ostream& os, const GroupElement& g) {
  return os << '(' << g.w() << ", " << g.x() << ", " << g.y() << ", " << g.z() << ')';
}

double distance(const GroupElement& a, const GroupElement& b) {
  const double dw = a.w() - b.w();
  const double dx = a.x() - b.x();
  const double dy = a.y() - b.y();
  const double dz = a.z() - b.z();
  return std::sqrt(dw * dw + dx * dx + dy * dy + dz * dz);
}

GroupElement conjugate(const GroupElement& h, const GroupElement& g) {
  return h * g * h.inverse();
}

double TangentElement::norm() const { return std::hypot(x_, y_, z_); }

double pairing(const TangentElement& a, const TangentElement& b) {
  return -2.0 * (a.x() * b.x() + a.y() * b.y() + a.z() * b.z());
}

GroupElement exp(const TangentElement& v) {
  const double r = v.norm();
  if (r == 0.0) return GroupElement::identity();
  return GroupElement::from_axis_angle({v.x(), v.y(), v.z()}, r);
}

TangentElement adjoint(const GroupElement& h, const TangentElement& v) {
  const double n = v.norm();
  if (n == 0.0) return v;
  // Conjugating the pure quaternion (0, v) keeps it pure.
  const GroupElement hv = h * GroupElement::from_quaternion(0.0, v.x(), v.y(), v.z());
  const GroupElement hvh = hv * h.inverse();
  return TangentElement(n * hvh.x(), n * hvh.y(), n * hvh.z());
}

std::array<TangentElement, 3> tangent_basis() {
  return {TangentElement(1.0, 0.0, 0.0), TangentElement(0.0, 1.0, 0.0),
          TangentElement(0.0, 0.0, 1.0)};
}

GroupElement haar_sample(Rng& rng) {
  const double u1 = rng.uniform();
  const double u2 = rng.uniform();
  const double u3 = rng.uniform();
  const double a = std::sqrt(1.0 - u1);
  const double b = std::sqrt(u1);
  const double t2 = 2.0 * std::numbers::pi * u2;
  const double t3 = 2.0 * std::numbers::pi * u3;
  return GroupElement::from_quaternion(b * std::cos(t3), a * std::sin(t2),
                                       a * std::cos(t2), b * std::sin(t3));
}

TangentElement variation(const GroupElement& g) {
  return TangentElement(g.x(), g.y(), g.z());
}

GroupElement one_param(const GroupElement& g, double t) {
  const double r = g.sin_angle();
  if (r == 0.0) return GroupElement::identity();
  return GroupElement::from_axis_angle({g.x(), g.y(), g.z()}, t * r);
}

bool is_central(const GroupElement& g) {
  return std::abs(g.trace()) >= 2.0 - kCentralTolerance;
}

double twist_time(const GroupElement& g) {
  if (is_central(g)) {
    throw CentralElement("twist_time: holonomy is central (|tr| = 2)");
  }
  // arccos(tr/2) * 2 / sqrt(4 - tr^2), evaluated as theta / sin(theta) with
  // both factors taken from the same components one_param uses.
  return g.angle() / g.sin_angle();
}

double period(const GroupElement& g) {
  if (is_central(g)) {
    throw CentralElement("period: holonomy is central (|tr| = 2)");
  }
  return 2.0 * std::numbers::pi / g.sin_angle();
}

}  // namespace su2erg
