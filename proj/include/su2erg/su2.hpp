#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>

#include "su2erg/random.hpp"

namespace su2erg {

class TangentElement;

// An element of SU(2) stored as a unit quaternion w + x i + y j + z k.
//
// Matrix picture: w + x i + y j + z k  <->  [[w + i x,  y + i z],
//                                            [-y + i z, w - i x]],
// so the trace is 2w and the quaternion units i, j, k map to i*sigma_z,
// i*sigma_y, i*sigma_x (each squares to -identity).
//
// Products renormalize when the accumulated product depth reaches 64 or the
// norm drifts by more than 1e-13, whichever comes first.
class GroupElement {
 public:
  // Identity.
  constexpr GroupElement() = default;

  // Normalizes (w, x, y, z); throws std::invalid_argument on a zero vector.
  static GroupElement from_quaternion(double w, double x, double y, double z);

  // cos(angle) + sin(angle) * axis; `axis` need not be normalized but must be
  // nonzero unless sin(angle) == 0.
  static GroupElement from_axis_angle(std::array<double, 3> axis, double angle);

  static constexpr GroupElement identity() { return GroupElement(); }
  static constexpr GroupElement minus_identity() {
    return GroupElement(-1.0, 0.0, 0.0, 0.0, 0);
  }

  double w() const { return w_; }
  double x() const { return x_; }
  double y() const { return y_; }
  double z() const { return z_; }

  double trace() const { return 2.0 * w_; }

  // Inverse = quaternion conjugate.
  GroupElement inverse() const { return GroupElement(w_, -x_, -y_, -z_, depth_); }

  // Integer power by repeated squaring.
  GroupElement pow(std::int64_t exponent) const;

  // Euclidean norm of the pure part, i.e. sin(theta) for g = cos(theta) + sin(theta) u.
  double sin_angle() const;

  // Rotation angle theta in [0, pi].
  double angle() const;

  friend GroupElement operator*(const GroupElement& a, const GroupElement& b);
  GroupElement& operator*=(const GroupElement& other) { return *this = *this * other; }

  friend bool operator==(const GroupElement&, const GroupElement&) = default;

 private:
  constexpr GroupElement(double w, double x, double y, double z, std::uint8_t depth)
      : w_(w), x_(x), y_(y), z_(z), depth_(depth) {}

  double w_ = 1.0;
  double x_ = 0.0;
  double y_ = 0.0;
  double z_ = 0.0;
  std::uint8_t depth_ = 0;  // products since the last renormalization
};

std::ostream& operator<<(std::ostream& os, const GroupElement& g);

// Euclidean distance between the quaternion coefficient vectors.
double distance(const GroupElement& a, const GroupElement& b);

// h g h^{-1}.
GroupElement conjugate(const GroupElement& h, const GroupElement& g);

// Element of su(2), stored by its pure-quaternion coefficients.
class TangentElement {
 public:
  constexpr TangentElement() = default;
  constexpr TangentElement(double x, double y, double z) : x_(x), y_(y), z_(z) {}

  double x() const { return x_; }
  double y() const { return y_; }
  double z() const { return z_; }

  double norm() const;

  friend TangentElement operator+(const TangentElement& a, const TangentElement& b) {
    return {a.x_ + b.x_, a.y_ + b.y_, a.z_ + b.z_};
  }
  friend TangentElement operator-(const TangentElement& a, const TangentElement& b) {
    return {a.x_ - b.x_, a.y_ - b.y_, a.z_ - b.z_};
  }
  friend TangentElement operator*(double s, const TangentElement& a) {
    return {s * a.x_, s * a.y_, s * a.z_};
  }

  friend bool operator==(const TangentElement&, const TangentElement&) = default;

 private:
  double x_ = 0.0;
  double y_ = 0.0;
  double z_ = 0.0;
};

// <X, Y> = tr(XY) on 2x2 traceless skew-Hermitian matrices; equals
// -2 (x x' + y y' + z z') in pure-quaternion coefficients.
double pairing(const TangentElement& a, const TangentElement& b);

// exp: su(2) -> SU(2).
GroupElement exp(const TangentElement& v);

// Ad(h) v = h v h^{-1}.
TangentElement adjoint(const GroupElement& h, const TangentElement& v);

// The canonical basis of su(2) as pure quaternions i, j, k.
std::array<TangentElement, 3> tangent_basis();

// Haar-uniform element of SU(2) (uniform on the 3-sphere), drawn with three
// uniforms by Shoemake's subgroup algorithm.
GroupElement haar_sample(Rng& rng);

// tr(g) in [-2, 2].
inline double trace(const GroupElement& g) { return g.trace(); }

// Variation function of the trace: the traceless part F(g) = g - (tr g / 2) I.
// Satisfies <F(g), v> = d/dt|_0 tr(g exp(t v)).
TangentElement variation(const GroupElement& g);

// zeta^t(g) = exp(t F(g)). For g = cos(theta) + sin(theta) u this is
// cos(t sin(theta)) + sin(t sin(theta)) u; identity when g is central.
GroupElement one_param(const GroupElement& g, double t);

// s(g) = 2 / sqrt(4 - tr(g)^2) * arccos(tr(g) / 2) = theta / sin(theta), the
// flow time with zeta^{s(g)}(g) = g. Throws CentralElement for
// |tr(g)| >= 2 - 1e-12.
double twist_time(const GroupElement& g);

// T(g) = 4 pi / sqrt(4 - tr(g)^2) = 2 pi / sin(theta), the minimal t > 0 with
// zeta^t(g) = identity. Throws CentralElement as twist_time does.
double period(const GroupElement& g);

// True when |tr(g)| >= 2 - 1e-12.
bool is_central(const GroupElement& g);

}  // namespace su2erg
