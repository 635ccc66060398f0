#ifndef WIDTHS_GEOMETRY_HPP
#define WIDTHS_GEOMETRY_HPP

#include <Eigen/Dense>
#include <utility>

#include "widths/errors.hpp"

namespace widths {

using Vec2 = Eigen::Vector2d;

/// Default geometric tolerance, in plane units. Everything here lives at O(1)
/// scale, so absolute tolerances are meaningful.
inline constexpr double kGeomTol = 1e-10;

enum class Containment { Interior, Boundary, Exterior };

/// A unit vector in the plane. Normalized on construction.
class Direction {
 public:
  explicit Direction(const Vec2& v) : u_(v) {
    const double n = u_.norm();
    if (!(n > 0.0) || !std::isfinite(n)) {
      throw InvalidParameter("Direction: zero or non-finite vector");
    }
    u_ /= n;
  }
  Direction(double x, double y) : Direction(Vec2(x, y)) {}

  static Direction from_angle(double phi) {
    return Direction(Vec2(std::cos(phi), std::sin(phi)));
  }

  const Vec2& vec() const { return u_; }
  double x() const { return u_.x(); }
  double y() const { return u_.y(); }
  Direction reversed() const { return Direction(-u_); }

 private:
  Vec2 u_;
};

/// Origin-centered, axis-aligned strictly convex planar domain: a disk of
/// radius R (a == b == R) or a full ellipse x^2/a^2 + y^2/b^2 <= 1 with
/// a >= b > 0. Queries in general position are handled by transforming the
/// query objects, never the domain.
class Domain {
 public:
  static Domain disk(double radius) {
    if (!(radius > 0.0)) throw InvalidParameter("disk: radius must be > 0");
    return Domain(radius, radius);
  }
  static Domain ellipse(double a, double b) {
    if (!(a >= b && b > 0.0)) {
      throw InvalidParameter("ellipse: need a >= b > 0");
    }
    return Domain(a, b);
  }

  double a() const { return a_; }
  double b() const { return b_; }
  bool is_disk() const { return a_ == b_; }
  double radius() const {
    if (!is_disk()) throw InvalidParameter("radius(): not a disk");
    return a_;
  }

  /// (a cos t, b sin t); t is taken mod 2*pi.
  Vec2 boundary_point(double t) const {
    return Vec2(a_ * std::cos(t), b_ * std::sin(t));
  }

  /// d/dt of boundary_point, unnormalized.
  Vec2 boundary_tangent(double t) const {
    return Vec2(-a_ * std::sin(t), b_ * std::cos(t));
  }

  /// Unit outward normal, proportional to the gradient (cos t / a, sin t / b).
  Direction outward_normal(double t) const {
    return Direction(Vec2(std::cos(t) / a_, std::sin(t) / b_));
  }
  Direction inward_normal(double t) const {
    return outward_normal(t).reversed();
  }

  /// x^2/a^2 + y^2/b^2 - 1; negative inside.
  double implicit_value(const Vec2& p) const {
    const double x = p.x() / a_, y = p.y() / b_;
    return x * x + y * y - 1.0;
  }

  Containment classify(const Vec2& p, double tol = kGeomTol) const {
    if (!(tol > 0.0)) throw InvalidParameter("classify: tol must be > 0");
    const double v = implicit_value(p);
    if (std::abs(v) <= tol) return Containment::Boundary;
    return v < 0.0 ? Containment::Interior : Containment::Exterior;
  }

  /// Boundary parameter of a point assumed on (or near) the boundary.
  double boundary_param(const Vec2& p) const {
    double t = std::atan2(p.y() / b_, p.x() / a_);
    if (t < 0.0) t += 2.0 * M_PI;
    return t;
  }

  /// (smallest, largest) diameter: (2b, 2a).
  std::pair<double, double> diameters() const { return {2.0 * b_, 2.0 * a_}; }

  /// Linear eccentricity sqrt(a^2 - b^2); 0 for the disk.
  double focal_distance() const { return std::sqrt(a_ * a_ - b_ * b_); }

 private:
  Domain(double a, double b) : a_(a), b_(b) {}
  double a_, b_;
};

/// A boundary point remembered together with its parameter, so reflection
/// maps never have to re-invert the parametrization.
struct BoundaryPoint {
  double t = 0.0;
  Vec2 p = Vec2::Zero();
};

/// A maximal straight segment inside the domain, both endpoints on the
/// boundary.
struct Chord {
  BoundaryPoint from;
  BoundaryPoint to;

  double length() const { return (to.p - from.p).norm(); }
  Vec2 direction() const { return (to.p - from.p).normalized(); }
};

/// Shoots from boundary_point(t0) in direction dir and returns the chord to
/// the second boundary intersection. dir must point strictly inward.
Chord chord_from(const Domain& dom, double t0, const Direction& dir);

/// Line in Hesse normal form x cos(theta) + y sin(theta) = rho, rho >= 0.
struct LineParam {
  double rho = 0.0;
  double theta = 0.0;

  Vec2 normal() const { return Vec2(std::cos(theta), std::sin(theta)); }
  Vec2 tangent() const { return Vec2(-std::sin(theta), std::cos(theta)); }
  Vec2 point(double s) const { return rho * normal() + s * tangent(); }
};

double point_segment_distance(const Vec2& p, const Vec2& a, const Vec2& b);
double segment_segment_distance(const Vec2& a0, const Vec2& a1, const Vec2& b0,
                                const Vec2& b1);

}  // namespace widths

#endif
