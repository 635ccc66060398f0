#include "widths/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace widths {

Chord chord_from(const Domain& dom, double t0, const Direction& dir) {
  const Vec2 p0 = dom.boundary_point(t0);
  const Vec2 d = dir.vec();
  const double entry = d.dot(dom.inward_normal(t0).vec());
  if (entry <= 1e-12) {
    throw TangentialDirection("chord_from: direction not strictly inward");
  }
  // p0 lies on the boundary, so the quadratic for the ray parameter s has a
  // root at 0; the other root is -B/A.
  const double a = dom.a(), b = dom.b();
  const double A = d.x() * d.x() / (a * a) + d.y() * d.y() / (b * b);
  const double B = 2.0 * (p0.x() * d.x() / (a * a) + p0.y() * d.y() / (b * b));
  const double s = -B / A;
  const Vec2 p1 = p0 + s * d;
  double t0n = std::fmod(t0, 2.0 * M_PI);
  if (t0n < 0.0) t0n += 2.0 * M_PI;
  return Chord{BoundaryPoint{t0n, p0}, BoundaryPoint{dom.boundary_param(p1), p1}};
}

double point_segment_distance(const Vec2& p, const Vec2& a, const Vec2& b) {
  const Vec2 ab = b - a;
  const double len2 = ab.squaredNorm();
  if (len2 == 0.0) return (p - a).norm();
  const double t = std::clamp((p - a).dot(ab) / len2, 0.0, 1.0);
  return (p - (a + t * ab)).norm();
}

namespace {

double cross2(const Vec2& u, const Vec2& v) {
  return u.x() * v.y() - u.y() * v.x();
}

bool segments_properly_intersect(const Vec2& a0, const Vec2& a1,
                                 const Vec2& b0, const Vec2& b1) {
  const double d1 = cross2(a1 - a0, b0 - a0);
  const double d2 = cross2(a1 - a0, b1 - a0);
  const double d3 = cross2(b1 - b0, a0 - b0);
  const double d4 = cross2(b1 - b0, a1 - b0);
  return ((d1 > 0) != (d2 > 0)) && ((d3 > 0) != (d4 > 0));
}

}  // namespace

double segment_segment_distance(const Vec2& a0, const Vec2& a1, const Vec2& b0,
                                const Vec2& b1) {
  if (segments_properly_intersect(a0, a1, b0, b1)) return 0.0;
  double d = point_segment_distance(a0, b0, b1);
  d = std::min(d, point_segment_distance(a1, b0, b1));
  d = std::min(d, point_segment_distance(b0, a0, a1));
  d = std::min(d, point_segment_distance(b1, a0, a1));
  return d;
}

}  // namespace widths
