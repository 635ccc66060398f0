#include "widths/billiards.hpp"

#include <algorithm>
#include <cmath>

#include "widths/errors.hpp"

namespace widths {

std::pair<double, double> Caustic::semi_axes() const {
  if (!convex()) throw InvalidParameter("Caustic::semi_axes: not convex");
  return {std::sqrt(a * a - lambda), std::sqrt(b * b - lambda)};
}

Chord reflect(const Domain& dom, const Chord& c) {
  const Vec2 u = c.direction();
  const Vec2 n = dom.outward_normal(c.to.t).vec();
  const Vec2 reflected = u - 2.0 * u.dot(n) * n;
  return chord_from(dom, c.to.t, Direction(reflected));
}

BilliardOrbit orbit(const Domain& dom, const BilliardState& s0, int steps) {
  if (steps < 1) throw InvalidParameter("orbit: steps must be >= 1");
  BilliardOrbit out;
  Chord c = chord_from(dom, s0.t, s0.dir);
  out.chords.push_back(c);
  for (int k = 1; k < steps; ++k) {
    c = reflect(dom, c);
    out.chords.push_back(c);
  }
  const Vec2 start = dom.boundary_point(s0.t);
  const Vec2 end = out.chords.back().to.p;
  const Vec2 next_dir =
      reflect(dom, out.chords.back()).direction();
  const double gap =
      (end - start).norm() + (next_dir - s0.dir.vec()).norm();
  if (gap <= kClosureTol) {
    out.closed = true;
    out.period = steps;
  }
  return out;
}

Caustic caustic_of(const Domain& dom, const Chord& c) {
  // Homogeneous line form alpha x + beta y = gamma with unit (alpha, beta);
  // tangency to the confocal conic gives
  // lambda = a^2 alpha^2 + b^2 beta^2 - gamma^2.
  const Vec2 u = c.direction();
  const Vec2 n(-u.y(), u.x());
  const double gamma = n.dot(c.from.p);
  Caustic out;
  out.a = dom.a();
  out.b = dom.b();
  out.lambda = dom.a() * dom.a() * n.x() * n.x() +
               dom.b() * dom.b() * n.y() * n.y() - gamma * gamma;
  return out;
}

bool focal_chord_test(const Domain& dom, const Chord& c, double tol) {
  const double f = dom.focal_distance();
  const Vec2 f1(-f, 0.0), f2(f, 0.0);
  if (f == 0.0) {
    return point_segment_distance(Vec2::Zero(), c.from.p, c.to.p) <= tol;
  }
  return segment_segment_distance(c.from.p, c.to.p, f1, f2) <= tol;
}

namespace {

/// Chord from boundary_point(t0) tangent to the convex confocal caustic with
/// parameter lambda, oriented counterclockwise (the caustic stays on the
/// left).
Chord tangent_chord_ccw(const Domain& dom, double t0, double lambda) {
  const double A1 = dom.a() * dom.a() - lambda;
  const double B1 = dom.b() * dom.b() - lambda;
  const Vec2 P = dom.boundary_point(t0);
  const double Ax = P.x(), Ay = P.y();

  // Dual form: the line u x + v y = 1 is tangent to the caustic iff
  // A1 u^2 + B1 v^2 = 1; passing through P pins u Ax + v Ay = 1.
  double uv[2][2];
  int nsol = 0;
  if (std::abs(Ay) >= std::abs(Ax)) {
    const double q2 = A1 + B1 * Ax * Ax / (Ay * Ay);
    const double q1 = -2.0 * B1 * Ax / (Ay * Ay);
    const double q0 = B1 / (Ay * Ay) - 1.0;
    const double disc = q1 * q1 - 4.0 * q2 * q0;
    if (disc <= 0.0) throw NoConvergence("tangent_chord: no tangent lines");
    const double r = std::sqrt(disc);
    for (double u : {(-q1 - r) / (2.0 * q2), (-q1 + r) / (2.0 * q2)}) {
      uv[nsol][0] = u;
      uv[nsol][1] = (1.0 - u * Ax) / Ay;
      ++nsol;
    }
  } else {
    const double q2 = B1 + A1 * Ay * Ay / (Ax * Ax);
    const double q1 = -2.0 * A1 * Ay / (Ax * Ax);
    const double q0 = A1 / (Ax * Ax) - 1.0;
    const double disc = q1 * q1 - 4.0 * q2 * q0;
    if (disc <= 0.0) throw NoConvergence("tangent_chord: no tangent lines");
    const double r = std::sqrt(disc);
    for (double v : {(-q1 - r) / (2.0 * q2), (-q1 + r) / (2.0 * q2)}) {
      uv[nsol][0] = (1.0 - v * Ay) / Ax;
      uv[nsol][1] = v;
      ++nsol;
    }
  }

  const Vec2 inward = dom.inward_normal(t0).vec();
  for (int s = 0; s < nsol; ++s) {
    Vec2 d(-uv[s][1], uv[s][0]);
    d.normalize();
    if (d.dot(inward) < 0.0) d = -d;
    // counterclockwise: the origin lies to the left of the chord
    if (d.x() * (-Ay) - d.y() * (-Ax) > 0.0) {
      return chord_from(dom, t0, Direction(d));
    }
  }
  throw NoConvergence("tangent_chord: no counterclockwise tangent");
}

/// Total boundary-parameter advance of k bounces starting tangent to the
/// lambda-caustic.
double advance(const Domain& dom, double t0, double lambda, int k) {
  Chord c = tangent_chord_ccw(dom, t0, lambda);
  double total = 0.0;
  double t = t0;
  for (int i = 0; i < k; ++i) {
    double dt = std::fmod(c.to.t - t, 2.0 * M_PI);
    if (dt <= 0.0) dt += 2.0 * M_PI;
    total += dt;
    t = c.to.t;
    if (i + 1 < k) c = reflect(dom, c);
  }
  return total;
}

BilliardOrbit disk_regular_orbit(const Domain& dom, int k, double start_t) {
  BilliardOrbit out;
  const double step = 2.0 * M_PI / k;
  for (int i = 0; i < k; ++i) {
    const double ta = start_t + i * step;
    const Vec2 pa = dom.boundary_point(ta);
    const Vec2 pb = dom.boundary_point(ta + step);
    out.chords.push_back(Chord{BoundaryPoint{std::fmod(ta, 2 * M_PI), pa},
                               BoundaryPoint{std::fmod(ta + step, 2 * M_PI),
                                             pb}});
  }
  out.closed = true;
  out.period = k;
  return out;
}

BilliardOrbit axis_orbit(const Domain& dom, double t_axis) {
  const Vec2 p0 = dom.boundary_point(t_axis);
  const Vec2 p1 = dom.boundary_point(t_axis + M_PI);
  BilliardOrbit out;
  out.chords.push_back(Chord{BoundaryPoint{t_axis, p0},
                             BoundaryPoint{t_axis + M_PI, p1}});
  out.chords.push_back(Chord{BoundaryPoint{t_axis + M_PI, p1},
                             BoundaryPoint{t_axis, p0}});
  out.closed = true;
  out.period = 2;
  return out;
}

}  // namespace

BilliardOrbit find_closed_orbit(const Domain& dom, int k, double start_t) {
  if (k < 2) throw InvalidParameter("find_closed_orbit: k must be >= 2");

  if (k == 2) {
    if (dom.is_disk()) return disk_regular_orbit(dom, 2, start_t);
    // Only the axes reflect back onto themselves.
    const double snapped = std::round(start_t / (M_PI / 2.0)) * (M_PI / 2.0);
    if (std::abs(start_t - snapped) > 1e-9) {
      throw NoConvergence("find_closed_orbit: 2-orbits exist only on the axes");
    }
    return axis_orbit(dom, snapped);
  }

  if (dom.is_disk()) return disk_regular_orbit(dom, k, start_t);

  const double b2 = dom.b() * dom.b();
  const double target = 2.0 * M_PI;
  double lo = 1e-9 * b2, hi = (1.0 - 1e-12) * b2;

  // Empirical monotonicity guard for the bisection: the total advance must
  // grow with lambda on a coarse grid.
  double prev = -1.0;
  for (int i = 0; i <= 16; ++i) {
    const double lam = lo + (hi - lo) * i / 16.0;
    const double adv = advance(dom, start_t, lam, k);
    if (adv < prev - 1e-9) {
      throw NoConvergence("find_closed_orbit: advance not monotone in lambda");
    }
    prev = adv;
  }

  const double flo = advance(dom, start_t, lo, k) - target;
  const double fhi = advance(dom, start_t, hi, k) - target;
  if (!(flo < 0.0 && fhi > 0.0)) {
    throw NoConvergence("find_closed_orbit: closure not bracketed");
  }
  for (int it = 0; it < 200 && hi - lo > 1e-16 * b2; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (advance(dom, start_t, mid, k) < target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double lambda = 0.5 * (lo + hi);

  const Chord first = tangent_chord_ccw(dom, start_t, lambda);
  BilliardOrbit out = orbit(dom, BilliardState(start_t, Direction(first.direction())), k);
  if (!out.closed) {
    throw NoConvergence("find_closed_orbit: orbit did not close at tolerance");
  }
  return out;
}

PonceletReport poncelet_invariance(const Domain& dom, int k, int samples) {
  if (k < 3) throw InvalidParameter("poncelet_invariance: k must be >= 3");
  if (samples < 2) throw InvalidParameter("poncelet_invariance: samples >= 2");
  PonceletReport report;
  double lambda_along = 0.0;
  for (int s = 0; s < samples; ++s) {
    const double t0 = 2.0 * M_PI * s / samples + 0.1357;
    const BilliardOrbit orb = find_closed_orbit(dom, k, t0);
    report.perimeters.push_back(orb.perimeter());
    double lmin = std::numeric_limits<double>::infinity(), lmax = -lmin;
    for (const auto& c : orb.chords) {
      const double l = caustic_of(dom, c).lambda;
      lmin = std::min(lmin, l);
      lmax = std::max(lmax, l);
    }
    lambda_along = std::max(lambda_along, lmax - lmin);
    report.lambdas.push_back(0.5 * (lmin + lmax));
  }
  const auto [pmin, pmax] =
      std::minmax_element(report.perimeters.begin(), report.perimeters.end());
  const auto [lmin, lmax] =
      std::minmax_element(report.lambdas.begin(), report.lambdas.end());
  report.perimeter_spread = *pmax - *pmin;
  report.lambda_spread_across = *lmax - *lmin;
  report.lambda_spread_along = lambda_along;
  return report;
}

}  // namespace widths
