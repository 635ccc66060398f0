#ifndef WIDTHS_TESTS_HELPERS_HPP
#define WIDTHS_TESTS_HELPERS_HPP

#include <cmath>
#include <random>

#include "widths/billiards.hpp"
#include "widths/network.hpp"

namespace widths::testing {

inline Junction on_boundary(const Domain& dom, double t) {
  return Junction{dom.boundary_point(t), JunctionLocation::Boundary, t};
}

inline GeodesicNetwork diameter(const Domain& dom, double t_axis,
                                double theta = 1.0) {
  GeodesicNetwork net;
  net.junctions = {on_boundary(dom, t_axis), on_boundary(dom, t_axis + M_PI)};
  net.segments = {{0, 1, theta}};
  return net;
}

inline GeodesicNetwork two_diameters(const Domain& dom, double t0 = 0.0) {
  GeodesicNetwork net;
  net.junctions = {on_boundary(dom, t0), on_boundary(dom, t0 + M_PI),
                   on_boundary(dom, t0 + M_PI / 2),
                   on_boundary(dom, t0 + 3 * M_PI / 2)};
  net.segments = {{0, 1, 1.0}, {2, 3, 1.0}};
  return net;
}

/// Unit-disk tripod: three radial arms at mutual angles 2 pi / 3.
inline GeodesicNetwork tripod(const Domain& dom, double phase = M_PI / 2) {
  GeodesicNetwork net;
  net.junctions.push_back({Vec2::Zero(), JunctionLocation::Interior, 0.0});
  for (int k = 0; k < 3; ++k) {
    net.junctions.push_back(on_boundary(dom, phase + k * 2.0 * M_PI / 3.0));
  }
  net.segments = {{0, 1, 1.0}, {0, 2, 1.0}, {0, 3, 1.0}};
  return net;
}

inline GeodesicNetwork from_orbit(const Domain& dom, const BilliardOrbit& orb) {
  GeodesicNetwork net;
  const int k = static_cast<int>(orb.chords.size());
  for (const auto& c : orb.chords) {
    net.junctions.push_back(on_boundary(dom, c.from.t));
  }
  for (int i = 0; i < k; ++i) net.segments.push_back({i, (i + 1) % k, 1.0});
  return net;
}

/// A balanced interior star: arms from an interior point to the boundary
/// with multiplicities solving the two balance equations. Generalized (real
/// multiplicities), interior-stationary by construction.
inline GeodesicNetwork balanced_star(const Domain& dom, const Vec2& hub,
                                     std::mt19937_64& rng) {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
  std::uniform_real_distribution<double> unit(0.3, 2.0);
  for (int attempt = 0; attempt < 100; ++attempt) {
    // three directions spanning the plane with 0 in the interior of the cone
    const double a0 = angle(rng);
    const double a1 = a0 + 2.0 * M_PI / 3.0 + 0.4 * (unit(rng) - 1.15);
    const double a2 = a1 + 2.0 * M_PI / 3.0 + 0.4 * (unit(rng) - 1.15);
    const Vec2 u0(std::cos(a0), std::sin(a0));
    const Vec2 u1(std::cos(a1), std::sin(a1));
    const Vec2 u2(std::cos(a2), std::sin(a2));
    // theta0 u0 + theta1 u1 + theta2 u2 = 0 with theta0 = 1
    const double det = u1.x() * u2.y() - u1.y() * u2.x();
    if (std::abs(det) < 1e-6) continue;
    const double t1 = (-u0.x() * u2.y() + u0.y() * u2.x()) / det;
    const double t2 = (-u1.x() * u0.y() + u1.y() * u0.x()) / det;
    if (t1 < 0.05 || t2 < 0.05) continue;

    GeodesicNetwork net;
    net.junctions.push_back({hub, JunctionLocation::Interior, 0.0});
    const double thetas[3] = {1.0, t1, t2};
    const Vec2 dirs[3] = {u0, u1, u2};
    bool ok = true;
    for (int k = 0; k < 3 && ok; ++k) {
      // shoot the arm to the boundary
      const double A = dirs[k].x() * dirs[k].x() / (dom.a() * dom.a()) +
                       dirs[k].y() * dirs[k].y() / (dom.b() * dom.b());
      const double B = 2.0 * (hub.x() * dirs[k].x() / (dom.a() * dom.a()) +
                              hub.y() * dirs[k].y() / (dom.b() * dom.b()));
      const double C = dom.implicit_value(hub);
      const double disc = B * B - 4 * A * C;
      if (disc <= 0) {
        ok = false;
        break;
      }
      const double s = (-B + std::sqrt(disc)) / (2 * A);
      const Vec2 p = hub + s * dirs[k];
      net.junctions.push_back(
          {p, JunctionLocation::Boundary, dom.boundary_param(p)});
      net.segments.push_back({0, k + 1, thetas[k]});
    }
    if (ok) return net;
  }
  return diameter(dom, 0.0);  // unreachable in practice
}

}  // namespace widths::testing

#endif
