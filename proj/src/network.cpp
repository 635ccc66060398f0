#include "widths/network.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace widths {

namespace {

std::vector<std::vector<int>> incidence(const GeodesicNetwork& net) {
  std::vector<std::vector<int>> inc(net.junctions.size());
  for (int s = 0; s < static_cast<int>(net.segments.size()); ++s) {
    inc[net.segments[s].i].push_back(s);
    inc[net.segments[s].j].push_back(s);
  }
  return inc;
}

/// Unit tangent at junction `at` of segment s, pointing away from `at`.
Vec2 outgoing_tangent(const GeodesicNetwork& net, const NetworkSegment& s,
                      int at) {
  const int other = (s.i == at) ? s.j : s.i;
  return (net.junctions[other].position - net.junctions[at].position)
      .normalized();
}

}  // namespace

void GeodesicNetwork::validate() const {
  const int n = static_cast<int>(junctions.size());
  std::set<std::pair<int, int>> seen;
  for (const auto& s : segments) {
    if (s.i < 0 || s.i >= n || s.j < 0 || s.j >= n) {
      throw InvalidParameter("network: segment references missing junction");
    }
    if (s.i == s.j) throw InvalidParameter("network: segment i == j");
    if (!(s.theta > 0.0)) throw InvalidParameter("network: theta must be > 0");
    auto key = std::minmax(s.i, s.j);
    if (!seen.insert(key).second) {
      throw InvalidParameter("network: duplicate segment");
    }
    if ((junctions[s.i].position - junctions[s.j].position).norm() <=
        kGeomTol) {
      throw InvalidParameter("network: zero-length segment");
    }
  }
}

bool GeodesicNetwork::is_integral() const {
  for (const auto& s : segments) {
    if (std::abs(s.theta - std::round(s.theta)) > 1e-9) return false;
  }
  return true;
}

double mass(const GeodesicNetwork& net) {
  double total = 0.0;
  for (const auto& s : net.segments) {
    total += s.theta *
             (net.junctions[s.j].position - net.junctions[s.i].position).norm();
  }
  return total;
}

InteriorReport interior_stationarity(const GeodesicNetwork& net) {
  InteriorReport report;
  const auto inc = incidence(net);
  for (int k = 0; k < static_cast<int>(net.junctions.size()); ++k) {
    if (net.junctions[k].location != JunctionLocation::Interior) continue;
    if (inc[k].empty()) continue;
    Vec2 resultant = Vec2::Zero();
    for (int s : inc[k]) {
      resultant +=
          net.segments[s].theta * outgoing_tangent(net, net.segments[s], k);
    }
    report.residual = std::max(report.residual, resultant.norm());
    if (inc[k].size() < 3) {
      bool pass_through = false;
      if (inc[k].size() == 2) {
        const auto& sa = net.segments[inc[k][0]];
        const auto& sb = net.segments[inc[k][1]];
        const Vec2 ua = outgoing_tangent(net, sa, k);
        const Vec2 ub = outgoing_tangent(net, sb, k);
        pass_through = std::abs(sa.theta - sb.theta) <= 1e-9 &&
                       (ua + ub).norm() <= 1e-9;
      }
      if (!pass_through) report.undersized_junctions.push_back(k);
    }
  }
  return report;
}

double free_boundary_residual(const GeodesicNetwork& net, const Domain& dom,
                              double tol) {
  const auto inc = incidence(net);
  double worst = 0.0;
  for (int k = 0; k < static_cast<int>(net.junctions.size()); ++k) {
    if (net.junctions[k].location != JunctionLocation::Boundary) continue;
    const Vec2 p = net.junctions[k].position;
    if (dom.classify(p, tol) != Containment::Boundary) {
      throw JunctionOffBoundary("free_boundary_residual: junction off boundary");
    }
    if (inc[k].empty()) continue;
    Vec2 resultant = Vec2::Zero();
    for (int s : inc[k]) {
      resultant +=
          net.segments[s].theta * outgoing_tangent(net, net.segments[s], k);
    }
    const Vec2 tangent = dom.boundary_tangent(dom.boundary_param(p)).normalized();
    worst = std::max(worst, std::abs(resultant.dot(tangent)));
  }
  return worst;
}

double radial_residual(const GeodesicNetwork& net, const Vec2& x) {
  const auto inc = incidence(net);
  double worst = 0.0;
  for (int k = 0; k < static_cast<int>(net.junctions.size()); ++k) {
    if (net.junctions[k].location != JunctionLocation::Interior) continue;
    if (inc[k].empty()) continue;
    const Vec2 jj = net.junctions[k].position;
    double sum = 0.0;
    for (int s : inc[k]) {
      // u_ij points from the far junction toward J_j.
      const Vec2 u = -outgoing_tangent(net, net.segments[s], k);
      sum += net.segments[s].theta * u.dot(jj - x);
    }
    worst = std::max(worst, std::abs(sum));
  }
  return worst;
}

double density_at(const GeodesicNetwork& net, const Vec2& p, double tol) {
  double halflines = 0.0;
  bool hit = false;
  for (const auto& s : net.segments) {
    const Vec2 a = net.junctions[s.i].position;
    const Vec2 b = net.junctions[s.j].position;
    if ((p - a).norm() <= tol || (p - b).norm() <= tol) {
      halflines += s.theta;
      hit = true;
    } else if (point_segment_distance(p, a, b) <= tol) {
      halflines += 2.0 * s.theta;
      hit = true;
    }
  }
  if (!hit) throw PointNotOnSupport("density_at: point not on support");
  return halflines / 2.0;
}

std::vector<BoundaryForce> boundary_forces(const GeodesicNetwork& net,
                                           const Vec2& x, double tol) {
  const auto inc = incidence(net);
  std::vector<BoundaryForce> forces;
  for (int l = 0; l < static_cast<int>(net.junctions.size()); ++l) {
    if (net.junctions[l].location != JunctionLocation::Boundary) continue;
    const Vec2 jl = net.junctions[l].position;
    const double dist = (jl - x).norm();
    if (dist <= tol) continue;
    BoundaryForce f;
    f.junction = l;
    for (int s : inc[l]) {
      // toward J_l
      f.force += -net.segments[s].theta * outgoing_tangent(net, net.segments[s], l);
    }
    const Vec2 radial_dir = (jl - x) / dist;
    f.radial = f.force.dot(radial_dir);
    f.distance = dist;
    const double fn = f.force.norm();
    f.angle = fn > 0.0 ? std::acos(std::clamp(f.radial / fn, -1.0, 1.0)) : 0.0;
    forces.push_back(f);
  }
  return forces;
}

double mass_via_forces(const GeodesicNetwork& net, const Vec2& x, double tol) {
  if (radial_residual(net, x) > tol) {
    throw RadialConditionViolated("mass_via_forces: radial condition fails");
  }
  double total = 0.0;
  for (const auto& f : boundary_forces(net, x)) {
    total += f.radial * f.distance;
  }
  return total;
}

namespace {

/// Proper crossing point of two open segments, if any.
bool proper_crossing(const Vec2& a0, const Vec2& a1, const Vec2& b0,
                     const Vec2& b1, Vec2* out) {
  const Vec2 r = a1 - a0, s = b1 - b0;
  const double denom = r.x() * s.y() - r.y() * s.x();
  if (std::abs(denom) < 1e-14) return false;
  const Vec2 d = b0 - a0;
  const double t = (d.x() * s.y() - d.y() * s.x()) / denom;
  const double u = (d.x() * r.y() - d.y() * r.x()) / denom;
  const double eps = 1e-9;
  if (t <= eps || t >= 1.0 - eps || u <= eps || u >= 1.0 - eps) return false;
  *out = a0 + t * r;
  return true;
}

}  // namespace

DensityBoundsReport check_density_bounds(const GeodesicNetwork& net,
                                         const Domain& dom, double mu) {
  if (mass(net) > mu) {
    throw InvalidParameter("check_density_bounds: mass exceeds mu");
  }
  DensityBoundsReport report;
  report.mu = mu;
  report.approximate = !(dom.is_disk() && dom.a() == 1.0);

  std::vector<Vec2> points;
  for (const auto& j : net.junctions) points.push_back(j.position);
  for (const auto& s : net.segments) {
    points.push_back(0.5 * (net.junctions[s.i].position +
                            net.junctions[s.j].position));
  }
  for (std::size_t u = 0; u < net.segments.size(); ++u) {
    for (std::size_t v = u + 1; v < net.segments.size(); ++v) {
      Vec2 c;
      if (proper_crossing(net.junctions[net.segments[u].i].position,
                          net.junctions[net.segments[u].j].position,
                          net.junctions[net.segments[v].i].position,
                          net.junctions[net.segments[v].j].position, &c)) {
        points.push_back(c);
      }
    }
  }

  const double interior_bound = mu / 2.0;
  const double boundary_bound = mu / (2.0 * std::sqrt(2.0));
  for (const Vec2& p : points) {
    DensityBoundsReport::Entry e;
    e.point = p;
    e.density = density_at(net, p);
    e.on_boundary = dom.classify(p) == Containment::Boundary;
    e.bound = e.on_boundary ? boundary_bound : interior_bound;
    e.violates = e.on_boundary ? (e.density >= e.bound - 1e-12)
                               : (e.density > e.bound + 1e-12);
    if (e.violates) report.ok = false;
    report.entries.push_back(e);
  }
  return report;
}

IntegralityReport integrality_filter(const GeodesicNetwork& net) {
  IntegralityReport report;
  for (int k = 0; k < static_cast<int>(net.junctions.size()); ++k) {
    if (net.junctions[k].location != JunctionLocation::Interior) continue;
    double d;
    try {
      d = density_at(net, net.junctions[k].position);
    } catch (const PointNotOnSupport&) {
      continue;  // isolated junction, nothing incident
    }
    const double nearest = std::round(d);
    if (nearest < 1.0 || std::abs(d - nearest) > 1e-9) {
      report.pass = false;
      report.witnesses.push_back({k, d});
    }
  }
  return report;
}

}  // namespace widths
