#include "widths/crofton.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "widths/sampling.hpp"

namespace widths {

namespace {

struct PassResult {
  double length = 0.0;
  std::uint64_t coincident = 0;
  std::uint64_t lines = 0;
};

PassResult midpoint_pass(const LineOracle& oracle, const CroftonRegion& region,
                         int n_theta, int n_rho, double rho_min,
                         double rho_max) {
  PassResult out;
  const double dtheta = 2.0 * M_PI / n_theta;
  const double drho = (rho_max - rho_min) / n_rho;
  std::uint64_t total_count = 0;
  for (int i = 0; i < n_theta; ++i) {
    const double theta = (i + 0.5) * dtheta;
    std::uint64_t stripe = 0;
    for (int j = 0; j < n_rho; ++j) {
      const double rho = rho_min + (j + 0.5) * drho;
      const LineHits hits = oracle(LineParam{rho, theta});
      ++out.lines;
      if (hits.coincident) {
        ++out.coincident;
        continue;
      }
      for (const Vec2& p : hits.points) {
        if (region.contains(p)) ++stripe;
      }
    }
    total_count += stripe;  // stripes reduce in theta order
  }
  out.length = 0.5 * static_cast<double>(total_count) * dtheta * drho;
  return out;
}

}  // namespace

CroftonResult crofton_length(const LineOracle& oracle,
                             const CroftonRegion& region,
                             const QuadratureGrid& grid) {
  grid.validate();
  // Lines beyond the region's cover distance never intersect it; tightening
  // the range costs nothing and buys resolution.
  const double rho_max = std::min(grid.rho_max, region.rho_cover());
  const double rho_min = grid.rho_min < rho_max ? grid.rho_min : 0.0;
  const PassResult fine = midpoint_pass(oracle, region, grid.n_theta,
                                        grid.n_rho, rho_min, rho_max);
  const PassResult coarse = midpoint_pass(oracle, region, grid.n_theta / 2,
                                          grid.n_rho / 2, rho_min, rho_max);
  CroftonResult result;
  result.length = fine.length;
  result.error_estimate = std::abs(fine.length - coarse.length);
  result.coincident_fraction =
      static_cast<double>(fine.coincident) / static_cast<double>(fine.lines);
  if (result.coincident_fraction > 1e-3) {
    throw OracleDegenerate(
        "crofton_length: coincident-line flags on a non-negligible fraction "
        "of sampled lines");
  }
  return result;
}

LineOracle conic_oracle(const ConicCoeffs& q) {
  return [q](const LineParam& line) {
    const LineHitsResult hits = line_hits(q, line);
    LineHits out;
    out.points = hits.points;
    out.coincident = hits.coincident;
    return out;
  };
}

double local_mass_bound(double p0, double s, int degree_cap) {
  if (!(s > 0.0) || p0 < 0.0 || degree_cap < 1) {
    throw InvalidParameter("local_mass_bound: need s > 0, p0 >= 0, cap >= 1");
  }
  if (p0 > 0.0 && s >= p0) {
    throw DomainError("local_mass_bound: requires 0 < s < p0 when p0 > 0");
  }
  if (p0 == 0.0) return 2.0 * degree_cap * s * M_PI;
  return 2.0 * degree_cap * s * (M_PI / 2.0 + std::asin(s / p0));
}

namespace {

/// Points of the conic strictly inside the unit disk, found on a fan of
/// lines through the origin. Used to place measurement centers on the curve.
std::vector<Vec2> on_curve_points(const ConicCoeffs& q, int fan = 64) {
  std::vector<Vec2> pts;
  for (int i = 0; i < fan; ++i) {
    const double theta = M_PI * i / fan;
    const LineHitsResult hits = line_hits(q, LineParam{0.0, theta});
    if (hits.coincident) continue;
    for (const Vec2& p : hits.points) {
      if (p.squaredNorm() < 1.0) pts.push_back(p);
    }
  }
  return pts;
}

ConicCoeffs class_conic(int p, std::uint64_t index, std::uint64_t seed) {
  const Eigen::VectorXd w = sphere_point(p + 1, index, seed);
  ConicCoeffs q;
  for (int k = 0; k <= p; ++k) q.c[k] = w[k];
  return q;
}

}  // namespace

ScanResult no_concentration_scan(int p, const std::vector<double>& radii,
                                 const ScanConfig& cfg) {
  if (p < 1 || p > 4) throw InvalidParameter("no_concentration_scan: p in 1..4");
  if (radii.empty()) throw InvalidParameter("no_concentration_scan: no radii");
  for (std::size_t i = 0; i + 1 < radii.size(); ++i) {
    if (!(radii[i] > radii[i + 1] && radii[i + 1] > 0.0)) {
      throw InvalidParameter("no_concentration_scan: radii must decrease");
    }
  }

  // Sample classes whose varieties actually meet the disk, and put the
  // measurement centers on the curves; elsewhere the local mass vanishes.
  struct Case {
    ConicCoeffs conic;
    std::vector<Vec2> centers;
  };
  std::vector<Case> cases;
  std::uint64_t index = 1;
  while (static_cast<int>(cases.size()) < cfg.n_classes && index < 4096) {
    const ConicCoeffs q = class_conic(p, index++, cfg.seed);
    const std::vector<Vec2> pts = on_curve_points(q);
    if (pts.empty()) continue;
    Case cs;
    cs.conic = q;
    const std::size_t stride =
        std::max<std::size_t>(1, pts.size() / cfg.centers_per_class);
    for (std::size_t k = 0; k < pts.size() &&
                            cs.centers.size() <
                                static_cast<std::size_t>(cfg.centers_per_class);
         k += stride) {
      cs.centers.push_back(pts[k]);
    }
    cases.push_back(std::move(cs));
  }

  ScanResult result;
  for (double s : radii) {
    ScanRow row;
    row.radius = s;
    for (const auto& cs : cases) {
      const LineOracle oracle = conic_oracle(cs.conic);
      for (const Vec2& center : cs.centers) {
        const double p0 = center.norm();
        const CroftonRegion region =
            CroftonRegion::ball(center, s).clipped_to_unit_disk();
        QuadratureGrid grid;
        grid.n_theta = cfg.n_theta;
        grid.n_rho = cfg.n_rho;
        grid.rho_min = std::max(0.0, p0 - s - 1e-3);
        grid.rho_max = p0 + s + 1e-3;
        const CroftonResult measured = crofton_length(oracle, region, grid);
        const double bound = (p0 > s) ? local_mass_bound(p0, s)
                                      : local_mass_bound(0.0, s);
        const double tol =
            std::max(0.02 * bound, 3.0 * measured.error_estimate);
        if (measured.length > bound + tol) {
          result.all_within_bound = false;
          std::ostringstream msg;
          msg << "mass " << measured.length << " exceeds bound " << bound
              << " at center (" << center.x() << ", " << center.y()
              << "), s = " << s;
          result.violations.push_back(msg.str());
        }
        if (measured.length > row.sup_mass) {
          row.sup_mass = measured.length;
          row.bound = bound;
        }
      }
    }
    result.rows.push_back(row);
  }
  return result;
}

std::string scan_to_csv(const ScanResult& res) {
  std::ostringstream out;
  out << "radius,sup_mass,bound\n";
  out.precision(12);
  for (const auto& row : res.rows) {
    out << row.radius << "," << row.sup_mass << "," << row.bound << "\n";
  }
  return out.str();
}

}  // namespace widths
