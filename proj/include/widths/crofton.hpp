#ifndef WIDTHS_CROFTON_HPP
#define WIDTHS_CROFTON_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "widths/conics.hpp"
#include "widths/geometry.hpp"

namespace widths {

/// Composite midpoint grid over (theta, rho) in [0, 2pi) x [rho_min, rho_max].
struct QuadratureGrid {
  int n_theta = 256;
  int n_rho = 512;
  double rho_min = 0.0;
  double rho_max = 1.0;

  void validate() const {
    if (n_theta < 8 || n_rho < 8) {
      throw InvalidParameter("QuadratureGrid: n_theta, n_rho must be >= 8");
    }
    if (!(rho_max > rho_min && rho_min >= 0.0)) {
      throw InvalidParameter("QuadratureGrid: need 0 <= rho_min < rho_max");
    }
  }
};

/// Measurement region: a ball, or a ball intersected with the open unit
/// disk (the per-ball accounting used by the concentration scan).
class CroftonRegion {
 public:
  static CroftonRegion ball(const Vec2& center, double radius) {
    CroftonRegion r;
    r.center_ = center;
    r.radius_ = radius;
    return r;
  }
  static CroftonRegion domain(const Domain& dom) {
    if (!dom.is_disk()) {
      throw InvalidParameter("CroftonRegion: only disk domains are supported");
    }
    return ball(Vec2::Zero(), dom.radius());
  }
  CroftonRegion clipped_to_unit_disk() const {
    CroftonRegion r = *this;
    r.clip_unit_ = true;
    return r;
  }

  bool contains(const Vec2& p) const {
    if (clip_unit_ && p.squaredNorm() >= 1.0) return false;
    return (p - center_).squaredNorm() < radius_ * radius_;
  }
  /// Lines farther from the origin than this never meet the region.
  double rho_cover() const { return center_.norm() + radius_; }
  const Vec2& center() const { return center_; }
  double radius() const { return radius_; }

 private:
  Vec2 center_ = Vec2::Zero();
  double radius_ = 1.0;
  bool clip_unit_ = false;
};

struct LineHits {
  std::vector<Vec2> points;
  bool coincident = false;
};

using LineOracle = std::function<LineHits(const LineParam&)>;

struct CroftonResult {
  double length = 0.0;
  double error_estimate = 0.0;   // Richardson pair against the half grid
  double coincident_fraction = 0.0;
};

/// Cauchy-Crofton estimate (1/2) iint n(rho, theta) drho dtheta by the
/// composite midpoint rule, counting only intersection points strictly inside
/// the region. Throws OracleDegenerate when more than 0.1% of sampled lines
/// come back flagged coincident.
CroftonResult crofton_length(const LineOracle& oracle,
                             const CroftonRegion& region,
                             const QuadratureGrid& grid);

/// Oracle for a conic curve restricted to nothing (clipping is the region's
/// job). Tangencies are excluded from the count.
LineOracle conic_oracle(const ConicCoeffs& q);

/// Closed-form mass bound for a degree <= degree_cap variety in the ball
/// B_s((p0, 0)) away from the unit circle:
///   degree_cap * 2 s (pi/2 + asin(s/p0))  for 0 < s < p0,
///   degree_cap * 2 s pi                   for p0 = 0.
/// Throws DomainError when s >= p0 > 0.
double local_mass_bound(double p0, double s, int degree_cap = 2);

struct ScanConfig {
  int n_classes = 8;
  int centers_per_class = 4;
  int n_theta = 256;
  int n_rho = 256;
  unsigned long long seed = 1;
};

struct ScanRow {
  double radius = 0.0;
  double sup_mass = 0.0;
  double bound = 0.0;  // bound at the center realizing the supremum
};

struct ScanResult {
  std::vector<ScanRow> rows;
  bool all_within_bound = true;
  std::vector<std::string> violations;
};

/// Samples sweepout classes for index p and measurement centers on their
/// curves, measures the local mass in shrinking balls and compares it with
/// the closed-form bound.
ScanResult no_concentration_scan(int p, const std::vector<double>& radii,
                                 const ScanConfig& cfg = {});

std::string scan_to_csv(const ScanResult& res);

}  // namespace widths

#endif
