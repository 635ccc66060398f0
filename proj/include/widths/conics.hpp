#ifndef WIDTHS_CONICS_HPP
#define WIDTHS_CONICS_HPP

#include <Eigen/Dense>
#include <vector>

#include "widths/geometry.hpp"

namespace widths {

/// Quadratic curve c0 + c1 x + c2 y + c3 x^2 + c4 xy = 0. The basis carries
/// no y^2 term, so the zero set is always a graph over x away from the pole
/// line c4 x + c2 = 0 and no ellipse can occur.
struct ConicCoeffs {
  Eigen::Matrix<double, 5, 1> c = Eigen::Matrix<double, 5, 1>::Zero();

  ConicCoeffs() = default;
  ConicCoeffs(double c0, double c1, double c2, double c3, double c4) {
    c << c0, c1, c2, c3, c4;
  }

  double c0() const { return c[0]; }
  double c1() const { return c[1]; }
  double c2() const { return c[2]; }
  double c3() const { return c[3]; }
  double c4() const { return c[4]; }

  double operator()(double x, double y) const {
    return c[0] + c[1] * x + c[2] * y + c[3] * x * x + c[4] * x * y;
  }
  double operator()(const Vec2& p) const { return (*this)(p.x(), p.y()); }

  /// Divides by the coefficient of largest magnitude; same zero set.
  ConicCoeffs normalized() const;
};

enum class ConicClass {
  Empty,
  Point,  // cannot arise without a y^2 term; kept for a total taxonomy
  Line,
  ParallelLines,
  CrossingLines,
  DoubleLine,
  Parabola,
  Hyperbola,
};

const char* to_string(ConicClass k);

ConicClass classify(const ConicCoeffs& q);

struct QuadratureConfig {
  double abs_tol = 1e-9;
  int max_depth = 60;
};

/// Total arc length of {Q = 0} intersected with the disk, summed over
/// connected arcs. Lines are measured exactly; parabola and hyperbola arcs as
/// graphs over x with adaptive quadrature. dom must be a disk.
double disk_length(const ConicCoeffs& q, const Domain& dom,
                   const QuadratureConfig& quad = {});

struct LineHitsResult {
  std::vector<Vec2> points;           // transversal crossings
  std::vector<Vec2> tangent_points;   // flagged separately, not crossings
  bool coincident = false;            // the line is a component of the conic
  int count() const { return static_cast<int>(points.size()); }
};

/// Intersections of the conic with the line x cos(theta) + y sin(theta) = rho.
LineHitsResult line_hits(const ConicCoeffs& q, const LineParam& line);

/// Disk-restricted arc length of the parabola family y = a x^2 - 1 in closed
/// form: [ln(sqrt(8a-3) + 2 sqrt(2a-1)) + 2 sqrt(2a-1) sqrt(8a-3)] / (2a).
double parabola_L(double a);

/// Half-crossing abscissa of that family: sqrt(2a-1)/a.
double parabola_crossing_x(double a);

/// 2 sqrt(4z+1)/sqrt(z) - ln(sqrt(4z+1) + 2 sqrt(z)); its sign is the sign of
/// the derivative of parabola_L at a = (z+1)/2.
double sign_expr(double z);

struct ParabolaMax {
  double a0 = 0.0;
  double L0 = 0.0;
};

/// Locates the unique maximizer of parabola_L by bracketed bisection of
/// sign_expr on z in [99, 299]; the endpoint signs are verified at runtime
/// and BracketInvalid is thrown if they do not straddle zero.
ParabolaMax maximize_parabola();

/// One-branch hyperbola family through (0, -1):
/// H(x) = (c/d) sqrt(d^2 + x^2) - (1 + c), c, d > 0, admissible iff H(1) > 0.
struct HyperbolaBranchParam {
  double c = 0.0;
  double d = 0.0;

  bool admissible() const {
    return c > 0.0 && d > 0.0 &&
           (c / d) * std::sqrt(d * d + 1.0) - (1.0 + c) > 0.0;
  }
  double value(double x) const {
    return (c / d) * std::sqrt(d * d + x * x) - (1.0 + c);
  }
  double slope(double x) const {
    return (c / d) * x / std::sqrt(d * d + x * x);
  }
};

/// Arc length of the branch inside the unit disk.
double hyperbola_branch_length(const HyperbolaBranchParam& param,
                               const QuadratureConfig& quad = {});

struct HyperbolaSearchConfig {
  int d_grid = 48;
  int c_grid = 96;
  double d_min = 0.05;
  double d_max = 64.0;
  double c_factor_max = 4000.0;
  int refine_iters = 60;
};

struct HyperbolaMax {
  double sup = 0.0;
  HyperbolaBranchParam argmax;
};

/// Multi-start maximization of the branch length over admissible (c, d).
HyperbolaMax hyperbola_branch_max(const HyperbolaSearchConfig& cfg = {});

/// Adaptive Simpson quadrature; throws QuadratureFailure when the tolerance
/// is unreachable at the depth cap.
double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double abs_tol, int max_depth);

}  // namespace widths

#endif
