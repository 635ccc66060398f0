#ifndef WIDTHS_NETWORK_HPP
#define WIDTHS_NETWORK_HPP

#include <string>
#include <vector>

#include "widths/geometry.hpp"

namespace widths {

enum class JunctionLocation { Interior, Boundary };

struct Junction {
  Vec2 position = Vec2::Zero();
  JunctionLocation location = JunctionLocation::Interior;
  double boundary_t = 0.0;  // meaningful only when location == Boundary
};

/// Straight segment between junctions i and j carrying multiplicity theta.
/// Integer theta gives a genuine network; positive real theta a generalized
/// one.
struct NetworkSegment {
  int i = 0;
  int j = 0;
  double theta = 1.0;
};

struct GeodesicNetwork {
  std::vector<Junction> junctions;
  std::vector<NetworkSegment> segments;

  /// Checks index validity, i != j, theta > 0, no duplicate segments and no
  /// zero-length segments. Throws InvalidParameter on violation.
  void validate() const;

  /// True when every multiplicity is a positive integer within 1e-9.
  bool is_integral() const;
};

/// Sum over segments of theta * |J_j - J_i|.
double mass(const GeodesicNetwork& net);

struct InteriorReport {
  /// max over interior junctions of |sum_k theta_k u_k| with unit tangents
  /// u_k leaving the junction; 0 for a network with no interior junctions.
  double residual = 0.0;
  /// Interior junctions with fewer than three arms that are not plain
  /// pass-throughs (two collinear arms of equal multiplicity). A pass-through
  /// is merge-equivalent to a single segment and is not reported.
  std::vector<int> undersized_junctions;
};

InteriorReport interior_stationarity(const GeodesicNetwork& net);

inline double interior_residual(const GeodesicNetwork& net) {
  return interior_stationarity(net).residual;
}

/// max over boundary junctions of the tangential component of the outgoing
/// multiplicity-weighted tangent resultant. Throws JunctionOffBoundary if a
/// boundary-flagged junction is not on the boundary within tol.
double free_boundary_residual(const GeodesicNetwork& net, const Domain& dom,
                              double tol = kGeomTol);

/// max over interior junctions J_j of |sum_i theta_ij <u_ij, J_j - x>| where
/// u_ij points from J_i toward J_j. Zero whenever the interior balance holds.
double radial_residual(const GeodesicNetwork& net, const Vec2& x);

/// One-dimensional density: half the total multiplicity of half-lines at p.
/// An endpoint incidence contributes theta, an interior-of-segment incidence
/// 2*theta. Throws PointNotOnSupport when nothing is within tol.
double density_at(const GeodesicNetwork& net, const Vec2& p,
                  double tol = kGeomTol);

/// Multiplicity-weighted resultant at a boundary junction of the unit
/// directions along incident segments, pointing toward the junction, plus its
/// radial part against a basepoint x.
struct BoundaryForce {
  int junction = -1;
  Vec2 force = Vec2::Zero();   // F_l
  double radial = 0.0;         // <F_l, (J_l - x)/|J_l - x|>
  double angle = 0.0;          // angle between F_l and J_l - x
  double distance = 0.0;       // |J_l - x|
};

/// One force per boundary junction J_l with |J_l - x| > tol.
std::vector<BoundaryForce> boundary_forces(const GeodesicNetwork& net,
                                           const Vec2& x,
                                           double tol = kGeomTol);

/// sum_l radial_l * |J_l - x|; equals mass(net) whenever the radial condition
/// holds at x. Throws RadialConditionViolated if radial_residual(net, x)
/// exceeds tol.
double mass_via_forces(const GeodesicNetwork& net, const Vec2& x,
                       double tol = 1e-8);

struct DensityBoundsReport {
  struct Entry {
    Vec2 point = Vec2::Zero();
    double density = 0.0;
    bool on_boundary = false;
    double bound = 0.0;
    bool violates = false;
  };
  double mu = 0.0;
  bool ok = true;
  /// True when dom is not the unit disk; the bounds then hold only for
  /// domains close enough to it and the report is advisory.
  bool approximate = false;
  std::vector<Entry> entries;
};

/// Evaluates the density at every junction, segment midpoint and pairwise
/// segment crossing and checks density <= mu/2 at interior points and
/// density < mu/(2*sqrt(2)) at boundary points. Requires mass(net) <= mu.
DensityBoundsReport check_density_bounds(const GeodesicNetwork& net,
                                         const Domain& dom, double mu);

struct IntegralityReport {
  bool pass = true;
  struct Witness {
    int junction = -1;
    double density = 0.0;
  };
  std::vector<Witness> witnesses;
};

/// Passes iff the density at every interior junction is a positive integer
/// within 1e-9.
IntegralityReport integrality_filter(const GeodesicNetwork& net);

}  // namespace widths

#endif
