#ifndef WIDTHS_BILLIARDS_HPP
#define WIDTHS_BILLIARDS_HPP

#include <vector>

#include "widths/geometry.hpp"

namespace widths {

struct BilliardState {
  double t = 0.0;
  Direction dir;

  BilliardState(double t_, const Direction& d) : t(t_), dir(d) {}
};

struct BilliardOrbit {
  std::vector<Chord> chords;
  bool closed = false;
  int period = 0;  // number of reflections when closed

  double perimeter() const {
    double sum = 0.0;
    for (const auto& c : chords) sum += c.length();
    return sum;
  }
};

/// Confocal caustic parameter: the chord's line is tangent to
/// x^2/(a^2 - lambda) + y^2/(b^2 - lambda) = 1. The caustic is a convex conic
/// exactly when 0 < lambda < b^2; lambda = b^2 marks chords through the focal
/// segment's endpoints (for the disk, chords through the center).
struct Caustic {
  double lambda = 0.0;
  double a = 1.0;
  double b = 1.0;

  bool convex() const { return lambda > 0.0 && lambda < b * b; }
  /// Semi-axes (sqrt(a^2 - lambda), sqrt(b^2 - lambda)); requires convex().
  std::pair<double, double> semi_axes() const;
};

/// Specular reflection at the far endpoint of c, extended to the next chord.
Chord reflect(const Domain& dom, const Chord& c);

/// Closure tolerance for periodic orbits, in the (position, direction)
/// product metric.
inline constexpr double kClosureTol = 1e-9;

/// Iterates the reflection map for `steps` bounces starting from s0.
BilliardOrbit orbit(const Domain& dom, const BilliardState& s0, int steps);

Caustic caustic_of(const Domain& dom, const Chord& c);

/// True iff the chord meets the closed focal segment within tol. The disk's
/// focal segment degenerates to the center.
bool focal_chord_test(const Domain& dom, const Chord& c, double tol = 1e-10);

/// The convex (rotation number one) closed k-orbit through boundary_point(t).
/// Disk orbits are built analytically; ellipse orbits by bisection on the
/// caustic parameter. Throws NoConvergence when no such orbit closes.
BilliardOrbit find_closed_orbit(const Domain& dom, int k, double start_t);

struct PonceletReport {
  double perimeter_spread = 0.0;       // max - min over starting points
  double lambda_spread_across = 0.0;   // max - min of per-orbit caustic
  double lambda_spread_along = 0.0;    // worst max - min along a single orbit
  std::vector<double> perimeters;
  std::vector<double> lambdas;
};

/// Builds the closed k-orbit from `samples` starting points and reports how
/// far the perimeters and caustic parameters spread.
PonceletReport poncelet_invariance(const Domain& dom, int k, int samples);

}  // namespace widths

#endif
