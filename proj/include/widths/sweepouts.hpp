#ifndef WIDTHS_SWEEPOUTS_HPP
#define WIDTHS_SWEEPOUTS_HPP

#include <cstdint>

#include "widths/conics.hpp"
#include "widths/geometry.hpp"

namespace widths {

/// A point of RP^p realized as a unit coefficient 5-vector over the basis
/// {1, x, y, x^2, xy}, with entries beyond index p forced to zero and the
/// first nonzero entry positive, which makes the representative unique.
struct ProjectiveClass {
  int p = 1;
  Eigen::Matrix<double, 5, 1> coeffs = Eigen::Matrix<double, 5, 1>::Zero();

  static ProjectiveClass make(int p, const Eigen::Matrix<double, 5, 1>& raw);

  ConicCoeffs conic() const {
    ConicCoeffs q;
    q.c = coeffs;
    return q;
  }
};

struct EvaluatedClass {
  ConicCoeffs conic;
  double length = 0.0;
};

/// The algebraic variety of the class restricted to the unit disk, and its
/// arc length.
EvaluatedClass evaluate(const ProjectiveClass& cls,
                        const QuadratureConfig& quad = {});

struct SamplingConfig {
  int budget = 10000;   // global low-discrepancy samples (>= 1000)
  std::uint64_t seed = 1;
  int top_k = 10;       // samples kept for local refinement
  int restarts = 3;     // refinement rounds per kept sample
  QuadratureConfig quad = {};
};

struct SupResult {
  double sup = 0.0;
  ProjectiveClass witness;
  int evaluations = 0;
};

/// Largest variety length found over RP^p: low-discrepancy global sampling,
/// then local ascent of the best candidates. Consistency with the analytic
/// family bound (2 for p <= 2, the maximal parabola length for p = 3, 4) is
/// asserted at runtime.
SupResult sup_length(int p, const SamplingConfig& cfg = {});

}  // namespace widths

#endif
