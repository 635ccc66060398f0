#include "widths/sampling.hpp"

#include <algorithm>
#include <cmath>

#include "widths/errors.hpp"

namespace widths {

namespace {
constexpr unsigned kBases[] = {2, 3, 5, 7, 11, 13};
}

double halton(std::uint64_t index, unsigned base) {
  double f = 1.0, r = 0.0;
  while (index > 0) {
    f /= base;
    r += f * (index % base);
    index /= base;
  }
  return r;
}

double inverse_normal_cdf(double u) {
  // Peter Acklam's algorithm.
  static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                             -2.759285104469687e+02, 1.383577518672690e+02,
                             -3.066479806614716e+01, 2.506628277459239e+00};
  static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                             -1.556989798598866e+02, 6.680131188771972e+01,
                             -1.328068155288572e+01};
  static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                             -2.400758277161838e+00, -2.549732539343734e+00,
                             4.374664141464968e+00,  2.938163982698783e+00};
  static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                             2.445134137142996e+00, 3.754408661907416e+00};
  constexpr double plow = 0.02425;
  u = std::clamp(u, 1e-15, 1.0 - 1e-15);
  if (u < plow) {
    const double q = std::sqrt(-2.0 * std::log(u));
    return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q +
            c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  if (u > 1.0 - plow) {
    const double q = std::sqrt(-2.0 * std::log(1.0 - u));
    return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q +
             c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  const double q = u - 0.5, r = q * q;
  return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) *
         q /
         (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
}

Eigen::VectorXd sphere_point(int dim, std::uint64_t index,
                             std::uint64_t seed) {
  if (dim < 1 || dim > 6) throw InvalidParameter("sphere_point: dim in 1..6");
  Eigen::VectorXd z(dim);
  for (int k = 0; k < dim; ++k) {
    z[k] = inverse_normal_cdf(halton(index + seed * 7919, kBases[k]));
  }
  const double n = z.norm();
  if (n == 0.0) {
    z.setZero();
    z[0] = 1.0;
    return z;
  }
  return z / n;
}

}  // namespace widths
