#ifndef WIDTHS_SAMPLING_HPP
#define WIDTHS_SAMPLING_HPP

#include <Eigen/Dense>
#include <cstdint>

namespace widths {

/// Van der Corput radical inverse of index in the given base.
double halton(std::uint64_t index, unsigned base);

/// Acklam's rational approximation of the standard normal quantile,
/// |relative error| < 1.2e-9 — ample for quasi-random direction generation.
double inverse_normal_cdf(double u);

/// Low-discrepancy point on the unit sphere S^{dim-1}: Halton point in
/// (0,1)^dim pushed through the normal quantile and normalized. The seed
/// enters as an index offset, so runs are reproducible.
Eigen::VectorXd sphere_point(int dim, std::uint64_t index, std::uint64_t seed);

}  // namespace widths

#endif
