#pragma once

#include <Eigen/Dense>

namespace logenc {

/// Smallest k with 2^k >= n. ceil_log2(1) == 0.
int ceil_log2(int n);

/// Zero-pad a square matrix up to the next power-of-two dimension.
/// The original block is preserved top-left; an input whose dimension is
/// already a power of two is returned unchanged.
Eigen::MatrixXd pad_to_power_of_two(const Eigen::MatrixXd& m);

}  // namespace logenc
