#include "logenc/linalg.hpp"

#include <stdexcept>

namespace logenc {

int ceil_log2(int n) {
  if (n < 1) throw std::invalid_argument("ceil_log2: n must be >= 1");
  int k = 0;
  while ((1 << k) < n) ++k;
  return k;
}

Eigen::MatrixXd pad_to_power_of_two(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols() || m.rows() < 1)
    throw std::invalid_argument("pad_to_power_of_two: matrix must be square");
  const int dim = static_cast<int>(m.rows());
  const int padded = 1 << ceil_log2(dim);
  if (padded == dim) return m;
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(padded, padded);
  out.topLeftCorner(dim, dim) = m;
  return out;
}

}  // namespace logenc
