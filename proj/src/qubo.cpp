#include "logenc/qubo.hpp"

#include <stdexcept>

namespace logenc {

QuboMatrix::QuboMatrix(const Eigen::MatrixXd& entries) {
  if (entries.rows() != entries.cols() || entries.rows() < 1)
    throw std::invalid_argument("QuboMatrix: matrix must be square");
  if (!entries.allFinite())
    throw std::invalid_argument("QuboMatrix: entries must be finite");
  entries_ = 0.5 * (entries + entries.transpose());
}

double qubo_value(const QuboMatrix& q, const BinaryAssignment& x) {
  if (x.size() != static_cast<std::size_t>(q.dim()))
    throw std::invalid_argument(
        "qubo_value: assignment length must equal matrix dimension");
  const Eigen::MatrixXd& m = q.entries();
  double total = 0.0;
  for (int i = 0; i < q.dim(); ++i) {
    if (!x[i]) continue;
    for (int j = 0; j < q.dim(); ++j)
      if (x[j]) total += m(i, j);
  }
  return total;
}

}  // namespace logenc
