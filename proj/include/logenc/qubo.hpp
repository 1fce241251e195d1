#pragma once

#include <Eigen/Dense>

#include "logenc/graph.hpp"

namespace logenc {

/// Symmetric QUBO matrix for the objective x^T Q x over binary x.
/// Asymmetric input is stored as (A + A^T)/2, which leaves the objective
/// unchanged and keeps the matrix Hermitian.
class QuboMatrix {
 public:
  explicit QuboMatrix(const Eigen::MatrixXd& entries);

  int dim() const { return static_cast<int>(entries_.rows()); }
  const Eigen::MatrixXd& entries() const { return entries_; }

 private:
  Eigen::MatrixXd entries_;
};

/// x^T Q x for binary x.
double qubo_value(const QuboMatrix& q, const BinaryAssignment& x);

}  // namespace logenc
