#pragma once

#include <Eigen/Dense>
#include <cstdint>

#include "logenc/encoder.hpp"

namespace logenc {

/// Shot budget per Pauli term plus the sampling seed.
struct ShotConfig {
  int shots_per_term = 1024;
  std::uint64_t seed = 0;
};

struct ExpectationEstimate {
  double value = 0.0;
  double std_error = 0.0;  // 0 exactly when nothing was sampled
  long long total_shots = 0;
};

/// <Psi|m|Psi>. The imaginary residue of the quadratic form must not
/// exceed 1e-12 and is discarded.
double expectation_exact(const Eigen::VectorXcd& state,
                         const Eigen::MatrixXcd& m);
double expectation_exact(const Eigen::VectorXcd& state,
                         const Eigen::MatrixXd& m);

/// <Psi|J|Psi> for a single Pauli word, evaluated by applying the word.
double expectation_term_exact(const Eigen::VectorXcd& state,
                              const std::string& word);

/// Shot-sampled estimate of sum(c_i <J_i>): each non-identity term is
/// rotated into its measurement basis, bitstrings are drawn from the exact
/// probabilities, and <J_i> is the mean parity over non-identity positions.
/// Identity terms contribute exactly. Per-term sample streams are derived
/// from seed XOR the term's word code, so term order never changes the
/// result. std_error combines per-term sample variances.
ExpectationEstimate expectation_sampled(const ParamVector& theta,
                                        const PauliObservable& obs,
                                        const ShotConfig& cfg);

}  // namespace logenc
