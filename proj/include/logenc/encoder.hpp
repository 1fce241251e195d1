#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "logenc/graph.hpp"
#include "logenc/qubo.hpp"

namespace logenc {

/// Continuous variational parameters. Every angle is reduced modulo 2*pi
/// into [0, 2*pi) at construction and must be finite.
class ParamVector {
 public:
  ParamVector() = default;
  explicit ParamVector(std::vector<double> angles);

  std::size_t size() const { return angles_.size(); }
  double operator[](std::size_t i) const { return angles_[i]; }
  const std::vector<double>& angles() const { return angles_; }

 private:
  std::vector<double> angles_;
};

/// Reduce an angle into [0, 2*pi).
double wrap_angle(double angle);

/// Threshold map: 0 on [0, pi), 1 on [pi, 2*pi).
int threshold_bit(double angle);

/// Sign map exp(i*pi*R(angle)): +1 on [0, pi), -1 on [pi, 2*pi).
int phase_sign(double angle);

/// Qubits needed to index a problem of size n: ceil(log2 n), 0 for n == 1.
int qubit_count_for(int problem_size);

/// Statevector of the ansatz on `n_qubits` qubits: amplitude k is
/// phase_sign(theta_k) * 2^(-N/2), with +2^(-N/2) for k beyond the
/// parameter list. Throws if more parameters than amplitudes.
Eigen::VectorXcd build_ansatz(const ParamVector& theta, int n_qubits);

/// One term of a Pauli-string expansion. `word` is a length-N string over
/// {I, X, Y, Z}; the leftmost letter acts on the most significant index bit.
struct PauliTerm {
  double coeff = 0.0;
  std::string word;
};

/// Weighted sum of Pauli strings representing a Hermitian observable.
class PauliObservable {
 public:
  PauliObservable(int n_qubits, std::vector<PauliTerm> terms);

  int n_qubits() const { return n_qubits_; }
  const std::vector<PauliTerm>& terms() const { return terms_; }

 private:
  int n_qubits_;
  std::vector<PauliTerm> terms_;
};

/// Expand a real symmetric matrix of power-of-two dimension over Pauli
/// strings. Uses the recursive half-block split, O(N * 4^N) coefficients;
/// terms with |coeff| <= tol are dropped. For real symmetric input every
/// retained word has an even number of Y letters.
PauliObservable pauli_decompose(const Eigen::MatrixXd& m, double tol = 1e-12);

/// Dense matrix sum(coeff_i * J_i) of an observable.
Eigen::MatrixXcd reconstruct(const PauliObservable& obs);

/// Dense matrix of a single Pauli word.
Eigen::MatrixXcd pauli_word_matrix(const std::string& word);

/// Apply a Pauli word to a statevector.
Eigen::VectorXcd apply_pauli_word(const std::string& word,
                                  const Eigen::VectorXcd& state);

/// Index of a word in the 4^N enumeration (I=0, X=1, Y=2, Z=3, leftmost
/// letter most significant). Stable across term orderings.
std::uint64_t pauli_word_code(const std::string& word);

/// Spin and binary views of the thresholded parameters;
/// spin = 1 - 2 * binary.
struct DecodedParams {
  SpinAssignment spin;
  BinaryAssignment binary;
};

DecodedParams decode_params(const ParamVector& theta);

/// MaxCut cost -2^(N-2) <Psi|L*|Psi> evaluated through the sign identity:
/// equals -cut_value(g, decoded spins). `padded_laplacian` must have
/// power-of-two dimension >= len(theta).
double cost_maxcut(const ParamVector& theta,
                   const Eigen::MatrixXd& padded_laplacian);

/// Same quantity through the full statevector expectation.
double cost_maxcut_statevector(const ParamVector& theta,
                               const Eigen::MatrixXd& padded_laplacian);

/// Qubits for the QUBO observable: smallest N with 2^N > n. One basis
/// state beyond the problem block is reserved as a constant-sign ancilla
/// so that the binary objective's linear terms survive the spin encoding.
int qubo_qubit_count(int n);

/// The QUBO objective rewritten over spin variables as a padded observable
/// M with 2^N <Psi|M|Psi> == b^T Q b, b = threshold bits. Linear terms ride
/// on the ancilla column, the constant on the ancilla diagonal.
Eigen::MatrixXd qubo_cost_observable(const QuboMatrix& q);

/// QUBO cost b^T Q b with b_k = threshold_bit(theta_k); len(theta) must not
/// exceed q.dim(). Equals 2^N times the observable expectation.
double cost_qubo(const ParamVector& theta, const QuboMatrix& q);

/// Same quantity through the statevector and qubo_cost_observable.
double cost_qubo_statevector(const ParamVector& theta, const QuboMatrix& q);

}  // namespace logenc
