#pragma once

#include <Eigen/Dense>
#include <complex>
#include <string>
#include <vector>

// Reference Pauli expansion used as the oracle for the library's recursive
// decomposition: every coefficient is computed as Tr(J * M) / dim with J
// assembled by explicit Kronecker products. O(8^N), fine for N <= 4.

namespace testsupport {

struct TraceTerm {
  std::string word;
  std::complex<double> coeff;
};

inline Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a,
                             const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

inline Eigen::MatrixXcd pauli_2x2(char letter) {
  Eigen::MatrixXcd m(2, 2);
  const std::complex<double> i(0.0, 1.0);
  switch (letter) {
    case 'I': m << 1, 0, 0, 1; break;
    case 'X': m << 0, 1, 1, 0; break;
    case 'Y': m << 0, -i, i, 0; break;
    default: m << 1, 0, 0, -1; break;  // Z
  }
  return m;
}

/// All 4^N coefficients, including (numerically) vanishing ones.
inline std::vector<TraceTerm> trace_pauli_coefficients(
    const Eigen::MatrixXd& m) {
  const int dim = static_cast<int>(m.rows());
  int n_qubits = 0;
  while ((1 << n_qubits) < dim) ++n_qubits;

  const char letters[] = {'I', 'X', 'Y', 'Z'};
  const Eigen::MatrixXcd mc = m.cast<std::complex<double>>();
  std::vector<TraceTerm> terms;
  const std::uint64_t count = std::uint64_t{1} << (2 * n_qubits);
  for (std::uint64_t code = 0; code < count; ++code) {
    std::string word(n_qubits, 'I');
    std::uint64_t rest = code;
    for (int pos = n_qubits - 1; pos >= 0; --pos) {
      word[pos] = letters[rest % 4];
      rest /= 4;
    }
    Eigen::MatrixXcd j = Eigen::MatrixXcd::Identity(1, 1);
    for (char letter : word) j = kron(j, pauli_2x2(letter));
    const std::complex<double> coeff = (j * mc).trace() / double(dim);
    terms.push_back({std::move(word), coeff});
  }
  return terms;
}

}  // namespace testsupport
