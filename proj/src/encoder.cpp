#include "logenc/encoder.hpp"

#include <cmath>
#include <complex>
#include <set>
#include <stdexcept>
#include <utility>

#include "logenc/linalg.hpp"
#include "logenc/simulator.hpp"

namespace logenc {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kTwoPi = 2.0 * kPi;

bool is_power_of_two(int n) { return n >= 1 && (n & (n - 1)) == 0; }

int letter_index(char c) {
  switch (c) {
    case 'I': return 0;
    case 'X': return 1;
    case 'Y': return 2;
    case 'Z': return 3;
    default:
      throw std::invalid_argument(std::string("invalid Pauli letter '") + c +
                                  "'");
  }
}

}  // namespace

double wrap_angle(double angle) {
  if (!std::isfinite(angle))
    throw std::invalid_argument("wrap_angle: angle must be finite");
  double w = std::fmod(angle, kTwoPi);
  if (w < 0.0) w += kTwoPi;
  if (w >= kTwoPi) w = 0.0;  // fmod rounding at the seam
  return w;
}

ParamVector::ParamVector(std::vector<double> angles)
    : angles_(std::move(angles)) {
  for (double& a : angles_) a = wrap_angle(a);
}

int threshold_bit(double angle) { return angle < kPi ? 0 : 1; }

int phase_sign(double angle) { return angle < kPi ? 1 : -1; }

int qubit_count_for(int problem_size) { return ceil_log2(problem_size); }

Eigen::VectorXcd build_ansatz(const ParamVector& theta, int n_qubits) {
  if (n_qubits < 0)
    throw std::invalid_argument("build_ansatz: qubit count must be >= 0");
  const std::size_t dim = std::size_t{1} << n_qubits;
  if (theta.size() > dim)
    throw std::invalid_argument(
        "build_ansatz: more parameters than basis states");
  const double mag = std::pow(2.0, -0.5 * n_qubits);
  Eigen::VectorXcd state(dim);
  for (std::size_t k = 0; k < dim; ++k) {
    const int sign = k < theta.size() ? phase_sign(theta[k]) : 1;
    state[static_cast<Eigen::Index>(k)] = std::complex<double>(sign * mag, 0.0);
  }
  return state;
}

PauliObservable::PauliObservable(int n_qubits, std::vector<PauliTerm> terms)
    : n_qubits_(n_qubits), terms_(std::move(terms)) {
  if (n_qubits_ < 0)
    throw std::invalid_argument("PauliObservable: qubit count must be >= 0");
  std::set<std::string> seen;
  for (const PauliTerm& t : terms_) {
    if (static_cast<int>(t.word.size()) != n_qubits_)
      throw std::invalid_argument(
          "PauliObservable: word length must equal qubit count");
    for (char c : t.word) letter_index(c);
    if (!std::isfinite(t.coeff))
      throw std::invalid_argument("PauliObservable: coefficient must be finite");
    if (!seen.insert(t.word).second)
      throw std::invalid_argument("PauliObservable: duplicate word " + t.word);
  }
}

namespace {

// Peel one qubit off the top: M = I (x) (A+D)/2 + X (x) (B+C)/2
//                               + Y (x) i(B-C)/2 + Z (x) (A-D)/2,
// then recurse into each half-size block. Leaves are the coefficients.
void decompose_block(const Eigen::MatrixXcd& m, std::string& prefix,
                     double tol, std::vector<PauliTerm>& out) {
  const Eigen::Index d = m.rows();
  if (d == 1) {
    const std::complex<double> c = m(0, 0);
    if (std::abs(c.real()) > tol) out.push_back({c.real(), prefix});
    return;
  }
  const Eigen::Index h = d / 2;
  const auto a = m.topLeftCorner(h, h);
  const auto b = m.topRightCorner(h, h);
  const auto c = m.bottomLeftCorner(h, h);
  const auto e = m.bottomRightCorner(h, h);
  const std::complex<double> i_unit(0.0, 1.0);

  prefix.push_back('I');
  decompose_block(0.5 * (a + e), prefix, tol, out);
  prefix.back() = 'X';
  decompose_block(0.5 * (b + c), prefix, tol, out);
  prefix.back() = 'Y';
  decompose_block(0.5 * i_unit * (b - c), prefix, tol, out);
  prefix.back() = 'Z';
  decompose_block(0.5 * (a - e), prefix, tol, out);
  prefix.pop_back();
}

}  // namespace

PauliObservable pauli_decompose(const Eigen::MatrixXd& m, double tol) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("pauli_decompose: matrix must be square");
  const int dim = static_cast<int>(m.rows());
  if (!is_power_of_two(dim))
    throw std::invalid_argument(
        "pauli_decompose: dimension must be a power of two");
  if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-12)
    throw std::invalid_argument("pauli_decompose: matrix must be symmetric");
  const int n_qubits = ceil_log2(dim);
  std::vector<PauliTerm> terms;
  std::string prefix;
  prefix.reserve(n_qubits);
  decompose_block(m.cast<std::complex<double>>(), prefix, tol, terms);
  return PauliObservable(n_qubits, std::move(terms));
}

std::uint64_t pauli_word_code(const std::string& word) {
  std::uint64_t code = 0;
  for (char c : word) code = 4 * code + static_cast<std::uint64_t>(letter_index(c));
  return code;
}

namespace {

// A Pauli word has one nonzero per row: row r maps to column r XOR
// flip_mask with a phase that is a product of per-letter factors.
struct WordAction {
  std::size_t flip_mask = 0;
  // phase for row r = i^(y_count) * (-1)^(popcount of sign bits of r)
  std::size_t z_like_mask = 0;  // bits contributing -1 when set in r
  int y_count = 0;
};

WordAction word_action(const std::string& word) {
  WordAction act;
  const int n = static_cast<int>(word.size());
  for (int pos = 0; pos < n; ++pos) {
    const std::size_t bit = std::size_t{1} << (n - 1 - pos);
    switch (word[pos]) {
      case 'I': break;
      case 'X': act.flip_mask |= bit; break;
      case 'Z': act.z_like_mask |= bit; break;
      case 'Y':
        // <r|Y|c>: column bit flipped; entry is +i when the row bit is 1,
        // -i when 0. Factor as (-i) * (-1)^(row bit).
        act.flip_mask |= bit;
        act.z_like_mask |= bit;
        act.y_count += 1;
        break;
      default: letter_index(word[pos]);
    }
  }
  return act;
}

std::complex<double> i_power(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

std::complex<double> row_phase(const WordAction& act, std::size_t row) {
  const int minus = __builtin_popcountll(row & act.z_like_mask) & 1;
  std::complex<double> p = i_power(-act.y_count);
  return minus ? -p : p;
}

}  // namespace

Eigen::MatrixXcd pauli_word_matrix(const std::string& word) {
  const std::size_t dim = std::size_t{1} << word.size();
  const WordAction act = word_action(word);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (std::size_t r = 0; r < dim; ++r)
    m(static_cast<Eigen::Index>(r),
      static_cast<Eigen::Index>(r ^ act.flip_mask)) = row_phase(act, r);
  return m;
}

Eigen::VectorXcd apply_pauli_word(const std::string& word,
                                  const Eigen::VectorXcd& state) {
  const std::size_t dim = std::size_t{1} << word.size();
  if (state.size() != static_cast<Eigen::Index>(dim))
    throw std::invalid_argument(
        "apply_pauli_word: state length must be 2^(word length)");
  const WordAction act = word_action(word);
  Eigen::VectorXcd out(state.size());
  for (std::size_t r = 0; r < dim; ++r)
    out[static_cast<Eigen::Index>(r)] =
        row_phase(act, r) *
        state[static_cast<Eigen::Index>(r ^ act.flip_mask)];
  return out;
}

Eigen::MatrixXcd reconstruct(const PauliObservable& obs) {
  const std::size_t dim = std::size_t{1} << obs.n_qubits();
  Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(dim, dim);
  for (const PauliTerm& t : obs.terms()) {
    const WordAction act = word_action(t.word);
    for (std::size_t r = 0; r < dim; ++r)
      sum(static_cast<Eigen::Index>(r),
          static_cast<Eigen::Index>(r ^ act.flip_mask)) +=
          t.coeff * row_phase(act, r);
  }
  return sum;
}

DecodedParams decode_params(const ParamVector& theta) {
  std::vector<int> spins(theta.size());
  std::vector<int> bits(theta.size());
  for (std::size_t k = 0; k < theta.size(); ++k) {
    bits[k] = threshold_bit(theta[k]);
    spins[k] = 1 - 2 * bits[k];
  }
  return DecodedParams{SpinAssignment(std::move(spins)),
                       BinaryAssignment(std::move(bits))};
}

namespace {

void check_padded(const ParamVector& theta, const Eigen::MatrixXd& m,
                  const char* who) {
  if (m.rows() != m.cols() || !is_power_of_two(static_cast<int>(m.rows())))
    throw std::invalid_argument(std::string(who) +
                                ": matrix must be padded to a power of two");
  if (theta.size() > static_cast<std::size_t>(m.rows()))
    throw std::invalid_argument(std::string(who) +
                                ": more parameters than matrix dimension");
}

}  // namespace

double cost_maxcut(const ParamVector& theta,
                   const Eigen::MatrixXd& padded_laplacian) {
  check_padded(theta, padded_laplacian, "cost_maxcut");
  const Eigen::Index dim = padded_laplacian.rows();
  Eigen::VectorXd s(dim);
  for (Eigen::Index k = 0; k < dim; ++k)
    s[k] = k < static_cast<Eigen::Index>(theta.size())
               ? phase_sign(theta[static_cast<std::size_t>(k)])
               : 1.0;
  return -0.25 * s.dot(padded_laplacian * s);
}

double cost_maxcut_statevector(const ParamVector& theta,
                               const Eigen::MatrixXd& padded_laplacian) {
  check_padded(theta, padded_laplacian, "cost_maxcut_statevector");
  const int n_qubits = ceil_log2(static_cast<int>(padded_laplacian.rows()));
  const Eigen::VectorXcd state = build_ansatz(theta, n_qubits);
  const double expectation = expectation_exact(state, padded_laplacian);
  return -std::ldexp(expectation, n_qubits - 2);
}

int qubo_qubit_count(int n) {
  if (n < 1) throw std::invalid_argument("qubo_qubit_count: n must be >= 1");
  return ceil_log2(n + 1);
}

Eigen::MatrixXd qubo_cost_observable(const QuboMatrix& q) {
  const int n = q.dim();
  const int n_qubits = qubo_qubit_count(n);
  const Eigen::Index dim = Eigen::Index{1} << n_qubits;
  const Eigen::MatrixXd& quad = q.entries();
  const Eigen::VectorXd row_sums = quad.rowwise().sum();
  const int ancilla = n;  // first padded coordinate, sign fixed at +1

  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim, dim);
  m.topLeftCorner(n, n) = 0.25 * quad;
  m.topLeftCorner(n, n).diagonal().setZero();
  for (int i = 0; i < n; ++i) {
    m(i, ancilla) = -0.25 * row_sums[i];
    m(ancilla, i) = -0.25 * row_sums[i];
  }
  m(ancilla, ancilla) = 0.25 * (row_sums.sum() + quad.trace());
  return m;
}

double cost_qubo(const ParamVector& theta, const QuboMatrix& q) {
  if (theta.size() > static_cast<std::size_t>(q.dim()))
    throw std::invalid_argument("cost_qubo: more parameters than variables");
  std::vector<int> bits(static_cast<std::size_t>(q.dim()), 0);
  for (std::size_t k = 0; k < theta.size(); ++k)
    bits[k] = threshold_bit(theta[k]);
  return qubo_value(q, BinaryAssignment(std::move(bits)));
}

double cost_qubo_statevector(const ParamVector& theta, const QuboMatrix& q) {
  if (theta.size() > static_cast<std::size_t>(q.dim()))
    throw std::invalid_argument(
        "cost_qubo_statevector: more parameters than variables");
  const int n_qubits = qubo_qubit_count(q.dim());
  const Eigen::MatrixXd observable = qubo_cost_observable(q);
  const Eigen::VectorXcd state = build_ansatz(theta, n_qubits);
  return std::ldexp(expectation_exact(state, observable), n_qubits);
}

}  // namespace logenc
