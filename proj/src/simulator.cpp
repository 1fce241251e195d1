#include "logenc/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <tuple>
#include <stdexcept>
#include <vector>

#include "logenc/rng.hpp"

namespace logenc {

namespace {

constexpr double kImagTol = 1e-12;

double real_part_checked(const std::complex<double>& z, const char* who) {
  if (std::abs(z.imag()) > kImagTol)
    throw std::invalid_argument(std::string(who) +
                                ": expectation has an imaginary residue");
  return z.real();
}

void apply_hadamard(Eigen::VectorXcd& state, std::size_t bit) {
  const double inv_sqrt2 = 0.70710678118654752440084436210485;
  const std::size_t dim = static_cast<std::size_t>(state.size());
  for (std::size_t k = 0; k < dim; ++k) {
    if (k & bit) continue;
    const auto lo = state[static_cast<Eigen::Index>(k)];
    const auto hi = state[static_cast<Eigen::Index>(k | bit)];
    state[static_cast<Eigen::Index>(k)] = inv_sqrt2 * (lo + hi);
    state[static_cast<Eigen::Index>(k | bit)] = inv_sqrt2 * (lo - hi);
  }
}

void apply_s_dagger(Eigen::VectorXcd& state, std::size_t bit) {
  const std::complex<double> minus_i(0.0, -1.0);
  const std::size_t dim = static_cast<std::size_t>(state.size());
  for (std::size_t k = 0; k < dim; ++k)
    if (k & bit) state[static_cast<Eigen::Index>(k)] *= minus_i;
}

}  // namespace

double expectation_exact(const Eigen::VectorXcd& state,
                         const Eigen::MatrixXcd& m) {
  if (m.rows() != m.cols() || m.rows() != state.size())
    throw std::invalid_argument(
        "expectation_exact: matrix and state dimensions must match");
  const std::complex<double> form = state.adjoint() * m * state;
  return real_part_checked(form, "expectation_exact");
}

double expectation_exact(const Eigen::VectorXcd& state,
                         const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols() || m.rows() != state.size())
    throw std::invalid_argument(
        "expectation_exact: matrix and state dimensions must match");
  const Eigen::VectorXd re = state.real();
  const Eigen::VectorXd im = state.imag();
  const Eigen::VectorXd m_re = m * re;
  const Eigen::VectorXd m_im = m * im;
  const std::complex<double> form(re.dot(m_re) + im.dot(m_im),
                                  re.dot(m_im) - im.dot(m_re));
  return real_part_checked(form, "expectation_exact");
}

double expectation_term_exact(const Eigen::VectorXcd& state,
                              const std::string& word) {
  const Eigen::VectorXcd applied = apply_pauli_word(word, state);
  const std::complex<double> form = state.dot(applied);
  return real_part_checked(form, "expectation_term_exact");
}

ExpectationEstimate expectation_sampled(const ParamVector& theta,
                                        const PauliObservable& obs,
                                        const ShotConfig& cfg) {
  if (cfg.shots_per_term < 1)
    throw std::invalid_argument(
        "expectation_sampled: shots_per_term must be >= 1");
  const int n_qubits = obs.n_qubits();
  const Eigen::VectorXcd state = build_ansatz(theta, n_qubits);
  const std::size_t dim = static_cast<std::size_t>(state.size());

  ExpectationEstimate est;
  // Contribution per term, keyed by word code; summed in canonical order so
  // the result does not depend on how the term list happens to be ordered.
  std::vector<std::tuple<std::uint64_t, double, double>> contributions;
  std::vector<double> cumulative(dim);
  for (const PauliTerm& term : obs.terms()) {
    std::size_t parity_mask = 0;
    bool identity = true;
    for (std::size_t pos = 0; pos < term.word.size(); ++pos) {
      if (term.word[pos] == 'I') continue;
      identity = false;
      parity_mask |= std::size_t{1} << (term.word.size() - 1 - pos);
    }
    if (identity) {
      est.value += term.coeff;
      continue;
    }

    // Rotate into the term's measurement basis (X -> H, Y -> H S^dagger).
    Eigen::VectorXcd rotated = state;
    for (std::size_t pos = 0; pos < term.word.size(); ++pos) {
      const std::size_t bit = std::size_t{1} << (term.word.size() - 1 - pos);
      if (term.word[pos] == 'X') {
        apply_hadamard(rotated, bit);
      } else if (term.word[pos] == 'Y') {
        apply_s_dagger(rotated, bit);
        apply_hadamard(rotated, bit);
      }
    }

    double acc = 0.0;
    for (std::size_t k = 0; k < dim; ++k) {
      acc += std::norm(rotated[static_cast<Eigen::Index>(k)]);
      cumulative[k] = acc;
    }
    const double total_prob = cumulative[dim - 1];

    // Stream tied to the word itself, not its position in the term list.
    SplitMix64 rng(cfg.seed ^ pauli_word_code(term.word));
    long long parity_sum = 0;
    for (int shot = 0; shot < cfg.shots_per_term; ++shot) {
      const double u = uniform01(rng) * total_prob;
      const std::size_t k = static_cast<std::size_t>(
          std::upper_bound(cumulative.begin(), cumulative.end(), u) -
          cumulative.begin());
      const std::size_t idx = std::min(k, dim - 1);
      parity_sum += (__builtin_popcountll(idx & parity_mask) & 1) ? -1 : 1;
    }
    const double shots = static_cast<double>(cfg.shots_per_term);
    const double mean = static_cast<double>(parity_sum) / shots;
    // Var(mean) for +/-1 outcomes, unbiased sample variance over shots.
    const double denom = std::max(shots - 1.0, 1.0);
    contributions.emplace_back(pauli_word_code(term.word), term.coeff * mean,
                               term.coeff * term.coeff *
                                   std::max(0.0, 1.0 - mean * mean) / denom);
    est.total_shots += cfg.shots_per_term;
  }
  std::sort(contributions.begin(), contributions.end());
  double variance = 0.0;
  for (const auto& [code, value, var] : contributions) {
    est.value += value;
    variance += var;
  }
  est.std_error = std::sqrt(variance);
  return est;
}

}  // namespace logenc
