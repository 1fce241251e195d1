#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "logenc/encoder.hpp"
#include "logenc/rng.hpp"

namespace logenc {

enum class OptimizerKind { genetic, simplex };

struct OptimizerConfig {
  OptimizerKind kind = OptimizerKind::genetic;
  int max_evals = 5000;
  std::uint64_t seed = 0;
  // genetic
  int population = 64;
  double mutation_rate = 0.05;
  double crossover_rate = 0.9;
  // simplex
  double init_simplex_scale = 1.5707963267948966;  // pi/2
  // stop as soon as the objective reaches this value
  std::optional<double> target_stop;
};

struct OptimizationResult {
  ParamVector best_theta;
  double best_value = 0.0;
  int evals_used = 0;
  // (evaluation index, best value so far); non-increasing in the second
  // component, one entry per objective call
  std::vector<std::pair<int, double>> trace;
};

using Objective = std::function<double(const ParamVector&)>;

/// Black-box minimization over [0, 2*pi)^n. Spends at most cfg.max_evals
/// objective calls; deterministic for a fixed seed and deterministic
/// objective.
OptimizationResult minimize(const Objective& objective, int n_params,
                            const OptimizerConfig& cfg);

/// One generation: elitism keeps the best individual, tournament selection
/// of size 3, per-gene uniform crossover at crossover_rate, per-gene
/// Gaussian mutation (sigma = pi/4) at mutation_rate, wrapped into
/// [0, 2*pi). Population size is preserved; the elite sits at index 0.
std::vector<std::vector<double>> genetic_step(
    const std::vector<std::vector<double>>& population,
    const std::vector<double>& fitnesses, const OptimizerConfig& cfg,
    SplitMix64& rng);

OptimizationResult genetic_minimize(const Objective& objective, int n_params,
                                    const OptimizerConfig& cfg);

/// Nelder-Mead with standard coefficients (reflect 1, expand 2,
/// contract 1/2, shrink 1/2). Initial simplex sits at the all-pi/2 point
/// with init_simplex_scale added per axis; every point is wrapped into
/// [0, 2*pi) before evaluation.
OptimizationResult simplex_minimize(const Objective& objective, int n_params,
                                    const OptimizerConfig& cfg);

}  // namespace logenc
