#include "logenc/optimizers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace logenc {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kTwoPi = 2.0 * kPi;
constexpr double kMutationSigma = kPi / 4.0;
constexpr int kTournamentSize = 3;

void check_common(int n_params, const OptimizerConfig& cfg) {
  if (n_params < 1)
    throw std::invalid_argument("minimize: n_params must be >= 1");
  if (cfg.max_evals < 1)
    throw std::invalid_argument("minimize: max_evals must be >= 1");
}

void check_genetic(const OptimizerConfig& cfg) {
  if (cfg.population < 2)
    throw std::invalid_argument("genetic: population must be >= 2");
  if (cfg.max_evals < cfg.population)
    throw std::invalid_argument("genetic: max_evals must cover the initial population");
  if (cfg.mutation_rate <= 0.0 || cfg.mutation_rate >= 1.0)
    throw std::invalid_argument("genetic: mutation_rate must lie in (0, 1)");
  if (cfg.crossover_rate <= 0.0 || cfg.crossover_rate >= 1.0)
    throw std::invalid_argument("genetic: crossover_rate must lie in (0, 1)");
}

// Budget and trace bookkeeping shared by both optimizers. Points are
// wrapped into [0, 2*pi) by the ParamVector constructor before every call.
class EvalTracker {
 public:
  EvalTracker(const Objective& objective, const OptimizerConfig& cfg)
      : objective_(objective), cfg_(cfg) {}

  bool can_eval() const {
    return !target_reached_ && evals_ < cfg_.max_evals;
  }

  double eval(const std::vector<double>& raw) {
    ParamVector point(raw);
    const double value = objective_(point);
    ++evals_;
    if (value < best_value_) {
      best_value_ = value;
      best_point_ = std::move(point);
    }
    trace_.emplace_back(evals_, best_value_);
    if (cfg_.target_stop && best_value_ <= *cfg_.target_stop)
      target_reached_ = true;
    return value;
  }

  OptimizationResult finish() const {
    OptimizationResult result;
    result.best_theta = best_point_;
    result.best_value = best_value_;
    result.evals_used = evals_;
    result.trace = trace_;
    return result;
  }

 private:
  const Objective& objective_;
  const OptimizerConfig& cfg_;
  int evals_ = 0;
  double best_value_ = std::numeric_limits<double>::infinity();
  ParamVector best_point_;
  std::vector<std::pair<int, double>> trace_;
  bool target_reached_ = false;
};

int tournament_pick(const std::vector<double>& fitnesses, SplitMix64& rng) {
  int winner = static_cast<int>(
      uniform_int(rng, 0, static_cast<long long>(fitnesses.size()) - 1));
  for (int round = 1; round < kTournamentSize; ++round) {
    const int challenger = static_cast<int>(
        uniform_int(rng, 0, static_cast<long long>(fitnesses.size()) - 1));
    if (fitnesses[challenger] < fitnesses[winner]) winner = challenger;
  }
  return winner;
}

double wrap_raw(double angle) {
  double w = std::fmod(angle, kTwoPi);
  if (w < 0.0) w += kTwoPi;
  if (w >= kTwoPi) w = 0.0;
  return w;
}

}  // namespace

std::vector<std::vector<double>> genetic_step(
    const std::vector<std::vector<double>>& population,
    const std::vector<double>& fitnesses, const OptimizerConfig& cfg,
    SplitMix64& rng) {
  check_genetic(cfg);
  if (population.empty() || population.size() != fitnesses.size())
    throw std::invalid_argument(
        "genetic_step: population and fitness sizes must match");

  const std::size_t elite = static_cast<std::size_t>(
      std::min_element(fitnesses.begin(), fitnesses.end()) -
      fitnesses.begin());
  std::vector<std::vector<double>> next;
  next.reserve(population.size());
  next.push_back(population[elite]);

  while (next.size() < population.size()) {
    const auto& parent_a = population[tournament_pick(fitnesses, rng)];
    const auto& parent_b = population[tournament_pick(fitnesses, rng)];
    std::vector<double> child(parent_a.size());
    for (std::size_t g = 0; g < child.size(); ++g)
      child[g] = uniform01(rng) < cfg.crossover_rate ? parent_b[g]
                                                     : parent_a[g];
    for (double& gene : child)
      if (uniform01(rng) < cfg.mutation_rate)
        gene = wrap_raw(gene + kMutationSigma * standard_normal(rng));
    next.push_back(std::move(child));
  }
  return next;
}

OptimizationResult genetic_minimize(const Objective& objective, int n_params,
                                    const OptimizerConfig& cfg) {
  check_common(n_params, cfg);
  check_genetic(cfg);

  SplitMix64 rng(cfg.seed);
  EvalTracker tracker(objective, cfg);

  std::vector<std::vector<double>> population;
  std::vector<double> fitnesses;
  population.reserve(cfg.population);
  fitnesses.reserve(cfg.population);
  for (int i = 0; i < cfg.population; ++i) {
    std::vector<double> individual(n_params);
    for (double& gene : individual) gene = uniform01(rng) * kTwoPi;
    population.push_back(std::move(individual));
  }
  for (const auto& individual : population) {
    if (!tracker.can_eval()) return tracker.finish();
    fitnesses.push_back(tracker.eval(individual));
  }

  // Whole generations only; the elite keeps its cached fitness.
  while (tracker.can_eval()) {
    auto next = genetic_step(population, fitnesses, cfg, rng);
    std::vector<double> next_fit(next.size());
    next_fit[0] = *std::min_element(fitnesses.begin(), fitnesses.end());
    for (std::size_t i = 1; i < next.size(); ++i) {
      if (!tracker.can_eval()) return tracker.finish();
      next_fit[i] = tracker.eval(next[i]);
    }
    population = std::move(next);
    fitnesses = std::move(next_fit);
  }
  return tracker.finish();
}

OptimizationResult simplex_minimize(const Objective& objective, int n_params,
                                    const OptimizerConfig& cfg) {
  check_common(n_params, cfg);
  const int n = n_params;

  std::vector<std::vector<double>> simplex(n + 1,
                                           std::vector<double>(n, kPi / 2.0));
  for (int i = 0; i < n; ++i) simplex[i + 1][i] += cfg.init_simplex_scale;

  EvalTracker tracker(objective, cfg);
  std::vector<double> values(n + 1);
  for (int i = 0; i <= n; ++i) {
    if (!tracker.can_eval()) return tracker.finish();
    values[i] = tracker.eval(simplex[i]);
  }

  while (tracker.can_eval()) {
    std::vector<int> order(n + 1);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return values[a] < values[b]; });
    const int lo = order.front();
    const int hi = order.back();
    const int second_hi = order[n - 1 >= 0 ? n - 1 : 0];

    const double spread = std::abs(values[hi] - values[lo]);
    if (spread <= 1e-12 * (std::abs(values[hi]) + std::abs(values[lo])) + 1e-15)
      break;

    std::vector<double> centroid(n, 0.0);
    for (int i = 0; i <= n; ++i) {
      if (i == hi) continue;
      for (int g = 0; g < n; ++g) centroid[g] += simplex[i][g];
    }
    for (double& c : centroid) c /= n;

    auto affine = [&](double t) {
      std::vector<double> point(n);
      for (int g = 0; g < n; ++g)
        point[g] = centroid[g] + t * (centroid[g] - simplex[hi][g]);
      return point;
    };

    if (!tracker.can_eval()) break;
    const auto reflected = affine(1.0);
    const double f_reflected = tracker.eval(reflected);

    if (f_reflected < values[lo]) {
      if (!tracker.can_eval()) {
        simplex[hi] = reflected;
        values[hi] = f_reflected;
        break;
      }
      const auto expanded = affine(2.0);
      const double f_expanded = tracker.eval(expanded);
      if (f_expanded < f_reflected) {
        simplex[hi] = expanded;
        values[hi] = f_expanded;
      } else {
        simplex[hi] = reflected;
        values[hi] = f_reflected;
      }
    } else if (f_reflected < values[second_hi]) {
      simplex[hi] = reflected;
      values[hi] = f_reflected;
    } else {
      const bool outside = f_reflected < values[hi];
      if (!tracker.can_eval()) break;
      const auto contracted = affine(outside ? 0.5 : -0.5);
      const double f_contracted = tracker.eval(contracted);
      const double bar = outside ? f_reflected : values[hi];
      if (f_contracted <= bar) {
        simplex[hi] = contracted;
        values[hi] = f_contracted;
      } else {
        // Shrink toward the best vertex.
        for (int i = 0; i <= n; ++i) {
          if (i == lo) continue;
          for (int g = 0; g < n; ++g)
            simplex[i][g] = simplex[lo][g] + 0.5 * (simplex[i][g] - simplex[lo][g]);
          if (!tracker.can_eval()) return tracker.finish();
          values[i] = tracker.eval(simplex[i]);
        }
      }
    }
  }
  return tracker.finish();
}

OptimizationResult minimize(const Objective& objective, int n_params,
                            const OptimizerConfig& cfg) {
  check_common(n_params, cfg);
  switch (cfg.kind) {
    case OptimizerKind::genetic:
      return genetic_minimize(objective, n_params, cfg);
    case OptimizerKind::simplex:
      return simplex_minimize(objective, n_params, cfg);
  }
  throw std::invalid_argument("minimize: unknown optimizer kind");
}

}  // namespace logenc
