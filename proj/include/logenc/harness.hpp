#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "logenc/graph.hpp"
#include "logenc/optimizers.hpp"
#include "logenc/reductions.hpp"
#include "logenc/simulator.hpp"

namespace logenc {

enum class Problem { maxcut, partition, max2sat, clique, mwis };

enum class EvaluatorKind { exact, sampled };

std::string problem_name(Problem p);
Problem parse_problem(const std::string& name);

/// G(n, p) random graph with unit edge weights; each unordered pair is
/// included independently with probability `density`.
WeightedGraph gen_gnp(int n, double density, std::uint64_t seed);

/// n random integers uniform on [1, 100].
PartitionInstance gen_partition(int n, std::uint64_t seed);

/// Uniform integer node weights on [1, 100].
std::vector<double> gen_node_weights(int n, std::uint64_t seed);

/// One experiment: a problem instance, an evaluator, an optimizer, and a
/// number of independent runs with seeds derived from `seed`.
struct ExperimentSpec {
  Problem problem = Problem::maxcut;
  std::string instance_id;
  // exactly one payload is used, chosen by `problem`
  std::optional<WeightedGraph> graph;          // maxcut, clique, mwis
  std::optional<PartitionInstance> partition;  // partition
  std::optional<TwoSatInstance> twosat;        // max2sat
  Max2SatMode mode = Max2SatMode::ground_gadget;
  EvaluatorKind evaluator = EvaluatorKind::exact;
  ShotConfig shots;
  OptimizerConfig optimizer;
  int runs = 1;
  std::uint64_t seed = 0;
};

/// One optimizer run's scored outcome. `value` is the decoded
/// source-problem objective (cut weight, partition difference, satisfied
/// weight, clique size, or independent-set weight).
struct RunRecord {
  std::string problem;
  std::string instance;
  std::uint64_t seed = 0;
  int run = 0;
  double value = 0.0;
  std::optional<double> percent_of_optimal;
  std::optional<double> p_norm;        // partition only
  std::optional<double> oracle_value;  // when the exact oracle fit
  int evals_used = 0;
  double wall_time_ms = 0.0;  // excluded from JSON unless asked for
};

std::vector<RunRecord> run_experiment(const ExperimentSpec& spec);

/// One JSON object per line. Timing is opt-in so that identical specs
/// produce byte-identical output.
std::string to_json_line(const RunRecord& r, bool with_timing = false);
std::string to_json_lines(const std::vector<RunRecord>& records,
                          bool with_timing = false);

struct SummaryRow {
  std::string problem;
  std::string instance;
  std::string metric;
  int count = 0;
  double mean = 0.0;
  double stddev = 0.0;  // sample standard deviation, n-1 denominator
  double min = 0.0;
  double max = 0.0;
  double best = 0.0;  // max, except min for the partition difference
};

/// Per (problem, instance, metric) statistics over the records.
std::vector<SummaryRow> summarize(const std::vector<RunRecord>& records);

std::string summary_to_csv(const std::vector<SummaryRow>& rows);
std::string summary_to_table(const std::vector<SummaryRow>& rows);

/// Parse "key=value" optimizer settings (comma- or whitespace-separated).
/// Keys: kind, max_evals, seed, population, mutation_rate, crossover_rate,
/// init_simplex_scale, target_stop.
OptimizerConfig parse_optimizer_config(const std::string& text,
                                       OptimizerConfig base = {});

}  // namespace logenc
