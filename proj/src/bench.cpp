#include "logenc/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <vector>

#include "logenc/harness.hpp"
#include "logenc/oracles.hpp"
#include "logenc/rng.hpp"

namespace logenc::bench {

namespace {

constexpr std::uint64_t kSweepSeed = 0x10a9e5c0deULL;

double median(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  return n % 2 ? values[n / 2]
               : 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

double mean(const std::vector<double>& values) {
  double sum = 0.0;
  for (double v : values) sum += v;
  return sum / static_cast<double>(values.size());
}

struct Timer {
  std::chrono::steady_clock::time_point start =
      std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start)
        .count();
  }
};

std::string format_count(const char* fmt, double a, double b) {
  char buf[160];
  std::snprintf(buf, sizeof(buf), fmt, a, b);
  return buf;
}

}  // namespace

CriterionResult maxcut_quality() {
  Timer timer;
  CriterionResult result{5, "maxcut quality", true, "", 0.0, ""};
  const double densities[] = {0.3, 0.4, 0.5};
  double worst_ratio = 1e9;
  for (int d = 0; d < 3; ++d) {
    for (int i = 0; i < 10; ++i) {
      const std::uint64_t instance_seed =
          derive_seed(kSweepSeed, 100 * (d + 1) + i);
      ExperimentSpec spec;
      spec.problem = Problem::maxcut;
      char id[64];
      std::snprintf(id, sizeof(id), "gnp_n20_d%.1f_i%02d", densities[d], i);
      spec.instance_id = id;
      spec.graph = gen_gnp(20, densities[d], instance_seed);
      spec.runs = 10;
      spec.seed = derive_seed(instance_seed, 1);
      const auto records = run_experiment(spec);
      result.records_jsonl += to_json_lines(records);

      const double optimum = brute_force_maxcut(*spec.graph).optimal_value;
      std::vector<double> values;
      for (const auto& r : records) values.push_back(r.value);
      const double med = median(values);
      const double ratio = optimum > 0.0 ? med / optimum : 1.0;
      worst_ratio = std::min(worst_ratio, ratio);
      if (ratio < 0.85) result.pass = false;
    }
  }
  result.detail =
      format_count("worst per-instance median %.4f of optimum (floor %.2f)",
                   worst_ratio, 0.85);
  result.seconds = timer.seconds();
  return result;
}

CriterionResult partition_quality() {
  Timer timer;
  CriterionResult result{6, "partition quality", true, "", 0.0, ""};
  double worst_median = 1e9;
  for (int i = 0; i < 10; ++i) {
    const std::uint64_t instance_seed = derive_seed(kSweepSeed, 600 + i);
    ExperimentSpec spec;
    spec.problem = Problem::partition;
    char id[64];
    std::snprintf(id, sizeof(id), "partition_n16_i%02d", i);
    spec.instance_id = id;
    spec.partition = gen_partition(16, instance_seed);
    spec.runs = 20;
    spec.seed = derive_seed(instance_seed, 1);
    const auto records = run_experiment(spec);
    result.records_jsonl += to_json_lines(records);

    std::vector<double> p_norms;
    for (const auto& r : records) p_norms.push_back(r.p_norm.value());
    const double med = median(p_norms);
    worst_median = std::min(worst_median, med);
    if (med < 0.95) result.pass = false;
  }
  result.detail = format_count(
      "worst per-instance median p_norm %.4f (floor %.2f)", worst_median, 0.95);
  result.seconds = timer.seconds();
  return result;
}

CriterionResult clique_quality() {
  Timer timer;
  CriterionResult result{7, "clique quality", true, "", 0.0, ""};
  int matched = 0;
  for (int i = 0; i < 5; ++i) {
    const std::uint64_t instance_seed = derive_seed(kSweepSeed, 700 + i);
    ExperimentSpec spec;
    spec.problem = Problem::clique;
    char id[64];
    std::snprintf(id, sizeof(id), "gnp_n12_d0.5_i%02d", i);
    spec.instance_id = id;
    spec.graph = gen_gnp(12, 0.5, instance_seed);
    spec.runs = 20;
    spec.seed = derive_seed(instance_seed, 1);
    const auto records = run_experiment(spec);
    result.records_jsonl += to_json_lines(records);

    const double optimum = exact_max_clique(*spec.graph).optimal_value;
    double best = 0.0;
    for (const auto& r : records) best = std::max(best, r.value);
    if (best == optimum) ++matched;
  }
  if (matched < 4) result.pass = false;
  result.detail = format_count("best-of-20 equals the exact optimum on "
                               "%.0f of %.0f instances (need 4)",
                               matched, 5.0);
  result.seconds = timer.seconds();
  return result;
}

CriterionResult mwis_quality() {
  Timer timer;
  CriterionResult result{8, "mwis quality", true, "", 0.0, ""};
  double worst_mean = 1e9;
  for (int i = 0; i < 10; ++i) {
    const std::uint64_t instance_seed = derive_seed(kSweepSeed, 800 + i);
    ExperimentSpec spec;
    spec.problem = Problem::mwis;
    char id[64];
    std::snprintf(id, sizeof(id), "gnp_n16_d0.3_i%02d", i);
    spec.instance_id = id;
    const WeightedGraph base = gen_gnp(16, 0.3, instance_seed);
    spec.graph = WeightedGraph(
        base.node_count(), base.edges(),
        gen_node_weights(base.node_count(), derive_seed(instance_seed, 2)));
    spec.runs = 20;
    spec.seed = derive_seed(instance_seed, 1);
    const auto records = run_experiment(spec);
    result.records_jsonl += to_json_lines(records);

    std::vector<double> percents;
    for (const auto& r : records)
      percents.push_back(r.percent_of_optimal.value());
    const double m = mean(percents);
    worst_mean = std::min(worst_mean, m);
    if (m < 0.65) result.pass = false;
  }
  result.detail = format_count(
      "worst per-instance mean percent of optimal %.4f (floor %.2f)",
      worst_mean, 0.65);
  result.seconds = timer.seconds();
  return result;
}

CriterionResult determinism_check(
    const std::vector<CriterionResult>& first_pass) {
  Timer timer;
  CriterionResult result{9, "determinism", true, "", 0.0, ""};
  const CriterionResult rerun[] = {maxcut_quality(), partition_quality(),
                                   clique_quality(), mwis_quality()};
  int mismatches = 0;
  for (const CriterionResult& again : rerun) {
    const auto match = std::find_if(
        first_pass.begin(), first_pass.end(),
        [&](const CriterionResult& r) { return r.id == again.id; });
    if (match == first_pass.end() ||
        match->records_jsonl != again.records_jsonl)
      ++mismatches;
  }
  if (mismatches > 0) result.pass = false;
  result.detail = format_count(
      "%.0f of %.0f quality sweeps reproduced byte-identically",
      4.0 - mismatches, 4.0);
  result.seconds = timer.seconds();
  return result;
}

std::vector<CriterionResult> run_quality_suite() {
  std::vector<CriterionResult> results;
  results.push_back(maxcut_quality());
  results.push_back(partition_quality());
  results.push_back(clique_quality());
  results.push_back(mwis_quality());
  results.push_back(determinism_check(results));
  return results;
}

std::string format_result_line(const CriterionResult& r) {
  char buf[320];
  std::snprintf(buf, sizeof(buf), "%s  criterion %d (%s): %s [%.1fs]",
                r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(),
                r.detail.c_str(), r.seconds);
  return buf;
}

}  // namespace logenc::bench
