#include "logenc/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <memory>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "logenc/errors.hpp"
#include "logenc/linalg.hpp"
#include "logenc/oracles.hpp"
#include "logenc/rng.hpp"

namespace logenc {

std::string problem_name(Problem p) {
  switch (p) {
    case Problem::maxcut: return "maxcut";
    case Problem::partition: return "partition";
    case Problem::max2sat: return "max2sat";
    case Problem::clique: return "clique";
    case Problem::mwis: return "mwis";
  }
  throw std::invalid_argument("problem_name: unknown problem");
}

Problem parse_problem(const std::string& name) {
  if (name == "maxcut") return Problem::maxcut;
  if (name == "partition") return Problem::partition;
  if (name == "max2sat") return Problem::max2sat;
  if (name == "clique") return Problem::clique;
  if (name == "mwis") return Problem::mwis;
  throw std::invalid_argument("unknown problem '" + name + "'");
}

WeightedGraph gen_gnp(int n, double density, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("gen_gnp: n must be >= 2");
  if (!(density >= 0.0 && density <= 1.0))
    throw std::invalid_argument("gen_gnp: density must lie in [0, 1]");
  SplitMix64 rng(seed);
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (uniform01(rng) < density) edges.push_back({i, j, 1.0});
  return WeightedGraph(n, std::move(edges));
}

PartitionInstance gen_partition(int n, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("gen_partition: n must be >= 2");
  SplitMix64 rng(seed);
  std::vector<long long> weights(n);
  for (long long& w : weights) w = uniform_int(rng, 1, 100);
  return PartitionInstance(std::move(weights));
}

std::vector<double> gen_node_weights(int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("gen_node_weights: n must be >= 1");
  SplitMix64 rng(seed);
  std::vector<double> weights(n);
  for (double& w : weights)
    w = static_cast<double>(uniform_int(rng, 1, 100));
  return weights;
}

namespace {

void verify_clique(const WeightedGraph& g, const std::vector<int>& vertices) {
  std::set<std::pair<int, int>> present;
  for (const Edge& e : g.edges()) present.insert({e.u, e.v});
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      const int a = std::min(vertices[i], vertices[j]);
      const int b = std::max(vertices[i], vertices[j]);
      if (!present.count({a, b}))
        throw std::logic_error("decoded clique is not a clique");
    }
}

void verify_independent(const WeightedGraph& g,
                        const std::vector<int>& vertices) {
  const std::set<int> chosen(vertices.begin(), vertices.end());
  for (const Edge& e : g.edges())
    if (chosen.count(e.u) && chosen.count(e.v))
      throw std::logic_error("decoded set is not independent");
}

/// Everything run_experiment needs about one problem instance: the
/// objective in both evaluator flavours and the decoded source objective.
struct ProblemContext {
  int n_params = 0;
  std::function<double(const ParamVector&)> exact_cost;
  // observable path, set up lazily for the sampled evaluator
  std::function<double(const ParamVector&, const ShotConfig&)> sampled_cost;
  std::function<double(const ParamVector&)> decoded_value;
  std::optional<OracleResult> oracle;
  bool oracle_optimum_positive = false;
  int p_norm_count = 0;  // partition only; 0 disables p_norm
};

ProblemContext make_maxcut_context(const WeightedGraph& g,
                                   EvaluatorKind evaluator) {
  ProblemContext ctx;
  ctx.n_params = g.node_count();
  auto padded =
      std::make_shared<Eigen::MatrixXd>(pad_to_power_of_two(build_laplacian(g).entries));
  ctx.exact_cost = [padded](const ParamVector& theta) {
    return cost_maxcut(theta, *padded);
  };
  if (evaluator == EvaluatorKind::sampled) {
    auto obs = std::make_shared<PauliObservable>(pauli_decompose(*padded));
    const int n_qubits = ceil_log2(static_cast<int>(padded->rows()));
    ctx.sampled_cost = [obs, n_qubits](const ParamVector& theta,
                                       const ShotConfig& cfg) {
      return -std::ldexp(expectation_sampled(theta, *obs, cfg).value,
                         n_qubits - 2);
    };
  }
  ctx.decoded_value = [g](const ParamVector& theta) {
    return cut_value(g, decode_params(theta).spin);
  };
  try {
    ctx.oracle = brute_force_maxcut(g);
    ctx.oracle_optimum_positive = ctx.oracle->optimal_value > 0.0;
  } catch (const CapacityError&) {
  }
  return ctx;
}

ProblemContext make_cut_reduction_context(
    const WeightedGraph& reduced, EvaluatorKind evaluator,
    std::function<double(const SpinAssignment&)> score) {
  ProblemContext ctx;
  ctx.n_params = reduced.node_count();
  auto padded = std::make_shared<Eigen::MatrixXd>(
      pad_to_power_of_two(build_laplacian(reduced).entries));
  ctx.exact_cost = [padded](const ParamVector& theta) {
    return cost_maxcut(theta, *padded);
  };
  if (evaluator == EvaluatorKind::sampled) {
    auto obs = std::make_shared<PauliObservable>(pauli_decompose(*padded));
    const int n_qubits = ceil_log2(static_cast<int>(padded->rows()));
    ctx.sampled_cost = [obs, n_qubits](const ParamVector& theta,
                                       const ShotConfig& cfg) {
      return -std::ldexp(expectation_sampled(theta, *obs, cfg).value,
                         n_qubits - 2);
    };
  }
  ctx.decoded_value = [score = std::move(score)](const ParamVector& theta) {
    return score(decode_params(theta).spin);
  };
  return ctx;
}

ProblemContext make_context(const ExperimentSpec& spec) {
  switch (spec.problem) {
    case Problem::maxcut: {
      if (!spec.graph)
        throw std::invalid_argument("run_experiment: maxcut needs a graph");
      return make_maxcut_context(*spec.graph, spec.evaluator);
    }
    case Problem::partition: {
      if (!spec.partition)
        throw std::invalid_argument(
            "run_experiment: partition needs a number list");
      const PartitionInstance& p = *spec.partition;
      auto reduction =
          std::make_shared<PartitionMaxcutReduction>(partition_to_maxcut(p));
      ProblemContext ctx = make_cut_reduction_context(
          reduction->graph(), spec.evaluator,
          [reduction](const SpinAssignment& x) {
            return static_cast<double>(reduction->decode(x).difference);
          });
      ctx.p_norm_count = static_cast<int>(p.size());
      try {
        ctx.oracle = brute_force_partition(p);
      } catch (const CapacityError&) {
      }
      return ctx;
    }
    case Problem::max2sat: {
      if (!spec.twosat)
        throw std::invalid_argument(
            "run_experiment: max2sat needs a clause set");
      auto reduction = std::make_shared<Max2SatMaxcutReduction>(
          max2sat_to_maxcut(*spec.twosat, spec.mode));
      ProblemContext ctx = make_cut_reduction_context(
          reduction->graph(), spec.evaluator,
          [reduction](const SpinAssignment& x) {
            return reduction->decode(x).satisfied_weight;
          });
      try {
        ctx.oracle = brute_force_max2sat(*spec.twosat);
        ctx.oracle_optimum_positive = ctx.oracle->optimal_value > 0.0;
      } catch (const CapacityError&) {
      }
      return ctx;
    }
    case Problem::clique: {
      if (!spec.graph)
        throw std::invalid_argument("run_experiment: clique needs a graph");
      const WeightedGraph g = *spec.graph;
      auto reduction = std::make_shared<CliqueMaxcutReduction>(
          clique_to_maxcut(g, spec.mode));
      ProblemContext ctx = make_cut_reduction_context(
          reduction->graph(), spec.evaluator,
          [reduction, g](const SpinAssignment& x) {
            const CliqueDecode decoded = reduction->decode(x);
            verify_clique(g, decoded.vertices);
            return static_cast<double>(decoded.size);
          });
      try {
        ctx.oracle = exact_max_clique(g);
        ctx.oracle_optimum_positive = ctx.oracle->optimal_value > 0.0;
      } catch (const CapacityError&) {
      }
      return ctx;
    }
    case Problem::mwis: {
      if (!spec.graph)
        throw std::invalid_argument("run_experiment: mwis needs a graph");
      const WeightedGraph g = *spec.graph;
      auto reduction = std::make_shared<MwisQuboReduction>(mwis_to_qubo(g));
      auto qubo = std::make_shared<QuboMatrix>(reduction->qubo());
      ProblemContext ctx;
      ctx.n_params = g.node_count();
      ctx.exact_cost = [qubo](const ParamVector& theta) {
        return cost_qubo(theta, *qubo);
      };
      if (spec.evaluator == EvaluatorKind::sampled) {
        auto obs = std::make_shared<PauliObservable>(
            pauli_decompose(qubo_cost_observable(*qubo)));
        const int n_qubits = qubo_qubit_count(qubo->dim());
        ctx.sampled_cost = [obs, n_qubits](const ParamVector& theta,
                                           const ShotConfig& cfg) {
          return std::ldexp(expectation_sampled(theta, *obs, cfg).value,
                            n_qubits);
        };
      }
      ctx.decoded_value = [reduction, g](const ParamVector& theta) {
        const MwisDecode decoded =
            reduction->decode(decode_params(theta).binary);
        verify_independent(g, decoded.vertices);
        return decoded.weight;
      };
      try {
        ctx.oracle = brute_force_mwis(g);
        ctx.oracle_optimum_positive = ctx.oracle->optimal_value > 0.0;
      } catch (const CapacityError&) {
      }
      return ctx;
    }
  }
  throw std::invalid_argument("run_experiment: unknown problem");
}

}  // namespace

std::vector<RunRecord> run_experiment(const ExperimentSpec& spec) {
  if (spec.runs < 1)
    throw std::invalid_argument("run_experiment: runs must be >= 1");
  const ProblemContext ctx = make_context(spec);

  std::vector<RunRecord> records;
  records.reserve(spec.runs);
  for (int run = 0; run < spec.runs; ++run) {
    const std::uint64_t run_seed =
        derive_seed(spec.seed, static_cast<std::uint64_t>(run));
    OptimizerConfig optimizer = spec.optimizer;
    optimizer.seed = run_seed;

    Objective objective;
    if (spec.evaluator == EvaluatorKind::exact) {
      objective = ctx.exact_cost;
    } else {
      // Fresh shot noise per evaluation, reproducible from the run seed.
      auto counter = std::make_shared<std::uint64_t>(0);
      const std::uint64_t shot_base = derive_seed(spec.shots.seed, run_seed);
      const int shots = spec.shots.shots_per_term;
      auto sampled = ctx.sampled_cost;
      objective = [sampled, counter, shot_base, shots](const ParamVector& theta) {
        const ShotConfig cfg{shots, derive_seed(shot_base, (*counter)++)};
        return sampled(theta, cfg);
      };
    }

    const auto start = std::chrono::steady_clock::now();
    const OptimizationResult result = minimize(objective, ctx.n_params, optimizer);
    const double value = ctx.decoded_value(result.best_theta);
    const auto stop = std::chrono::steady_clock::now();

    RunRecord record;
    record.problem = problem_name(spec.problem);
    record.instance = spec.instance_id;
    record.seed = run_seed;
    record.run = run;
    record.value = value;
    record.evals_used = result.evals_used;
    record.wall_time_ms =
        std::chrono::duration<double, std::milli>(stop - start).count();
    if (ctx.oracle) {
      record.oracle_value = ctx.oracle->optimal_value;
      if (ctx.oracle_optimum_positive)
        record.percent_of_optimal =
            percent_of_optimal(value, ctx.oracle->optimal_value);
    }
    if (ctx.p_norm_count > 0)
      record.p_norm = partition_norm(value, ctx.p_norm_count);
    records.push_back(std::move(record));
  }
  return records;
}

std::string to_json_line(const RunRecord& r, bool with_timing) {
  nlohmann::ordered_json j;
  j["problem"] = r.problem;
  j["instance"] = r.instance;
  j["seed"] = r.seed;
  j["run"] = r.run;
  j["value"] = r.value;
  if (r.percent_of_optimal) j["percent_of_optimal"] = *r.percent_of_optimal;
  if (r.p_norm) j["p_norm"] = *r.p_norm;
  if (r.oracle_value) j["oracle_value"] = *r.oracle_value;
  j["evals_used"] = r.evals_used;
  if (with_timing) j["wall_time_ms"] = r.wall_time_ms;
  return j.dump();
}

std::string to_json_lines(const std::vector<RunRecord>& records,
                          bool with_timing) {
  std::string out;
  for (const RunRecord& r : records) {
    out += to_json_line(r, with_timing);
    out += '\n';
  }
  return out;
}

namespace {

struct Stats {
  int count = 0;
  double mean = 0.0, stddev = 0.0, min = 0.0, max = 0.0;
};

Stats compute_stats(const std::vector<double>& values) {
  Stats s;
  s.count = static_cast<int>(values.size());
  s.min = *std::min_element(values.begin(), values.end());
  s.max = *std::max_element(values.begin(), values.end());
  double sum = 0.0;
  for (double v : values) sum += v;
  s.mean = sum / s.count;
  if (s.count > 1) {
    double ss = 0.0;
    for (double v : values) ss += (v - s.mean) * (v - s.mean);
    s.stddev = std::sqrt(ss / (s.count - 1));
  }
  return s;
}

std::string format_stat(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

}  // namespace

std::vector<SummaryRow> summarize(const std::vector<RunRecord>& records) {
  if (records.empty())
    throw std::invalid_argument("summarize: needs at least one record");

  std::vector<std::pair<std::string, std::string>> groups;
  for (const RunRecord& r : records) {
    const auto key = std::make_pair(r.problem, r.instance);
    if (std::find(groups.begin(), groups.end(), key) == groups.end())
      groups.push_back(key);
  }

  std::vector<SummaryRow> rows;
  for (const auto& [problem, instance] : groups) {
    std::vector<double> value, percent, p_norm;
    for (const RunRecord& r : records) {
      if (r.problem != problem || r.instance != instance) continue;
      value.push_back(r.value);
      if (r.percent_of_optimal) percent.push_back(*r.percent_of_optimal);
      if (r.p_norm) p_norm.push_back(*r.p_norm);
    }
    auto push = [&](const std::string& metric,
                    const std::vector<double>& values, bool best_is_min) {
      if (values.empty()) return;
      const Stats s = compute_stats(values);
      rows.push_back({problem, instance, metric, s.count, s.mean, s.stddev,
                      s.min, s.max, best_is_min ? s.min : s.max});
    };
    push("value", value, problem == "partition");
    push("percent_of_optimal", percent, false);
    push("p_norm", p_norm, false);
  }
  return rows;
}

std::string summary_to_csv(const std::vector<SummaryRow>& rows) {
  std::ostringstream out;
  out << "problem,instance,metric,count,mean,std,min,max,best\n";
  for (const SummaryRow& r : rows)
    out << r.problem << ',' << r.instance << ',' << r.metric << ',' << r.count
        << ',' << format_stat(r.mean) << ',' << format_stat(r.stddev) << ','
        << format_stat(r.min) << ',' << format_stat(r.max) << ','
        << format_stat(r.best) << '\n';
  return out.str();
}

std::string summary_to_table(const std::vector<SummaryRow>& rows) {
  std::ostringstream out;
  char line[256];
  std::snprintf(line, sizeof(line), "%-10s %-28s %-20s %5s %10s %10s %10s %10s %10s\n",
                "problem", "instance", "metric", "n", "mean", "std", "min",
                "max", "best");
  out << line;
  for (const SummaryRow& r : rows) {
    std::snprintf(line, sizeof(line),
                  "%-10s %-28s %-20s %5d %10.4g %10.4g %10.4g %10.4g %10.4g\n",
                  r.problem.c_str(), r.instance.c_str(), r.metric.c_str(),
                  r.count, r.mean, r.stddev, r.min, r.max, r.best);
    out << line;
  }
  return out.str();
}

OptimizerConfig parse_optimizer_config(const std::string& text,
                                       OptimizerConfig base) {
  std::string normalized = text;
  std::replace(normalized.begin(), normalized.end(), ',', ' ');
  std::istringstream stream(normalized);
  std::string token;
  while (stream >> token) {
    const auto eq = token.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("optimizer config: expected key=value, got '" +
                                  token + "'");
    const std::string key = token.substr(0, eq);
    const std::string value = token.substr(eq + 1);
    try {
      if (key == "kind") {
        if (value == "genetic") base.kind = OptimizerKind::genetic;
        else if (value == "simplex") base.kind = OptimizerKind::simplex;
        else throw std::invalid_argument("optimizer kind '" + value + "'");
      } else if (key == "max_evals") {
        base.max_evals = std::stoi(value);
      } else if (key == "seed") {
        base.seed = std::stoull(value);
      } else if (key == "population") {
        base.population = std::stoi(value);
      } else if (key == "mutation_rate") {
        base.mutation_rate = std::stod(value);
      } else if (key == "crossover_rate") {
        base.crossover_rate = std::stod(value);
      } else if (key == "init_simplex_scale") {
        base.init_simplex_scale = std::stod(value);
      } else if (key == "target_stop") {
        base.target_stop = std::stod(value);
      } else {
        throw std::invalid_argument("unknown optimizer key '" + key + "'");
      }
    } catch (const std::out_of_range&) {
      throw std::invalid_argument("optimizer config: bad value in '" + token +
                                  "'");
    }
  }
  return base;
}

}  // namespace logenc
