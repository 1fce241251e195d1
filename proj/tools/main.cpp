#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "logenc/bench.hpp"
#include "logenc/errors.hpp"
#include "logenc/harness.hpp"
#include "logenc/io.hpp"
#include "logenc/linalg.hpp"
#include "logenc/oracles.hpp"

namespace {

using namespace logenc;

constexpr int kExitOk = 0;
constexpr int kExitArgument = 2;
constexpr int kExitCapacity = 3;
constexpr int kExitIo = 4;

struct GenOptions {
  std::string kind;
  int n = 16;
  double density = 0.5;
  std::uint64_t seed = 0;
  bool node_weights = false;
  std::string out;
};

int run_gen(const GenOptions& opt) {
  if (opt.kind == "gnp") {
    WeightedGraph g = gen_gnp(opt.n, opt.density, opt.seed);
    if (opt.node_weights)
      g = WeightedGraph(g.node_count(), g.edges(),
                        gen_node_weights(g.node_count(),
                                         derive_seed(opt.seed, 1)));
    write_graph(opt.out, g);
  } else if (opt.kind == "partition") {
    write_partition(opt.out, gen_partition(opt.n, opt.seed));
  } else {
    throw std::invalid_argument("gen: kind must be gnp or partition");
  }
  std::cout << "wrote " << opt.out << "\n";
  return kExitOk;
}

struct SolveOptions {
  std::string problem;
  std::string file;
  std::string mode = "ground-gadget";
  std::string evaluator = "exact";
  int shots = 1024;
  std::string optimizer_kv;
  std::string optimizer_file;
  int runs = 1;
  std::uint64_t seed = 0;
  std::string out;
  bool timings = false;
};

Max2SatMode parse_mode(const std::string& mode) {
  if (mode == "paper-literal") return Max2SatMode::paper_literal;
  if (mode == "ground-gadget") return Max2SatMode::ground_gadget;
  throw std::invalid_argument(
      "mode must be paper-literal or ground-gadget, got '" + mode + "'");
}

int run_solve(const SolveOptions& opt) {
  ExperimentSpec spec;
  spec.problem = parse_problem(opt.problem);
  spec.instance_id = opt.file;
  spec.mode = parse_mode(opt.mode);
  spec.runs = opt.runs;
  spec.seed = opt.seed;

  if (opt.evaluator == "exact") {
    spec.evaluator = EvaluatorKind::exact;
  } else if (opt.evaluator == "sampled") {
    spec.evaluator = EvaluatorKind::sampled;
    spec.shots.shots_per_term = opt.shots;
    spec.shots.seed = opt.seed;
  } else {
    throw std::invalid_argument("evaluator must be exact or sampled");
  }

  if (!opt.optimizer_file.empty()) {
    std::ifstream file(opt.optimizer_file);
    if (!file) throw IoError("cannot open " + opt.optimizer_file);
    std::stringstream buffer;
    buffer << file.rdbuf();
    spec.optimizer = parse_optimizer_config(buffer.str(), spec.optimizer);
  }
  if (!opt.optimizer_kv.empty())
    spec.optimizer = parse_optimizer_config(opt.optimizer_kv, spec.optimizer);

  switch (spec.problem) {
    case Problem::maxcut:
    case Problem::clique:
    case Problem::mwis:
      spec.graph = read_graph(opt.file);
      break;
    case Problem::partition:
      spec.partition = read_partition(opt.file);
      break;
    case Problem::max2sat:
      spec.twosat = read_twosat(opt.file);
      break;
  }

  const auto records = run_experiment(spec);
  const std::string lines = to_json_lines(records, opt.timings);
  if (opt.out.empty()) {
    std::cout << lines;
  } else {
    std::ofstream file(opt.out);
    if (!file) throw IoError("cannot write " + opt.out);
    file << lines;
    std::cout << summary_to_table(summarize(records));
  }
  return kExitOk;
}

struct OracleOptions {
  std::string problem;
  std::string file;
  bool local_search = false;
  int restarts = 50;
  std::uint64_t seed = 0;
};

int run_oracle(const OracleOptions& opt) {
  const Problem problem = parse_problem(opt.problem);
  OracleResult result;
  bool witness_is_vertex_list = false;
  std::vector<int> vertex_list;

  switch (problem) {
    case Problem::maxcut: {
      const WeightedGraph g = read_graph(opt.file);
      result = opt.local_search
                   ? local_search_maxcut(g, opt.seed, opt.restarts)
                   : brute_force_maxcut(g);
      break;
    }
    case Problem::partition:
      result = brute_force_partition(read_partition(opt.file));
      break;
    case Problem::max2sat:
      result = brute_force_max2sat(read_twosat(opt.file));
      break;
    case Problem::clique:
      result = exact_max_clique(read_graph(opt.file));
      witness_is_vertex_list = true;
      vertex_list = result.witness;
      break;
    case Problem::mwis:
      result = brute_force_mwis(read_graph(opt.file));
      witness_is_vertex_list = true;
      for (std::size_t v = 0; v < result.witness.size(); ++v)
        if (result.witness[v]) vertex_list.push_back(static_cast<int>(v));
      break;
  }

  std::cout << "optimal_value " << result.optimal_value << "\n";
  std::cout << "exhaustive " << (result.exhaustive ? "true" : "false") << "\n";
  std::cout << "witness";
  if (witness_is_vertex_list)
    for (int v : vertex_list) std::cout << ' ' << v;
  else
    for (int v : result.witness) std::cout << ' ' << v;
  std::cout << "\n";
  return kExitOk;
}

int run_decompose(const std::string& file, double tol) {
  const QuboMatrix matrix = read_qubo(file);
  const Eigen::MatrixXd padded = pad_to_power_of_two(matrix.entries());
  std::cout << format_observable(pauli_decompose(padded, tol));
  return kExitOk;
}

int run_bench() {
  bool all_pass = true;
  for (const auto& result : bench::run_quality_suite()) {
    std::cout << bench::format_result_line(result) << "\n";
    all_pass = all_pass && result.pass;
  }
  return all_pass ? kExitOk : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Logarithmic-qubit variational solver for cut, partition, "
               "clique, satisfiability, and independent-set problems"};
  app.require_subcommand(1);

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate an instance file");
  gen_cmd->add_option("kind", gen.kind, "gnp or partition")->required();
  gen_cmd->add_option("--nodes,--count", gen.n, "instance size");
  gen_cmd->add_option("--density", gen.density, "edge probability (gnp)");
  gen_cmd->add_option("--seed", gen.seed, "generator seed");
  gen_cmd->add_flag("--node-weights", gen.node_weights,
                    "attach uniform [1,100] node weights (gnp)");
  gen_cmd->add_option("--out", gen.out, "output path")->required();

  SolveOptions solve;
  auto* solve_cmd = app.add_subcommand("solve", "Optimize an instance");
  solve_cmd
      ->add_option("problem", solve.problem,
                   "maxcut|partition|max2sat|clique|mwis")
      ->required();
  solve_cmd->add_option("file", solve.file, "instance file")->required();
  solve_cmd->add_option("--mode", solve.mode,
                        "paper-literal or ground-gadget (clause problems)");
  solve_cmd->add_option("--evaluator", solve.evaluator, "exact or sampled");
  solve_cmd->add_option("--shots", solve.shots, "shots per term (sampled)");
  solve_cmd->add_option("--optimizer", solve.optimizer_kv,
                        "key=value list, e.g. kind=genetic,max_evals=5000");
  solve_cmd->add_option("--optimizer-config", solve.optimizer_file,
                        "file with key=value lines");
  solve_cmd->add_option("--runs", solve.runs, "independent runs");
  solve_cmd->add_option("--seed", solve.seed, "master seed");
  solve_cmd->add_option("--out", solve.out,
                        "write JSON lines here and print a summary");
  solve_cmd->add_flag("--timings", solve.timings,
                      "include wall_time_ms in records");

  OracleOptions oracle;
  auto* oracle_cmd =
      app.add_subcommand("oracle", "Exact (or local-search) baseline");
  oracle_cmd
      ->add_option("problem", oracle.problem,
                   "maxcut|partition|max2sat|clique|mwis")
      ->required();
  oracle_cmd->add_option("file", oracle.file, "instance file")->required();
  oracle_cmd->add_flag("--local-search", oracle.local_search,
                       "1-flip local search instead of enumeration (maxcut)");
  oracle_cmd->add_option("--restarts", oracle.restarts,
                         "local search restarts");
  oracle_cmd->add_option("--seed", oracle.seed, "local search seed");

  std::string decompose_file;
  double decompose_tol = 1e-12;
  auto* decompose_cmd =
      app.add_subcommand("decompose", "Pauli expansion of a matrix file");
  decompose_cmd->add_option("file", decompose_file, "matrix file")->required();
  decompose_cmd->add_option("--tol", decompose_tol,
                            "drop terms with |coeff| <= tol");

  auto* bench_cmd =
      app.add_subcommand("bench", "Run the pinned quality sweeps");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitArgument;
  }

  try {
    if (gen_cmd->parsed()) return run_gen(gen);
    if (solve_cmd->parsed()) return run_solve(solve);
    if (oracle_cmd->parsed()) return run_oracle(oracle);
    if (decompose_cmd->parsed())
      return run_decompose(decompose_file, decompose_tol);
    if (bench_cmd->parsed()) return run_bench();
  } catch (const CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "argument error: " << e.what() << "\n";
    return kExitArgument;
  }
  return kExitOk;
}
