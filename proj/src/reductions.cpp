#include "logenc/reductions.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

namespace logenc {

PartitionInstance::PartitionInstance(std::vector<long long> weights)
    : weights_(std::move(weights)) {
  if (weights_.empty())
    throw std::invalid_argument("PartitionInstance: needs at least one number");
  for (long long w : weights_)
    if (w < 1)
      throw std::invalid_argument("PartitionInstance: weights must be >= 1");
}

long long PartitionInstance::total() const {
  long long sum = 0;
  for (long long w : weights_) sum += w;
  return sum;
}

TwoSatInstance::TwoSatInstance(int n_vars, std::vector<Clause> clauses)
    : n_vars_(n_vars), clauses_(std::move(clauses)) {
  if (n_vars_ < 1)
    throw std::invalid_argument("TwoSatInstance: needs at least one variable");
  for (const Clause& c : clauses_) {
    for (int lit : {c.lit_a, c.lit_b})
      if (lit == 0 || std::abs(lit) > n_vars_)
        throw std::invalid_argument("TwoSatInstance: literal " +
                                    std::to_string(lit) +
                                    " references no variable");
    if (!(c.weight > 0.0) || !std::isfinite(c.weight))
      throw std::invalid_argument("TwoSatInstance: clause weights must be > 0");
  }
}

double TwoSatInstance::satisfied_weight(
    const std::vector<int>& assignment) const {
  if (static_cast<int>(assignment.size()) != n_vars_)
    throw std::invalid_argument(
        "satisfied_weight: assignment length must equal variable count");
  auto lit_true = [&](int lit) {
    const int value = assignment[static_cast<std::size_t>(std::abs(lit)) - 1];
    return lit > 0 ? value != 0 : value == 0;
  };
  double total = 0.0;
  for (const Clause& c : clauses_)
    if (lit_true(c.lit_a) || lit_true(c.lit_b)) total += c.weight;
  return total;
}

PartitionMaxcutReduction::PartitionMaxcutReduction(
    WeightedGraph graph, std::vector<long long> weights)
    : graph_(std::move(graph)), weights_(std::move(weights)) {}

PartitionDecode PartitionMaxcutReduction::decode(
    const SpinAssignment& x) const {
  if (x.size() != weights_.size())
    throw std::invalid_argument(
        "partition decode: assignment length must equal number count");
  long long total = 0;
  long long side_a = 0;
  std::vector<int> side(weights_.size(), 0);
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    total += weights_[i];
    if (x[i] == 1) {
      side[i] = 1;
      side_a += weights_[i];
    }
  }
  return PartitionDecode{std::move(side), std::llabs(total - 2 * side_a)};
}

PartitionMaxcutReduction partition_to_maxcut(const PartitionInstance& p) {
  const int n = static_cast<int>(p.size());
  if (n < 2)
    throw std::invalid_argument(
        "partition_to_maxcut: needs at least two numbers");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      edges.push_back(
          {i, j, static_cast<double>(p.weights()[i] * p.weights()[j])});
  return PartitionMaxcutReduction(WeightedGraph(n, std::move(edges)),
                                  p.weights());
}

namespace {

int literal_node(int lit, int n_vars) {
  return lit > 0 ? lit - 1 : n_vars + (-lit) - 1;
}

WeightedGraph graph_from_weight_map(
    int node_count, const std::map<std::pair<int, int>, double>& weights) {
  std::vector<Edge> edges;
  edges.reserve(weights.size());
  for (const auto& [pair, w] : weights)
    edges.push_back({pair.first, pair.second, w});
  return WeightedGraph(node_count, std::move(edges));
}

void add_weight(std::map<std::pair<int, int>, double>& weights, int a, int b,
                double w) {
  if (a > b) std::swap(a, b);
  weights[{a, b}] += w;
}

}  // namespace

Max2SatMaxcutReduction::Max2SatMaxcutReduction(WeightedGraph graph,
                                               TwoSatInstance source,
                                               Max2SatMode mode,
                                               double consistency_weight)
    : graph_(std::move(graph)),
      source_(std::move(source)),
      mode_(mode),
      consistency_weight_(consistency_weight) {}

int Max2SatMaxcutReduction::ground_node() const {
  if (mode_ != Max2SatMode::ground_gadget)
    throw std::invalid_argument("ground_node: only the gadget mode has one");
  return 2 * source_.n_vars();
}

TwoSatDecode Max2SatMaxcutReduction::decode(const SpinAssignment& x) const {
  if (x.size() != static_cast<std::size_t>(graph_.node_count()))
    throw std::invalid_argument(
        "max2sat decode: assignment length must equal node count");
  const int n = source_.n_vars();
  if (mode_ == Max2SatMode::ground_gadget) {
    // A literal is true when its node sits opposite the ground node.
    const int ground_side = x[static_cast<std::size_t>(2 * n)];
    std::vector<int> assignment(n);
    for (int v = 0; v < n; ++v)
      assignment[v] = x[static_cast<std::size_t>(v)] != ground_side ? 1 : 0;
    const double weight = source_.satisfied_weight(assignment);
    return TwoSatDecode{std::move(assignment), weight};
  }
  // Without a ground there is no canonical "true" side; score both.
  std::vector<int> as_plus(n), as_minus(n);
  for (int v = 0; v < n; ++v) {
    as_plus[v] = x[static_cast<std::size_t>(v)] == 1 ? 1 : 0;
    as_minus[v] = 1 - as_plus[v];
  }
  const double w_plus = source_.satisfied_weight(as_plus);
  const double w_minus = source_.satisfied_weight(as_minus);
  if (w_minus > w_plus) return TwoSatDecode{std::move(as_minus), w_minus};
  return TwoSatDecode{std::move(as_plus), w_plus};
}

Max2SatMaxcutReduction max2sat_to_maxcut(const TwoSatInstance& s,
                                         Max2SatMode mode) {
  const int n = s.n_vars();
  double clause_total = 0.0;
  for (const Clause& c : s.clauses()) clause_total += c.weight;
  const double w_big = clause_total + 1.0;

  std::map<std::pair<int, int>, double> weights;
  for (int v = 0; v < n; ++v) add_weight(weights, v, n + v, w_big);

  const int node_count =
      mode == Max2SatMode::ground_gadget ? 2 * n + 1 : 2 * n;
  const int ground = 2 * n;
  for (const Clause& c : s.clauses()) {
    const int a = literal_node(c.lit_a, n);
    const int b = literal_node(c.lit_b, n);
    if (mode == Max2SatMode::ground_gadget) {
      if (a == b) {
        // Repeated literal: (l or l) is just l, worth w when l is true.
        add_weight(weights, a, ground, c.weight);
      } else {
        add_weight(weights, a, ground, 0.5 * c.weight);
        add_weight(weights, b, ground, 0.5 * c.weight);
        add_weight(weights, a, b, 0.5 * c.weight);
      }
    } else {
      // Verbatim construction: one edge per clause. A repeated literal
      // names a single node, so there is no edge to add.
      if (a != b) add_weight(weights, a, b, c.weight);
    }
  }
  return Max2SatMaxcutReduction(graph_from_weight_map(node_count, weights), s,
                                mode, w_big);
}

CliqueMax2SatReduction::CliqueMax2SatReduction(TwoSatInstance target,
                                               WeightedGraph source)
    : target_(std::move(target)), source_(std::move(source)) {}

CliqueDecode CliqueMax2SatReduction::decode(
    const std::vector<int>& assignment) const {
  if (static_cast<int>(assignment.size()) != target_.n_vars())
    throw std::invalid_argument(
        "clique decode: assignment length must equal variable count");
  std::vector<int> candidate;
  for (int v = 0; v < source_.node_count(); ++v)
    if (assignment[static_cast<std::size_t>(v)]) candidate.push_back(v);
  std::vector<int> clique = repair_clique(source_, candidate);
  const int size = static_cast<int>(clique.size());
  return CliqueDecode{std::move(clique), size};
}

CliqueMax2SatReduction clique_to_max2sat(const WeightedGraph& g) {
  const int n = g.node_count();
  const double type_b_weight = 2.0 * (n + 1) + 1.0;
  const int z = n + 1;  // auxiliary variable, 1-based

  std::set<std::pair<int, int>> present;
  for (const Edge& e : g.edges()) present.insert({e.u, e.v});

  std::vector<Clause> clauses;
  for (int v = 0; v < n; ++v) {
    clauses.push_back({v + 1, z, 1.0});
    clauses.push_back({v + 1, -z, 1.0});
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!present.count({i, j}))
        clauses.push_back({-(i + 1), -(j + 1), type_b_weight});

  return CliqueMax2SatReduction(TwoSatInstance(n + 1, std::move(clauses)), g);
}

CliqueMaxcutReduction::CliqueMaxcutReduction(Max2SatMaxcutReduction cut_step,
                                             CliqueMax2SatReduction sat_step)
    : cut_step_(std::move(cut_step)), sat_step_(std::move(sat_step)) {}

CliqueDecode CliqueMaxcutReduction::decode(const SpinAssignment& x) const {
  if (x.size() != static_cast<std::size_t>(cut_step_.graph().node_count()))
    throw std::invalid_argument(
        "clique decode: assignment length must equal node count");
  const int n_vars = sat_step_.instance().n_vars();
  if (cut_step_.mode() == Max2SatMode::ground_gadget)
    return sat_step_.decode(cut_step_.decode(x).assignment);

  // Literal mode has no ground: read variables off both sides and keep
  // the larger repaired clique.
  std::vector<int> as_plus(n_vars), as_minus(n_vars);
  for (int v = 0; v < n_vars; ++v) {
    as_plus[v] = x[static_cast<std::size_t>(v)] == 1 ? 1 : 0;
    as_minus[v] = 1 - as_plus[v];
  }
  CliqueDecode plus = sat_step_.decode(as_plus);
  CliqueDecode minus = sat_step_.decode(as_minus);
  return plus.size >= minus.size ? plus : minus;
}

CliqueMaxcutReduction clique_to_maxcut(const WeightedGraph& g,
                                       Max2SatMode mode) {
  CliqueMax2SatReduction sat_step = clique_to_max2sat(g);
  Max2SatMaxcutReduction cut_step = max2sat_to_maxcut(sat_step.instance(), mode);
  return CliqueMaxcutReduction(std::move(cut_step), std::move(sat_step));
}

MwisQuboReduction::MwisQuboReduction(QuboMatrix target, WeightedGraph source,
                                     double penalty)
    : target_(std::move(target)),
      source_(std::move(source)),
      penalty_(penalty) {}

MwisDecode MwisQuboReduction::decode(const BinaryAssignment& x) const {
  if (x.size() != static_cast<std::size_t>(source_.node_count()))
    throw std::invalid_argument(
        "mwis decode: assignment length must equal node count");
  const auto& w = source_.node_weights();
  std::vector<char> selected(x.size());
  for (std::size_t v = 0; v < x.size(); ++v) selected[v] = x[v] ? 1 : 0;

  // Drop the lower-weight endpoint of violated edges until independent.
  for (bool changed = true; changed;) {
    changed = false;
    for (const Edge& e : source_.edges()) {
      if (!selected[e.u] || !selected[e.v]) continue;
      const int drop = w[e.u] <= w[e.v] ? e.u : e.v;
      selected[drop] = 0;
      changed = true;
    }
  }
  std::vector<int> vertices;
  double weight = 0.0;
  for (int v = 0; v < source_.node_count(); ++v)
    if (selected[v]) {
      vertices.push_back(v);
      weight += w[v];
    }
  return MwisDecode{std::move(vertices), weight};
}

MwisQuboReduction mwis_to_qubo(const WeightedGraph& g, double penalty) {
  const int n = g.node_count();
  if (!g.has_node_weights())
    throw std::invalid_argument("mwis_to_qubo: node weights required");
  double max_weight = 0.0;
  for (double w : g.node_weights()) {
    if (w < 0.0)
      throw std::invalid_argument("mwis_to_qubo: node weights must be >= 0");
    max_weight = std::max(max_weight, w);
  }
  if (!(penalty > max_weight))
    throw std::invalid_argument(
        "mwis_to_qubo: penalty must exceed the largest node weight");

  Eigen::MatrixXd q = Eigen::MatrixXd::Zero(n, n);
  for (int v = 0; v < n; ++v) q(v, v) = -g.node_weights()[v];
  for (const Edge& e : g.edges()) {
    q(e.u, e.v) = 0.5 * penalty;
    q(e.v, e.u) = 0.5 * penalty;
  }
  return MwisQuboReduction(QuboMatrix(q), g, penalty);
}

MwisQuboReduction mwis_to_qubo(const WeightedGraph& g) {
  if (!g.has_node_weights())
    throw std::invalid_argument("mwis_to_qubo: node weights required");
  double max_weight = 0.0;
  for (double w : g.node_weights()) max_weight = std::max(max_weight, w);
  return mwis_to_qubo(g, 2.0 * std::max(max_weight, 0.5));
}

std::vector<int> repair_clique(const WeightedGraph& g,
                               const std::vector<int>& candidate) {
  std::set<int> unique;
  for (int v : candidate) {
    if (v < 0 || v >= g.node_count())
      throw std::invalid_argument("repair_clique: vertex out of range");
    if (!unique.insert(v).second)
      throw std::invalid_argument("repair_clique: duplicate vertex");
  }

  std::set<std::pair<int, int>> present;
  for (const Edge& e : g.edges()) present.insert({e.u, e.v});
  auto adjacent = [&](int a, int b) {
    return present.count({std::min(a, b), std::max(a, b)}) > 0;
  };

  std::vector<int> kept(unique.begin(), unique.end());
  for (;;) {
    const int k = static_cast<int>(kept.size());
    std::vector<int> degree(k, 0);
    bool complete = true;
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j)
        if (adjacent(kept[i], kept[j])) {
          ++degree[i];
          ++degree[j];
        } else {
          complete = false;
        }
    if (complete) break;
    int drop = 0;
    for (int i = 1; i < k; ++i)
      if (degree[i] < degree[drop]) drop = i;  // tie keeps the lowest index
    kept.erase(kept.begin() + drop);
  }
  return kept;
}

}  // namespace logenc
