#include "logenc/graph.hpp"

#include <cmath>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

namespace logenc {

namespace {

void validate(int node_count, const std::vector<Edge>& edges,
              const std::vector<double>& node_weights) {
  if (node_count < 1)
    throw std::invalid_argument("WeightedGraph: node count must be >= 1");
  std::set<std::pair<int, int>> seen;
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v >= node_count || e.u >= e.v)
      throw std::invalid_argument(
          "WeightedGraph: edge endpoints must satisfy 0 <= u < v < n (got " +
          std::to_string(e.u) + "," + std::to_string(e.v) + ")");
    if (!std::isfinite(e.weight))
      throw std::invalid_argument("WeightedGraph: edge weight must be finite");
    if (!seen.insert({e.u, e.v}).second)
      throw std::invalid_argument("WeightedGraph: duplicate edge (" +
                                  std::to_string(e.u) + "," +
                                  std::to_string(e.v) + ")");
  }
  if (!node_weights.empty()) {
    if (static_cast<int>(node_weights.size()) != node_count)
      throw std::invalid_argument(
          "WeightedGraph: node weight count must equal node count");
    for (double w : node_weights)
      if (!std::isfinite(w))
        throw std::invalid_argument(
            "WeightedGraph: node weight must be finite");
  }
}

}  // namespace

WeightedGraph::WeightedGraph(int node_count, std::vector<Edge> edges)
    : WeightedGraph(node_count, std::move(edges), {}) {}

WeightedGraph::WeightedGraph(int node_count, std::vector<Edge> edges,
                             std::vector<double> node_weights)
    : node_count_(node_count),
      edges_(std::move(edges)),
      node_weights_(std::move(node_weights)) {
  validate(node_count_, edges_, node_weights_);
}

std::vector<std::vector<int>> WeightedGraph::adjacency() const {
  std::vector<std::vector<int>> adj(node_count_);
  for (const Edge& e : edges_) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  return adj;
}

SpinAssignment::SpinAssignment(std::vector<int> values)
    : values_(std::move(values)) {
  for (int v : values_)
    if (v != 1 && v != -1)
      throw std::invalid_argument("SpinAssignment: entries must be +1 or -1");
}

BinaryAssignment::BinaryAssignment(std::vector<int> values)
    : values_(std::move(values)) {
  for (int v : values_)
    if (v != 0 && v != 1)
      throw std::invalid_argument("BinaryAssignment: entries must be 0 or 1");
}

LaplacianMatrix build_laplacian(const WeightedGraph& g) {
  const int n = g.node_count();
  Eigen::MatrixXd l = Eigen::MatrixXd::Zero(n, n);
  for (const Edge& e : g.edges()) {
    l(e.u, e.u) += e.weight;
    l(e.v, e.v) += e.weight;
    l(e.u, e.v) -= e.weight;
    l(e.v, e.u) -= e.weight;
  }
  return LaplacianMatrix{std::move(l)};
}

double cut_value(const WeightedGraph& g, const SpinAssignment& x) {
  if (x.size() != static_cast<std::size_t>(g.node_count()))
    throw std::invalid_argument(
        "cut_value: assignment length must equal node count");
  double total = 0.0;
  for (const Edge& e : g.edges())
    if (x[e.u] != x[e.v]) total += e.weight;
  return total;
}

}  // namespace logenc
