#pragma once

#include <Eigen/Dense>
#include <vector>

namespace logenc {

/// Undirected edge with endpoints u < v.
struct Edge {
  int u = 0;
  int v = 0;
  double weight = 1.0;
};

/// Simple undirected graph with real edge weights and optional node
/// weights. Invariants checked at construction: 0 <= u < v < n per edge,
/// no duplicate pairs, finite weights.
class WeightedGraph {
 public:
  WeightedGraph(int node_count, std::vector<Edge> edges);
  WeightedGraph(int node_count, std::vector<Edge> edges,
                std::vector<double> node_weights);

  int node_count() const { return node_count_; }
  const std::vector<Edge>& edges() const { return edges_; }

  bool has_node_weights() const { return !node_weights_.empty(); }
  const std::vector<double>& node_weights() const { return node_weights_; }

  /// Adjacency lists, built on demand.
  std::vector<std::vector<int>> adjacency() const;

 private:
  int node_count_;
  std::vector<Edge> edges_;
  std::vector<double> node_weights_;
};

/// Assignment over {+1, -1}.
class SpinAssignment {
 public:
  explicit SpinAssignment(std::vector<int> values);

  std::size_t size() const { return values_.size(); }
  int operator[](std::size_t i) const { return values_[i]; }
  const std::vector<int>& values() const { return values_; }

 private:
  std::vector<int> values_;
};

/// Assignment over {0, 1}.
class BinaryAssignment {
 public:
  explicit BinaryAssignment(std::vector<int> values);

  std::size_t size() const { return values_.size(); }
  int operator[](std::size_t i) const { return values_[i]; }
  const std::vector<int>& values() const { return values_; }

 private:
  std::vector<int> values_;
};

/// Dense graph Laplacian: weighted degree on the diagonal, -w_ij off it.
struct LaplacianMatrix {
  Eigen::MatrixXd entries;

  int dim() const { return static_cast<int>(entries.rows()); }
};

LaplacianMatrix build_laplacian(const WeightedGraph& g);

/// Total weight of edges whose endpoints carry opposite signs. Equals
/// x^T L x / 4.
double cut_value(const WeightedGraph& g, const SpinAssignment& x);

}  // namespace logenc
