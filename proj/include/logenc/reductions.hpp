#pragma once

#include <vector>

#include "logenc/graph.hpp"
#include "logenc/qubo.hpp"

namespace logenc {

/// Number-partitioning instance: positive integers to split into two
/// subsets of near-equal sum.
class PartitionInstance {
 public:
  explicit PartitionInstance(std::vector<long long> weights);

  std::size_t size() const { return weights_.size(); }
  const std::vector<long long>& weights() const { return weights_; }
  long long total() const;

 private:
  std::vector<long long> weights_;
};

/// Two-literal clause with DIMACS-style signed 1-based literals.
struct Clause {
  int lit_a = 0;
  int lit_b = 0;
  double weight = 1.0;
};

/// Weighted Max-2-SAT instance.
class TwoSatInstance {
 public:
  TwoSatInstance(int n_vars, std::vector<Clause> clauses);

  int n_vars() const { return n_vars_; }
  const std::vector<Clause>& clauses() const { return clauses_; }

  /// Total weight of clauses satisfied by `assignment` (one 0/1 per
  /// variable).
  double satisfied_weight(const std::vector<int>& assignment) const;

 private:
  int n_vars_;
  std::vector<Clause> clauses_;
};

/// How Max-2-SAT clauses are laid onto the cut graph.
///   paper_literal: one edge per clause between the two literal nodes
///     (scores a clause exactly when one literal is true).
///   ground_gadget: an extra ground node, half the clause weight on each of
///     the two literal-to-ground edges and on the literal pair (scores a
///     clause exactly when it is satisfied).
enum class Max2SatMode { paper_literal, ground_gadget };

struct PartitionDecode {
  std::vector<int> side;  // 0/1 subset membership per number
  long long difference = 0;
};

/// Partition -> MaxCut: complete graph, edge (i,j) weighted w_i * w_j.
/// For every spin vector, difference^2 + 4 * cut == total^2.
class PartitionMaxcutReduction {
 public:
  PartitionMaxcutReduction(WeightedGraph graph, std::vector<long long> weights);

  const WeightedGraph& graph() const { return graph_; }
  PartitionDecode decode(const SpinAssignment& x) const;

 private:
  WeightedGraph graph_;
  std::vector<long long> weights_;
};

PartitionMaxcutReduction partition_to_maxcut(const PartitionInstance& p);

struct TwoSatDecode {
  std::vector<int> assignment;  // 0/1 per variable
  double satisfied_weight = 0.0;
};

/// Max-2-SAT -> MaxCut. Nodes 0..n-1 are the positive literals, n..2n-1
/// the negated ones; in gadget mode node 2n is the ground. Each
/// variable/complement pair is tied by a consistency edge of weight
/// total clause weight + 1.
class Max2SatMaxcutReduction {
 public:
  Max2SatMaxcutReduction(WeightedGraph graph, TwoSatInstance source,
                         Max2SatMode mode, double consistency_weight);

  const WeightedGraph& graph() const { return graph_; }
  Max2SatMode mode() const { return mode_; }
  double consistency_weight() const { return consistency_weight_; }
  /// Ground node index (gadget mode only).
  int ground_node() const;

  TwoSatDecode decode(const SpinAssignment& x) const;

 private:
  WeightedGraph graph_;
  TwoSatInstance source_;
  Max2SatMode mode_;
  double consistency_weight_;
};

Max2SatMaxcutReduction max2sat_to_maxcut(
    const TwoSatInstance& s, Max2SatMode mode = Max2SatMode::ground_gadget);

struct CliqueDecode {
  std::vector<int> vertices;  // a verified clique of the source graph
  int size = 0;
};

/// Clique -> Max-2-SAT: one variable per vertex plus an auxiliary z.
/// Per vertex, clauses (x_i or z) and (x_i or not z) of weight 1 reward
/// selection; per non-edge, (not x_i or not x_j) with a dominating weight
/// forbids selecting non-adjacent pairs.
class CliqueMax2SatReduction {
 public:
  CliqueMax2SatReduction(TwoSatInstance target, WeightedGraph source);

  const TwoSatInstance& instance() const { return target_; }
  CliqueDecode decode(const std::vector<int>& assignment) const;

 private:
  TwoSatInstance target_;
  WeightedGraph source_;
};

CliqueMax2SatReduction clique_to_max2sat(const WeightedGraph& g);

/// Composition clique -> Max-2-SAT -> MaxCut.
class CliqueMaxcutReduction {
 public:
  CliqueMaxcutReduction(Max2SatMaxcutReduction cut_step,
                        CliqueMax2SatReduction sat_step);

  const WeightedGraph& graph() const { return cut_step_.graph(); }
  CliqueDecode decode(const SpinAssignment& x) const;

 private:
  Max2SatMaxcutReduction cut_step_;
  CliqueMax2SatReduction sat_step_;
};

CliqueMaxcutReduction clique_to_maxcut(
    const WeightedGraph& g, Max2SatMode mode = Max2SatMode::ground_gadget);

struct MwisDecode {
  std::vector<int> vertices;  // a verified independent set
  double weight = 0.0;
};

/// MWIS -> QUBO: Q_ii = -w_i, Q_ij = penalty/2 on edges. The decoder
/// repairs violated edges by dropping the lower-weight endpoint
/// (tie: lower index).
class MwisQuboReduction {
 public:
  MwisQuboReduction(QuboMatrix target, WeightedGraph source, double penalty);

  const QuboMatrix& qubo() const { return target_; }
  double penalty() const { return penalty_; }
  MwisDecode decode(const BinaryAssignment& x) const;

 private:
  QuboMatrix target_;
  WeightedGraph source_;
  double penalty_;
};

/// Requires node weights on g and penalty > max node weight.
MwisQuboReduction mwis_to_qubo(const WeightedGraph& g, double penalty);

/// Default penalty 2 * max node weight.
MwisQuboReduction mwis_to_qubo(const WeightedGraph& g);

/// Shrink a vertex set to a clique: while the induced subgraph is not
/// complete, drop the vertex of minimum induced degree (tie: lowest index).
std::vector<int> repair_clique(const WeightedGraph& g,
                               const std::vector<int>& candidate);

}  // namespace logenc
