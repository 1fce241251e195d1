#pragma once

#include <cstdint>
#include <vector>

#include "logenc/graph.hpp"
#include "logenc/qubo.hpp"
#include "logenc/reductions.hpp"

namespace logenc {

/// Result of an exact or heuristic baseline. Witness semantics depend on
/// the problem: spins (+1/-1) for cuts, 0/1 flags for subsets and variable
/// assignments, a vertex list for cliques and independent sets.
struct OracleResult {
  double optimal_value = 0.0;
  std::vector<int> witness;
  bool exhaustive = true;
};

/// Exact maximum cut by Gray-code enumeration with incremental updates;
/// vertex 0's side is fixed by spin-flip symmetry. n <= 26.
OracleResult brute_force_maxcut(const WeightedGraph& g);

/// Exact minimum |subset difference|; element 0's side is fixed. n <= 26.
OracleResult brute_force_partition(const PartitionInstance& p);

/// Exact maximum weighted independent set over all subsets. Requires node
/// weights; n <= 26.
OracleResult brute_force_mwis(const WeightedGraph& g);

/// Exact minimum of x^T Q x over binary x, Gray-code enumeration. n <= 26.
OracleResult brute_force_qubo(const QuboMatrix& q);

/// Exact maximum clique size via branch and bound with a greedy-coloring
/// bound. n <= 64.
OracleResult exact_max_clique(const WeightedGraph& g);

/// Exact maximum satisfied clause weight. n_vars <= 22.
OracleResult brute_force_max2sat(const TwoSatInstance& s);

/// Best 1-flip local optimum over seeded random restarts. Never exceeds
/// the true optimum; exhaustive flag is false.
OracleResult local_search_maxcut(const WeightedGraph& g, std::uint64_t seed,
                                 int restarts);

/// Partition quality score (50*N - diff) / (50*N); 1.0 is a perfect split.
double partition_norm(double diff, int count);

/// value / optimal; optimal must be positive.
double percent_of_optimal(double value, double optimal);

}  // namespace logenc
