#pragma once

#include <string>

#include "logenc/encoder.hpp"
#include "logenc/graph.hpp"
#include "logenc/qubo.hpp"
#include "logenc/reductions.hpp"

namespace logenc {

// Text formats:
//   graph:      "n m" then m lines "u v w" (0-based ids, decimal weight);
//               an optional trailing block of n lines "i w_i" adds node
//               weights
//   partition:  one positive integer per line
//   qubo:       "n" then n rows of n whitespace-separated decimals
//    2-sat:     "n m" then m lines "w lit_a lit_b", signed 1-based literals

WeightedGraph read_graph(const std::string& path);
PartitionInstance read_partition(const std::string& path);
QuboMatrix read_qubo(const std::string& path);
TwoSatInstance read_twosat(const std::string& path);

void write_graph(const std::string& path, const WeightedGraph& g);
void write_partition(const std::string& path, const PartitionInstance& p);
void write_qubo(const std::string& path, const QuboMatrix& q);
void write_twosat(const std::string& path, const TwoSatInstance& s);

/// Observable dump: one line "COEFF WORD" per term, sorted by descending
/// |coeff|, ties by lexicographic word.
std::string format_observable(const PauliObservable& obs);

}  // namespace logenc
