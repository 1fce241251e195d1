#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <set>

#include "logenc/encoder.hpp"
#include "logenc/errors.hpp"
#include "logenc/harness.hpp"
#include "logenc/linalg.hpp"
#include "logenc/oracles.hpp"
#include "logenc/rng.hpp"

using namespace logenc;

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

WeightedGraph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.push_back({i, j, 1.0});
  return WeightedGraph(n, std::move(edges));
}

/// Plain subset scan, the slow cross-check for the branch-and-bound search.
int max_clique_by_subsets(const WeightedGraph& g) {
  std::set<std::pair<int, int>> present;
  for (const Edge& e : g.edges()) present.insert({e.u, e.v});
  const int n = g.node_count();
  int best = 0;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    std::vector<int> vertices;
    for (int v = 0; v < n; ++v)
      if (mask & (std::uint32_t{1} << v)) vertices.push_back(v);
    bool clique = true;
    for (std::size_t i = 0; i < vertices.size() && clique; ++i)
      for (std::size_t j = i + 1; j < vertices.size() && clique; ++j)
        if (!present.count({vertices[i], vertices[j]})) clique = false;
    if (clique) best = std::max(best, static_cast<int>(vertices.size()));
  }
  return best;
}

}  // namespace

TEST_CASE("brute_force_maxcut on tiny graphs") {
  CHECK(brute_force_maxcut(complete_graph(3)).optimal_value == 2.0);
  CHECK(brute_force_maxcut(complete_graph(4)).optimal_value == 4.0);
  CHECK(brute_force_maxcut(WeightedGraph(2, {{0, 1, 7.0}})).optimal_value ==
        7.0);
  CHECK(brute_force_maxcut(WeightedGraph(1, {})).optimal_value == 0.0);

  const OracleResult r = brute_force_maxcut(complete_graph(4));
  CHECK(r.exhaustive);
  CHECK(cut_value(complete_graph(4), SpinAssignment(r.witness)) ==
        r.optimal_value);
}

TEST_CASE("brute_force_maxcut rejects oversized instances") {
  CHECK_THROWS_AS(brute_force_maxcut(WeightedGraph(27, {})), CapacityError);
}

TEST_CASE("brute_force_partition") {
  CHECK(brute_force_partition(PartitionInstance({1, 2, 3})).optimal_value ==
        0.0);
  CHECK(brute_force_partition(PartitionInstance({5, 5})).optimal_value == 0.0);
  CHECK(brute_force_partition(PartitionInstance({1, 1, 1})).optimal_value ==
        1.0);
  CHECK_THROWS_AS(
      brute_force_partition(PartitionInstance(std::vector<long long>(27, 1))),
      CapacityError);

  const PartitionInstance p({9, 4, 14, 7, 3});
  const OracleResult r = brute_force_partition(p);
  long long side_a = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (r.witness[i]) side_a += p.weights()[i];
  CHECK(std::abs(p.total() - 2 * side_a) == r.optimal_value);
}

TEST_CASE("brute_force_mwis") {
  const WeightedGraph edge(2, {{0, 1, 1.0}}, {1.0, 1.0});
  CHECK(brute_force_mwis(edge).optimal_value == 1.0);

  const WeightedGraph path(3, {{0, 1, 1.0}, {1, 2, 1.0}}, {1.0, 5.0, 1.0});
  CHECK(brute_force_mwis(path).optimal_value == 5.0);

  const WeightedGraph isolated(2, {}, {2.0, 3.0});
  CHECK(brute_force_mwis(isolated).optimal_value == 5.0);

  CHECK_THROWS_AS(brute_force_mwis(WeightedGraph(2, {{0, 1, 1.0}})),
                  std::invalid_argument);
}

TEST_CASE("brute_force_qubo finds the binary minimum") {
  Eigen::MatrixXd m(2, 2);
  m << -1.0, 1.5, 1.5, -1.0;
  const QuboMatrix q(m);
  const OracleResult r = brute_force_qubo(q);
  CHECK(r.optimal_value == -1.0);

  SplitMix64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 8);
    Eigen::MatrixXd a(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j)
        a(i, j) = a(j, i) = uniform01(rng) * 4.0 - 2.0;
    const QuboMatrix random_q(a);
    double slow = 0.0;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
      std::vector<int> bits(n);
      for (int v = 0; v < n; ++v) bits[v] = (mask >> v) & 1;
      slow = std::min(slow, qubo_value(random_q, BinaryAssignment(bits)));
    }
    CHECK(brute_force_qubo(random_q).optimal_value ==
          doctest::Approx(slow).epsilon(1e-12));
  }
}

TEST_CASE("exact_max_clique on reference graphs") {
  CHECK(exact_max_clique(complete_graph(5)).optimal_value == 5.0);

  const WeightedGraph c5(
      5, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 4, 1}, {0, 4, 1}});
  CHECK(exact_max_clique(c5).optimal_value == 2.0);

  const WeightedGraph two_triangles(
      6, {{0, 1, 1}, {0, 2, 1}, {1, 2, 1}, {3, 4, 1}, {3, 5, 1}, {4, 5, 1}});
  const OracleResult r = exact_max_clique(two_triangles);
  CHECK(r.optimal_value == 3.0);
  CHECK(r.witness.size() == 3);
}

TEST_CASE("exact_max_clique matches subset enumeration") {
  SplitMix64 rng(19);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 9);
    const WeightedGraph g = gen_gnp(n, 0.3 + 0.5 * uniform01(rng), rng());
    CHECK(exact_max_clique(g).optimal_value == max_clique_by_subsets(g));
  }
}

TEST_CASE("brute_force_max2sat") {
  CHECK(brute_force_max2sat(TwoSatInstance(2, {{1, 2, 1.0}})).optimal_value ==
        1.0);
  CHECK(brute_force_max2sat(TwoSatInstance(1, {{1, 1, 1.0}, {-1, -1, 1.0}}))
            .optimal_value == 1.0);
  CHECK(brute_force_max2sat(TwoSatInstance(3, {})).optimal_value == 0.0);
  CHECK_THROWS_AS(brute_force_max2sat(TwoSatInstance(23, {})), CapacityError);

  const TwoSatInstance s(3, {{1, -2, 2.0}, {2, 3, 1.5}, {-1, -3, 1.0}});
  const OracleResult r = brute_force_max2sat(s);
  CHECK(s.satisfied_weight(r.witness) == r.optimal_value);
}

TEST_CASE("local search never beats brute force and is 1-flip stable") {
  SplitMix64 rng(29);
  for (int trial = 0; trial < 15; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 14);
    const WeightedGraph g = gen_gnp(n, 0.5, rng());
    const OracleResult local = local_search_maxcut(g, trial, 5);
    const OracleResult exact = brute_force_maxcut(g);
    CHECK_FALSE(local.exhaustive);
    CHECK(local.optimal_value <= exact.optimal_value + 1e-9);

    // No single flip may improve the returned witness.
    std::vector<int> spins = local.witness;
    const double base = cut_value(g, SpinAssignment(spins));
    for (int v = 0; v < n; ++v) {
      spins[v] = -spins[v];
      CHECK(cut_value(g, SpinAssignment(spins)) <= base + 1e-9);
      spins[v] = -spins[v];
    }
  }
  CHECK(local_search_maxcut(complete_graph(3), 1, 10).optimal_value == 2.0);
}

TEST_CASE("theta grid corners reach the brute-force maxcut optimum") {
  SplitMix64 rng(37);
  for (int trial = 0; trial < 5; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 8);
    const WeightedGraph g = gen_gnp(n, 0.6, rng());
    const Eigen::MatrixXd padded =
        pad_to_power_of_two(build_laplacian(g).entries);
    double best = 0.0;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
      std::vector<double> angles(n);
      for (int v = 0; v < n; ++v) angles[v] = (mask >> v) & 1 ? kPi : 0.0;
      best = std::max(best, -cost_maxcut(ParamVector(angles), padded));
    }
    CHECK(best == doctest::Approx(brute_force_maxcut(g).optimal_value));
  }
}

TEST_CASE("partition_norm is affine and order-reversing") {
  CHECK(partition_norm(32.0, 32) == doctest::Approx(0.98));
  CHECK(partition_norm(0.0, 7) == 1.0);
  CHECK(partition_norm(50.0 * 12, 12) == 0.0);
  CHECK(partition_norm(10.0, 4) > partition_norm(20.0, 4));
  CHECK_THROWS_AS(partition_norm(-1.0, 4), std::invalid_argument);
  CHECK_THROWS_AS(partition_norm(1.0, 0), std::invalid_argument);
}

TEST_CASE("percent_of_optimal") {
  CHECK(percent_of_optimal(343.9, 383.0) == doctest::Approx(0.898).epsilon(1e-3));
  CHECK(percent_of_optimal(5.0, 5.0) == 1.0);
  CHECK(percent_of_optimal(0.0, 3.0) == 0.0);
  CHECK_THROWS_AS(percent_of_optimal(1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(percent_of_optimal(1.0, -2.0), std::invalid_argument);
}
