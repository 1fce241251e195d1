#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <map>
#include <set>

#include "logenc/harness.hpp"
#include "logenc/oracles.hpp"
#include "logenc/reductions.hpp"
#include "logenc/rng.hpp"

using namespace logenc;

namespace {

std::map<std::pair<int, int>, double> edge_map(const WeightedGraph& g) {
  std::map<std::pair<int, int>, double> out;
  for (const Edge& e : g.edges()) out[{e.u, e.v}] = e.weight;
  return out;
}

SpinAssignment spins_from_mask(std::uint32_t mask, int n) {
  std::vector<int> values(n);
  for (int v = 0; v < n; ++v) values[v] = mask & (std::uint32_t{1} << v) ? -1 : 1;
  return SpinAssignment(std::move(values));
}

bool is_clique(const WeightedGraph& g, const std::vector<int>& vertices) {
  std::set<std::pair<int, int>> present;
  for (const Edge& e : g.edges()) present.insert({e.u, e.v});
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      const int a = std::min(vertices[i], vertices[j]);
      const int b = std::max(vertices[i], vertices[j]);
      if (!present.count({a, b})) return false;
    }
  return true;
}

TwoSatInstance random_twosat(int n_vars, int n_clauses, SplitMix64& rng) {
  std::vector<Clause> clauses;
  for (int c = 0; c < n_clauses; ++c) {
    const int a = static_cast<int>(uniform_int(rng, 1, n_vars));
    const int b = static_cast<int>(uniform_int(rng, 1, n_vars));
    clauses.push_back({rng() & 1 ? a : -a, rng() & 1 ? b : -b,
                       static_cast<double>(uniform_int(rng, 1, 5))});
  }
  return TwoSatInstance(n_vars, std::move(clauses));
}

}  // namespace

TEST_CASE("instance validation") {
  CHECK_THROWS_AS(PartitionInstance({1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(TwoSatInstance(2, {{0, 1, 1.0}}), std::invalid_argument);
  CHECK_THROWS_AS(TwoSatInstance(2, {{3, 1, 1.0}}), std::invalid_argument);
  CHECK_THROWS_AS(TwoSatInstance(2, {{1, 2, 0.0}}), std::invalid_argument);
}

TEST_CASE("partition_to_maxcut builds the product-weight complete graph") {
  const auto reduction = partition_to_maxcut(PartitionInstance({1, 2, 3}));
  const auto edges = edge_map(reduction.graph());
  CHECK(edges.size() == 3);
  CHECK(edges.at({0, 1}) == 2.0);
  CHECK(edges.at({0, 2}) == 3.0);
  CHECK(edges.at({1, 2}) == 6.0);

  CHECK(reduction.decode(SpinAssignment({1, 1, -1})).difference == 0);

  const auto pair = partition_to_maxcut(PartitionInstance({5, 5}));
  CHECK(edge_map(pair.graph()).at({0, 1}) == 25.0);
  CHECK(pair.decode(SpinAssignment({1, -1})).difference == 0);
  CHECK(pair.decode(SpinAssignment({1, 1})).difference == 10);

  CHECK_THROWS_AS(partition_to_maxcut(PartitionInstance({4})),
                  std::invalid_argument);
}

TEST_CASE("partition identity diff^2 + 4*cut == total^2") {
  SplitMix64 rng(101);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 11);
    const PartitionInstance p = gen_partition(n, rng());
    const auto reduction = partition_to_maxcut(p);
    const long long total = p.total();
    for (int rep = 0; rep < 8; ++rep) {
      const SpinAssignment x =
          spins_from_mask(static_cast<std::uint32_t>(rng()), n);
      const long long diff = reduction.decode(x).difference;
      const long long cut =
          static_cast<long long>(cut_value(reduction.graph(), x));
      CHECK(diff * diff + 4 * cut == total * total);
    }
  }
}

TEST_CASE("ground gadget: cut minus consistency equals satisfied weight") {
  SplitMix64 rng(103);
  for (int trial = 0; trial < 40; ++trial) {
    const int n_vars = 1 + static_cast<int>(rng() % 6);
    const int n_clauses = static_cast<int>(rng() % 9);
    const TwoSatInstance s = random_twosat(n_vars, n_clauses, rng);
    const auto reduction = max2sat_to_maxcut(s, Max2SatMode::ground_gadget);
    const WeightedGraph& g = reduction.graph();
    REQUIRE(g.node_count() == 2 * n_vars + 1);

    // Every consistent labeling: ground fixed, complements opposed.
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n_vars); ++mask) {
      std::vector<int> spins(2 * n_vars + 1, 1);
      spins[2 * n_vars] = -1;  // ground
      for (int v = 0; v < n_vars; ++v) {
        const int spin = mask & (std::uint32_t{1} << v) ? -1 : 1;
        spins[v] = spin;
        spins[n_vars + v] = -spin;
      }
      const SpinAssignment x(spins);
      const double cut = cut_value(g, x);
      const double satisfied = reduction.decode(x).satisfied_weight;
      CHECK(cut - reduction.consistency_weight() * n_vars ==
            doctest::Approx(satisfied).epsilon(1e-12));

      std::vector<int> direct(n_vars);
      for (int v = 0; v < n_vars; ++v) direct[v] = spins[v] == 1 ? 1 : 0;
      CHECK(satisfied == s.satisfied_weight(direct));
    }
  }
}

TEST_CASE("single clause gadget has a 5-node graph with optimal cut 5") {
  // Clause (x1 or x2) of weight 1 with consistency weight 2 means the best
  // consistent labeling cuts 2*2 + 1.
  const TwoSatInstance s(2, {{1, 2, 1.0}});
  const auto reduction = max2sat_to_maxcut(s, Max2SatMode::ground_gadget);
  CHECK(reduction.graph().node_count() == 5);

  const OracleResult best = brute_force_maxcut(reduction.graph());
  const double w_big = reduction.consistency_weight();
  CHECK(best.optimal_value == doctest::Approx(2.0 * w_big + 1.0));
  CHECK(reduction.decode(SpinAssignment(best.witness)).satisfied_weight == 1.0);
}

TEST_CASE("tautological clause is always satisfied") {
  const TwoSatInstance s(1, {{1, -1, 3.0}});
  for (auto mode : {Max2SatMode::paper_literal, Max2SatMode::ground_gadget}) {
    const auto reduction = max2sat_to_maxcut(s, mode);
    const int nodes = reduction.graph().node_count();
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << nodes); ++mask) {
      const auto decoded = reduction.decode(spins_from_mask(mask, nodes));
      CHECK(decoded.satisfied_weight == 3.0);
    }
  }
}

TEST_CASE("empty clause list leaves only consistency edges") {
  const TwoSatInstance s(3, {});
  const auto reduction = max2sat_to_maxcut(s, Max2SatMode::ground_gadget);
  CHECK(reduction.graph().edges().size() == 3);
  for (const Edge& e : reduction.graph().edges())
    CHECK(e.weight == reduction.consistency_weight());
  const auto decoded =
      reduction.decode(spins_from_mask(0, reduction.graph().node_count()));
  CHECK(decoded.satisfied_weight == 0.0);
}

TEST_CASE("clique_to_max2sat clause inventory") {
  const WeightedGraph k3(3, {{0, 1, 1}, {0, 2, 1}, {1, 2, 1}});
  const auto complete = clique_to_max2sat(k3);
  CHECK(complete.instance().n_vars() == 4);
  CHECK(complete.instance().clauses().size() == 6);

  const WeightedGraph path(3, {{0, 1, 1}, {1, 2, 1}});
  const auto with_gap = clique_to_max2sat(path);
  CHECK(with_gap.instance().clauses().size() == 7);
  const Clause& type_b = with_gap.instance().clauses().back();
  CHECK(type_b.lit_a == -1);
  CHECK(type_b.lit_b == -3);

  const WeightedGraph empty(3, {});
  CHECK(clique_to_max2sat(empty).instance().clauses().size() == 9);
}

TEST_CASE("clique reductions decode to the exact optimum on tiny graphs") {
  const WeightedGraph k3(3, {{0, 1, 1}, {0, 2, 1}, {1, 2, 1}});
  const WeightedGraph one_edge(2, {{0, 1, 1}});
  const WeightedGraph no_edge(2, {});
  const std::pair<const WeightedGraph*, int> cases[] = {
      {&k3, 3}, {&one_edge, 2}, {&no_edge, 1}};
  for (const auto& [g, expected] : cases) {
    const auto reduction = clique_to_maxcut(*g);
    const OracleResult best = brute_force_maxcut(reduction.graph());
    const CliqueDecode decoded = reduction.decode(SpinAssignment(best.witness));
    CHECK(decoded.size == expected);
    CHECK(is_clique(*g, decoded.vertices));
  }
}

TEST_CASE("mwis_to_qubo matrix and penalties") {
  const WeightedGraph edge(2, {{0, 1, 1.0}}, {1.0, 1.0});
  const auto reduction = mwis_to_qubo(edge, 3.0);
  Eigen::MatrixXd expected(2, 2);
  expected << -1.0, 1.5, 1.5, -1.0;
  CHECK((reduction.qubo().entries() - expected).cwiseAbs().maxCoeff() == 0.0);

  CHECK(qubo_value(reduction.qubo(), BinaryAssignment({1, 1})) == 1.0);
  CHECK(qubo_value(reduction.qubo(), BinaryAssignment({1, 0})) == -1.0);

  const WeightedGraph isolated(2, {}, {2.0, 3.0});
  const auto trivial = mwis_to_qubo(isolated, 6.0);
  CHECK(trivial.qubo().entries()(0, 0) == -2.0);
  CHECK(trivial.qubo().entries()(1, 1) == -3.0);
  CHECK(brute_force_qubo(trivial.qubo()).optimal_value == -5.0);

  CHECK_THROWS_AS(mwis_to_qubo(edge, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(mwis_to_qubo(WeightedGraph(2, {{0, 1, 1.0}})),
                  std::invalid_argument);
}

TEST_CASE("mwis qubo equals -sum(w) + penalty * violations") {
  SplitMix64 rng(107);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 9);
    const WeightedGraph base = gen_gnp(n, 0.4, rng());
    const WeightedGraph g(n, base.edges(), gen_node_weights(n, rng()));
    const auto reduction = mwis_to_qubo(g);
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
      std::vector<int> bits(n);
      double selected_weight = 0.0;
      for (int v = 0; v < n; ++v) {
        bits[v] = (mask >> v) & 1;
        if (bits[v]) selected_weight += g.node_weights()[v];
      }
      int violations = 0;
      for (const Edge& e : g.edges())
        if (bits[e.u] && bits[e.v]) ++violations;
      const double expected =
          -selected_weight + reduction.penalty() * violations;
      CHECK(qubo_value(reduction.qubo(), BinaryAssignment(bits)) ==
            doctest::Approx(expected).epsilon(1e-12));
    }
  }
}

TEST_CASE("mwis decode repairs violations deterministically") {
  const WeightedGraph path(3, {{0, 1, 1.0}, {1, 2, 1.0}}, {1.0, 5.0, 1.0});
  const auto reduction = mwis_to_qubo(path);
  const MwisDecode decoded = reduction.decode(BinaryAssignment({1, 1, 1}));
  CHECK(decoded.vertices == std::vector<int>{1});
  CHECK(decoded.weight == 5.0);

  const MwisDecode kept = reduction.decode(BinaryAssignment({1, 0, 1}));
  CHECK(kept.vertices == std::vector<int>{0, 2});
  CHECK(kept.weight == 2.0);
}

TEST_CASE("repair_clique walks the minimum-degree rule") {
  const WeightedGraph path(3, {{0, 1, 1}, {1, 2, 1}});
  CHECK(repair_clique(path, {0, 1, 2}) == std::vector<int>{1, 2});
  CHECK(repair_clique(path, {0, 1}) == std::vector<int>{0, 1});
  CHECK(repair_clique(path, {2}) == std::vector<int>{2});
  CHECK(repair_clique(path, {}).empty());
  CHECK_THROWS_AS(repair_clique(path, {3}), std::invalid_argument);
  CHECK_THROWS_AS(repair_clique(path, {0, 0}), std::invalid_argument);
}

TEST_CASE("repair_clique always returns a clique") {
  SplitMix64 rng(109);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 10);
    const WeightedGraph g = gen_gnp(n, 0.5, rng());
    std::vector<int> candidate;
    for (int v = 0; v < n; ++v)
      if (rng() & 1) candidate.push_back(v);
    CHECK(is_clique(g, repair_clique(g, candidate)));
  }
}

TEST_CASE("reduction round trips hit the source optimum (sampled end-to-end)") {
  SplitMix64 rng(113);

  for (int trial = 0; trial < 20; ++trial) {
    // Partition
    const PartitionInstance p =
        gen_partition(2 + static_cast<int>(rng() % 11), rng());
    const auto pr = partition_to_maxcut(p);
    const OracleResult pcut = brute_force_maxcut(pr.graph());
    CHECK(static_cast<double>(
              pr.decode(SpinAssignment(pcut.witness)).difference) ==
          brute_force_partition(p).optimal_value);

    // Max-2-SAT through the gadget
    const TwoSatInstance s = random_twosat(
        1 + static_cast<int>(rng() % 6), static_cast<int>(rng() % 9), rng);
    const auto sr = max2sat_to_maxcut(s, Max2SatMode::ground_gadget);
    const OracleResult scut = brute_force_maxcut(sr.graph());
    CHECK(sr.decode(SpinAssignment(scut.witness)).satisfied_weight ==
          brute_force_max2sat(s).optimal_value);

    // Clique through the gadget
    const WeightedGraph cg =
        gen_gnp(3 + static_cast<int>(rng() % 6), 0.5, rng());
    const auto cr = clique_to_maxcut(cg, Max2SatMode::ground_gadget);
    const OracleResult ccut = brute_force_maxcut(cr.graph());
    const CliqueDecode cdec = cr.decode(SpinAssignment(ccut.witness));
    CHECK(is_clique(cg, cdec.vertices));
    CHECK(static_cast<double>(cdec.size) ==
          exact_max_clique(cg).optimal_value);

    // MWIS through the QUBO
    const int n = 2 + static_cast<int>(rng() % 11);
    const WeightedGraph base = gen_gnp(n, 0.35, rng());
    const WeightedGraph mg(n, base.edges(), gen_node_weights(n, rng()));
    const auto mr = mwis_to_qubo(mg);
    const OracleResult qopt = brute_force_qubo(mr.qubo());
    const MwisDecode mdec = mr.decode(BinaryAssignment(qopt.witness));
    CHECK(mdec.weight == brute_force_mwis(mg).optimal_value);
  }
}
