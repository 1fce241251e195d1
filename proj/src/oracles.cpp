#include "logenc/oracles.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "logenc/errors.hpp"
#include "logenc/rng.hpp"

namespace logenc {

namespace {

constexpr int kEnumerationLimit = 26;

void check_capacity(int n, int limit, const char* who) {
  if (n > limit)
    throw CapacityError(std::string(who) + ": instance size " +
                        std::to_string(n) + " exceeds the enumeration limit " +
                        std::to_string(limit));
}

struct WeightedNeighbor {
  int vertex;
  double weight;
};

std::vector<std::vector<WeightedNeighbor>> weighted_adjacency(
    const WeightedGraph& g) {
  std::vector<std::vector<WeightedNeighbor>> adj(g.node_count());
  for (const Edge& e : g.edges()) {
    adj[e.u].push_back({e.v, e.weight});
    adj[e.v].push_back({e.u, e.weight});
  }
  return adj;
}

}  // namespace

OracleResult brute_force_maxcut(const WeightedGraph& g) {
  const int n = g.node_count();
  check_capacity(n, kEnumerationLimit, "brute_force_maxcut");
  const auto adj = weighted_adjacency(g);

  // Vertex 0's side is fixed; Gray-code flips give O(degree) steps.
  std::vector<int> spins(n, 1);
  std::vector<int> best_spins = spins;
  double cut = 0.0;
  double best = 0.0;
  const std::uint64_t steps = n > 1 ? (std::uint64_t{1} << (n - 1)) : 1;
  for (std::uint64_t k = 1; k < steps; ++k) {
    const int v = std::countr_zero(k) + 1;
    double delta = 0.0;
    for (const auto& nb : adj[v])
      delta += spins[nb.vertex] == spins[v] ? nb.weight : -nb.weight;
    spins[v] = -spins[v];
    cut += delta;
    if (cut > best) {
      best = cut;
      best_spins = spins;
    }
  }
  // Recompute from the witness so accumulated rounding cannot leak out.
  const double exact = cut_value(g, SpinAssignment(best_spins));
  return OracleResult{exact, std::move(best_spins), true};
}

OracleResult brute_force_partition(const PartitionInstance& p) {
  const int n = static_cast<int>(p.size());
  check_capacity(n, kEnumerationLimit, "brute_force_partition");
  const auto& w = p.weights();
  const long long total = p.total();

  // Element 0 stays in subset A; enumerate the rest by Gray code.
  std::vector<int> in_a(n, 0);
  in_a[0] = 1;
  long long sum_a = w[0];
  long long best_diff = std::abs(total - 2 * sum_a);
  std::vector<int> best = in_a;
  const std::uint64_t steps = n > 1 ? (std::uint64_t{1} << (n - 1)) : 1;
  for (std::uint64_t k = 1; k < steps; ++k) {
    const int v = std::countr_zero(k) + 1;
    in_a[v] ^= 1;
    sum_a += in_a[v] ? w[v] : -w[v];
    const long long diff = std::abs(total - 2 * sum_a);
    if (diff < best_diff) {
      best_diff = diff;
      best = in_a;
      if (best_diff == 0) break;
    }
  }
  return OracleResult{static_cast<double>(best_diff), std::move(best), true};
}

OracleResult brute_force_mwis(const WeightedGraph& g) {
  const int n = g.node_count();
  check_capacity(n, kEnumerationLimit, "brute_force_mwis");
  if (!g.has_node_weights())
    throw std::invalid_argument("brute_force_mwis: node weights required");
  const auto& w = g.node_weights();

  std::vector<std::uint32_t> adj(n, 0);
  for (const Edge& e : g.edges()) {
    adj[e.u] |= std::uint32_t{1} << e.v;
    adj[e.v] |= std::uint32_t{1} << e.u;
  }

  std::uint32_t selected = 0;
  double weight = 0.0;
  int violations = 0;
  double best = 0.0;
  std::uint32_t best_set = 0;
  const std::uint64_t steps = std::uint64_t{1} << n;
  for (std::uint64_t k = 1; k < steps; ++k) {
    const int v = std::countr_zero(k);
    const std::uint32_t bit = std::uint32_t{1} << v;
    if (selected & bit) {
      selected ^= bit;
      weight -= w[v];
      violations -= std::popcount(adj[v] & selected);
    } else {
      violations += std::popcount(adj[v] & selected);
      selected ^= bit;
      weight += w[v];
    }
    if (violations == 0 && weight > best) {
      best = weight;
      best_set = selected;
    }
  }
  std::vector<int> witness(n, 0);
  double exact = 0.0;
  for (int v = 0; v < n; ++v)
    if (best_set & (std::uint32_t{1} << v)) {
      witness[v] = 1;
      exact += w[v];
    }
  return OracleResult{exact, std::move(witness), true};
}

OracleResult brute_force_qubo(const QuboMatrix& q) {
  const int n = q.dim();
  check_capacity(n, kEnumerationLimit, "brute_force_qubo");
  const Eigen::MatrixXd& m = q.entries();

  std::vector<int> x(n, 0);
  double value = 0.0;
  double best = 0.0;  // all-zero assignment
  std::vector<int> best_x = x;
  const std::uint64_t steps = std::uint64_t{1} << n;
  for (std::uint64_t k = 1; k < steps; ++k) {
    const int v = std::countr_zero(k);
    double cross = 0.0;
    for (int j = 0; j < n; ++j)
      if (j != v && x[j]) cross += m(v, j);
    if (x[v]) {
      value -= m(v, v) + 2.0 * cross;
      x[v] = 0;
    } else {
      value += m(v, v) + 2.0 * cross;
      x[v] = 1;
    }
    if (value < best) {
      best = value;
      best_x = x;
    }
  }
  const double exact = qubo_value(q, BinaryAssignment(best_x));
  return OracleResult{exact, std::move(best_x), true};
}

namespace {

// Tomita-style branch and bound: candidates are greedily colored and
// explored in reverse color order; a branch is cut when even one vertex
// per color cannot beat the incumbent.
struct CliqueSearch {
  int n = 0;
  std::vector<std::uint64_t> adj;
  int best_size = 0;
  std::vector<int> best;
  std::vector<int> current;

  void expand(std::uint64_t candidates) {
    if (candidates == 0) {
      if (static_cast<int>(current.size()) > best_size) {
        best_size = static_cast<int>(current.size());
        best = current;
      }
      return;
    }
    std::vector<int> order;
    std::vector<int> bound;
    std::uint64_t uncolored = candidates;
    int color = 0;
    while (uncolored) {
      ++color;
      std::uint64_t available = uncolored;
      while (available) {
        const int v = std::countr_zero(available);
        const std::uint64_t bit = std::uint64_t{1} << v;
        available &= ~(adj[v] | bit);
        uncolored &= ~bit;
        order.push_back(v);
        bound.push_back(color);
      }
    }
    for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
      if (static_cast<int>(current.size()) + bound[i] <= best_size) return;
      const int v = order[i];
      current.push_back(v);
      expand(candidates & adj[v]);
      current.pop_back();
      candidates &= ~(std::uint64_t{1} << v);
    }
  }
};

}  // namespace

OracleResult exact_max_clique(const WeightedGraph& g) {
  const int n = g.node_count();
  check_capacity(n, 64, "exact_max_clique");

  CliqueSearch search;
  search.n = n;
  search.adj.assign(n, 0);
  for (const Edge& e : g.edges()) {
    search.adj[e.u] |= std::uint64_t{1} << e.v;
    search.adj[e.v] |= std::uint64_t{1} << e.u;
  }
  const std::uint64_t all =
      n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  search.expand(all);
  std::sort(search.best.begin(), search.best.end());
  return OracleResult{static_cast<double>(search.best_size),
                      std::move(search.best), true};
}

OracleResult brute_force_max2sat(const TwoSatInstance& s) {
  const int n = s.n_vars();
  check_capacity(n, 22, "brute_force_max2sat");

  struct MaskedClause {
    int var_a, var_b;
    bool neg_a, neg_b;
    double weight;
  };
  std::vector<MaskedClause> clauses;
  clauses.reserve(s.clauses().size());
  for (const Clause& c : s.clauses())
    clauses.push_back({std::abs(c.lit_a) - 1, std::abs(c.lit_b) - 1,
                       c.lit_a < 0, c.lit_b < 0, c.weight});

  double best = -1.0;
  std::uint32_t best_mask = 0;
  const std::uint64_t steps = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < steps; ++mask) {
    double satisfied = 0.0;
    for (const MaskedClause& c : clauses) {
      const bool a = ((mask >> c.var_a) & 1) != 0;
      const bool b = ((mask >> c.var_b) & 1) != 0;
      if ((a != c.neg_a) || (b != c.neg_b)) satisfied += c.weight;
    }
    if (satisfied > best) {
      best = satisfied;
      best_mask = static_cast<std::uint32_t>(mask);
    }
  }
  std::vector<int> witness(n);
  for (int v = 0; v < n; ++v) witness[v] = (best_mask >> v) & 1;
  return OracleResult{std::max(best, 0.0), std::move(witness), true};
}

OracleResult local_search_maxcut(const WeightedGraph& g, std::uint64_t seed,
                                 int restarts) {
  if (restarts < 1)
    throw std::invalid_argument("local_search_maxcut: restarts must be >= 1");
  const int n = g.node_count();
  const auto adj = weighted_adjacency(g);

  double best = -1.0;
  std::vector<int> best_spins;
  for (int restart = 0; restart < restarts; ++restart) {
    SplitMix64 rng(derive_seed(seed, static_cast<std::uint64_t>(restart)));
    std::vector<int> spins(n);
    for (int v = 0; v < n; ++v) spins[v] = rng() & 1 ? 1 : -1;

    for (;;) {
      int flip = -1;
      double best_gain = 1e-12;
      for (int v = 0; v < n; ++v) {
        double gain = 0.0;
        for (const auto& nb : adj[v])
          gain += spins[nb.vertex] == spins[v] ? nb.weight : -nb.weight;
        if (gain > best_gain) {
          best_gain = gain;
          flip = v;
        }
      }
      if (flip < 0) break;
      spins[flip] = -spins[flip];
    }

    const double value = cut_value(g, SpinAssignment(spins));
    if (value > best) {
      best = value;
      best_spins = std::move(spins);
    }
  }
  return OracleResult{best, std::move(best_spins), false};
}

double partition_norm(double diff, int count) {
  if (count < 1)
    throw std::invalid_argument("partition_norm: count must be >= 1");
  if (diff < 0.0)
    throw std::invalid_argument("partition_norm: diff must be >= 0");
  const double scale = 50.0 * count;
  return (scale - diff) / scale;
}

double percent_of_optimal(double value, double optimal) {
  if (!(optimal > 0.0))
    throw std::invalid_argument("percent_of_optimal: optimal must be > 0");
  return value / optimal;
}

}  // namespace logenc
