#include "logenc/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "logenc/errors.hpp"

namespace logenc {

namespace {

std::ifstream open_input(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw IoError("cannot open " + path);
  return file;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream file(path);
  if (!file) throw IoError("cannot write " + path);
  return file;
}

[[noreturn]] void malformed(const std::string& path, const std::string& what) {
  throw IoError("malformed file " + path + ": " + what);
}

/// Round-trippable decimal with a guaranteed decimal point or exponent.
std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  std::string s(buf);
  if (s.find_first_of(".eE") == std::string::npos &&
      s.find_first_not_of("-0123456789") == std::string::npos)
    s += ".0";
  return s;
}

}  // namespace

WeightedGraph read_graph(const std::string& path) {
  auto file = open_input(path);
  int n = 0, m = 0;
  if (!(file >> n >> m)) malformed(path, "expected header 'n m'");
  std::vector<Edge> edges;
  edges.reserve(std::max(m, 0));
  for (int i = 0; i < m; ++i) {
    Edge e;
    if (!(file >> e.u >> e.v >> e.weight))
      malformed(path, "expected edge line 'u v w'");
    edges.push_back(e);
  }
  // Optional trailing block of node weights: n lines "i w_i".
  std::vector<double> node_weights;
  int idx = 0;
  if (file >> idx) {
    node_weights.assign(static_cast<std::size_t>(std::max(n, 0)), 0.0);
    std::vector<char> seen(node_weights.size(), 0);
    for (int line = 0; line < n; ++line) {
      if (line > 0 && !(file >> idx))
        malformed(path, "incomplete node weight block");
      double w = 0.0;
      if (!(file >> w)) malformed(path, "expected node weight line 'i w'");
      if (idx < 0 || idx >= n || seen[idx])
        malformed(path, "bad node index in weight block");
      seen[idx] = 1;
      node_weights[idx] = w;
    }
  }
  try {
    return node_weights.empty()
               ? WeightedGraph(n, std::move(edges))
               : WeightedGraph(n, std::move(edges), std::move(node_weights));
  } catch (const std::invalid_argument& err) {
    malformed(path, err.what());
  }
}

PartitionInstance read_partition(const std::string& path) {
  auto file = open_input(path);
  std::vector<long long> weights;
  long long w = 0;
  while (file >> w) weights.push_back(w);
  if (!file.eof()) malformed(path, "expected one integer per line");
  try {
    return PartitionInstance(std::move(weights));
  } catch (const std::invalid_argument& err) {
    malformed(path, err.what());
  }
}

QuboMatrix read_qubo(const std::string& path) {
  auto file = open_input(path);
  int n = 0;
  if (!(file >> n)) malformed(path, "expected dimension header");
  if (n < 1) malformed(path, "dimension must be >= 1");
  Eigen::MatrixXd m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!(file >> m(i, j))) malformed(path, "expected n rows of n values");
  try {
    return QuboMatrix(m);
  } catch (const std::invalid_argument& err) {
    malformed(path, err.what());
  }
}

TwoSatInstance read_twosat(const std::string& path) {
  auto file = open_input(path);
  int n = 0, m = 0;
  if (!(file >> n >> m)) malformed(path, "expected header 'n m'");
  std::vector<Clause> clauses;
  clauses.reserve(std::max(m, 0));
  for (int i = 0; i < m; ++i) {
    Clause c;
    if (!(file >> c.weight >> c.lit_a >> c.lit_b))
      malformed(path, "expected clause line 'w lit_a lit_b'");
    clauses.push_back(c);
  }
  try {
    return TwoSatInstance(n, std::move(clauses));
  } catch (const std::invalid_argument& err) {
    malformed(path, err.what());
  }
}

void write_graph(const std::string& path, const WeightedGraph& g) {
  auto file = open_output(path);
  file << g.node_count() << ' ' << g.edges().size() << '\n';
  for (const Edge& e : g.edges())
    file << e.u << ' ' << e.v << ' ' << format_double(e.weight) << '\n';
  if (g.has_node_weights())
    for (int v = 0; v < g.node_count(); ++v)
      file << v << ' ' << format_double(g.node_weights()[v]) << '\n';
}

void write_partition(const std::string& path, const PartitionInstance& p) {
  auto file = open_output(path);
  for (long long w : p.weights()) file << w << '\n';
}

void write_qubo(const std::string& path, const QuboMatrix& q) {
  auto file = open_output(path);
  file << q.dim() << '\n';
  for (int i = 0; i < q.dim(); ++i) {
    for (int j = 0; j < q.dim(); ++j) {
      if (j) file << ' ';
      file << format_double(q.entries()(i, j));
    }
    file << '\n';
  }
}

void write_twosat(const std::string& path, const TwoSatInstance& s) {
  auto file = open_output(path);
  file << s.n_vars() << ' ' << s.clauses().size() << '\n';
  for (const Clause& c : s.clauses())
    file << format_double(c.weight) << ' ' << c.lit_a << ' ' << c.lit_b
         << '\n';
}

std::string format_observable(const PauliObservable& obs) {
  std::vector<PauliTerm> terms = obs.terms();
  std::sort(terms.begin(), terms.end(),
            [](const PauliTerm& a, const PauliTerm& b) {
              const double ma = std::abs(a.coeff), mb = std::abs(b.coeff);
              if (ma != mb) return ma > mb;
              return a.word < b.word;
            });
  std::ostringstream out;
  for (const PauliTerm& t : terms)
    out << format_double(t.coeff) << ' ' << t.word << '\n';
  return out.str();
}

}  // namespace logenc
