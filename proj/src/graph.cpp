#include "qsat/graph.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <queue>
#include <set>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

#include "qsat/errors.hpp"
#include "qsat/rng.hpp"

namespace qsat {

Graph Graph::make(int n_qubits, int k, std::vector<Clause> clauses) {
  if (n_qubits < 1) throw InvalidParameters("graph: n_qubits must be positive");
  if (k < 2) throw InvalidParameters("graph: arity k must be >= 2");
  std::set<Clause> seen;
  for (auto& c : clauses) {
    if (static_cast<int>(c.size()) != k)
      throw InvalidParameters("graph: clause arity differs from k");
    std::sort(c.begin(), c.end());
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] < 0 || c[i] >= n_qubits)
        throw InvalidParameters("graph: qubit index out of range");
      if (i > 0 && c[i] == c[i - 1])
        throw InvalidParameters("graph: repeated qubit within a clause");
    }
    if (!seen.insert(c).second) throw InvalidParameters("graph: duplicate clause");
  }
  Graph g;
  g.n_qubits = n_qubits;
  g.k = k;
  g.clauses = std::move(clauses);
  return g;
}

bool Graph::same_clause_set(const Graph& other) const {
  if (n_qubits != other.n_qubits || k != other.k ||
      clauses.size() != other.clauses.size())
    return false;
  auto a = clauses, b = other.clauses;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

double binomial_coefficient(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  double c = 1.0;
  for (int i = 0; i < k; ++i) {
    c *= static_cast<double>(n - i) / static_cast<double>(i + 1);
    if (c > 1e300) return 1e300;
  }
  return c;
}

namespace {

// Draw a uniformly random sorted k-subset of [0, n).
Clause draw_clause(SplitMix64& rng, int n, int k) {
  Clause c(k);
  for (int j = 0; j < k; ++j) {
    for (;;) {
      const int q = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n)));
      bool dup = false;
      for (int i = 0; i < j; ++i) dup |= (c[i] == q);
      if (!dup) {
        c[j] = q;
        break;
      }
    }
  }
  std::sort(c.begin(), c.end());
  return c;
}

// Exact dedup key when the packed tuple fits 128 bits; the general path
// falls back to an ordered set of tuples.
bool pack_fits(int n, int k) {
  int bits = 0, v = n - 1;
  while (v > 0) {
    ++bits;
    v >>= 1;
  }
  bits = std::max(bits, 1);
  return bits * k <= 120;
}

struct U128Hash {
  std::size_t operator()(unsigned __int128 v) const {
    return static_cast<std::size_t>(
        mix64(static_cast<std::uint64_t>(v) ^
              (static_cast<std::uint64_t>(v >> 64) * 0x9e3779b97f4a7c15ull)));
  }
};

std::vector<Clause> draw_distinct_clauses(SplitMix64& rng, int n, int k,
                                          std::uint64_t count) {
  std::vector<Clause> out;
  out.reserve(count);
  if (pack_fits(n, k)) {
    std::unordered_set<unsigned __int128, U128Hash> seen;
    seen.reserve(2 * count + 16);
    while (out.size() < count) {
      Clause c = draw_clause(rng, n, k);
      unsigned __int128 key = 0;
      for (int q : c) key = key * static_cast<unsigned>(n) + static_cast<unsigned>(q);
      if (seen.insert(key).second) out.push_back(std::move(c));
    }
  } else {
    std::set<Clause> seen;
    while (out.size() < count) {
      Clause c = draw_clause(rng, n, k);
      if (seen.insert(c).second) out.push_back(std::move(c));
    }
  }
  return out;
}

}  // namespace

Graph sample_graph(const EnsembleParams& params) {
  const int n = params.n_qubits;
  const int k = params.k;
  if (n < 1 || k < 2) throw InvalidParameters("sample_graph: need N >= 1, k >= 2");
  if (k > n) throw InvalidParameters("sample_graph: k exceeds N");
  if (!(params.clause_density >= 0.0))
    throw InvalidParameters("sample_graph: clause density must be >= 0");

  const double total = binomial_coefficient(n, k);
  SplitMix64 rng(params.seed);

  std::uint64_t m = 0;
  if (params.mode == EnsembleMode::fixed_count) {
    const double target = std::llround(params.clause_density * n);
    if (target > total)
      throw InvalidParameters("sample_graph: round(alpha*N) exceeds C(N,k)");
    m = static_cast<std::uint64_t>(target);
  } else {
    const double p = std::min(params.clause_density * n / total, 1.0);
    m = sample_binomial(rng, total, p);
  }

  Graph g;
  g.n_qubits = n;
  g.k = k;
  g.clauses = draw_distinct_clauses(rng, n, k, m);
  return g;
}

Graph hypercore(const Graph& g) {
  const int n = g.n_qubits;
  const int m = g.n_clauses();
  std::vector<int> degree(n, 0);
  std::vector<std::vector<int>> incident(n);
  for (int c = 0; c < m; ++c)
    for (int q : g.clauses[c]) {
      ++degree[q];
      incident[q].push_back(c);
    }

  std::vector<char> alive(m, 1);
  std::queue<int> dead_queue;  // clauses scheduled for deletion
  std::vector<char> queued(m, 0);
  for (int q = 0; q < n; ++q)
    if (degree[q] == 1) {
      const int c = incident[q].front();
      if (!queued[c]) {
        queued[c] = 1;
        dead_queue.push(c);
      }
    }

  while (!dead_queue.empty()) {
    const int c = dead_queue.front();
    dead_queue.pop();
    if (!alive[c]) continue;
    alive[c] = 0;
    for (int q : g.clauses[c]) {
      if (--degree[q] != 1) continue;
      for (int c2 : incident[q]) {
        if (alive[c2] && !queued[c2]) {
          queued[c2] = 1;
          dead_queue.push(c2);
        }
      }
    }
  }

  Graph core;
  core.n_qubits = n;
  core.k = g.k;
  for (int c = 0; c < m; ++c)
    if (alive[c]) core.clauses.push_back(g.clauses[c]);
  return core;
}

std::vector<int> degree_profile(const Graph& g) {
  std::vector<int> degree(g.n_qubits, 0);
  for (const auto& c : g.clauses)
    for (int q : c) ++degree[q];
  return degree;
}

int touched_qubit_count(const Graph& g) {
  const auto deg = degree_profile(g);
  int t = 0;
  for (int d : deg) t += (d > 0);
  return t;
}

std::string graph_to_json(const Graph& g) {
  nlohmann::json j;
  j["n_qubits"] = g.n_qubits;
  j["k"] = g.k;
  j["clauses"] = g.clauses;
  return j.dump();
}

Graph graph_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidParameters(std::string("graph JSON parse error: ") + e.what());
  }
  if (!j.contains("n_qubits") || !j.contains("k") || !j.contains("clauses"))
    throw InvalidParameters("graph JSON: missing n_qubits, k or clauses");
  return Graph::make(j["n_qubits"].get<int>(), j["k"].get<int>(),
                     j["clauses"].get<std::vector<Clause>>());
}

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidParameters("cannot open graph file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return graph_from_json(ss.str());
}

void save_graph(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InvalidParameters("cannot write graph file: " + path);
  out << graph_to_json(g) << "\n";
}

}  // namespace qsat
