#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qsat {

// A clause is a sorted tuple of k distinct qubit indices.
using Clause = std::vector<int>;

// k-uniform clause-qubit interaction graph. Clauses are stored as sorted
// tuples; graph identity is up to clause order (set semantics), and
// duplicate clauses are rejected at construction.
struct Graph {
  int n_qubits = 0;
  int k = 0;
  std::vector<Clause> clauses;

  int n_clauses() const { return static_cast<int>(clauses.size()); }

  // Validates and canonicalizes: sorts each tuple, rejects out-of-range or
  // repeated members, arity mismatches and duplicate clauses.
  static Graph make(int n_qubits, int k, std::vector<Clause> clauses);

  bool same_clause_set(const Graph& other) const;
};

enum class EnsembleMode { binomial, fixed_count };

struct EnsembleParams {
  int n_qubits = 0;
  int k = 2;
  double clause_density = 0.0;  // alpha
  EnsembleMode mode = EnsembleMode::fixed_count;
  std::uint64_t seed = 0;
};

// Random k-uniform graph at clause density alpha. Fixed-count mode draws
// exactly round(alpha*N) distinct clauses uniformly; binomial mode includes
// each of the C(N,k) potential clauses independently with probability
// p = alpha*N / C(N,k). Duplicate draws are rejected and redrawn.
// Deterministic for a fixed seed.
Graph sample_graph(const EnsembleParams& params);

// Maximal subgraph in which every participating qubit appears in at least
// two clauses, obtained by repeatedly deleting any clause that contains a
// qubit of degree <= 1. The result is independent of deletion order. Qubit
// indices are preserved; qubits outside the core simply end with degree 0.
Graph hypercore(const Graph& g);

// Exact per-qubit clause membership counts.
std::vector<int> degree_profile(const Graph& g);

// Number of qubits with degree >= 1.
int touched_qubit_count(const Graph& g);

// C(n, k) as a double (exact until it exceeds 2^53, huge values saturate).
double binomial_coefficient(int n, int k);

// JSON graph format: {"n_qubits": N, "k": k, "clauses": [[i,j,l], ...]}
// with zero-based indices and each clause tuple sorted ascending.
std::string graph_to_json(const Graph& g);
Graph graph_from_json(const std::string& text);
Graph load_graph(const std::string& path);
void save_graph(const Graph& g, const std::string& path);

}  // namespace qsat
