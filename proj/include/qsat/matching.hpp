#pragma once

#include <cstdint>
#include <vector>

#include "qsat/graph.hpp"

namespace qsat {

// Partial injective assignment clause -> incident qubit; -1 marks an
// unassigned clause. A dimer covering assigns every clause.
struct Matching {
  std::vector<int> clause_to_qubit;

  int size() const {
    int s = 0;
    for (int q : clause_to_qubit) s += (q >= 0);
    return s;
  }
  bool covers_all() const {
    for (int q : clause_to_qubit) {
      if (q < 0) return false;
    }
    return true;
  }
};

// Incidence-level entry points. Rows are clause membership lists over
// n_qubits columns; unlike Graph, repeated rows are tolerated here, which
// the degenerate complete-incidence cases in the tests rely on.

// Maximum-cardinality clause-qubit matching (Hopcroft-Karp). Augmenting
// paths try qubits in ascending index order, so the witness is
// deterministic.
Matching max_clause_matching(int n_qubits, const std::vector<Clause>& clauses);

// Exact number of dimer coverings by clause-ordered DFS over a used-qubit
// bitmask with memoization. Requires n_qubits <= limit; throws
// LimitExceeded above it or if the count overflows 64 bits.
std::uint64_t count_dimer_coverings(int n_qubits, const std::vector<Clause>& clauses,
                                    int limit = 24);

// All dimer coverings, each as a clause -> qubit vector; throws
// LimitExceeded when more than max_coverings exist.
std::vector<std::vector<int>> enumerate_dimer_coverings(
    int n_qubits, const std::vector<Clause>& clauses, std::uint64_t max_coverings,
    int limit = 24);

Matching max_clause_matching(const Graph& g);
bool is_clause_coverable(const Graph& g);
std::uint64_t count_dimer_coverings(const Graph& g, int limit = 24);

// Clause-qubit adjacency over GF(2), rows bit-packed into 64-bit words.
struct Gf2Matrix {
  int rows = 0;
  int cols = 0;
  int words_per_row = 0;
  std::vector<std::uint64_t> words;

  static Gf2Matrix from_graph(const Graph& g);
  bool get(int r, int c) const {
    return (words[static_cast<std::size_t>(r) * words_per_row + c / 64] >> (c % 64)) & 1u;
  }
  int rank() const;
};

// True iff the M x N adjacency matrix has full row rank over GF(2), i.e.
// the parity system A x = J is solvable for every right-hand side. Implies
// clause coverability; the converse fails.
bool gf2_surjective(const Graph& g);

}  // namespace qsat
