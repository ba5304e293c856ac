#include "qsat/matching.hpp"

#include <algorithm>
#include <limits>
#include <unordered_map>

#include "qsat/errors.hpp"

namespace qsat {

namespace {

constexpr int kInf = std::numeric_limits<int>::max();

// Hopcroft-Karp on the bipartite clause-qubit factor graph. Clauses are
// the left class; layered BFS from free clauses, then DFS along the
// layering. Adjacency lists are the (sorted) clause tuples, so ties break
// toward the lowest qubit index.
struct HopcroftKarp {
  const std::vector<Clause>& adj;
  int n_clauses, n_qubits;
  std::vector<int> match_clause;  // clause -> qubit or -1
  std::vector<int> match_qubit;   // qubit -> clause or -1
  std::vector<int> dist;
  std::vector<int> bfs_queue;

  explicit HopcroftKarp(int n, const std::vector<Clause>& clauses)
      : adj(clauses),
        n_clauses(static_cast<int>(clauses.size())),
        n_qubits(n),
        match_clause(n_clauses, -1),
        match_qubit(n, -1),
        dist(n_clauses, 0) {
    bfs_queue.reserve(n_clauses);
  }

  bool bfs() {
    bfs_queue.clear();
    for (int c = 0; c < n_clauses; ++c) {
      if (match_clause[c] < 0) {
        dist[c] = 0;
        bfs_queue.push_back(c);
      } else {
        dist[c] = kInf;
      }
    }
    bool reachable_free_qubit = false;
    for (std::size_t head = 0; head < bfs_queue.size(); ++head) {
      const int c = bfs_queue[head];
      for (int q : adj[c]) {
        const int c2 = match_qubit[q];
        if (c2 < 0) {
          reachable_free_qubit = true;
        } else if (dist[c2] == kInf) {
          dist[c2] = dist[c] + 1;
          bfs_queue.push_back(c2);
        }
      }
    }
    return reachable_free_qubit;
  }

  bool dfs(int c) {
    for (int q : adj[c]) {
      const int c2 = match_qubit[q];
      if (c2 < 0 || (dist[c2] == dist[c] + 1 && dfs(c2))) {
        match_clause[c] = q;
        match_qubit[q] = c;
        return true;
      }
    }
    dist[c] = kInf;
    return false;
  }

  void run() {
    while (bfs()) {
      for (int c = 0; c < n_clauses; ++c)
        if (match_clause[c] < 0) dfs(c);
    }
  }
};

}  // namespace

Matching max_clause_matching(int n_qubits, const std::vector<Clause>& clauses) {
  HopcroftKarp hk(n_qubits, clauses);
  hk.run();
  return Matching{std::move(hk.match_clause)};
}

Matching max_clause_matching(const Graph& g) {
  return max_clause_matching(g.n_qubits, g.clauses);
}

bool is_clause_coverable(const Graph& g) {
  const int m = g.n_clauses();
  if (m == 0) return true;
  if (m > g.n_qubits) return false;
  // Peeling preserves coverability: a peeled clause contains a qubit of
  // degree 1, which can always be assigned to it. Shrinks the instance to
  // its hypercore before running the matcher.
  const Graph core = hypercore(g);
  const int mc = core.n_clauses();
  if (mc == 0) return true;
  if (mc > touched_qubit_count(core)) return false;
  return max_clause_matching(core).size() == mc;
}

namespace {

struct CoveringCounter {
  const std::vector<Clause>& clauses;
  std::unordered_map<std::uint64_t, std::uint64_t> memo;
  int n_qubits;
  int m;

  std::uint64_t count(int i, std::uint64_t used) {
    if (i == m) return 1;
    const std::uint64_t key =
        (static_cast<std::uint64_t>(i) << n_qubits) | used;
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    std::uint64_t total = 0;
    for (int q : clauses[i]) {
      if (used & (std::uint64_t{1} << q)) continue;
      const std::uint64_t sub = count(i + 1, used | (std::uint64_t{1} << q));
      if (__builtin_add_overflow(total, sub, &total))
        throw LimitExceeded("count_dimer_coverings: count overflows 64 bits");
    }
    memo.emplace(key, total);
    return total;
  }
};

}  // namespace

std::uint64_t count_dimer_coverings(int n_qubits, const std::vector<Clause>& clauses,
                                    int limit) {
  if (n_qubits > limit)
    throw LimitExceeded("count_dimer_coverings: graph exceeds enumeration limit");
  const int m = static_cast<int>(clauses.size());
  if (m > n_qubits) return 0;
  CoveringCounter counter{clauses, {}, n_qubits, m};
  return counter.count(0, 0);
}

std::uint64_t count_dimer_coverings(const Graph& g, int limit) {
  return count_dimer_coverings(g.n_qubits, g.clauses, limit);
}

std::vector<std::vector<int>> enumerate_dimer_coverings(
    int n_qubits, const std::vector<Clause>& clauses, std::uint64_t max_coverings,
    int limit) {
  if (n_qubits > limit)
    throw LimitExceeded("enumerate_dimer_coverings: graph exceeds enumeration limit");
  const int m = static_cast<int>(clauses.size());
  std::vector<std::vector<int>> out;
  if (m > n_qubits) return out;
  std::vector<int> assignment(m, -1);
  std::uint64_t used = 0;

  auto dfs = [&](auto&& self, int i) -> void {
    if (i == m) {
      if (out.size() >= max_coverings)
        throw LimitExceeded("enumerate_dimer_coverings: more than max_coverings");
      out.push_back(assignment);
      return;
    }
    for (int q : clauses[i]) {
      const std::uint64_t bit = std::uint64_t{1} << q;
      if (used & bit) continue;
      used |= bit;
      assignment[i] = q;
      self(self, i + 1);
      assignment[i] = -1;
      used &= ~bit;
    }
  };
  dfs(dfs, 0);
  return out;
}

Gf2Matrix Gf2Matrix::from_graph(const Graph& g) {
  Gf2Matrix a;
  a.rows = g.n_clauses();
  a.cols = g.n_qubits;
  a.words_per_row = (g.n_qubits + 63) / 64;
  a.words.assign(static_cast<std::size_t>(a.rows) * a.words_per_row, 0);
  for (int r = 0; r < a.rows; ++r)
    for (int q : g.clauses[r])
      a.words[static_cast<std::size_t>(r) * a.words_per_row + q / 64] |=
          std::uint64_t{1} << (q % 64);
  return a;
}

int Gf2Matrix::rank() const {
  std::vector<std::uint64_t> w = words;
  const int wpr = words_per_row;
  auto row = [&](int r) { return w.data() + static_cast<std::size_t>(r) * wpr; };
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    const int word = c / 64;
    const std::uint64_t bit = std::uint64_t{1} << (c % 64);
    int pivot = -1;
    for (int i = r; i < rows; ++i) {
      if (row(i)[word] & bit) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != r)
      for (int j = 0; j < wpr; ++j) std::swap(row(pivot)[j], row(r)[j]);
    for (int i = r + 1; i < rows; ++i) {
      if (row(i)[word] & bit) {
        for (int j = word; j < wpr; ++j) row(i)[j] ^= row(r)[j];
      }
    }
    ++r;
  }
  return r;
}

bool gf2_surjective(const Graph& g) {
  if (g.n_clauses() == 0) return true;
  if (g.n_clauses() > g.n_qubits) return false;
  return Gf2Matrix::from_graph(g).rank() == g.n_clauses();
}

}  // namespace qsat
