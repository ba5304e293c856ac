#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "qsat/errors.hpp"
#include "qsat/graph.hpp"
#include "qsat/instances.hpp"
#include "qsat/rng.hpp"

using namespace qsat;

namespace {

// Reference peeler: scans alive clauses in an arbitrary order and removes
// any whose member has degree <= 1, restarting until a fixpoint. Used to
// check order independence of the work-queue implementation.
Graph naive_peel(const Graph& g, std::vector<int> order) {
  std::vector<char> alive(g.clauses.size(), 1);
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<int> degree(g.n_qubits, 0);
    for (std::size_t c = 0; c < g.clauses.size(); ++c)
      if (alive[c])
        for (int q : g.clauses[c]) ++degree[q];
    for (int c : order) {
      if (!alive[c]) continue;
      for (int q : g.clauses[c]) {
        if (degree[q] <= 1) {
          alive[c] = 0;
          for (int q2 : g.clauses[c]) --degree[q2];
          changed = true;
          break;
        }
      }
    }
  }
  Graph out;
  out.n_qubits = g.n_qubits;
  out.k = g.k;
  for (std::size_t c = 0; c < g.clauses.size(); ++c)
    if (alive[c]) out.clauses.push_back(g.clauses[c]);
  return out;
}

}  // namespace

TEST_CASE("construction validates and canonicalizes") {
  auto g = Graph::make(4, 3, {{2, 1, 0}});
  CHECK(g.clauses[0] == Clause{0, 1, 2});
  CHECK_THROWS_AS(Graph::make(3, 3, {{0, 1, 2}, {2, 1, 0}}), InvalidParameters);
  CHECK_THROWS_AS(Graph::make(3, 3, {{0, 1, 3}}), InvalidParameters);
  CHECK_THROWS_AS(Graph::make(3, 3, {{0, 1, 1}}), InvalidParameters);
  CHECK_THROWS_AS(Graph::make(3, 2, {{0, 1, 2}}), InvalidParameters);
  CHECK_THROWS_AS(Graph::make(0, 2, {}), InvalidParameters);
  CHECK_THROWS_AS(Graph::make(3, 1, {}), InvalidParameters);
}

TEST_CASE("sampling: forced single clause") {
  // N=3, k=3: round(alpha*N) = 1 leaves only {0,1,2}.
  EnsembleParams p{3, 3, 1.0 / 3.0, EnsembleMode::fixed_count, 99};
  auto g = sample_graph(p);
  REQUIRE(g.n_clauses() == 1);
  CHECK(g.clauses[0] == Clause{0, 1, 2});
}

TEST_CASE("sampling: zero density gives empty graphs in both modes") {
  for (auto mode : {EnsembleMode::fixed_count, EnsembleMode::binomial}) {
    EnsembleParams p{10, 3, 0.0, mode, 5};
    CHECK(sample_graph(p).n_clauses() == 0);
  }
}

TEST_CASE("sampling: deterministic and seed-sensitive") {
  EnsembleParams p{50, 3, 0.8, EnsembleMode::fixed_count, 1234};
  auto g1 = sample_graph(p);
  auto g2 = sample_graph(p);
  CHECK(g1.same_clause_set(g2));
  CHECK(g1.clauses == g2.clauses);
  p.seed = 1235;
  CHECK_FALSE(sample_graph(p).same_clause_set(g1));
}

TEST_CASE("sampling: clauses are distinct, sorted, in range") {
  EnsembleParams p{30, 4, 1.5, EnsembleMode::binomial, 7};
  auto g = sample_graph(p);
  std::set<Clause> seen;
  for (const auto& c : g.clauses) {
    CHECK(std::is_sorted(c.begin(), c.end()));
    CHECK(c.front() >= 0);
    CHECK(c.back() < 30);
    CHECK(seen.insert(c).second);
  }
}

TEST_CASE("sampling: binomial clause count concentrates at alpha*N") {
  // N=1e4, k=3, alpha=0.5: M should stay within 5 sds of 5000 across seeds.
  const int n = 10000;
  const double alpha = 0.5;
  const double p_inc = alpha * n / binomial_coefficient(n, 3);
  const double sd = std::sqrt(5000.0 * (1.0 - p_inc));
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    EnsembleParams p{n, 3, alpha, EnsembleMode::binomial, seed};
    const auto m = sample_graph(p).n_clauses();
    CHECK(std::abs(m - 5000.0) <= 5 * sd);
  }
}

TEST_CASE("sampling: impossible parameters error") {
  CHECK_THROWS_AS(sample_graph({3, 4, 0.5, EnsembleMode::fixed_count, 1}),
                  InvalidParameters);
  // round(alpha*N) > C(N,k)
  CHECK_THROWS_AS(sample_graph({4, 3, 2.0, EnsembleMode::fixed_count, 1}),
                  InvalidParameters);
}

TEST_CASE("hypercore: single clause peels away") {
  auto g = Graph::make(3, 3, {{0, 1, 2}});
  CHECK(hypercore(g).n_clauses() == 0);
}

TEST_CASE("hypercore: peeling cascades") {
  // Qubits 2 and 3 dangle; removing either clause leaves the other danging
  // on qubits 0, 1 as well.
  auto g = Graph::make(4, 3, {{0, 1, 2}, {0, 1, 3}});
  CHECK(hypercore(g).n_clauses() == 0);
}

TEST_CASE("hypercore: bundled instance c has a proper core") {
  auto g = bundled_instance('c');
  auto core = hypercore(g);
  CHECK(core.n_clauses() < g.n_clauses());
  CHECK(core.n_clauses() > 0);
  // Hand peeling: qubits 2, 8 and 9 have degree 1, so {2,7,8} and {1,6,9}
  // peel off; the remaining eight clauses all keep degree >= 2.
  Graph expected;
  expected.n_qubits = 10;
  expected.k = 3;
  for (const auto& c : g.clauses)
    if (c != Clause{2, 7, 8} && c != Clause{1, 6, 9}) expected.clauses.push_back(c);
  CHECK(core.same_clause_set(expected));
  // The peeled clauses dangle: 8 clauses on 7 touched qubits.
  CHECK(touched_qubit_count(core) == 7);
}

TEST_CASE("hypercore: order independence and idempotence") {
  SplitMix64 rng(2024);
  for (int trial = 0; trial < 50; ++trial) {
    EnsembleParams p{20, 3, 0.6 + 0.05 * (trial % 10), EnsembleMode::fixed_count,
                     derive_seed(555, trial)};
    auto g = sample_graph(p);
    auto core = hypercore(g);
    for (int shuffle = 0; shuffle < 3; ++shuffle) {
      std::vector<int> order(g.clauses.size());
      for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
      for (std::size_t i = order.size(); i > 1; --i)
        std::swap(order[i - 1], order[rng.next_below(i)]);
      CHECK(core.same_clause_set(naive_peel(g, order)));
    }
    CHECK(hypercore(core).same_clause_set(core));
  }
}

TEST_CASE("hypercore: empty below the core-emergence threshold") {
  // k=3 at alpha=0.5, far below the core threshold: the core should be
  // empty in nearly all samples.
  int empty = 0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    EnsembleParams p{100000, 3, 0.5, EnsembleMode::fixed_count, derive_seed(77, seed)};
    empty += (hypercore(sample_graph(p)).n_clauses() == 0);
  }
  CHECK(empty >= 48);
}

TEST_CASE("degree profile") {
  auto g = Graph::make(3, 3, {{0, 1, 2}});
  CHECK(degree_profile(g) == std::vector<int>{1, 1, 1});

  Graph empty;
  empty.n_qubits = 5;
  empty.k = 2;
  CHECK(degree_profile(empty) == std::vector<int>(5, 0));

  CHECK(degree_profile(bundled_instance('b'))[5] == 7);
}

TEST_CASE("graph JSON round trip") {
  auto g = bundled_instance('a');
  auto g2 = graph_from_json(graph_to_json(g));
  CHECK(g2.n_qubits == g.n_qubits);
  CHECK(g2.k == g.k);
  CHECK(g2.clauses == g.clauses);

  CHECK_THROWS_AS(graph_from_json("{"), InvalidParameters);
  CHECK_THROWS_AS(graph_from_json("{\"n_qubits\":3}"), InvalidParameters);
}
