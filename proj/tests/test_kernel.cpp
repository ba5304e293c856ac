#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qsat/errors.hpp"
#include "qsat/hamiltonian.hpp"
#include "qsat/instances.hpp"
#include "qsat/kernel.hpp"
#include "qsat/rng.hpp"

using namespace qsat;

namespace {

// Random tree on n qubits as a k=2 graph: each new node attaches to a
// uniformly random earlier one.
Graph random_tree(int n, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<Clause> edges;
  for (int v = 1; v < n; ++v) {
    const int u = static_cast<int>(rng.next_below(v));
    edges.push_back({std::min(u, v), std::max(u, v)});
  }
  return Graph::make(n, 2, edges);
}

}  // namespace

TEST_CASE("single k=2 clause on two qubits has kernel dimension 3") {
  auto g = Graph::make(2, 2, {{0, 1}});
  auto p = sample_projectors(g, 4, ProjectorForm::generic);
  auto r = kernel_dimension(g, p);
  CHECK(r.dimension == 3);
  CHECK_FALSE(r.marginal);
  CHECK(r.method == "dense");
}

TEST_CASE("k=2 trees have kernel dimension N+1") {
  for (int n : {5, 6, 7}) {
    auto g = random_tree(n, derive_seed(333, n));
    auto p = sample_projectors(g, derive_seed(334, n), ProjectorForm::generic);
    auto r = kernel_dimension(g, p);
    CHECK(r.dimension == n + 1);
    CHECK_FALSE(r.marginal);
  }
}

TEST_CASE("bundled instance c is frustrated") {
  auto g = bundled_instance('c');
  for (std::uint64_t seed : {1, 2}) {
    auto p = sample_projectors(g, seed, ProjectorForm::generic);
    auto r = kernel_dimension(g, p);
    CHECK(r.dimension == 0);
  }
}

TEST_CASE("explicit tolerance decisions can be marginal") {
  auto g = Graph::make(2, 2, {{0, 1}});
  auto p = sample_projectors(g, 4, ProjectorForm::generic);
  // Eigenvalues are {0, 0, 0, 1}: a threshold of 0.5 is unstable across
  // the surrounding decade, and 2e-3 fails the gap-ratio certificate.
  CHECK(kernel_dimension(g, p, 0.5).marginal);
  CHECK(kernel_dimension(g, p, 2e-3).marginal);
  CHECK_FALSE(kernel_dimension(g, p, 1e-6).marginal);
}

TEST_CASE("kernel evidence brackets the threshold") {
  auto g = Graph::make(2, 2, {{0, 1}});
  auto p = sample_projectors(g, 4, ProjectorForm::generic);
  auto r = kernel_dimension(g, p);
  REQUIRE(r.spectrum_evidence.size() == 4);
  CHECK(r.spectrum_evidence[2] < r.tol);
  CHECK(r.spectrum_evidence[3] > r.tol);
  CHECK(std::abs(r.spectrum_evidence[3] - 1.0) < 1e-9);
}

TEST_CASE("size limits") {
  Graph g;
  g.n_qubits = 15;
  g.k = 3;
  ProjectorSet p;
  p.k = 3;
  CHECK_THROWS_AS(kernel_dimension(g, p), LimitExceeded);
  CHECK_THROWS_AS(kernel_dimension(g, p, 0.0, 14), LimitExceeded);
}

TEST_CASE("ground space basis shapes") {
  auto g = bundled_instance('c');
  auto p = sample_projectors(g, 1, ProjectorForm::generic);
  auto basis = ground_space_basis(g, p);
  REQUIRE(basis.size() == 1);  // empty kernel: single lowest eigenvector
  const auto hv = apply_hamiltonian(g, p, basis[0]);
  CHECK(basis[0].dot(hv).real() > 0);

  Graph empty;
  empty.n_qubits = 2;
  empty.k = 2;
  ProjectorSet noproj;
  noproj.k = 2;
  auto full = ground_space_basis(empty, noproj);
  CHECK(full.size() == 4);
  for (std::size_t i = 0; i < full.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      const double expect = i == j ? 1.0 : 0.0;
      CHECK(std::abs(std::abs(full[i].dot(full[j])) - expect) < 1e-10);
    }
}

TEST_CASE("decide_sat: empty graph is SAT at exactly zero") {
  Graph empty;
  empty.n_qubits = 6;
  empty.k = 3;
  ProjectorSet none;
  none.k = 3;
  auto v = decide_sat(empty, none);
  CHECK(v.verdict == Verdict::SAT);
  CHECK(v.min_eigenvalue == 0.0);
}

TEST_CASE("decide_sat agrees with the dense kernel on small instances") {
  int sat_seen = 0, unsat_seen = 0;
  for (int trial = 0; trial < 30; ++trial) {
    SplitMix64 rng(derive_seed(606, trial));
    const int n = 5 + static_cast<int>(rng.next_below(2));  // 5..6
    EnsembleParams params{n, 3, 0.4 + 0.2 * static_cast<double>(rng.next_below(8)),
                          EnsembleMode::fixed_count, derive_seed(607, trial)};
    auto g = sample_graph(params);
    auto p = sample_projectors(g, derive_seed(608, trial), ProjectorForm::generic);
    const auto kd = kernel_dimension(g, p);
    const auto sv = decide_sat(g, p);
    if (kd.dimension > 0) {
      CHECK(sv.verdict == Verdict::SAT);
      ++sat_seen;
    } else {
      CHECK(sv.verdict == Verdict::UNSAT);
      ++unsat_seen;
    }
  }
  CHECK(sat_seen > 0);
  CHECK(unsat_seen > 0);
}

TEST_CASE("decide_sat validates tolerances") {
  auto g = Graph::make(2, 2, {{0, 1}});
  auto p = sample_projectors(g, 4, ProjectorForm::generic);
  CHECK_THROWS_AS(decide_sat(g, p, 1e-6, 1e-9), InvalidParameters);
}
