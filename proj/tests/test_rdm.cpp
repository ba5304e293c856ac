#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qsat/errors.hpp"
#include "qsat/homotopy.hpp"
#include "qsat/instances.hpp"
#include "qsat/kernel.hpp"
#include "qsat/rdm.hpp"
#include "qsat/rng.hpp"

using namespace qsat;

namespace {

Eigen::VectorXcd random_state(std::uint64_t seed, Eigen::Index dim) {
  SplitMix64 rng(seed);
  Eigen::VectorXcd v(dim);
  for (Eigen::Index i = 0; i < dim; ++i) v[i] = rng.next_complex_normal();
  return v / v.norm();
}

}  // namespace

TEST_CASE("product states have rank-1 reductions") {
  const auto s = random_product_state(6, 17);
  const auto psi = product_state_vector(s);
  for (auto gamma : {std::vector<int>{0}, {1, 3}, {0, 2, 4, 5}}) {
    const auto rho = reduced_density_matrix(psi, 6, gamma);
    CHECK(rdm_rank_report(rho, gamma).rank == 1);
  }
}

TEST_CASE("maximally entangled pair: rank 2, eigenvalues one half") {
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(4);
  psi[0b01] = M_SQRT1_2;   // |q0=1, q1=0>
  psi[0b10] = -M_SQRT1_2;  // |q0=0, q1=1>
  const auto rho = reduced_density_matrix(psi, 2, {0});
  const auto report = rdm_rank_report(rho, {0});
  CHECK(report.rank == 2);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho, Eigen::EigenvaluesOnly);
  CHECK(std::abs(es.eigenvalues()[0] - 0.5) < 1e-12);
  CHECK(std::abs(es.eigenvalues()[1] - 0.5) < 1e-12);
}

TEST_CASE("reductions are PSD with unit trace") {
  SplitMix64 rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 5 + static_cast<int>(rng.next_below(3));
    const auto psi = random_state(derive_seed(900, trial), 1 << n);
    std::vector<int> gamma;
    for (int q = 0; q < n; ++q)
      if (rng.next_below(2)) gamma.push_back(q);
    if (gamma.empty() || static_cast<int>(gamma.size()) == n) continue;
    const auto rho = reduced_density_matrix(psi, n, gamma);
    CHECK(std::abs(rho.trace().real() - 1.0) < 1e-10);
    CHECK(std::abs(rho.trace().imag()) < 1e-12);
    CHECK((rho - rho.adjoint()).norm() < 1e-12);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho, Eigen::EigenvaluesOnly);
    CHECK(es.eigenvalues()[0] > -1e-12);
  }
}

TEST_CASE("Schmidt symmetry: complementary subsets have equal rank") {
  SplitMix64 rng(29);
  const int n = 7;
  for (int trial = 0; trial < 8; ++trial) {
    const auto psi = random_state(derive_seed(910, trial), 1 << n);
    std::vector<int> gamma, rest;
    for (int q = 0; q < n; ++q)
      (rng.next_below(2) ? gamma : rest).push_back(q);
    if (gamma.empty() || rest.empty()) continue;
    const auto r1 = rdm_rank_report(reduced_density_matrix(psi, n, gamma), gamma);
    const auto r2 = rdm_rank_report(reduced_density_matrix(psi, n, rest), rest);
    CHECK(r1.rank == r2.rank);
  }
}

TEST_CASE("rank of mixtures is bounded by the restricted span dimension") {
  SplitMix64 rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 4 + static_cast<int>(rng.next_below(4));        // 4..7
    const int n0 = 1 + static_cast<int>(rng.next_below(6));       // 1..6
    std::vector<ProductState> span;
    for (int i = 0; i < n0; ++i)
      span.push_back(random_product_state(n, derive_seed(derive_seed(920, trial), i)));

    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(1 << n);
    for (const auto& s : span) psi += rng.next_complex_normal() * product_state_vector(s);
    psi /= psi.norm();

    std::vector<int> gamma;
    for (int q = 0; q < n; ++q)
      if (rng.next_below(2)) gamma.push_back(q);
    if (gamma.empty() || static_cast<int>(gamma.size()) == n) continue;

    const int rank = rdm_rank_report(reduced_density_matrix(psi, n, gamma), gamma).rank;
    const int restricted = product_span_restricted_rank(span, gamma);
    CHECK(rank <= restricted);
    CHECK(restricted <= n0);
  }
}

TEST_CASE("restricted span rank basics") {
  const auto s = random_product_state(5, 41);
  CHECK(product_span_restricted_rank({s}, {0, 2}) == 1);

  std::vector<ProductState> states{random_product_state(5, 42),
                                   random_product_state(5, 43),
                                   random_product_state(5, 44)};
  for (auto gamma : {std::vector<int>{0}, {1, 2}, {0, 1, 2, 3, 4}}) {
    const int restricted = product_span_restricted_rank(states, gamma);
    CHECK(restricted <= product_span_rank(states));
    CHECK(restricted >= 1);
  }
  // A single qubit supports a span of dimension at most 2.
  CHECK(product_span_restricted_rank(states, {3}) <= 2);
}

TEST_CASE("k=2 path: product kernel family has rank N+1, subtrees |gamma|+1") {
  // Ground states of a generic k=2 chain: collect distinct product
  // solutions by multistart search; their span saturates at N+1 and
  // restriction to a subtree gives |gamma|+1.
  const int n = 6;
  auto g = Graph::make(n, 2, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}});
  auto p = sample_projectors(g, 404, ProjectorForm::generic);

  std::vector<ProductState> found;
  for (int attempt = 0; attempt < 60 && found.size() < 25; ++attempt) {
    // Polished to near machine precision so that span ranks are clean.
    auto s = multistart_product_search(g, p, 1, derive_seed(405, attempt), 1e-24);
    if (!s) continue;
    bool fresh = true;
    for (const auto& prev : found) fresh &= !states_equal(prev, *s);
    if (fresh) found.push_back(*s);
  }
  REQUIRE(found.size() >= 10);
  CHECK(product_span_rank(found) == n + 1);
  CHECK(product_span_restricted_rank(found, {0, 1, 2}) == 4);
  CHECK(product_span_restricted_rank(found, {0, 1}) == 3);
}

TEST_CASE("histogram: bundled instance a is bounded by its kernel dimension") {
  auto g = bundled_instance('a');
  auto p = sample_projectors(g, 5150, ProjectorForm::generic);
  auto basis = ground_space_basis(g, p);
  REQUIRE(basis.size() == 16);
  auto hist = rank_histogram(basis, g.n_qubits, 5, 1e-10, 616);
  std::int64_t total = 0;
  int max_rank = 0;
  for (const auto& [rank, count] : hist.counts) {
    total += count;
    max_rank = std::max(max_rank, rank);
  }
  CHECK(total == 252);
  CHECK(max_rank <= 16);
  CHECK_FALSE(hist.any_marginal);

  // Same seed reproduces the histogram.
  auto hist2 = rank_histogram(basis, g.n_qubits, 5, 1e-10, 616);
  CHECK(hist.counts == hist2.counts);
}

TEST_CASE("histogram guards") {
  std::vector<Eigen::VectorXcd> basis{random_state(1, 1 << 10)};
  CHECK_THROWS_AS(rank_histogram({}, 10, 5, 1e-10, 1), InvalidParameters);
  CHECK_THROWS_AS(rank_histogram(basis, 10, 0, 1e-10, 1), InvalidParameters);
  std::vector<Eigen::VectorXcd> big{random_state(2, 1 << 20)};
  CHECK_THROWS_AS(rank_histogram(big, 20, 10, 1e-10, 1), LimitExceeded);
}

TEST_CASE("rdm input validation") {
  const auto psi = random_state(3, 16);
  CHECK_THROWS_AS(reduced_density_matrix(psi, 4, {0, 4}), DimensionMismatch);
  CHECK_THROWS_AS(reduced_density_matrix(psi, 4, {1, 1}), DimensionMismatch);
  CHECK_THROWS_AS(reduced_density_matrix(psi, 5, {0}), DimensionMismatch);
}
