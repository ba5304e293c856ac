#include "qsat/rdm.hpp"

#include <algorithm>
#include <cmath>

#include "qsat/bits.hpp"
#include "qsat/errors.hpp"
#include "qsat/graph.hpp"
#include "qsat/rng.hpp"

namespace qsat {

namespace {

void validate_subset(int n_qubits, std::vector<int>& gamma) {
  std::sort(gamma.begin(), gamma.end());
  for (std::size_t i = 0; i < gamma.size(); ++i) {
    if (gamma[i] < 0 || gamma[i] >= n_qubits)
      throw DimensionMismatch("rdm: subset index out of range");
    if (i > 0 && gamma[i] == gamma[i - 1])
      throw DimensionMismatch("rdm: repeated subset index");
  }
}

int rank_at(const Eigen::VectorXd& eigs, double tol) {
  int r = 0;
  for (Eigen::Index i = 0; i < eigs.size(); ++i) r += (eigs[i] > tol);
  return r;
}

}  // namespace

Eigen::MatrixXcd reduced_density_matrix(const Eigen::VectorXcd& psi, int n_qubits,
                                        std::vector<int> gamma) {
  validate_subset(n_qubits, gamma);
  const int b = static_cast<int>(gamma.size());
  if (b > 12) throw LimitExceeded("rdm: subset larger than 12 qubits");
  if (psi.size() != (std::int64_t{1} << n_qubits))
    throw DimensionMismatch("rdm: state dimension is not 2^N");

  const std::int64_t dim_g = std::int64_t{1} << b;
  const std::int64_t dim_r = std::int64_t{1} << (n_qubits - b);
  std::vector<std::uint64_t> offs(dim_g);
  for (std::int64_t g = 0; g < dim_g; ++g) offs[g] = deposit(g, gamma);

  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(dim_g, dim_g);
  for (std::int64_t r = 0; r < dim_r; ++r) {
    const std::uint64_t base = expand_outside(r, gamma);
    for (std::int64_t g1 = 0; g1 < dim_g; ++g1) {
      const std::complex<double> a1 = psi[base | offs[g1]];
      for (std::int64_t g2 = 0; g2 <= g1; ++g2)
        rho(g1, g2) += a1 * std::conj(psi[base | offs[g2]]);
    }
  }
  for (std::int64_t g1 = 0; g1 < dim_g; ++g1)
    for (std::int64_t g2 = g1 + 1; g2 < dim_g; ++g2)
      rho(g1, g2) = std::conj(rho(g2, g1));
  return rho;
}

RdmReport rdm_rank_report(const Eigen::MatrixXcd& rho, std::vector<int> subset,
                          double tol) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd eigs = es.eigenvalues();  // ascending

  RdmReport report;
  report.subset = std::move(subset);
  report.tol = tol;
  report.rank = rank_at(eigs, tol);
  report.marginal =
      rank_at(eigs, tol / 10) != report.rank || rank_at(eigs, tol * 10) != report.rank;

  const int zero_count = static_cast<int>(eigs.size()) - report.rank;
  const int lo = std::max(0, zero_count - 3);
  const int hi = std::min<int>(static_cast<int>(eigs.size()), zero_count + 3);
  for (int i = lo; i < hi; ++i) report.spectrum_near_threshold.push_back(eigs[i]);
  return report;
}

RankHistogram rank_histogram(const std::vector<Eigen::VectorXcd>& ground_basis,
                             int n_qubits, int b, double tol, std::uint64_t seed) {
  if (ground_basis.empty())
    throw InvalidParameters("rank_histogram: empty ground basis");
  if (b < 1 || b > n_qubits)
    throw InvalidParameters("rank_histogram: bad subset size");
  if (binomial_coefficient(n_qubits, b) > 1e4)
    throw LimitExceeded("rank_histogram: C(N,b) exceeds 10^4 subsets");

  // One generic diagnostic state for the whole histogram.
  SplitMix64 rng(seed);
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(ground_basis.front().size());
  for (const auto& vec : ground_basis) psi += rng.next_complex_normal() * vec;
  psi /= psi.norm();

  RankHistogram hist;
  hist.subset_size = b;
  hist.diagnostic_seed = seed;

  std::vector<int> gamma(b);
  for (int i = 0; i < b; ++i) gamma[i] = i;
  for (;;) {
    const auto rho = reduced_density_matrix(psi, n_qubits, gamma);
    const auto report = rdm_rank_report(rho, gamma, tol);
    ++hist.counts[report.rank];
    hist.any_marginal |= report.marginal;

    // Next lexicographic combination.
    int i = b - 1;
    while (i >= 0 && gamma[i] == n_qubits - b + i) --i;
    if (i < 0) break;
    ++gamma[i];
    for (int j = i + 1; j < b; ++j) gamma[j] = gamma[j - 1] + 1;
  }
  return hist;
}

int product_span_restricted_rank(const std::vector<ProductState>& states,
                                 const std::vector<int>& gamma) {
  if (states.empty())
    throw InvalidParameters("product_span_restricted_rank: empty state list");
  std::vector<int> sorted_gamma = gamma;
  validate_subset(states.front().n(), sorted_gamma);

  const int count = static_cast<int>(states.size());
  Eigen::MatrixXcd gram(count, count);
  for (int a = 0; a < count; ++a) {
    for (int c = 0; c <= a; ++c) {
      std::complex<double> g = 1.0;
      for (int q : sorted_gamma) g *= states[c].sites[q].dot(states[a].sites[q]);
      gram(a, c) = g;
      gram(c, a) = std::conj(g);
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(gram, Eigen::EigenvaluesOnly);
  const double top = es.eigenvalues().maxCoeff();
  if (top <= 0) return 0;
  int rank = 0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
    rank += (es.eigenvalues()[i] > 1e-10 * top);
  return rank;
}

}  // namespace qsat
