#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include <Eigen/Dense>

#include "qsat/product_state.hpp"

namespace qsat {

// Rank diagnostic of a reduced density matrix on a qubit subset.
struct RdmReport {
  std::vector<int> subset;
  int rank = 0;
  // Eigenvalues bracketing the zero threshold, a few from each side.
  std::vector<double> spectrum_near_threshold;
  double tol = 1e-10;
  bool marginal = false;  // rank unstable under tol x/div 10
};

// Partial trace of |psi><psi| over the complement of `gamma`. Hermitian,
// positive semidefinite, unit trace. Requires |gamma| <= 12 and
// dim(psi) = 2^n_qubits.
Eigen::MatrixXcd reduced_density_matrix(const Eigen::VectorXcd& psi, int n_qubits,
                                        std::vector<int> gamma);

RdmReport rdm_rank_report(const Eigen::MatrixXcd& rho, std::vector<int> subset,
                          double tol = 1e-10);

struct RankHistogram {
  std::map<int, std::int64_t> counts;  // rank -> number of subsets
  int subset_size = 0;
  std::uint64_t diagnostic_seed = 0;
  bool any_marginal = false;
};

// Tallies RDM ranks over every size-b qubit subset for a single diagnostic
// state: a seeded Haar-random unit vector in the span of `ground_basis`
// (the basis itself when it has one element). Requires C(N, b) <= 10^4.
RankHistogram rank_histogram(const std::vector<Eigen::VectorXcd>& ground_basis,
                             int n_qubits, int b, double tol, std::uint64_t seed);

// Dimension of the span of the gamma-restricted product vectors, computed
// from per-site overlap products over gamma only.
int product_span_restricted_rank(const std::vector<ProductState>& states,
                                 const std::vector<int>& gamma);

}  // namespace qsat
