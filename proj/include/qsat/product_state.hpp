#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "qsat/graph.hpp"
#include "qsat/matching.hpp"
#include "qsat/projectors.hpp"

namespace qsat {

// Tensor-factor assignment: one unit 2-vector per qubit.
struct ProductState {
  std::vector<Eigen::Vector2cd> sites;

  int n() const { return static_cast<int>(sites.size()); }
};

// Stereographic chart record: in the active chart the state is
// proportional to (z, 1); the flipped chart (1, w) covers the pole. The
// flipped chart is active when |psi_0| > |psi_1|, keeping |coord| <= 1.
struct ChartRecord {
  std::complex<double> coord;
  bool flipped = false;
};

ChartRecord chart_of(const Eigen::Vector2cd& psi);

// Unit vector orthogonal to psi (unique up to phase).
Eigen::Vector2cd perp(const Eigen::Vector2cd& psi);

ProductState random_product_state(int n_qubits, std::uint64_t seed);

// Clause overlaps c_m = <phi^m | psi_{m_1} x ... x psi_{m_k}>; the state
// satisfies clause m exactly when c_m = 0.
Eigen::VectorXcd clause_overlaps(const std::vector<Clause>& clauses,
                                 const ProjectorSet& proj, const ProductState& s);

// Residual energy sum_m |c_m|^2; zero iff every clause is satisfied.
double energy_of_product_state(const std::vector<Clause>& clauses,
                               const ProjectorSet& proj, const ProductState& s);
double energy_of_product_state(const Graph& g, const ProjectorSet& proj,
                               const ProductState& s);

// Exact zero-energy state at product projectors: each covered qubit is set
// orthogonal to its clause's local factor, uncovered qubits are set
// Haar-randomly from `seed`.
ProductState product_seed_state(int n_qubits, const std::vector<Clause>& clauses,
                                const ProjectorSet& proj_product, const Matching& cover,
                                std::uint64_t seed);
ProductState product_seed_state(const Graph& g, const ProjectorSet& proj_product,
                                const Matching& cover, std::uint64_t seed);

// Gram matrix of full product states via per-site overlap products; the
// 2^N vectors are never materialized.
Eigen::MatrixXcd product_gram(const std::vector<ProductState>& states);

// Numerical rank of the Gram matrix (eigenvalues above 1e-10 x largest).
// Lower-bounds the generic kernel dimension when the states are
// zero-energy.
int product_span_rank(const std::vector<ProductState>& states);

// Full 2^N amplitude vector (N <= 24).
Eigen::VectorXcd product_state_vector(const ProductState& s);

// Equal up to per-qubit phase: |<psi_n|psi'_n>| > 1 - tol for all n.
bool states_equal(const ProductState& a, const ProductState& b, double tol = 1e-8);

}  // namespace qsat
