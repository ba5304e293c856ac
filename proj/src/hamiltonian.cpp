#include "qsat/hamiltonian.hpp"

#include <complex>
#include <vector>

#include "qsat/bits.hpp"
#include "qsat/errors.hpp"

namespace qsat {

namespace {

void check_dims(const Graph& g, const ProjectorSet& proj, const Eigen::VectorXcd& in) {
  if (g.n_qubits > 30) throw LimitExceeded("apply_hamiltonian: N exceeds 30");
  if (proj.n_clauses() != g.n_clauses() || proj.k != g.k)
    throw DimensionMismatch("apply_hamiltonian: projector set does not match graph");
  if (in.size() != (std::int64_t{1} << g.n_qubits))
    throw DimensionMismatch("apply_hamiltonian: state dimension is not 2^N");
}

}  // namespace

void apply_hamiltonian(const Graph& g, const ProjectorSet& proj,
                       const Eigen::VectorXcd& in, Eigen::VectorXcd& out) {
  check_dims(g, proj, in);
  out.setZero(in.size());
  const int n = g.n_qubits;
  const int k = g.k;
  const std::int64_t local_dim = std::int64_t{1} << k;
  const std::int64_t n_fibers = std::int64_t{1} << (n - k);

  std::vector<std::uint64_t> offs(local_dim);
  std::vector<std::complex<double>> amps(local_dim);
  for (int m = 0; m < g.n_clauses(); ++m) {
    const Clause& clause = g.clauses[m];
    const Eigen::VectorXcd& phi = proj.states[m];
    for (std::int64_t l = 0; l < local_dim; ++l) offs[l] = deposit(l, clause);
    for (std::int64_t r = 0; r < n_fibers; ++r) {
      const std::uint64_t base = expand_outside(r, clause);
      std::complex<double> overlap = 0.0;
      for (std::int64_t l = 0; l < local_dim; ++l) {
        amps[l] = in[base | offs[l]];
        overlap += std::conj(phi[l]) * amps[l];
      }
      for (std::int64_t l = 0; l < local_dim; ++l)
        out[base | offs[l]] += phi[l] * overlap;
    }
  }
}

Eigen::VectorXcd apply_hamiltonian(const Graph& g, const ProjectorSet& proj,
                                   const Eigen::VectorXcd& in) {
  Eigen::VectorXcd out;
  apply_hamiltonian(g, proj, in, out);
  return out;
}

Eigen::MatrixXcd dense_hamiltonian(const Graph& g, const ProjectorSet& proj) {
  const int n = g.n_qubits;
  if (n > 30) throw LimitExceeded("dense_hamiltonian: N exceeds 30");
  if (proj.n_clauses() != g.n_clauses() || proj.k != g.k)
    throw DimensionMismatch("dense_hamiltonian: projector set does not match graph");
  const std::int64_t dim = std::int64_t{1} << n;
  const std::int64_t local_dim = std::int64_t{1} << g.k;
  const std::int64_t n_fibers = std::int64_t{1} << (n - g.k);

  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dim, dim);
  std::vector<std::uint64_t> offs(local_dim);
  for (int m = 0; m < g.n_clauses(); ++m) {
    const Clause& clause = g.clauses[m];
    const Eigen::VectorXcd& phi = proj.states[m];
    for (std::int64_t l = 0; l < local_dim; ++l) offs[l] = deposit(l, clause);
    for (std::int64_t r = 0; r < n_fibers; ++r) {
      const std::uint64_t base = expand_outside(r, clause);
      for (std::int64_t l = 0; l < local_dim; ++l)
        for (std::int64_t l2 = 0; l2 < local_dim; ++l2)
          h(base | offs[l], base | offs[l2]) += phi[l] * std::conj(phi[l2]);
    }
  }
  return h;
}

}  // namespace qsat
