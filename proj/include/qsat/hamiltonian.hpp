#pragma once

#include <Eigen/Dense>

#include "qsat/graph.hpp"
#include "qsat/projectors.hpp"

namespace qsat {

// out += sum_m |phi^m><phi^m| psi, each projector acting on its clause's
// qubits. Qubit n owns bit n of the basis index; within a clause, local
// bit j belongs to the j-th (sorted) member. Cost O(M 2^N). Requires
// N <= 30 and dim(psi) = 2^N.
void apply_hamiltonian(const Graph& g, const ProjectorSet& proj,
                       const Eigen::VectorXcd& in, Eigen::VectorXcd& out);

Eigen::VectorXcd apply_hamiltonian(const Graph& g, const ProjectorSet& proj,
                                   const Eigen::VectorXcd& in);

// Dense 2^N x 2^N Hermitian matrix of the same operator; checked against
// apply_hamiltonian column by column in the tests.
Eigen::MatrixXcd dense_hamiltonian(const Graph& g, const ProjectorSet& proj);

}  // namespace qsat
