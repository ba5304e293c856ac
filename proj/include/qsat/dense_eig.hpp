#pragma once

#include <vector>

#include <Eigen/Dense>

namespace qsat {

// Eigenvalues of a Hermitian matrix, ascending. Destroys the input.
std::vector<double> hermitian_eigenvalues(Eigen::MatrixXcd& a);

// Full eigendecomposition: returns eigenvalues ascending and replaces the
// input with the corresponding orthonormal eigenvector columns.
std::vector<double> hermitian_eigendecomposition(Eigen::MatrixXcd& a);

}  // namespace qsat
