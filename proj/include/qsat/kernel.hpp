#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qsat/graph.hpp"
#include "qsat/projectors.hpp"

namespace qsat {

// Generic ground-space dimension with the tolerance evidence that
// certifies it.
struct KernelResult {
  int dimension = 0;
  // Eigenvalues nearest the decision threshold, a few from each side.
  std::vector<double> spectrum_evidence;
  double tol = 0.0;       // zero threshold actually used
  bool marginal = false;  // count unstable across a tolerance decade, or the
                          // smallest retained eigenvalue sits within 1e3 of tol
  std::string method = "dense";
};

// Counts eigenvalues of H below tol via full dense eigendecomposition.
// tol <= 0 selects the default 1e-10 * max(largest eigenvalue, 1).
// Requires N <= dense_limit.
KernelResult kernel_dimension(const Graph& g, const ProjectorSet& proj,
                              double tol = 0.0, int dense_limit = 14);

// Orthonormal basis of the span of eigenvectors with eigenvalue < tol;
// returns the single lowest eigenvector when the kernel is empty.
std::vector<Eigen::VectorXcd> ground_space_basis(const Graph& g,
                                                 const ProjectorSet& proj,
                                                 double tol = 0.0,
                                                 int dense_limit = 14);

enum class Verdict { SAT, UNSAT, UNDECIDED };

const char* to_string(Verdict v);

struct SatVerdict {
  Verdict verdict = Verdict::UNDECIDED;
  double min_eigenvalue = 0.0;  // best available estimate
  int iterations = 0;           // matrix applications consumed
  double residual = 0.0;        // final Ritz residual estimate
};

// Smallest-eigenvalue test by thick-restart Lanczos on apply_hamiltonian.
// SAT when the estimate certifies an eigenvalue below tol_zero, UNSAT when
// a converged estimate exceeds tol_gap, UNDECIDED in between or on
// non-convergence within max_iters matrix applications.
SatVerdict decide_sat(const Graph& g, const ProjectorSet& proj,
                      double tol_zero = 1e-10, double tol_gap = 1e-8,
                      int max_iters = 5000, int iter_limit = 24,
                      std::uint64_t seed = 0x1f2e3d4c);

}  // namespace qsat
