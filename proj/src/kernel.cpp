#include "qsat/kernel.hpp"

#include <algorithm>
#include <cmath>

#include "qsat/dense_eig.hpp"
#include "qsat/errors.hpp"
#include "qsat/hamiltonian.hpp"
#include "qsat/lanczos.hpp"

namespace qsat {

namespace {

int count_below(const std::vector<double>& w, double tol) {
  int c = 0;
  for (double x : w) c += (x < tol);
  return c;
}

double default_tol(const std::vector<double>& w, double tol) {
  if (tol > 0) return tol;
  const double top = w.empty() ? 0.0 : w.back();
  return 1e-10 * std::max(top, 1.0);
}

}  // namespace

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::SAT:
      return "SAT";
    case Verdict::UNSAT:
      return "UNSAT";
    default:
      return "UNDECIDED";
  }
}

KernelResult kernel_dimension(const Graph& g, const ProjectorSet& proj, double tol,
                              int dense_limit) {
  if (g.n_qubits > dense_limit)
    throw LimitExceeded("kernel_dimension: N exceeds the dense limit");
  Eigen::MatrixXcd h = dense_hamiltonian(g, proj);
  const std::vector<double> w = hermitian_eigenvalues(h);

  KernelResult result;
  result.tol = default_tol(w, tol);
  result.dimension = count_below(w, result.tol);
  result.marginal = count_below(w, result.tol / 10) != result.dimension ||
                    count_below(w, result.tol * 10) != result.dimension;

  // The decision is certified only when the first retained eigenvalue
  // clears the threshold by three decades.
  if (result.dimension < static_cast<int>(w.size())) {
    const double smallest_nonzero = w[result.dimension];
    if (smallest_nonzero < 1e3 * result.tol) result.marginal = true;
  }

  const int lo = std::max(0, result.dimension - 4);
  const int hi = std::min<int>(static_cast<int>(w.size()), result.dimension + 4);
  result.spectrum_evidence.assign(w.begin() + lo, w.begin() + hi);
  return result;
}

std::vector<Eigen::VectorXcd> ground_space_basis(const Graph& g,
                                                 const ProjectorSet& proj, double tol,
                                                 int dense_limit) {
  if (g.n_qubits > dense_limit)
    throw LimitExceeded("ground_space_basis: N exceeds the dense limit");
  Eigen::MatrixXcd h = dense_hamiltonian(g, proj);
  const std::vector<double> w = hermitian_eigendecomposition(h);
  const double t = default_tol(w, tol);
  const int dim = count_below(w, t);

  std::vector<Eigen::VectorXcd> basis;
  if (dim == 0) {
    basis.emplace_back(h.col(0));
  } else {
    basis.reserve(dim);
    for (int i = 0; i < dim; ++i) basis.emplace_back(h.col(i));
  }
  return basis;
}

SatVerdict decide_sat(const Graph& g, const ProjectorSet& proj, double tol_zero,
                      double tol_gap, int max_iters, int iter_limit,
                      std::uint64_t seed) {
  if (!(tol_gap > tol_zero && tol_zero > 0))
    throw InvalidParameters("decide_sat: need 0 < tol_zero < tol_gap");
  if (g.n_clauses() == 0) return {Verdict::SAT, 0.0, 0, 0.0};  // H = 0
  if (g.n_qubits > iter_limit)
    throw LimitExceeded("decide_sat: N exceeds the iterative limit");

  const Eigen::Index dim = Eigen::Index{1} << g.n_qubits;
  LanczosOptions opts;
  opts.max_matvecs = max_iters;
  opts.early_exit_below = tol_zero;
  opts.certify_above = tol_gap;
  opts.seed = seed;
  // Cap basis memory at roughly 1 GB.
  const Eigen::Index mem_cap =
      std::max<Eigen::Index>(8, (std::int64_t{1} << 30) / (16 * dim));
  opts.max_basis = static_cast<int>(std::min<Eigen::Index>(opts.max_basis, mem_cap));
  opts.keep = std::min(opts.keep, std::max(2, opts.max_basis / 4));

  const LanczosResult lr = lowest_eigenpair(
      [&](const Eigen::VectorXcd& in, Eigen::VectorXcd& out) {
        apply_hamiltonian(g, proj, in, out);
      },
      dim, opts);

  SatVerdict verdict;
  verdict.min_eigenvalue = lr.theta;
  verdict.iterations = lr.matvecs;
  verdict.residual = lr.residual;
  if (lr.theta < tol_zero) {
    // Ritz values bound the smallest eigenvalue from above.
    verdict.verdict = Verdict::SAT;
  } else if (lr.theta - lr.residual > tol_gap) {
    // The certified Ritz interval sits above the gap threshold.
    verdict.verdict = Verdict::UNSAT;
  } else {
    verdict.verdict = Verdict::UNDECIDED;
  }
  return verdict;
}

}  // namespace qsat
