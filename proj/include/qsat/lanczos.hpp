#pragma once

#include <cstdint>
#include <functional>

#include <Eigen/Dense>

namespace qsat {

struct LanczosOptions {
  int max_matvecs = 5000;
  int max_basis = 160;     // restart when the basis reaches this size
  int keep = 24;           // Ritz vectors retained on restart
  int check_interval = 8;  // iterations between convergence checks
  // Stop as soon as the lowest Ritz value drops below this bound: being a
  // variational upper bound, it already certifies an eigenvalue below.
  double early_exit_below = -1.0;
  // Stop once theta - residual exceeds this bound: the Ritz interval
  // [theta - r, theta + r] then sits entirely above it.
  double certify_above = -1.0;
  std::uint64_t seed = 0x9d2c5680;
};

struct LanczosResult {
  double theta = 0.0;     // lowest Ritz value
  double residual = 0.0;  // |H y - theta y| for its Ritz vector
  int matvecs = 0;
  bool converged = false;  // any stop condition other than budget exhaustion
};

// Lowest eigenpair of a Hermitian operator by thick-restart Lanczos with
// full reorthogonalization. `apply` must implement out = H * in.
LanczosResult lowest_eigenpair(
    const std::function<void(const Eigen::VectorXcd&, Eigen::VectorXcd&)>& apply,
    Eigen::Index dim, const LanczosOptions& opts);

}  // namespace qsat
