#include "qsat/lanczos.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "qsat/rng.hpp"

namespace qsat {

namespace {

Eigen::VectorXcd random_unit(SplitMix64& rng, Eigen::Index dim) {
  Eigen::VectorXcd v(dim);
  for (Eigen::Index i = 0; i < dim; ++i) v[i] = rng.next_complex_normal();
  v /= v.norm();
  return v;
}

// Two-pass classical Gram-Schmidt of w against the first `count` columns.
void orthogonalize(const Eigen::MatrixXcd& basis, int count, Eigen::VectorXcd& w,
                   Eigen::VectorXcd& coeffs) {
  coeffs.setZero(count);
  for (int pass = 0; pass < 2; ++pass) {
    const auto b = basis.leftCols(count);
    const Eigen::VectorXcd h = b.adjoint() * w;
    w.noalias() -= b * h;
    coeffs.head(count) += h;
  }
}

}  // namespace

LanczosResult lowest_eigenpair(
    const std::function<void(const Eigen::VectorXcd&, Eigen::VectorXcd&)>& apply,
    Eigen::Index dim, const LanczosOptions& opts) {
  LanczosResult result;
  SplitMix64 rng(opts.seed);

  const int max_basis =
      std::max(2, static_cast<int>(std::min<Eigen::Index>(opts.max_basis, dim)));
  const int keep = std::clamp(opts.keep, 1, max_basis - 1);

  Eigen::MatrixXcd basis(dim, max_basis + 1);
  Eigen::MatrixXcd proj = Eigen::MatrixXcd::Zero(max_basis + 1, max_basis + 1);
  Eigen::VectorXcd w(dim), coeffs(max_basis + 1);

  basis.col(0) = random_unit(rng, dim);
  int j = 0;           // current basis size - 1 (index of newest vector)
  int locked = 0;      // leading diagonal block of Ritz values after restart
  bool exhausted = false;  // basis spans an invariant subspace exactly

  while (result.matvecs < opts.max_matvecs && !exhausted) {
    // Expand by one Lanczos vector.
    apply(basis.col(j), w);
    ++result.matvecs;
    orthogonalize(basis, j + 1, w, coeffs);
    for (int i = 0; i <= j; ++i) {
      proj(i, j) = coeffs[i];
      proj(j, i) = std::conj(coeffs[i]);
    }
    proj(j, j) = std::complex<double>(proj(j, j).real(), 0.0);
    const double beta = w.norm();
    const double scale = std::max(1.0, proj.topLeftCorner(j + 1, j + 1).norm());
    if (beta <= 1e-14 * scale) {
      // Invariant subspace: refresh with a random orthogonal direction or
      // accept the exact projected spectrum if the space is spanned.
      if (j + 1 >= dim) {
        exhausted = true;
      } else {
        w = random_unit(rng, dim);
        Eigen::VectorXcd dummy;
        orthogonalize(basis, j + 1, w, dummy);
        const double nrm = w.norm();
        if (nrm <= 1e-8) {
          exhausted = true;
        } else {
          w /= nrm;
          proj(j + 1, j) = proj(j, j + 1) = 0.0;
          basis.col(j + 1) = w;
        }
      }
    } else {
      proj(j + 1, j) = beta;
      proj(j, j + 1) = beta;
      basis.col(j + 1) = w / beta;
    }

    const int size = j + 1;
    const bool must_check = exhausted || size == max_basis ||
                            result.matvecs >= opts.max_matvecs ||
                            (size % opts.check_interval == 0 && size > locked);
    if (must_check) {
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(
          proj.topLeftCorner(size, size));
      const double theta = es.eigenvalues()[0];
      const double beta_out = exhausted ? 0.0 : std::abs(proj(size, size - 1));
      const double resid = beta_out * std::abs(es.eigenvectors().col(0)[size - 1]);
      result.theta = theta;
      result.residual = resid;
      const double theta_span =
          std::max(std::abs(es.eigenvalues()[size - 1]), std::abs(theta));
      result.converged =
          exhausted || resid <= 1e-13 * std::max(theta_span, 1.0) ||
          (opts.early_exit_below > 0 && theta < opts.early_exit_below) ||
          (opts.certify_above > 0 && theta - resid > opts.certify_above);
      if (result.converged) return result;

      if (size == max_basis) {
        // Thick restart: keep the lowest Ritz vectors plus the next
        // Lanczos vector; the projected matrix becomes diagonal with a
        // border row coupling to the new vector.
        const Eigen::MatrixXcd ritz =
            basis.leftCols(size) * es.eigenvectors().leftCols(keep);
        const Eigen::VectorXcd border =
            beta_out * es.eigenvectors().row(size - 1).head(keep).adjoint();
        basis.leftCols(keep) = ritz;
        basis.col(keep) = basis.col(size);
        proj.setZero();
        for (int i = 0; i < keep; ++i) {
          proj(i, i) = es.eigenvalues()[i];
          proj(i, keep) = border[i];
          proj(keep, i) = std::conj(border[i]);
        }
        locked = keep;
        j = keep;
        continue;
      }
    }
    ++j;
  }
  return result;
}

}  // namespace qsat
