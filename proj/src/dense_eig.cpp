#include "qsat/dense_eig.hpp"

#include <complex>

#include <lapacke.h>

#include "qsat/errors.hpp"

namespace qsat {

namespace {

std::vector<double> zheevd(Eigen::MatrixXcd& a, char jobz) {
  const lapack_int n = static_cast<lapack_int>(a.rows());
  if (a.cols() != a.rows()) throw DimensionMismatch("zheevd: matrix not square");
  std::vector<double> w(static_cast<std::size_t>(n));
  const lapack_int info = LAPACKE_zheevd(
      LAPACK_COL_MAJOR, jobz, 'L', n,
      reinterpret_cast<lapack_complex_double*>(a.data()), n, w.data());
  if (info != 0) throw Error("zheevd: eigensolver failed, info=" + std::to_string(info));
  return w;
}

}  // namespace

std::vector<double> hermitian_eigenvalues(Eigen::MatrixXcd& a) {
  return zheevd(a, 'N');
}

std::vector<double> hermitian_eigendecomposition(Eigen::MatrixXcd& a) {
  return zheevd(a, 'V');
}

}  // namespace qsat
