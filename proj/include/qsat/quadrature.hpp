#pragma once

#include <functional>

namespace qsat {

// Adaptive Gauss-Kronrod (7-15) quadrature with interval bisection. The
// error estimate per interval is |K15 - G7|; intervals split until the
// local estimate meets the tolerance budget. Throws QuadratureFailure when
// the subdivision depth is exhausted first.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol = 1e-10, double rel_tol = 1e-12, int max_depth = 48);

}  // namespace qsat
