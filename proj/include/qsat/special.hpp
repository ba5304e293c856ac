#pragma once

namespace qsat {

// Upper incomplete gamma Gamma(z, x) for z > 0, x >= 0, with
// Gamma(z, 0) = Gamma(z). Power series below x = z + 1, Lentz continued
// fraction above; relative error near machine precision.
double upper_incomplete_gamma(double z, double x);

}  // namespace qsat
