#include "qsat/rng.hpp"

#include <algorithm>
#include <cmath>

#include "qsat/errors.hpp"

namespace qsat {
namespace {

// ln Gamma(n+1) - ln Gamma(n-m+1) for huge n, where direct lgamma
// subtraction would cancel catastrophically. Stirling through the 1/(12z)
// term; the next term is O(1/z^3) and negligible for z >= 1e6.
double lgamma_ratio(double n, double m) {
  if (n <= 1e6) return std::lgamma(n + 1.0) - std::lgamma(n - m + 1.0);
  const double a = n + 1.0;
  const double b = n - m + 1.0;
  return (a - 0.5) * std::log1p(m / b) + m * (std::log(b) - 1.0) +
         (1.0 / 12.0) * (1.0 / a - 1.0 / b);
}

double log_binomial_pmf(double n, double p, double m) {
  return lgamma_ratio(n, m) - std::lgamma(m + 1.0) + m * std::log(p) +
         (n - m) * std::log1p(-p);
}

}  // namespace

std::uint64_t sample_binomial(SplitMix64& rng, double n, double p) {
  if (!(n >= 0.0) || !(p >= 0.0) || !(p <= 1.0))
    throw InvalidParameters("sample_binomial: need n >= 0 and p in [0, 1]");
  if (n < 1.0 || p == 0.0) return 0;
  if (p == 1.0) return static_cast<std::uint64_t>(n);

  const double u = rng.next_double();
  const double mode = std::floor((n + 1.0) * p);
  const double pm = std::exp(log_binomial_pmf(n, p, mode));
  const double odds = p / (1.0 - p);

  // Walk outward from the mode, alternating sides, until the cumulative
  // probability passes u. The number of steps is O(sd) with certainty
  // bounds far beyond double precision at 60 sds.
  const double sd = std::sqrt(std::max(n * p * (1.0 - p), 1.0));
  const double max_steps = 60.0 * sd + 60.0;

  double cum = pm;
  double lo = mode, lo_p = pm;
  double hi = mode, hi_p = pm;
  double last = mode;
  if (u <= cum) return static_cast<std::uint64_t>(mode);
  for (double step = 0.0; step < max_steps; step += 1.0) {
    if (hi < n) {
      hi_p *= (n - hi) / (hi + 1.0) * odds;
      hi += 1.0;
      cum += hi_p;
      last = hi;
      if (u <= cum) return static_cast<std::uint64_t>(hi);
    }
    if (lo > 0.0) {
      lo_p *= lo / (n - lo + 1.0) / odds;
      lo -= 1.0;
      cum += lo_p;
      last = lo;
      if (u <= cum) return static_cast<std::uint64_t>(lo);
    }
  }
  // Rounding left a sliver of unreached mass; the walked range already
  // covers everything representable.
  return static_cast<std::uint64_t>(last);
}

}  // namespace qsat
