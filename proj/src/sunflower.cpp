#include "qsat/sunflower.hpp"

#include <cmath>

#include "qsat/errors.hpp"
#include "qsat/quadrature.hpp"
#include "qsat/special.hpp"

namespace qsat {

namespace {

void validate(int k, double alpha) {
  if (k < 3) throw InvalidParameters("sunflower: need k >= 3");
  if (!(alpha > 0.0)) throw InvalidParameters("sunflower: need alpha > 0");
}

double base_terms(int k, double alpha) {
  return std::log(2.0) + alpha * std::log1p(-std::pow(2.0, 1 - k));
}

// h(q) = (1 - g(q)) / q with g(q) = Int_0^1 exp(-q t^{k-1}) dt. The series
// form avoids the 1 - g cancellation at small q; the closed form uses the
// incomplete gamma above it.
double one_minus_g_over_q(int k, double q, double z, double gamma_z) {
  if (q < 0.75) {
    double term = -1.0;  // holds -(-q)^{j-1}/j! at j = 1
    double sum = 0.0;
    for (int j = 1; j < 200; ++j) {
      const double contrib = -term / (j * (k - 1) + 1.0);
      sum += contrib;
      if (std::abs(contrib) < 1e-18 * std::abs(sum) + 1e-300) return sum;
      term *= -q / (j + 1);
    }
    return sum;
  }
  const double g =
      z * std::pow(q, -z) * (gamma_z - upper_incomplete_gamma(z, q));
  return (1.0 - g) / q;
}

}  // namespace

double sunflower_entropy(int k, double alpha) {
  validate(k, alpha);
  const double d_max = std::ldexp(1.0, k) - 2.0;  // 2^k - 2
  const double z = 1.0 / (k - 1);
  const double gamma_z = std::tgamma(z);
  const double ka = static_cast<double>(k) * alpha;

  const auto integrand = [&](double s) {
    // e^{-s}/s (1 - g(q)) rewritten as e^{-s} * k alpha * r(s) * h(q)
    // with r = -expm1(-s/D)/s; finite for all s >= 0.
    const double em = -std::expm1(-s / d_max);
    const double r = em / s;
    const double q = ka * em;
    return std::exp(-s) * ka * r * one_minus_g_over_q(k, q, z, gamma_z);
  };
  const double integral = integrate(integrand, 0.0, 38.0, 1e-10, 1e-12);
  return base_terms(k, alpha) + integral;
}

double sunflower_entropy_poisson(int k, double alpha) {
  validate(k, alpha);
  if (static_cast<double>(k) * alpha > 1e4)
    throw LimitExceeded("sunflower_entropy_poisson: k*alpha too large");
  const double d_max = std::ldexp(1.0, k) - 2.0;
  const double ka = static_cast<double>(k) * alpha;

  const auto average = [&](double t) {
    const double mu = ka * std::pow(t, k - 1);
    double w = std::exp(-mu);
    double cum = w;
    double sum = 0.0;  // d = 0 contributes log1p(0) = 0
    const double cap = mu + 20.0 * std::sqrt(mu + 1.0) + 60.0;
    for (double d = 1.0; d <= cap; d += 1.0) {
      w *= mu / d;
      cum += w;
      sum += w * std::log1p(d / d_max);
      if (1.0 - cum < 1e-12) break;
    }
    return sum;
  };
  const double integral = integrate(average, 0.0, 1.0, 1e-11, 1e-12);
  return base_terms(k, alpha) + integral;
}

BoundResult sunflower_alpha_upper(int k) {
  if (k < 3) throw InvalidParameters("sunflower_alpha_upper: need k >= 3");

  double lo = 1e-6;
  double s_lo = sunflower_entropy(k, lo);
  if (!(s_lo > 0)) throw NoBracket("sunflower_alpha_upper: S not positive near 0");
  double hi = 1.0, s_hi = sunflower_entropy(k, hi);
  while (s_hi > 0) {
    lo = hi;
    s_lo = s_hi;
    hi *= 2.0;
    if (hi > 1e18) throw NoBracket("sunflower_alpha_upper: no sign change found");
    s_hi = sunflower_entropy(k, hi);
  }

  while ((hi - lo) > 1e-6 * hi) {
    const double mid = 0.5 * (lo + hi);
    const double s_mid = sunflower_entropy(k, mid);
    if (s_mid > 0) {
      lo = mid;
      s_lo = s_mid;
    } else {
      hi = mid;
      s_hi = s_mid;
    }
  }

  BoundResult result;
  result.k = k;
  result.alpha_upper = 0.5 * (lo + hi);
  result.bracket_lo = lo;
  result.bracket_hi = hi;
  result.entropy_lo = s_lo;
  result.entropy_hi = s_hi;
  if (k == 3) result.note = "sunflower, superseded by nosegay in Table I";
  return result;
}

}  // namespace qsat
