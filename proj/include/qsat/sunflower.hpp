#pragma once

#include <string>

namespace qsat {

// Entropy-density upper bound S(k, alpha) on the zero-energy subspace of
// the random ensemble; its root in alpha upper-bounds the SAT/unSAT
// transition. Computed from the single-integral representation
//
//   S = ln 2 + alpha ln(1 - 2^{1-k})
//     + Int_0^inf ds e^{-s}/s (1 - q^{-1/(k-1)}/(k-1) gamma(1/(k-1), q)),
//
// q(s) = k alpha (1 - e^{-s/(2^k-2)}), by adaptive quadrature with the
// s -> 0 limit handled analytically and the tail cut where e^{-s} drops
// below 1e-16. Requires k >= 3 and alpha > 0.
double sunflower_entropy(int k, double alpha);

// Independent cross-check: the double representation
//   S = ln 2 + alpha ln(1 - 2^{1-k}) + Int_0^1 dt < ln(1 + d/(2^k-2)) >_t
// with the average over d taken against Poisson weights of mean
// k alpha t^{k-1}, truncated at tail mass 1e-12. Practical for
// k * alpha <= ~1e4.
double sunflower_entropy_poisson(int k, double alpha);

struct BoundResult {
  int k = 0;
  double alpha_upper = 0.0;
  double bracket_lo = 0.0, bracket_hi = 0.0;  // verified sign change
  double entropy_lo = 0.0, entropy_hi = 0.0;  // S at the bracket ends
  std::string note;
};

// Root of S(k, alpha) = 0 by bisection to relative precision 1e-6 with a
// verified sign-change bracket. For k = 3 the result carries a note that
// a stricter published bound supersedes it.
BoundResult sunflower_alpha_upper(int k);

}  // namespace qsat
