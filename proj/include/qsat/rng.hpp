#pragma once

#include <cmath>
#include <complex>
#include <cstdint>

namespace qsat {

// splitmix64 output finalizer.
inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// SplitMix64: counter-based 64-bit generator. Output i is a pure function
// of (seed, i), namely mix64(seed + (i+1)*gamma), so streams are bit
// reproducible across platforms. All distributions below use explicit
// arithmetic on its output; none rely on std:: distributions, whose
// sequences are implementation defined.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() { return mix64(state_ += 0x9e3779b97f4a7c15ull); }

  // Uniform in [0, 1), 53-bit resolution.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform in (0, 1]; safe as a log() argument.
  double next_double_pos() {
    return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
  }

  // Uniform integer in [0, n), n > 0, unbiased via rejection.
  std::uint64_t next_below(std::uint64_t n) {
    const std::uint64_t threshold = (0 - n) % n;  // 2^64 mod n
    for (;;) {
      const std::uint64_t x = next_u64();
      if (x >= threshold) return x % n;
    }
  }

  // Standard normal via Box-Muller; the second member of each pair is
  // cached.
  double next_normal() {
    if (has_cached_) {
      has_cached_ = false;
      return cached_;
    }
    const double u1 = next_double_pos();
    const double u2 = next_double();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * M_PI * u2;
    cached_ = r * std::sin(a);
    has_cached_ = true;
    return r * std::cos(a);
  }

  // Standard complex normal, E|z|^2 = 1.
  std::complex<double> next_complex_normal() {
    const double re = next_normal();
    const double im = next_normal();
    return {re * M_SQRT1_2, im * M_SQRT1_2};
  }

 private:
  std::uint64_t state_;
  double cached_ = 0.0;
  bool has_cached_ = false;
};

// Derived stream for parallel work items; results are then independent of
// scheduling. Equals the splitmix64 counter stream of `master` evaluated at
// counter `index`.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  return mix64(master + 0x9e3779b97f4a7c15ull * (index + 1));
}

// Draws Binomial(n, p). `n` is a real count and may be astronomically
// large (e.g. N choose k for N = 1e5); the pmf is inverted starting from
// the mode, whose log-probability is evaluated without cancellation.
std::uint64_t sample_binomial(SplitMix64& rng, double n, double p);

}  // namespace qsat
