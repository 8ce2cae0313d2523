#pragma once

#include <complex>
#include <cstdint>

namespace holoform {

/// SplitMix64 generator (Steele, Lea, Flood 2014). Chosen as the project-wide
/// PRNG because the sequence is fully specified by the seed and trivially
/// reproducible in any language: state += 0x9E3779B97F4A7C15, then two
/// xor-shift-multiply mixing rounds. All sampling in the suites derives from
/// this stream, so a (seed, samples) pair pins every residual bit-for-bit.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Standard normal via Box-Muller; consumes exactly two uniforms per call.
  double gauss() {
    double u1 = uniform();
    double u2 = uniform();
    if (u1 < 0x1.0p-60) u1 = 0x1.0p-60;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
  }

  std::complex<double> gauss_complex() {
    double re = gauss();
    double im = gauss();
    return {re, im};
  }

 private:
  uint64_t state_;
};

}  // namespace holoform
