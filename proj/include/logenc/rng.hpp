#pragma once

#include <cmath>
#include <cstdint>
#include <limits>

namespace logenc {

/// SplitMix64 finalizer. Bijective mixer, used both as the generator step
/// and to derive independent stream seeds.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Derive a child seed for stream `stream` of a base seed. Distinct streams
/// give statistically independent sequences.
constexpr std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
  return mix64(base ^ mix64(stream));
}

/// Counter-based generator: output k is a pure function of (seed, k), so
/// sequences are reproducible across platforms and evaluation orders.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  result_type operator()() { return mix64(state_++); }

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }

 private:
  std::uint64_t state_;
};

/// Uniform double in [0, 1). 53 mantissa bits.
inline double uniform01(SplitMix64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform integer in [lo, hi], inclusive.
inline long long uniform_int(SplitMix64& rng, long long lo, long long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long long>(rng() % span);
}

/// Standard normal via Box-Muller. Two uniforms per draw; no hidden state,
/// so sequences stay reproducible across standard libraries.
inline double standard_normal(SplitMix64& rng) {
  double u1 = uniform01(rng);
  while (u1 == 0.0) u1 = uniform01(rng);
  const double u2 = uniform01(rng);
  const double two_pi = 6.283185307179586476925286766559;
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(two_pi * u2);
}

}  // namespace logenc
