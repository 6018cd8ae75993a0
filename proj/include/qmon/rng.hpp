// Deterministic random streams and counter-based seed derivation.
#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace qmon {

// splitmix64 finalizer; bijective on 64-bit integers.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

inline constexpr std::uint64_t kSeedStride = 0x9E3779B97F4A7C15ull;

// Seed of substream `index` under `seed`. Injective in `index` for a fixed
// `seed` (odd stride times index is injective mod 2^64, and mix64 is a
// bijection), so growing an ensemble never perturbs existing runs.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  return mix64(seed ^ (kSeedStride * (index + 1)));
}

// Seeded stream over std::mt19937_64. The engine is fully specified by the
// standard; uniforms are built from raw 64-bit draws so sequences do not
// depend on the standard library's distribution implementations.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, 1), 53 random bits.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double a, double b) { return a + (b - a) * uniform01(); }

  // Standard normal via Box-Muller; caches the second value of each pair.
  double normal() {
    if (have_cached_) {
      have_cached_ = false;
      return cached_;
    }
    double u1 = uniform01();
    while (u1 <= 0.0) u1 = uniform01();
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double phi = 2.0 * std::numbers::pi * u2;
    cached_ = r * std::sin(phi);
    have_cached_ = true;
    return r * std::cos(phi);
  }

  std::uint64_t raw() { return engine_(); }

 private:
  std::mt19937_64 engine_;
  double cached_ = 0.0;
  bool have_cached_ = false;
};

}  // namespace qmon
