#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string_view>

namespace autoqml {

namespace detail {

// splitmix64: the usual finalizer-style mixer, used both to spread seed
// entropy and to derive independent sub-streams from one master seed.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace detail

// Deterministic RNG with explicit seeding and named sub-streams.  Every
// random decision in the library flows through one of these, so a run is
// fully reproducible from (master_seed, spec_id, run_index).
class Rng {
 public:
  explicit Rng(std::uint64_t seed)
      : seed_(seed), engine_(detail::splitmix64(seed)) {}

  // Uniform double in [0, 1) with 53 random bits.
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Standard normal via Box-Muller (one value per call; no caching so the
  // stream position stays easy to reason about).
  double normal() {
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    constexpr double two_pi = 6.283185307179586476925286766559;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(two_pi * u2);
  }

  double normal(double mean, double std) { return mean + std * normal(); }

  // Uniform integer in [0, n), rejection-sampled to avoid modulo bias.
  std::uint64_t uniform_int(std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x = engine_();
    while (x >= limit) x = engine_();
    return x % n;
  }

  // Independent generator for a named concern ("init", "disc", ...), so
  // adding draws to one phase never shifts another phase's stream.
  Rng substream(std::string_view name) const {
    return Rng(detail::splitmix64(seed_ ^ detail::fnv1a(name)));
  }

  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

// Seed for (spec, run) under a master seed.  The string hash makes the
// derivation stable across platforms and insensitive to grid ordering.
inline std::uint64_t derive_run_seed(std::string_view spec_id,
                                     std::uint64_t run_index,
                                     std::uint64_t master_seed) {
  std::uint64_t h = detail::fnv1a(spec_id);
  h = detail::splitmix64(h ^ detail::splitmix64(master_seed));
  return detail::splitmix64(h + run_index);
}

}  // namespace autoqml
