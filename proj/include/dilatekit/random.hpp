#pragma once

#include <array>
#include <cstdint>

namespace dilatekit {

/// SplitMix64 finalizer; also used to derive independent seeds.
constexpr std::uint64_t splitmix64_mix(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Seed for trial `index` of a run with `master` seed. Independent of
/// execution order, so serial and parallel runs agree.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) noexcept {
  return splitmix64_mix(master ^ splitmix64_mix(index + 0x9E3779B97F4A7C15ULL));
}

/// xoshiro256** seeded through SplitMix64. Deviates are produced with
/// portable arithmetic only, so a seed yields the same stream everywhere.
class Xoshiro256 {
 public:
  explicit Xoshiro256(std::uint64_t seed) noexcept;

  std::uint64_t next() noexcept;
  /// Uniform on [0, 1) with 53 random bits.
  double uniform() noexcept;
  double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * uniform(); }
  /// Uniform integer in [lo, hi].
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) noexcept;
  /// Standard normal via Box-Muller; caches the second deviate.
  double gaussian() noexcept;

 private:
  std::array<std::uint64_t, 4> state_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace dilatekit
