#pragma once

#include <array>
#include <cstdint>
#include <limits>

namespace congruence {

inline constexpr std::uint64_t kDefaultSeed = 0x5EED;

/// xoshiro256** seeded from a 64-bit seed through splitmix64. Independent
/// streams are derived from (seed, stream index), so oracles can draw
/// separate randomness for each retry without sharing state.
class Xoshiro256 {
 public:
  using result_type = std::uint64_t;

  explicit Xoshiro256(std::uint64_t seed = kDefaultSeed, std::uint64_t stream = 0);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()();

  /// Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);

  /// Child generator for an independent stream.
  Xoshiro256 split(std::uint64_t stream) const;

  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::array<std::uint64_t, 4> s_{};
};

std::uint64_t splitmix64(std::uint64_t& state);

}  // namespace congruence
