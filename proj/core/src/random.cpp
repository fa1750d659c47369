#include "congruence/random.hpp"

#include <bit>

namespace congruence {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

Xoshiro256::Xoshiro256(std::uint64_t seed, std::uint64_t stream) : seed_(seed), stream_(stream) {
  std::uint64_t st = seed;
  std::uint64_t mixed_stream = stream;
  st ^= splitmix64(mixed_stream);
  for (auto& w : s_) w = splitmix64(st);
}

Xoshiro256::result_type Xoshiro256::operator()() {
  const std::uint64_t result = std::rotl(s_[1] * 5, 7) * 9;
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = std::rotl(s_[3], 45);
  return result;
}

std::int64_t Xoshiro256::uniform(std::int64_t lo, std::int64_t hi) {
  const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
  if (range == 0) return static_cast<std::int64_t>((*this)());
  // rejection sampling to avoid modulo bias
  const std::uint64_t limit = max() - max() % range;
  std::uint64_t x;
  do {
    x = (*this)();
  } while (x >= limit);
  return lo + static_cast<std::int64_t>(x % range);
}

Xoshiro256 Xoshiro256::split(std::uint64_t stream) const {
  return Xoshiro256(seed_, stream_ * 0x100000001B3ULL + stream + 1);
}

}  // namespace congruence
