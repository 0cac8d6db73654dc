#pragma once

#include <cstdint>

namespace ftqc {

// splitmix64 step: advances `state` and returns the next output. Used for
// seeding and for deriving independent stream seeds.
inline uint64_t splitmix64_next(uint64_t& state) {
  uint64_t z = (state += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Derives the seed of an independent stream for (seed, stream). Streams with
// distinct indices never share xoshiro state, which keeps chunked Monte Carlo
// runs byte-identical regardless of how chunks are scheduled.
inline uint64_t stream_seed(uint64_t seed, uint64_t stream) {
  uint64_t st = seed;
  uint64_t h = splitmix64_next(st);
  st = h ^ (stream * 0x9E3779B97F4A7C15ull + 0xD1342543DE82EF95ull);
  return splitmix64_next(st);
}

// xoshiro256** generator (public-domain construction by Blackman/Vigna).
class Xoshiro256 {
 public:
  explicit Xoshiro256(uint64_t seed) {
    uint64_t sm = seed;
    for (auto& w : s_) w = splitmix64_next(sm);
  }
  Xoshiro256(uint64_t seed, uint64_t stream)
      : Xoshiro256(stream_seed(seed, stream)) {}

  uint64_t next() {
    const uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  // Uniform double in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  bool coin() { return next() >> 63; }

 private:
  static uint64_t rotl(uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }
  uint64_t s_[4];
};

}  // namespace ftqc
