#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace tfpack {

inline uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Seeded PRNG stream. All randomized stages draw from one of these, and
/// substreams are derived by salting the root seed, so results depend only
/// on (inputs, seed) and never on scheduling or platform.
class Rng {
 public:
  explicit Rng(uint64_t seed) : seed_(seed), engine_(splitmix64(seed)) {}

  /// Independent substream for a pipeline stage or round.
  Rng derive(uint64_t salt) const { return Rng(splitmix64(seed_ ^ splitmix64(salt))); }

  uint64_t next() { return engine_(); }

  /// Uniform integer in [0, bound). Masked rejection; unbiased and portable.
  uint64_t uniform_index(uint64_t bound) {
    if (bound <= 1) return 0;
    uint64_t mask = ~uint64_t{0} >> __builtin_clzll((bound - 1) | 1);
    for (;;) {
      uint64_t r = engine_() & mask;
      if (r < bound) return r;
    }
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) {
      size_t j = static_cast<size_t>(uniform_index(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace tfpack
