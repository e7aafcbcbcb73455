#pragma once

#include <cstdint>

namespace pairvec {

// Counter-free splitmix64 stream. We own the generator (no std distributions)
// so that keyed streams are bit-reproducible across platforms and so that
// parallel shards agree with serial runs: every consumer derives its stream
// from (seed, key_a, key_b) instead of sharing one mutable generator.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(mix(seed ^ 0x9e3779b97f4a7c15ull)) {}

  static Rng keyed(uint64_t seed, uint64_t a, uint64_t b = 0) {
    uint64_t s = mix(seed + 0x9e3779b97f4a7c15ull);
    s = mix(s ^ mix(a + 0xbf58476d1ce4e5b9ull));
    s = mix(s ^ mix(b + 0x94d049bb133111ebull));
    Rng r(0);
    r.state_ = s;
    return r;
  }

  uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ull;
    return mix(state_);
  }

  // [0, 1), 53-bit resolution
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  float next_float() { return static_cast<float>(next_u64() >> 40) * 0x1.0p-24f; }

  // unbiased integer in [0, n)
  uint64_t next_below(uint64_t n) {
    if (n <= 1) return 0;
    uint64_t limit = ~uint64_t{0} - ~uint64_t{0} % n;
    uint64_t v;
    do {
      v = next_u64();
    } while (v >= limit);
    return v % n;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  bool bernoulli(double p) { return next_double() < p; }

 private:
  static uint64_t mix(uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  uint64_t state_;
};

}  // namespace pairvec
