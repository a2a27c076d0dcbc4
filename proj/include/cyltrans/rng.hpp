#pragma once

#include <cstdint>

namespace cylt {

// SplitMix64 (Steele/Lea/Vigna). Chosen over the platform engines because the
// whole sequence is pinned by the algorithm: identical seeds give identical
// corpora on every platform and standard library.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1), 53 mantissa bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform integer in [0, n).
  uint64_t below(uint64_t n) { return next() % n; }

  // Derived generator for an independent sub-stream.
  SplitMix64 fork(uint64_t tag) {
    return SplitMix64(next() ^ (tag * 0xd6e8feb86659fd93ULL));
  }

 private:
  uint64_t state_;
};

}  // namespace cylt
