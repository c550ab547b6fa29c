// Seeded, splittable PRNG.
//
// Every randomized procedure in this project takes an explicit Rng so runs are
// replayable from a single seed. split() derives an independent child stream;
// parent and child never share output, and the derivation depends only on the
// parent state and the tag, so per-trial generators can be created in any
// order (or from worker threads) without changing results.
//
// The core is SplitMix64. We deliberately do not use <random> distributions:
// their algorithms are implementation-defined, and byte-for-byte determinism
// is part of this project's contract.
#pragma once

#include <cstdint>
#include <string_view>

namespace skl {

class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  // Next raw 64-bit output.
  uint64_t u64();

  // Uniform in [0, n). n must be nonzero. Unbiased (rejection).
  uint64_t below(uint64_t n);

  // Uniform in [lo, hi] (inclusive), any int64 range.
  int64_t range_i64(int64_t lo, int64_t hi);

  // Single fair bit / uniform double in [0, 1).
  int bit() { return static_cast<int>(u64() >> 63); }
  double unit();

  // Independent child stream. Advances this generator.
  Rng split(uint64_t tag);
  Rng split(std::string_view tag);

 private:
  uint64_t state_;
};

// SplitMix64 finalizer, also used as a general 64-bit mixer.
uint64_t mix64(uint64_t x);

}  // namespace skl
