#include "skl/rng.hpp"

#include <limits>

namespace skl {

uint64_t mix64(uint64_t x) {
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

uint64_t Rng::u64() {
  state_ += 0x9e3779b97f4a7c15ULL;
  return mix64(state_);
}

uint64_t Rng::below(uint64_t n) {
  // Classic rejection against the largest multiple of n, so no modulo bias.
  const uint64_t limit = std::numeric_limits<uint64_t>::max() - (std::numeric_limits<uint64_t>::max() % n);
  uint64_t x;
  do {
    x = u64();
  } while (x >= limit && limit != 0);
  return x % n;
}

int64_t Rng::range_i64(int64_t lo, int64_t hi) {
  const uint64_t span = static_cast<uint64_t>(hi) - static_cast<uint64_t>(lo) + 1;
  if (span == 0) return static_cast<int64_t>(u64());  // full 64-bit range
  return static_cast<int64_t>(static_cast<uint64_t>(lo) + below(span));
}

double Rng::unit() {
  // 53 high bits -> [0,1) with full double resolution.
  return static_cast<double>(u64() >> 11) * 0x1.0p-53;
}

Rng Rng::split(uint64_t tag) {
  // Child seed depends on the parent position and the tag; advancing the
  // parent keeps successive anonymous splits distinct.
  const uint64_t here = u64();
  return Rng(mix64(here ^ mix64(tag ^ 0xa5a5a5a55a5a5a5aULL)));
}

Rng Rng::split(std::string_view tag) {
  // FNV-1a over the tag, then the integer split path.
  uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : tag) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return split(h);
}

}  // namespace skl
