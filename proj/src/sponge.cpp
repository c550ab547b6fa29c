#include "skl/sponge.hpp"

#include <algorithm>

namespace skl {

namespace sponge_detail {

namespace {

inline uint64_t rotl(uint64_t v, int r) { return (v << r) | (v >> (64 - r)); }

// First 64 fractional bits of sqrt(p) for the first eight primes — the usual
// nothing-up-my-sleeve choice.
constexpr uint64_t kRound[8] = {
    0x6a09e667f3bcc908ull, 0xbb67ae8584caa73bull, 0x3c6ef372fe94f82bull, 0xa54ff53a5f1d36f1ull,
    0x510e527fade682d1ull, 0x9b05688c2b3e6c1full, 0x1f83d9abfb41bd6bull, 0x5be0cd19137e2179ull,
};

}  // namespace

void permute(uint64_t s[4]) {
  for (int r = 0; r < 8; ++r) {
    s[0] += s[1];
    s[3] ^= s[0];
    s[3] = rotl(s[3], 32);
    s[2] += s[3];
    s[1] ^= s[2];
    s[1] = rotl(s[1], 24);
    s[0] += s[1];
    s[3] ^= s[0];
    s[3] = rotl(s[3], 16);
    s[2] += s[3];
    s[1] ^= s[2];
    s[1] = rotl(s[1], 63);
    s[0] ^= kRound[r];
    // Rotate word roles so every word passes through every position.
    const uint64_t t = s[0];
    s[0] = s[1];
    s[1] = s[2];
    s[2] = s[3];
    s[3] = t;
  }
}

}  // namespace sponge_detail

namespace {

struct Absorber {
  // Initial state: round constants again; overwritten content-dependently by
  // the first absorptions.
  uint64_t s[4] = {0x6a09e667f3bcc908ull, 0xbb67ae8584caa73bull, 0x3c6ef372fe94f82bull,
                   0xa54ff53a5f1d36f1ull};

  void word(uint64_t w) {
    s[0] ^= w;
    sponge_detail::permute(s);
  }

  void field(const std::vector<uint8_t>& bytes) {
    word(bytes.size());
    // Little-endian word assembly, spelled out so the output is byte-order
    // independent.
    for (size_t i = 0; i < bytes.size(); i += 8) {
      uint64_t w = 0;
      const size_t chunk = std::min<size_t>(8, bytes.size() - i);
      for (size_t j = 0; j < chunk; ++j) w |= uint64_t{bytes[i + j]} << (8 * j);
      word(w);
    }
  }
};

}  // namespace

uint64_t sponge_prf64(const std::vector<uint8_t>& key, const std::vector<uint8_t>& data, uint64_t tweak) {
  Absorber a;
  a.field(key);
  a.field(data);
  a.word(tweak);
  sponge_detail::permute(a.s);
  return a.s[0];
}

int sponge_prf_bit(const std::vector<uint8_t>& key, const Bitstring& s) {
  return static_cast<int>(sponge_prf64(key, s.to_bytes(), s.size()) & 1);
}

}  // namespace skl
