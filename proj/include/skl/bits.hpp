// Fixed-length bitstrings with the small algebra the certified-deletion
// mechanics need: XOR, GF(2) inner products, slicing and concatenation.
// Stored LSB-first in 64-bit words; bit i of the string is word i/64, bit i%64.
#pragma once

#include <cstdint>
#include <cstddef>
#include <string>
#include <vector>

#include "skl/rng.hpp"

namespace skl {

class Bitstring {
 public:
  Bitstring() = default;
  explicit Bitstring(size_t n) : n_(n), w_((n + 63) / 64, 0) {}

  static Bitstring random(size_t n, Rng& rng);
  static Bitstring from_bytes(const std::vector<uint8_t>& bytes);  // 8 bits per byte, LSB-first
  static Bitstring from_string(std::string_view zeros_and_ones);

  size_t size() const { return n_; }
  bool empty() const { return n_ == 0; }

  int get(size_t i) const { return static_cast<int>((w_[i >> 6] >> (i & 63)) & 1); }
  void set(size_t i, int v) {
    const uint64_t mask = uint64_t{1} << (i & 63);
    if (v)
      w_[i >> 6] |= mask;
    else
      w_[i >> 6] &= ~mask;
  }
  void flip(size_t i) { w_[i >> 6] ^= uint64_t{1} << (i & 63); }

  // XOR of equal-length strings.
  Bitstring operator^(const Bitstring& o) const;
  Bitstring& operator^=(const Bitstring& o);

  // GF(2) inner product <a,b> = parity of AND.
  int dot(const Bitstring& o) const;

  size_t popcount() const;

  Bitstring slice(size_t start, size_t len) const;
  Bitstring concat(const Bitstring& o) const;

  bool operator==(const Bitstring& o) const { return n_ == o.n_ && w_ == o.w_; }
  bool operator!=(const Bitstring& o) const { return !(*this == o); }

  // Low ceil(n/8) bytes, LSB-first (inverse of from_bytes up to padding bits).
  std::vector<uint8_t> to_bytes() const;
  std::string to_string() const;  // "0"/"1" characters, index 0 first

  // Value of the whole string read as a little-endian integer (n <= 64).
  uint64_t as_uint() const;

  const std::vector<uint64_t>& words() const { return w_; }

 private:
  void clear_padding();
  size_t n_ = 0;
  std::vector<uint64_t> w_;
};

}  // namespace skl
