#include "skl/bits.hpp"

#include <bit>
#include <cassert>
#include <stdexcept>

namespace skl {

void Bitstring::clear_padding() {
  if (n_ % 64 != 0 && !w_.empty()) {
    w_.back() &= (uint64_t{1} << (n_ % 64)) - 1;
  }
}

Bitstring Bitstring::random(size_t n, Rng& rng) {
  Bitstring b(n);
  for (auto& w : b.w_) w = rng.u64();
  b.clear_padding();
  return b;
}

Bitstring Bitstring::from_bytes(const std::vector<uint8_t>& bytes) {
  Bitstring b(bytes.size() * 8);
  for (size_t i = 0; i < bytes.size(); ++i) {
    b.w_[i / 8] |= static_cast<uint64_t>(bytes[i]) << (8 * (i % 8));
  }
  return b;
}

Bitstring Bitstring::from_string(std::string_view s) {
  Bitstring b(s.size());
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] != '0' && s[i] != '1') throw std::invalid_argument("Bitstring::from_string: not a 0/1 string");
    if (s[i] == '1') b.set(i, 1);
  }
  return b;
}

Bitstring Bitstring::operator^(const Bitstring& o) const {
  Bitstring r = *this;
  r ^= o;
  return r;
}

Bitstring& Bitstring::operator^=(const Bitstring& o) {
  assert(n_ == o.n_);
  for (size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
  return *this;
}

int Bitstring::dot(const Bitstring& o) const {
  assert(n_ == o.n_);
  uint64_t parity = 0;
  for (size_t i = 0; i < w_.size(); ++i) parity ^= w_[i] & o.w_[i];
  return std::popcount(parity) & 1;
}

size_t Bitstring::popcount() const {
  size_t c = 0;
  for (uint64_t w : w_) c += static_cast<size_t>(std::popcount(w));
  return c;
}

Bitstring Bitstring::slice(size_t start, size_t len) const {
  assert(start + len <= n_);
  Bitstring r(len);
  for (size_t i = 0; i < len; ++i) r.set(i, get(start + i));
  return r;
}

Bitstring Bitstring::concat(const Bitstring& o) const {
  Bitstring r(n_ + o.n_);
  for (size_t i = 0; i < n_; ++i) r.set(i, get(i));
  for (size_t i = 0; i < o.n_; ++i) r.set(n_ + i, o.get(i));
  return r;
}

std::vector<uint8_t> Bitstring::to_bytes() const {
  std::vector<uint8_t> out((n_ + 7) / 8, 0);
  for (size_t i = 0; i < out.size(); ++i) {
    out[i] = static_cast<uint8_t>(w_[i / 8] >> (8 * (i % 8)));
  }
  return out;
}

std::string Bitstring::to_string() const {
  std::string s(n_, '0');
  for (size_t i = 0; i < n_; ++i)
    if (get(i)) s[i] = '1';
  return s;
}

uint64_t Bitstring::as_uint() const {
  assert(n_ <= 64);
  return w_.empty() ? 0 : w_[0];
}

}  // namespace skl
