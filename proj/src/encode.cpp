#include "skl/encode.hpp"

#include <cstdio>

namespace skl::enc {

Writer::Writer(Tag tag) {
  buf_.assign(std::begin(kMagic), std::end(kMagic));
  buf_.push_back(static_cast<uint8_t>(tag));
}

void Writer::u32(uint32_t v) {
  for (int i = 0; i < 4; ++i) buf_.push_back(static_cast<uint8_t>(v >> (8 * i)));
}

void Writer::u64(uint64_t v) {
  for (int i = 0; i < 8; ++i) buf_.push_back(static_cast<uint8_t>(v >> (8 * i)));
}

void Writer::bytes(std::span<const uint8_t> data) {
  u64(data.size());
  buf_.insert(buf_.end(), data.begin(), data.end());
}

void Writer::bits(const Bitstring& b) {
  u64(b.size());
  const auto packed = b.to_bytes();
  buf_.insert(buf_.end(), packed.begin(), packed.end());
}

void Writer::raw(std::span<const uint8_t> data) { buf_.insert(buf_.end(), data.begin(), data.end()); }

Reader::Reader(std::span<const uint8_t> data, Tag expect) : data_(data) {
  need(5);
  for (int i = 0; i < 4; ++i) {
    if (data_[pos_ + i] != kMagic[i]) throw DecodeError("bad magic");
  }
  pos_ += 4;
  const uint8_t tag = data_[pos_++];
  if (tag != static_cast<uint8_t>(expect)) throw DecodeError("unexpected type tag");
}

void Reader::need(size_t n) const {
  if (pos_ + n > data_.size()) throw DecodeError("truncated stream");
}

uint8_t Reader::u8() {
  need(1);
  return data_[pos_++];
}

uint32_t Reader::u32() {
  need(4);
  uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v |= static_cast<uint32_t>(data_[pos_ + i]) << (8 * i);
  pos_ += 4;
  return v;
}

uint64_t Reader::u64() {
  need(8);
  uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<uint64_t>(data_[pos_ + i]) << (8 * i);
  pos_ += 8;
  return v;
}

std::vector<uint8_t> Reader::bytes() {
  const uint64_t len = u64();
  need(len);
  std::vector<uint8_t> out(data_.begin() + pos_, data_.begin() + pos_ + len);
  pos_ += len;
  return out;
}

Bitstring Reader::bits() {
  const uint64_t nbits = u64();
  const size_t nbytes = (nbits + 7) / 8;
  need(nbytes);
  std::vector<uint8_t> packed(data_.begin() + pos_, data_.begin() + pos_ + nbytes);
  pos_ += nbytes;
  Bitstring full = Bitstring::from_bytes(packed);
  return full.slice(0, nbits);
}

void Reader::expect_end() const {
  if (pos_ != data_.size()) throw DecodeError("trailing bytes");
}

uint64_t fnv1a64(std::span<const uint8_t> data) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (uint8_t b : data) {
    h ^= b;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex_digest(std::span<const uint8_t> data) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(fnv1a64(data)));
  return std::string(buf);
}

}  // namespace skl::enc
