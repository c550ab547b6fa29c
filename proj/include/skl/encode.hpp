// Canonical binary encoding, shared repo-wide.
//
// Layout: magic "SKL1", then a one-byte type tag, then tag-specific fields.
// All integers are little-endian; variable-length fields carry a u64 length
// prefix. Encodings are canonical: equal objects produce identical bytes,
// which is what key-digest comparisons and the reuse checks rely on.
#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "skl/bits.hpp"
#include "skl/error.hpp"

namespace skl::enc {

inline constexpr uint8_t kMagic[4] = {'S', 'K', 'L', '1'};

// One tag per serialized top-level object kind.
enum class Tag : uint8_t {
  raw = 0x01,
  bitstring = 0x02,
  zq_matrix = 0x03,
  pke_keypair = 0x10,
  pke_ciphertext = 0x11,
  skl_public_key = 0x12,
  skl_decryption_key = 0x13,
  skl_verification_key = 0x14,
  skl_certificate = 0x15,
  ind_ciphertext = 0x16,
  teprf_key = 0x20,
  upf_master_key = 0x21,
  upf_leased_key = 0x22,
  upf_verification_key = 0x23,
  cs_vk = 0x30,
  cs_constrained_key = 0x31,
  cs_signature = 0x32,
  ds_leased_key = 0x40,
  ds_verification_keys = 0x41,
  ds_signature = 0x42,
  ds_certificate = 0x43,
  lattice_params = 0x50,
};

class Writer {
 public:
  explicit Writer(Tag tag);

  void u8(uint8_t v) { buf_.push_back(v); }
  void u32(uint32_t v);
  void u64(uint64_t v);
  void i64(int64_t v) { u64(static_cast<uint64_t>(v)); }
  void bytes(std::span<const uint8_t> data);        // length-prefixed
  void bits(const Bitstring& b);                    // bit length + packed bytes
  void raw(std::span<const uint8_t> data);          // no prefix (nested blobs)

  const std::vector<uint8_t>& buffer() const { return buf_; }
  std::vector<uint8_t> take() { return std::move(buf_); }

 private:
  std::vector<uint8_t> buf_;
};

class Reader {
 public:
  // Validates magic and the expected tag; throws DecodeError otherwise.
  Reader(std::span<const uint8_t> data, Tag expect);

  uint8_t u8();
  uint32_t u32();
  uint64_t u64();
  int64_t i64() { return static_cast<int64_t>(u64()); }
  std::vector<uint8_t> bytes();
  Bitstring bits();

  size_t remaining() const { return data_.size() - pos_; }
  void expect_end() const;

 private:
  void need(size_t n) const;
  std::span<const uint8_t> data_;
  size_t pos_ = 0;
};

// Non-cryptographic 64-bit digest (FNV-1a) used for human-readable artifact
// traces in CLI output. Not a security primitive.
uint64_t fnv1a64(std::span<const uint8_t> data);
std::string hex_digest(std::span<const uint8_t> data);

}  // namespace skl::enc
