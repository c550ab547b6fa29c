#include "skl/teprf.hpp"

#include <stdexcept>

#include "skl/error.hpp"
#include "skl/sponge.hpp"

namespace skl {

namespace {

constexpr size_t kHeaderBytes = 7;   // version, l (u16), key bits (u32)
constexpr size_t kSpongeKeyBytes = 16;

size_t target_bytes(size_t ell) { return (ell + 7) / 8; }

size_t table_bytes(size_t ell) { return ((size_t{1} << ell) + 7) / 8; }

struct KeyView {
  TeprfMode mode;
  size_t ell;
  std::vector<uint8_t> bytes;
};

KeyView parse_key(const Bitstring& sk) {
  if (sk.size() % 8 != 0 || sk.size() / 8 < kHeaderBytes) throw DecodeError("teprf key too short");
  KeyView v;
  v.bytes = sk.to_bytes();
  const uint8_t version = v.bytes[0];
  if (version != static_cast<uint8_t>(TeprfMode::Sponge) && version != static_cast<uint8_t>(TeprfMode::Table))
    throw DecodeError("teprf key version unknown");
  v.mode = static_cast<TeprfMode>(version);
  v.ell = static_cast<size_t>(v.bytes[1]) | (static_cast<size_t>(v.bytes[2]) << 8);
  if (v.ell < 1 || (v.mode == TeprfMode::Table && v.ell > kTeprfTableMaxEll))
    throw DecodeError("teprf key input length out of range");
  const uint32_t declared = static_cast<uint32_t>(v.bytes[3]) | (static_cast<uint32_t>(v.bytes[4]) << 8) |
                            (static_cast<uint32_t>(v.bytes[5]) << 16) | (static_cast<uint32_t>(v.bytes[6]) << 24);
  if (declared != sk.size() || teprf_key_bits(v.mode, v.ell) != sk.size())
    throw DecodeError("teprf key length field inconsistent");
  return v;
}

void put_header(std::vector<uint8_t>& out, TeprfMode mode, size_t ell, size_t total_bits) {
  out.push_back(static_cast<uint8_t>(mode));
  out.push_back(static_cast<uint8_t>(ell & 0xff));
  out.push_back(static_cast<uint8_t>((ell >> 8) & 0xff));
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<uint8_t>((total_bits >> (8 * i)) & 0xff));
}

}  // namespace

size_t teprf_key_bits(TeprfMode mode, size_t ell) {
  if (mode == TeprfMode::Sponge) return 8 * (kHeaderBytes + kSpongeKeyBytes + 2 * target_bytes(ell) + 1);
  return 8 * (kHeaderBytes + table_bytes(ell));
}

TeprfKeyPair teprf_keygen(TeprfMode mode, size_t ell, const Bitstring& s_star, Rng& rng) {
  if (ell < 1 || ell > 0xffff) throw std::invalid_argument("teprf input length out of range");
  if (s_star.size() != ell) throw std::invalid_argument("teprf target length mismatch");
  TeprfKeyPair pair;
  pair.target = s_star;
  const size_t total_bits = teprf_key_bits(mode, ell);

  if (mode == TeprfMode::Sponge) {
    std::vector<uint8_t> k(kSpongeKeyBytes);
    for (auto& byte : k) byte = static_cast<uint8_t>(rng.u64() & 0xff);
    std::vector<uint8_t> pad(target_bytes(ell));
    for (auto& byte : pad) byte = static_cast<uint8_t>(rng.u64() & 0xff);
    std::vector<uint8_t> masked = s_star.to_bytes();
    for (size_t i = 0; i < masked.size(); ++i) masked[i] ^= pad[i];

    for (int b = 0; b < 2; ++b) {
      std::vector<uint8_t> bytes;
      bytes.reserve(total_bits / 8);
      put_header(bytes, mode, ell, total_bits);
      bytes.insert(bytes.end(), k.begin(), k.end());
      bytes.insert(bytes.end(), pad.begin(), pad.end());
      bytes.insert(bytes.end(), masked.begin(), masked.end());
      bytes.push_back(static_cast<uint8_t>(b));
      (b ? pair.sk1 : pair.sk0) = Bitstring::from_bytes(bytes);
    }
    return pair;
  }

  if (ell > kTeprfTableMaxEll) throw std::invalid_argument("teprf table mode: input length too large");
  std::vector<uint8_t> table(table_bytes(ell));
  for (auto& byte : table) byte = static_cast<uint8_t>(rng.u64() & 0xff);
  // Zero the padding bits above 2^l so the two keys are canonical.
  const size_t entries = size_t{1} << ell;
  for (size_t i = entries; i < 8 * table.size(); ++i) table[i >> 3] &= static_cast<uint8_t>(~(1u << (i & 7)));

  for (int b = 0; b < 2; ++b) {
    std::vector<uint8_t> bytes;
    bytes.reserve(total_bits / 8);
    put_header(bytes, mode, ell, total_bits);
    std::vector<uint8_t> t = table;
    if (b) {
      const size_t idx = static_cast<size_t>(s_star.as_uint());
      t[idx >> 3] ^= static_cast<uint8_t>(1u << (idx & 7));
    }
    bytes.insert(bytes.end(), t.begin(), t.end());
    (b ? pair.sk1 : pair.sk0) = Bitstring::from_bytes(bytes);
  }
  return pair;
}

TeprfKeyPair teprf_keygen(size_t ell, const Bitstring& s_star, Rng& rng) {
  return teprf_keygen(TeprfMode::Sponge, ell, s_star, rng);
}

int teprf_eval(const Bitstring& sk, const Bitstring& s) {
  const KeyView v = parse_key(sk);
  if (s.size() != v.ell) throw std::invalid_argument("teprf input length mismatch");

  if (v.mode == TeprfMode::Table) {
    const size_t idx = static_cast<size_t>(s.as_uint());
    const size_t bit = 8 * (kHeaderBytes + (idx >> 3)) + (idx & 7);
    return sk.get(bit);
  }

  const size_t tb = target_bytes(v.ell);
  const std::vector<uint8_t> k(v.bytes.begin() + kHeaderBytes, v.bytes.begin() + kHeaderBytes + kSpongeKeyBytes);
  std::vector<uint8_t> target(tb);
  for (size_t i = 0; i < tb; ++i) {
    const uint8_t pad = v.bytes[kHeaderBytes + kSpongeKeyBytes + i];
    const uint8_t masked = v.bytes[kHeaderBytes + kSpongeKeyBytes + tb + i];
    target[i] = static_cast<uint8_t>(pad ^ masked);
  }
  Bitstring s_star = Bitstring::from_bytes(target).slice(0, v.ell);
  const int branch = v.bytes.back() & 1;
  if (s == s_star) return sponge_prf_bit(k, s_star) ^ branch;
  return sponge_prf_bit(k, s);
}

TeprfMode teprf_mode(const Bitstring& sk) { return parse_key(sk).mode; }

size_t teprf_input_len(const Bitstring& sk) { return parse_key(sk).ell; }

Bitstring teprf_table_bits(const Bitstring& sk) {
  const KeyView v = parse_key(sk);
  if (v.mode != TeprfMode::Table) throw DecodeError("teprf key is not table mode");
  return sk.slice(8 * kHeaderBytes, size_t{1} << v.ell);
}

}  // namespace skl
