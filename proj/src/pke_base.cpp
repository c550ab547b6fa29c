#include "skl/pke_base.hpp"

#include <cassert>

#include "skl/encode.hpp"
#include "skl/error.hpp"

namespace skl {

namespace {

// Fast uniform draw in [0, q) via multiply-shift. The bias is < q / 2^64 —
// irrelevant for the correctness statistics this scheme feeds — and it costs
// one multiply instead of a rejection loop, which matters in the 10^4-pipeline
// test loops.
uint32_t draw_mod(Rng& rng, uint32_t q) {
  return static_cast<uint32_t>((static_cast<unsigned __int128>(rng.u64()) * q) >> 64);
}

// Ternary {-1, 0, 1} as int32, batched two bits at a time.
class TernaryStream {
 public:
  explicit TernaryStream(Rng& rng) : rng_(rng) {}
  int32_t next() {
    for (;;) {
      if (left_ == 0) {
        buf_ = rng_.u64();
        left_ = 32;
      }
      const uint32_t two = buf_ & 3;
      buf_ >>= 2;
      --left_;
      if (two != 3) return static_cast<int32_t>(two) - 1;
    }
  }

 private:
  Rng& rng_;
  uint64_t buf_ = 0;
  int left_ = 0;
};

uint32_t add_mod(uint32_t a, uint32_t b, uint32_t q) {
  const uint32_t s = a + b;
  return s >= q ? s - q : s;
}

}  // namespace

uint32_t PkeParams::coeff_bits() const {
  uint32_t bits = 0;
  while ((1u << bits) < q) ++bits;
  return bits;
}

uint32_t PkeParams::dk_bits() const { return n_lwe * coeff_bits(); }

PkeParams pke_reference_params() { return PkeParams{}; }

PkeParams pke_zero_noise_params() {
  PkeParams p;
  p.zero_noise = true;
  return p;
}

PkeParams pke_params_for(uint8_t scheme_id) {
  switch (scheme_id) {
    case 1:
      return pke_reference_params();
    case 2:
      return pke_zero_noise_params();
    default:
      throw DecodeError("unknown bit-PKE scheme id");
  }
}

BitPkeKeyPair pke_keygen(const PkeParams& params, Rng& rng) {
  const uint32_t n = params.n_lwe, m = params.m_lwe, q = params.q;

  std::vector<uint32_t> a(static_cast<size_t>(m) * n);
  for (auto& v : a) v = draw_mod(rng, q);
  std::vector<uint32_t> s(n);
  for (auto& v : s) v = draw_mod(rng, q);

  std::vector<uint32_t> b(m);
  TernaryStream noise(rng);
  for (uint32_t i = 0; i < m; ++i) {
    uint64_t acc = 0;
    const uint32_t* row = &a[static_cast<size_t>(i) * n];
    for (uint32_t j = 0; j < n; ++j) acc += static_cast<uint64_t>(row[j]) * s[j];
    int64_t val = static_cast<int64_t>(acc % q);
    if (!params.zero_noise) val += noise.next();
    b[i] = static_cast<uint32_t>(((val % q) + q) % q);
  }

  // ek layout: scheme id, then A row-major, then b, all u16 little-endian.
  enc::Writer w(enc::Tag::pke_keypair);
  w.u8(params.scheme_id());
  for (uint32_t v : a) {
    w.u8(static_cast<uint8_t>(v & 0xff));
    w.u8(static_cast<uint8_t>(v >> 8));
  }
  for (uint32_t v : b) {
    w.u8(static_cast<uint8_t>(v & 0xff));
    w.u8(static_cast<uint8_t>(v >> 8));
  }

  // dk: fixed-width little-endian packing of the secret's coefficients.
  const uint32_t cb = params.coeff_bits();
  Bitstring dk(params.dk_bits());
  for (uint32_t j = 0; j < n; ++j) {
    for (uint32_t t = 0; t < cb; ++t) dk.set(static_cast<size_t>(j) * cb + t, (s[j] >> t) & 1);
  }

  return BitPkeKeyPair{w.take(), std::move(dk)};
}

BitCiphertext pke_enc(const std::vector<uint8_t>& ek, int message_bit, Rng& rng) {
  enc::Reader r(ek, enc::Tag::pke_keypair);
  const PkeParams params = pke_params_for(r.u8());
  const uint32_t n = params.n_lwe, m = params.m_lwe, q = params.q;

  std::vector<uint32_t> a(static_cast<size_t>(m) * n), b(m);
  for (auto& v : a) {
    const uint32_t lo = r.u8(), hi = r.u8();
    v = lo | (hi << 8);
  }
  for (auto& v : b) {
    const uint32_t lo = r.u8(), hi = r.u8();
    v = lo | (hi << 8);
  }
  r.expect_end();

  TernaryStream rand(rng);
  std::vector<int32_t> rv(m);
  for (auto& v : rv) v = rand.next();

  // u = A^T r, v = <r, b> + bit * floor(q/2)
  std::vector<int64_t> u(n, 0);
  int64_t vacc = 0;
  for (uint32_t i = 0; i < m; ++i) {
    if (rv[i] == 0) continue;
    const uint32_t* row = &a[static_cast<size_t>(i) * n];
    if (rv[i] > 0) {
      for (uint32_t j = 0; j < n; ++j) u[j] += row[j];
      vacc += b[i];
    } else {
      for (uint32_t j = 0; j < n; ++j) u[j] -= row[j];
      vacc -= b[i];
    }
  }
  vacc += static_cast<int64_t>(message_bit) * (q / 2);

  BitCiphertext ct;
  ct.scheme_id = params.scheme_id();
  ct.body.reserve((n + 1) * 2);
  auto push_u16 = [&ct](uint32_t v) {
    ct.body.push_back(static_cast<uint8_t>(v & 0xff));
    ct.body.push_back(static_cast<uint8_t>(v >> 8));
  };
  for (uint32_t j = 0; j < n; ++j) push_u16(static_cast<uint32_t>(((u[j] % q) + q) % q));
  push_u16(static_cast<uint32_t>(((vacc % q) + q) % q));
  return ct;
}

int pke_dec(const Bitstring& dk, const BitCiphertext& ct) {
  const PkeParams params = pke_params_for(ct.scheme_id);
  const uint32_t n = params.n_lwe, q = params.q, cb = params.coeff_bits();
  if (dk.size() != params.dk_bits()) throw DecodeError("decryption key length mismatch");
  if (ct.body.size() != (static_cast<size_t>(n) + 1) * 2) throw DecodeError("ciphertext length mismatch");

  auto read_u16 = [&ct](size_t idx) -> uint32_t {
    return static_cast<uint32_t>(ct.body[2 * idx]) | (static_cast<uint32_t>(ct.body[2 * idx + 1]) << 8);
  };

  uint64_t dot = 0;
  for (uint32_t j = 0; j < n; ++j) {
    uint32_t sj = 0;
    for (uint32_t t = 0; t < cb; ++t) sj |= static_cast<uint32_t>(dk.get(static_cast<size_t>(j) * cb + t)) << t;
    dot += static_cast<uint64_t>(sj % q) * read_u16(j);
  }
  const uint32_t v = read_u16(n);
  const uint32_t w = add_mod(v, static_cast<uint32_t>(q - (dot % q)) % q, q);

  // Decide by distance to the two codewords 0 and floor(q/2).
  const uint32_t half = q / 2;
  const uint32_t dist0 = std::min(w, q - w);
  const uint32_t dist1 = w > half ? w - half : half - w;
  return dist1 < dist0 ? 1 : 0;
}

std::vector<uint8_t> BitCiphertext::encode() const {
  enc::Writer w(enc::Tag::pke_ciphertext);
  w.u8(scheme_id);
  w.bytes(body);
  return w.take();
}

BitCiphertext BitCiphertext::decode(const std::vector<uint8_t>& bytes) {
  enc::Reader r(bytes, enc::Tag::pke_ciphertext);
  BitCiphertext ct;
  ct.scheme_id = r.u8();
  ct.body = r.bytes();
  r.expect_end();
  return ct;
}

}  // namespace skl
