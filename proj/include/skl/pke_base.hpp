// Single-bit public-key encryption used as the per-branch payload primitive.
//
// Reference instantiation: small Regev-style LWE scheme with uniform secrets,
// ternary noise and ternary encryption randomness at (n, m, q) = (64, 256,
// 3329). At these sizes the rounding error |<r, e>| is at most m = 256 <
// floor(q/4) = 832, so decryption is exact in the worst case — comfortably
// inside the 2^-20 error budget the callers assume. A zero-noise double (e=0)
// is provided for tests that want bit-for-bit determinism arguments.
//
// The decryption key is a fixed-width little-endian packing of the secret's
// coefficients (12 bits each); that packing is what gets embedded into
// branched registers, so its exact layout is part of the module contract.
#pragma once

#include <cstdint>
#include <vector>

#include "skl/bits.hpp"
#include "skl/rng.hpp"

namespace skl {

struct PkeParams {
  uint32_t n_lwe = 64;    // secret dimension
  uint32_t m_lwe = 256;   // number of samples
  uint32_t q = 3329;      // modulus
  bool zero_noise = false;

  uint32_t coeff_bits() const;       // fixed width per packed coefficient
  uint32_t dk_bits() const;          // total decryption-key length
  uint8_t scheme_id() const { return zero_noise ? 2 : 1; }
};

PkeParams pke_reference_params();
PkeParams pke_zero_noise_params();

struct BitPkeKeyPair {
  std::vector<uint8_t> ek;  // opaque encryption key (serialized A, b)
  Bitstring dk;             // packed secret
};

struct BitCiphertext {
  std::vector<uint8_t> body;  // serialized (u, v)
  uint8_t scheme_id = 1;

  std::vector<uint8_t> encode() const;
  static BitCiphertext decode(const std::vector<uint8_t>& bytes);
};

BitPkeKeyPair pke_keygen(const PkeParams& params, Rng& rng);
BitCiphertext pke_enc(const std::vector<uint8_t>& ek, int message_bit, Rng& rng);
int pke_dec(const Bitstring& dk, const BitCiphertext& ct);

// Recover the parameter set a ciphertext or key was produced under.
PkeParams pke_params_for(uint8_t scheme_id);

}  // namespace skl
