// Public-key encryption with a leasable, certifiably deletable decryption key.
//
// Key generation samples, per message position i, a conjugate-coding pair
// (x[i], theta[i]) and two independent bit-PKE key pairs (one per branch).
// The leased decryption key is the list of branched registers
//
//   theta[i] = 0 :  |x[i]> |dk_{i, x[i]}>
//   theta[i] = 1 :  (|0>|dk_{i,0}> + (-1)^{x[i]} |1>|dk_{i,1}>) / sqrt(2)
//
// Encryption encrypts message bit i under both ek_{i,0} and ek_{i,1}, so each
// branch decrypts to the same bit and decryption leaves the key untouched.
// Deletion Hadamard-measures every leg; the verifier checks, at each Hadamard
// position, the interference relation
//
//   e_i = x[i] XOR <d_i, dk_{i,0} XOR dk_{i,1}>.
//
// A one-bit IND-style wrapper is layered on top via the inner-product
// hardcore-bit trick: encrypt a random string x, publish r and
// b = <x, r> XOR message.
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "skl/cert.hpp"
#include "skl/pke_base.hpp"
#include "skl/qsim.hpp"

namespace skl {

struct SklPublicKey {
  PkeParams params;
  // ek_grid[i][b]: encryption key for position i, branch b.
  std::vector<std::array<std::vector<uint8_t>, 2>> ek_grid;
  size_t n() const { return ek_grid.size(); }
};

struct SklDecryptionKey {
  std::vector<BranchedRegister> legs;
  std::vector<uint8_t> encode() const;
  bool operator==(const SklDecryptionKey& o) const { return legs == o.legs; }
};

struct SklVerificationKey {
  Bitstring theta;
  Bitstring x_had;  // x restricted to Hadamard positions, zero elsewhere
  // Branch decryption-key pair per position; only Hadamard positions are
  // populated (empty bitstrings elsewhere).
  std::vector<std::pair<Bitstring, Bitstring>> dk_pairs_had;
};

using SklCertificate = DeletionCertificate;

struct SklCiphertext {
  // ct_grid[i][b]: encryption of message bit i under ek_{i,b}.
  std::vector<std::array<BitCiphertext, 2>> ct_grid;
  size_t n() const { return ct_grid.size(); }
};

struct IndCiphertext {
  SklCiphertext ow_ct;
  Bitstring r;
  int b = 0;
};

struct SklKeyBundle {
  SklPublicKey pk;
  SklDecryptionKey dk;
  SklVerificationKey vk;
};

SklKeyBundle skl_keygen(size_t n, const PkeParams& params, Rng& rng);

// Test hook: same as skl_keygen but with a caller-fixed basis string (used to
// pin the Hadamard weight in the forged-certificate statistics).
SklKeyBundle skl_keygen_with_theta(size_t n, const PkeParams& params, const Bitstring& theta, Rng& rng);

SklCiphertext skl_enc(const SklPublicKey& pk, const Bitstring& message, Rng& rng);

// Per-leg oracle evaluation of "decrypt ct_{i,branch}". Returns the message
// and the post-use key (structurally identical to the input on the honest
// path, since both branches decrypt to the same bit).
std::pair<Bitstring, SklDecryptionKey> skl_dec(const SklDecryptionKey& dk, const SklCiphertext& ct, Rng& rng);

// Hadamard-measure every leg; consumes the key.
SklCertificate skl_del(const SklDecryptionKey& dk, Rng& rng);

DelVrfyResult skl_delvrfy(const SklVerificationKey& vk, const SklCertificate& cert);

// Certificate conversion: recover the Hadamard-position data bits from an
// accepted certificate (y_i = e_i XOR <d_i, dk_{i,0} XOR dk_{i,1}>). Returns
// nullopt on shape mismatch.
std::optional<Bitstring> skl_convert_certificate(const SklVerificationKey& vk, const SklCertificate& cert);

// One-bit indistinguishability wrapper (hardcore-bit encoding).
IndCiphertext ind_enc(const SklPublicKey& pk, int message_bit, Rng& rng);
std::pair<int, SklDecryptionKey> ind_dec(const SklDecryptionKey& dk, const IndCiphertext& ct, Rng& rng);

}  // namespace skl
