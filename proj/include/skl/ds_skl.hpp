// Digital signatures with a leasable, certifiably deletable signing key.
//
// The leased key has n legs. Leg i holds, per branch b, the concatenation of
// a table-mode two-key-equivocal PRF key and the packed secret half of a
// constrained signing key whose predicate accepts exactly the pairs (s, t)
// with t = PRF_b(s). The two branches' PRF keys differ at one hidden target
// input, so for every other input the leg behaves identically on both
// branches and signing leaves the register byte-for-byte unchanged.
//
// Signing an n*iota-bit message s_1 || ... || s_n evaluates t_i = PRF(s_i)
// through the non-collapsing oracle readout, then coherently signs s_i || t_i
// with the leg's constrained key; the signature is the list (t_i, sig_i).
// Verification checks every leg's constrained-signature verification.
//
// Deletion Hadamard-measures every leg over the whole concatenated payload;
// at each Hadamard position the verifier checks
//
//   e_i = x[i] XOR <d_i, payload_{i,0} XOR payload_{i,1}>,
//
// which splits into the PRF-key and signing-key terms of the usual two-branch
// relation (the verification key records the split point). The branch XOR is
// cached at key generation so verifying a certificate is one masked-parity
// pass per leg.
#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "skl/cert.hpp"
#include "skl/cs.hpp"
#include "skl/lattice/params.hpp"
#include "skl/qsim.hpp"

namespace skl {

struct DsLeasedKey {
  LatticeParams params;
  std::vector<CsVerificationKey> svks;  // public per-leg signing context
  std::vector<BranchedRegister> legs;
  size_t teprf_bits = 0;  // payload split: PRF key first, packed signing key after

  size_t n() const { return legs.size(); }
  std::vector<uint8_t> encode() const;
  bool operator==(const DsLeasedKey& o) const;
  bool operator!=(const DsLeasedKey& o) const { return !(*this == o); }
};

struct DsVerificationKeys {
  std::vector<CsVerificationKey> svk;  // signature verification, per leg
  // Deletion verification: basis string, data bits, and both branch payloads
  // at every Hadamard position (empty bitstrings at computational positions).
  Bitstring theta;
  Bitstring x_bits;
  size_t teprf_bits = 0;
  std::vector<std::array<Bitstring, 2>> payloads;
  std::vector<Bitstring> delta;  // cached payload0 ^ payload1 per Hadamard leg

  size_t n() const { return payloads.size(); }
  std::vector<uint8_t> encode() const;
};

struct DsSignature {
  struct Part {
    int t = 0;
    CsSignature sig;
  };
  std::vector<Part> parts;

  std::vector<uint8_t> encode() const;
  static DsSignature decode(const std::vector<uint8_t>& bytes);
};

using DsCertificate = DeletionCertificate;

struct DsKeyBundle {
  DsLeasedKey key;
  DsVerificationKeys vks;
};

// Leased-key generation with n legs at the given (validated) parameter set;
// the per-leg message-block length is params.iota. The _with_theta variant
// pins the basis string (tests aiming at a fixed Hadamard count).
DsKeyBundle ds_keygen(size_t n, const LatticeParams& p, Rng& rng);
DsKeyBundle ds_keygen_with_theta(const LatticeParams& p, const Bitstring& theta, Rng& rng);

// Sign message m (n * iota bits). Returns the post-sign key and the
// signature. Off-target messages leave the key exactly unchanged; a message
// block hitting a Hadamard leg's hidden target collapses that leg.
std::pair<DsLeasedKey, DsSignature> ds_sign(const DsLeasedKey& key, const Bitstring& m, Rng& rng);

bool ds_sigvrfy(const DsVerificationKeys& vks, const Bitstring& m, const DsSignature& sig);

// Hadamard-measure every leg. Consumes the key.
DsCertificate ds_del(const DsLeasedKey& key, Rng& rng);

DelVrfyResult ds_delvrfy(const DsVerificationKeys& vks, const DsCertificate& cert);

}  // namespace skl
