// Constrained signatures with lattice trapdoors, plus coherent signing over
// branched key registers.
//
// A verification key is a matrix triple (A, B, C); the master secret opens A.
// Constraining to a predicate description f (a bitstring with the forced
// leading 1) yields short matrices R, R' with
//
//   A R  = B - f (x) G      and      A R' = C      (exactly),
//
// and signing a message msg derives, through the homomorphic evaluation of
// the message's universal circuit, a trapdoor R_d = R H_hat + R' for
// [A | B H + C]; the signature is a Gaussian coset sample x with
// [A | B H + C] x = 0. Verification recomputes H from the public key and
// checks membership, the norm bound beta_ver, and x != 0.
//
// The message circuit U_msg evaluates "table[idx(s)] == t" on the
// description f = 1 || truth-table: a single wire read when t = 1, one NAND
// for the negation when t = 0, so its depth never exceeds the budget d.
//
// cs_qsign signs from a two-branch register whose payloads hold the packed
// secret halves of two constrained keys sharing one vk. When every branch's
// predicate accepts the message, signing uses the branch-0 key's trapdoor
// and returns the register untouched: the simulated idealization of
// trapdoor-independent coset sampling. A branch whose predicate rejects
// raises CoherenceViolation instead of silently disturbing the register.
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "skl/bits.hpp"
#include "skl/error.hpp"
#include "skl/lattice/eval.hpp"
#include "skl/lattice/params.hpp"
#include "skl/lattice/trapdoor.hpp"
#include "skl/lattice/zq.hpp"
#include "skl/qsim.hpp"
#include "skl/rng.hpp"

namespace skl {

struct CsVerificationKey {
  LatticeParams params;
  ZqMatrix a;  // n x m
  ZqMatrix b;  // n x (m * ell)
  ZqMatrix c;  // n x m

  std::vector<uint8_t> encode() const;
  static CsVerificationKey decode(const std::vector<uint8_t>& bytes);
  bool operator==(const CsVerificationKey& o) const;
  bool operator!=(const CsVerificationKey& o) const { return !(*this == o); }
};

// Master keypair: the public triple plus the trapdoor opening A.
struct CsKeys {
  CsVerificationKey vk;
  Trapdoor td;
};

struct CsConstrainedKey {
  CsVerificationKey vk;
  Bitstring f;       // ell bits, f[0] = 1
  ZqMatrix r;        // m x (m * ell)
  ZqMatrix r_prime;  // m x m

  std::vector<uint8_t> encode() const;
  static CsConstrainedKey decode(const std::vector<uint8_t>& bytes);
};

struct CsSignature {
  ZqMatrix x;  // 2m x 1

  std::vector<uint8_t> encode() const;
  static CsSignature decode(const std::vector<uint8_t>& bytes);
};

// Requires a parameter set that passes all seven validator conditions.
CsKeys cs_setup(const LatticeParams& p, Rng& rng);

// f must be ell bits with f[0] = 1. Output satisfies the two exact linear
// contracts above with infinity norms at most beta_sam.
CsConstrainedKey cs_constrain(const CsKeys& keys, const Bitstring& f, Rng& rng);

// The universal circuit for message msg = s || t (iota bits of s, then the
// bit t), over ell-bit descriptions. ell must be at least 2^iota + 1.
Circuit cs_message_circuit(size_t ell, size_t iota, const Bitstring& msg);

// Predicate value f(msg), i.e. the message circuit evaluated on the
// description. Convenience for preconditions.
int cs_predicate(const LatticeParams& p, const Bitstring& f, const Bitstring& msg);

// Sign msg (iota + 1 bits). When f(msg) = 1 the output verifies; when
// f(msg) = 0 the procedure still runs but the result fails cs_vrfy, which is
// the contracted behavior. Throws only on a derived-trapdoor norm-bound
// violation (impossible under in-contract constrained keys).
CsSignature cs_sign(const CsConstrainedKey& sk, const Bitstring& msg, Rng& rng);

bool cs_vrfy(const CsVerificationKey& vk, const Bitstring& msg, const CsSignature& sig);

// Secret-half packing for branched-register payloads: f plus R and R' at one
// byte per entry (beta_sam < 128 makes that exact). The shared public vk
// stays outside the register, so the packing is what deletion certificates
// range over. Fixed length for fixed vk shapes.
std::vector<uint8_t> cs_key_pack(const CsConstrainedKey& key);
CsConstrainedKey cs_key_unpack(const CsVerificationKey& vk, const std::vector<uint8_t>& bytes);
size_t cs_key_pack_len(const LatticeParams& p);

// Coherent signing. reg's payloads hold cs_key_pack bytes as bitstrings,
// starting payload_offset_bits into the payload (nonzero when the register
// carries other key material in front, as the leased signing keys do); all
// branches must share vk and accept msg. Returns the (unchanged) register
// and a signature drawn with the canonical branch's trapdoor: branch 0 for
// superpositions, the resident branch for collapsed registers. A collapsed
// register consumes the rng stream exactly as cs_sign does.
std::pair<BranchedRegister, CsSignature> cs_qsign(const CsVerificationKey& vk, const BranchedRegister& reg,
                                                  const Bitstring& msg, Rng& rng,
                                                  size_t payload_offset_bits = 0);

}  // namespace skl
