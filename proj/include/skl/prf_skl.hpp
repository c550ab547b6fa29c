// Unpredictable function with a leasable key (UPF-SKL), built block-wise from
// two-key equivocal PRFs, plus the inner-product wrapper that turns its n-bit
// output into a single PRF bit.
//
// Key generation draws, per output position i, a hidden target and a TEPRF
// pair at that target. The master key keeps the branch-0 keys; the leased key
// carries both branch keys in a branched register per position, in the same
// conjugate-coding arrangement the leased-PKE scheme uses. Leased evaluation
// runs the TEPRF through the oracle-measurement rule: off every target both
// branches agree, so the output matches the master key's and the leased key
// is returned untouched; hitting a target collapses that leg.
//
// The wrapper splits its input as s' || r and outputs <UPF(s'), r> mod 2.
// Taking r from the input is faithful to the construction this follows, and
// inherits its caveat: this is not a generic UPF-to-PRF compiler. An optional
// composer XORs in an independent keyed-sponge PRF of the whole input.
#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "skl/cert.hpp"
#include "skl/qsim.hpp"
#include "skl/teprf.hpp"

namespace skl {

struct UpfMasterKey {
  size_t ell = 0;
  std::vector<Bitstring> sk0_list;
  // Test-only shadow of the hidden targets, so correctness-boundary tests can
  // aim at them deliberately. Never serialized, never revealed by any op.
  std::vector<Bitstring> shadow_targets;
  size_t n() const { return sk0_list.size(); }
};

struct UpfLeasedKey {
  size_t ell = 0;
  std::vector<BranchedRegister> legs;
  size_t n() const { return legs.size(); }
  std::vector<uint8_t> encode() const;
  bool operator==(const UpfLeasedKey& o) const { return ell == o.ell && legs == o.legs; }
};

struct UpfVerificationKey {
  Bitstring theta;
  Bitstring x_had;
  std::vector<std::pair<Bitstring, Bitstring>> sk_pairs_had;
};

struct PrfInput {
  Bitstring s_prime;  // n*l bits, fed block-wise to the UPF
  Bitstring r;        // n bits, inner-product mask
};

using UpfCertificate = DeletionCertificate;

struct UpfKeyBundle {
  UpfMasterKey msk;
  UpfLeasedKey lk;
  UpfVerificationKey vk;
};

UpfKeyBundle upf_keygen(size_t n, size_t ell, Rng& rng);
UpfKeyBundle upf_keygen_with_theta(size_t n, size_t ell, const Bitstring& theta, Rng& rng);

Bitstring upf_eval(const UpfMasterKey& msk, const Bitstring& s);

std::pair<Bitstring, UpfLeasedKey> upf_leval(const UpfLeasedKey& lk, const Bitstring& s, Rng& rng);

UpfCertificate upf_del(const UpfLeasedKey& lk, Rng& rng);
DelVrfyResult upf_delvrfy(const UpfVerificationKey& vk, const UpfCertificate& cert);
std::optional<Bitstring> upf_convert_certificate(const UpfVerificationKey& vk, const UpfCertificate& cert);

int prf_eval(const UpfMasterKey& msk, const PrfInput& input);
std::pair<int, UpfLeasedKey> prf_leval(const UpfLeasedKey& lk, const PrfInput& input, Rng& rng);

// Optional composer: XOR the wrapper output with an independent keyed-sponge
// PRF of the full input under prf_key.
int prf_composed_eval(const UpfMasterKey& msk, const std::vector<uint8_t>& prf_key, const PrfInput& input);
std::pair<int, UpfLeasedKey> prf_composed_leval(const UpfLeasedKey& lk, const std::vector<uint8_t>& prf_key,
                                                const PrfInput& input, Rng& rng);

}  // namespace skl
