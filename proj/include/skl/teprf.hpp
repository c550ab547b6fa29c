// Two-key equivocal PRF: a generator, given a target input s*, outputs two
// keys whose evaluation functions agree on every input except s*, where they
// differ. Two interchangeable instantiations sit behind a version byte in
// the canonical key encoding:
//
//  * Sponge mode — off-target output is the keyed-sponge PRF of the input;
//    on-target it is PRF(k, s*) XOR b for branch bit b. The target is stored
//    in both keys, hidden only by an XOR pad that the key also carries, so
//    this mode is correctness-complete but makes no attempt to hide the
//    differing point. Callers needing that hiding property have no
//    instantiation here; the gap is deliberate and documented rather than
//    papered over. A future differing-point-hiding construction would claim
//    version byte 3.
//  * Table mode — the key is an explicit truth table; the two tables differ
//    in exactly the target entry. Input length is capped (the table is 2^l
//    bits) but evaluation is a bit lookup, which is what the constrained-
//    signature constraint circuits need to stay within their depth budget.
//
// Canonical key encoding (bytes): version(1) | l as u16 LE | key-bit-length
// as u32 LE | mode-specific material. Keys are handled as bitstrings so they
// can ride in branched-register payloads directly.
#pragma once

#include <cstdint>

#include "skl/bits.hpp"
#include "skl/rng.hpp"

namespace skl {

enum class TeprfMode : uint8_t { Sponge = 1, Table = 2 };

struct TeprfKeyPair {
  Bitstring sk0;
  Bitstring sk1;
  // Generator-side handle on the differing point, for tests that need to aim
  // at (or away from) it. Not part of either key's contract.
  Bitstring target;
};

// Total key length in bits for the given mode and input length.
size_t teprf_key_bits(TeprfMode mode, size_t ell);

// Largest input length table mode accepts (the table is 2^ell bits).
inline constexpr size_t kTeprfTableMaxEll = 20;

TeprfKeyPair teprf_keygen(TeprfMode mode, size_t ell, const Bitstring& s_star, Rng& rng);

// Sponge-mode convenience overload (the default for the leased-PRF schemes).
TeprfKeyPair teprf_keygen(size_t ell, const Bitstring& s_star, Rng& rng);

int teprf_eval(const Bitstring& sk, const Bitstring& s);

// Key-encoding accessors.
TeprfMode teprf_mode(const Bitstring& sk);
size_t teprf_input_len(const Bitstring& sk);

// Table mode only: the raw 2^l truth-table bits (entry i = output on the
// input whose little-endian integer value is i). This is the compact function
// description the constrained-signature layer hashes into its circuits.
Bitstring teprf_table_bits(const Bitstring& sk);

}  // namespace skl
