// Fixed keyed-hash PRF core: a small sponge over four 64-bit words with an
// ARX permutation (BLAKE2-style quarter-round column, eight rounds, distinct
// round constants). Every field absorbed is length-prefixed, so the framing
// is injective and no bit padding scheme is needed.
//
// This primitive exists to make evaluations reproducible across platforms and
// fast at desk scale. It has had no cryptanalysis and must not be treated as
// a vetted PRF; nothing in this project relies on it being one.
#pragma once

#include <cstdint>
#include <vector>

#include "skl/bits.hpp"

namespace skl {

namespace sponge_detail {
// Exposed for direct testing of the permutation layer.
void permute(uint64_t state[4]);
}  // namespace sponge_detail

// 64-bit PRF of (key, data, tweak). The tweak lets callers separate domains
// that share byte content (e.g. bitstrings whose lengths differ only in the
// sub-byte range).
uint64_t sponge_prf64(const std::vector<uint8_t>& key, const std::vector<uint8_t>& data, uint64_t tweak = 0);

// Low bit of sponge_prf64 with the bitstring's exact length as the tweak.
int sponge_prf_bit(const std::vector<uint8_t>& key, const Bitstring& s);

}  // namespace skl
