// Two-key equivocal PRFs: the defining "equal everywhere except the target"
// property, the canonical key encoding, and the table-mode delta structure
// the signing layer depends on.

#include <doctest.h>

#include <stdexcept>

#include "skl/teprf.hpp"

using namespace skl;

namespace {

Bitstring input_of(uint64_t value, size_t ell) {
  Bitstring s(ell);
  for (size_t i = 0; i < ell; ++i) s.set(i, (value >> i) & 1);
  return s;
}

}  // namespace

TEST_CASE("agreement off target, disagreement on target (exhaustive)") {
  for (const TeprfMode mode : {TeprfMode::Sponge, TeprfMode::Table}) {
    for (const size_t ell : {size_t{1}, size_t{3}, size_t{6}}) {
      Rng rng(static_cast<uint64_t>(ell) * 10 + static_cast<uint64_t>(mode));
      const Bitstring target = Bitstring::random(ell, rng);
      const TeprfKeyPair kp = teprf_keygen(mode, ell, target, rng);
      CHECK(kp.target == target);

      for (uint64_t v = 0; v < (uint64_t{1} << ell); ++v) {
        const Bitstring s = input_of(v, ell);
        const int y0 = teprf_eval(kp.sk0, s);
        const int y1 = teprf_eval(kp.sk1, s);
        if (s == target)
          CHECK(y0 != y1);
        else
          CHECK(y0 == y1);
      }
    }
  }
}

TEST_CASE("sponge mode at ell = 32") {
  Rng rng(51);
  const size_t ell = 32;
  const Bitstring target = Bitstring::random(ell, rng);
  const TeprfKeyPair kp = teprf_keygen(ell, target, rng);  // sponge-mode overload

  CHECK(teprf_eval(kp.sk0, target) != teprf_eval(kp.sk1, target));
  for (int i = 0; i < 3000; ++i) {
    Bitstring s = Bitstring::random(ell, rng);
    if (s == target) continue;
    CHECK(teprf_eval(kp.sk0, s) == teprf_eval(kp.sk1, s));
  }
}

TEST_CASE("canonical key encoding header") {
  Rng rng(52);
  const size_t ell = 5;
  const Bitstring target = Bitstring::random(ell, rng);

  SUBCASE("table mode") {
    const TeprfKeyPair kp = teprf_keygen(TeprfMode::Table, ell, target, rng);
    // version(8) + ell(16) + bitlen(32) + 2^ell table bits
    CHECK(kp.sk0.size() == 56 + 32);
    CHECK(kp.sk0.size() == teprf_key_bits(TeprfMode::Table, ell));
    CHECK(teprf_mode(kp.sk0) == TeprfMode::Table);
    CHECK(teprf_input_len(kp.sk0) == ell);

    // Header fields read back synthetically from the first 56 bits.
    CHECK(kp.sk0.slice(0, 8).as_uint() == 2);       // version byte: table
    CHECK(kp.sk0.slice(8, 16).as_uint() == ell);    // u16 input length
    CHECK(kp.sk0.slice(24, 32).as_uint() == 56 + 32);  // u32 total bit length

    // The two keys differ in exactly the target's table entry.
    const Bitstring delta = kp.sk0 ^ kp.sk1;
    CHECK(delta.popcount() == 1);
    CHECK(delta.get(56 + target.as_uint()) == 1);

    // Table accessor matches evaluation everywhere.
    const Bitstring table = teprf_table_bits(kp.sk0);
    REQUIRE(table.size() == 32);
    for (uint64_t v = 0; v < 32; ++v) CHECK(table.get(v) == teprf_eval(kp.sk0, input_of(v, ell)));
  }

  SUBCASE("sponge mode") {
    const TeprfKeyPair kp = teprf_keygen(TeprfMode::Sponge, ell, target, rng);
    CHECK(teprf_mode(kp.sk0) == TeprfMode::Sponge);
    CHECK(teprf_input_len(kp.sk0) == ell);
    CHECK(kp.sk0.size() == teprf_key_bits(TeprfMode::Sponge, ell));
    CHECK(kp.sk0.slice(0, 8).as_uint() == 1);
  }
}

TEST_CASE("table mode caps the input length") {
  Rng rng(53);
  const Bitstring target(kTeprfTableMaxEll + 1);
  CHECK_THROWS_AS(teprf_keygen(TeprfMode::Table, kTeprfTableMaxEll + 1, target, rng),
                  std::invalid_argument);
}

TEST_CASE("keygen validates the target length") {
  Rng rng(54);
  CHECK_THROWS_AS(teprf_keygen(TeprfMode::Sponge, 8, Bitstring(5), rng), std::invalid_argument);
}

TEST_CASE("generation is seed-reproducible and target-sensitive") {
  const Bitstring t1 = Bitstring::from_string("0110");
  const Bitstring t2 = Bitstring::from_string("1110");
  Rng a(55), b(55), c(55);
  const TeprfKeyPair ka = teprf_keygen(TeprfMode::Table, 4, t1, a);
  const TeprfKeyPair kb = teprf_keygen(TeprfMode::Table, 4, t1, b);
  const TeprfKeyPair kc = teprf_keygen(TeprfMode::Table, 4, t2, c);
  CHECK(ka.sk0 == kb.sk0);
  CHECK(ka.sk1 == kb.sk1);
  CHECK((ka.sk0 ^ ka.sk1) != (kc.sk0 ^ kc.sk1));  // delta bit tracks the target
}
