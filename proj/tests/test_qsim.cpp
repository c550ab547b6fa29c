// The symbolic register simulator against the dense statevector oracle.
// Structural laws (forced parities, zero disturbance) are checked on every
// sample; distributional laws are checked by sampling at unit-test rates
// here and at the full 1e5-per-case rate in the acceptance gate.

#include <doctest.h>

#include <vector>

#include "skl/qsim.hpp"
#include "skl/statevector.hpp"
#include "skl/stats.hpp"

using namespace skl;

namespace {

// Every Superposed configuration with an L-bit payload, both phases.
std::vector<BranchedRegister> all_superposed(size_t length) {
  std::vector<BranchedRegister> out;
  for (uint64_t p0 = 0; p0 < (uint64_t{1} << length); ++p0)
    for (uint64_t p1 = 0; p1 < (uint64_t{1} << length); ++p1)
      for (int phase = 0; phase < 2; ++phase) {
        Bitstring b0(length), b1(length);
        for (size_t i = 0; i < length; ++i) {
          b0.set(i, (p0 >> i) & 1);
          b1.set(i, (p1 >> i) & 1);
        }
        out.push_back(BranchedRegister::superposed(b0, b1, phase));
      }
  return out;
}

uint64_t outcome_index(const HadamardOutcome& out) {
  return static_cast<uint64_t>(out.e) | (out.d.as_uint() << 1);
}

}  // namespace

TEST_CASE("embed produces the advertised shapes") {
  Rng rng(1);
  const Bitstring pay0 = Bitstring::from_string("101");
  const Bitstring pay1 = Bitstring::from_string("010");

  for (int x = 0; x < 2; ++x) {
    const BranchedRegister comp = embed({x, 0}, pay0, pay1, rng);
    CHECK(comp.kind == BranchedRegister::Kind::Collapsed);
    CHECK(comp.bit == x);
    CHECK(comp.payload == (x ? pay1 : pay0));

    const BranchedRegister had = embed({x, 1}, pay0, pay1, rng);
    CHECK(had.kind == BranchedRegister::Kind::Superposed);
    CHECK(had.payload0 == pay0);
    CHECK(had.payload1 == pay1);
    CHECK(had.phase_bit == x);
  }
}

TEST_CASE("hadamard readout forces e = phase xor <d, p0 xor p1>") {
  Rng rng(2);
  for (const auto& reg : all_superposed(3)) {
    const Bitstring delta = reg.payload0 ^ reg.payload1;
    for (int rep = 0; rep < 8; ++rep) {
      const HadamardOutcome out = hadamard_measure(reg, rng);
      REQUIRE(out.d.size() == 3);
      CHECK(out.e == (reg.phase_bit ^ out.d.dot(delta)));
    }
  }
}

TEST_CASE("hadamard readout matches the statevector distribution") {
  Rng rng(3);
  const size_t samples = 20000;

  SUBCASE("superposed, distinct payloads") {
    const auto reg = BranchedRegister::superposed(Bitstring::from_string("10"), Bitstring::from_string("01"), 1);
    const auto exact = sv::hadamard_all_distribution(reg);
    std::vector<uint64_t> counts(exact.size(), 0);
    for (size_t i = 0; i < samples; ++i) counts[outcome_index(hadamard_measure(reg, rng))]++;
    CHECK(stats::tv_distance(counts, exact) < 0.03);
  }

  SUBCASE("collapsed: the pair (e, d) is uniform") {
    const auto reg = BranchedRegister::collapsed(1, Bitstring::from_string("10"));
    const auto exact = sv::hadamard_all_distribution(reg);
    for (double p : exact) CHECK(p == doctest::Approx(1.0 / 8));
    std::vector<uint64_t> counts(exact.size(), 0);
    for (size_t i = 0; i < samples; ++i) counts[outcome_index(hadamard_measure(reg, rng))]++;
    CHECK(stats::tv_distance(counts, exact) < 0.03);
  }

  SUBCASE("empty payload degenerates to one qubit") {
    const auto reg = BranchedRegister::superposed(Bitstring(0), Bitstring(0), 1);
    // Phase 1 on equal payloads: the Hadamard outcome is deterministic.
    for (int i = 0; i < 16; ++i) {
      const auto out = hadamard_measure(reg, rng);
      CHECK(out.e == 1);
      CHECK(out.d.empty());
    }
  }
}

TEST_CASE("computational readout") {
  Rng rng(4);

  const auto collapsed = BranchedRegister::collapsed(1, Bitstring::from_string("011"));
  for (int i = 0; i < 8; ++i) {
    auto [bit, payload] = computational_measure(collapsed, rng);
    CHECK(bit == 1);
    CHECK(payload == collapsed.payload);
  }

  const auto sup = BranchedRegister::superposed(Bitstring::from_string("00"), Bitstring::from_string("11"), 0);
  int ones = 0;
  for (int i = 0; i < 2000; ++i) {
    auto [bit, payload] = computational_measure(sup, rng);
    ones += bit;
    CHECK(payload == (bit ? sup.payload1 : sup.payload0));
  }
  CHECK(stats::within_k_sigma(static_cast<uint64_t>(ones), 2000, 0.5, 4.0));

  const auto exact = sv::computational_distribution(sup);
  CHECK(exact[0b000] == doctest::Approx(0.5));  // |0>|00>
  CHECK(exact[0b111] == doctest::Approx(0.5));  // |1>|11>
}

TEST_CASE("oracle evaluation: agreeing branches disturb nothing") {
  Rng rng(5);
  const auto reg = BranchedRegister::superposed(Bitstring::from_string("10"), Bitstring::from_string("01"), 1);
  const BranchFn parity = [](int, const Bitstring& p) {
    Bitstring out(1);
    out.set(0, p.get(0) ^ p.get(1));
    return out;
  };
  // Both branches have payload parity 1: output fixed, state untouched.
  for (int i = 0; i < 32; ++i) {
    auto [out, post] = oracle_measure(reg, parity, rng);
    CHECK(out.get(0) == 1);
    CHECK(post == reg);
  }
}

TEST_CASE("oracle evaluation: differing branches collapse uniformly") {
  Rng rng(6);
  const auto reg = BranchedRegister::superposed(Bitstring::from_string("10"), Bitstring::from_string("11"), 0);
  const BranchFn first_bit = [](int, const Bitstring& p) {
    Bitstring out(1);
    out.set(0, p.get(0));
    return out;
  };
  // payload0 starts 1, payload1 starts 1 -- use the second bit instead so the
  // branches disagree (0 vs 1) and the register must collapse.
  const BranchFn second_bit = [](int, const Bitstring& p) {
    Bitstring out(1);
    out.set(0, p.get(1));
    return out;
  };
  (void)first_bit;

  int branch1 = 0;
  const int trials = 2000;
  for (int i = 0; i < trials; ++i) {
    auto [out, post] = oracle_measure(reg, second_bit, rng);
    REQUIRE(post.kind == BranchedRegister::Kind::Collapsed);
    // The measured output identifies the surviving branch exactly.
    if (out.get(0) == 1) {
      ++branch1;
      CHECK(post.bit == 1);
      CHECK(post.payload == reg.payload1);
    } else {
      CHECK(post.bit == 0);
      CHECK(post.payload == reg.payload0);
    }
  }
  CHECK(stats::within_k_sigma(static_cast<uint64_t>(branch1), trials, 0.5, 4.0));

  const auto exact = sv::oracle_outcome_distribution(reg, second_bit, 1);
  CHECK(exact[0] == doctest::Approx(0.5));
  CHECK(exact[1] == doctest::Approx(0.5));
}

TEST_CASE("oracle evaluation on a collapsed register is deterministic") {
  Rng rng(7);
  const auto reg = BranchedRegister::collapsed(0, Bitstring::from_string("110"));
  const BranchFn two_bits = [](int b, const Bitstring& p) {
    Bitstring out(2);
    out.set(0, p.get(0));
    out.set(1, b);
    return out;
  };
  auto [out, post] = oracle_measure(reg, two_bits, rng);
  CHECK(out.to_string() == "10");
  CHECK(post == reg);
}

TEST_CASE("structural equality distinguishes every field") {
  const auto base = BranchedRegister::superposed(Bitstring::from_string("1"), Bitstring::from_string("0"), 0);
  auto other = base;
  CHECK(base == other);
  other.phase_bit = 1;
  CHECK(base != other);
  CHECK(base != BranchedRegister::collapsed(0, Bitstring::from_string("1")));
}
