// Two-branch symbolic register simulator.
//
// The states this project manipulates are always of one of two shapes over a
// control qubit plus an L-bit payload register:
//
//   Collapsed:   |b>|payload>
//   Superposed:  (|0>|payload0> + (-1)^phase |1>|payload1>) / sqrt(2)
//
// which is exactly the family of conjugate-coding states with per-branch data
// attached. Instead of tracking amplitudes we track the branch structure
// symbolically; the three supported measurements below have closed-form
// outcome laws on this family, checked against a dense statevector oracle in
// the tests (see statevector.hpp).
//
// Measurement laws implemented here:
//  * all-Hadamard readout of Superposed{p0,p1,phase}: the payload mask d is
//    uniform on {0,1}^L and the control outcome is forced to
//    e = phase XOR <d, p0 XOR p1>; for Collapsed the pair (e,d) is uniform.
//  * computational readout: branch bit (uniform for Superposed) plus that
//    branch's payload.
//  * oracle evaluation f(branch, payload): if both branches agree on the
//    output the state is returned untouched (the idealized zero-disturbance
//    regime); if they differ, the register collapses to a uniform branch.
#pragma once

#include <functional>
#include <utility>

#include "skl/bits.hpp"
#include "skl/rng.hpp"

namespace skl {

// One conjugate-coding qubit: data bit x, basis bit theta (0 = computational,
// 1 = Hadamard).
struct BB84Qubit {
  int x_bit = 0;
  int theta_bit = 0;
};

struct BranchedRegister {
  enum class Kind { Collapsed, Superposed };
  Kind kind = Kind::Collapsed;
  size_t payload_len = 0;

  // Collapsed fields.
  int bit = 0;
  Bitstring payload;

  // Superposed fields.
  Bitstring payload0;
  Bitstring payload1;
  int phase_bit = 0;

  static BranchedRegister collapsed(int b, Bitstring p);
  static BranchedRegister superposed(Bitstring p0, Bitstring p1, int phase);

  // Structural equality. This is the project's "state unchanged" predicate:
  // the zero-disturbance idealization makes no-disturbance exact, so reuse
  // checks compare for identity rather than trace distance.
  bool operator==(const BranchedRegister& o) const;
  bool operator!=(const BranchedRegister& o) const { return !(*this == o); }
};

// Outcome of the all-Hadamard readout: control-qubit outcome e plus the
// payload-register mask d.
struct HadamardOutcome {
  int e = 0;
  Bitstring d;
};

// Prepare the register for one qubit: theta=0 embeds the payload selected by
// x; theta=1 creates the two-branch superposition with phase x. The rng
// parameter is part of the uniform operation signature; embedding itself is
// deterministic.
BranchedRegister embed(const BB84Qubit& q, const Bitstring& payload_for_0, const Bitstring& payload_for_1,
                       Rng& rng);

// Evaluate f(branch_bit, payload) in superposition and measure the output
// register. Returns the measured output and the post-measurement register.
using BranchFn = std::function<Bitstring(int, const Bitstring&)>;
std::pair<Bitstring, BranchedRegister> oracle_measure(const BranchedRegister& reg, const BranchFn& f, Rng& rng);

// Measure every qubit (control + payload) in the Hadamard basis. Consumes the
// register.
HadamardOutcome hadamard_measure(const BranchedRegister& reg, Rng& rng);

// Measure in the computational basis: returns (branch bit, payload). Consumes
// the register.
std::pair<int, Bitstring> computational_measure(const BranchedRegister& reg, Rng& rng);

}  // namespace skl
