// Dense statevector oracle for small registers.
//
// This is the independent ground truth the symbolic simulator is tested
// against: a BranchedRegister over an L-bit payload is expanded into 2^(1+L)
// amplitudes and the measurement laws are computed by brute force. It is a
// test oracle only — nothing in the schemes calls it — and it is meant for
// L <= ~10 (the tests use L <= 3).
//
// Basis-state indexing: the control bit occupies bit 0 of the index and
// payload bit i occupies index bit 1+i. Outcome indexing matches: an
// all-Hadamard outcome (e, d) maps to e | (d << 1).
#pragma once

#include <complex>
#include <vector>

#include "skl/qsim.hpp"

namespace skl::sv {

struct State {
  size_t n_qubits = 0;
  std::vector<std::complex<double>> amp;
};

State state_of(const BranchedRegister& reg);

// Probability of each (e, d) outcome when every qubit is measured in the
// Hadamard basis. Index layout as described above; size 2^(1+L).
std::vector<double> hadamard_all_distribution(const BranchedRegister& reg);

// Probability of each (b, payload) outcome under a full computational-basis
// readout; same index layout.
std::vector<double> computational_distribution(const BranchedRegister& reg);

// Distribution of the measured oracle output f(branch, payload) over out_bits
// output wires (index = output value, little-endian).
std::vector<double> oracle_outcome_distribution(const BranchedRegister& reg, const BranchFn& f, size_t out_bits);

}  // namespace skl::sv
