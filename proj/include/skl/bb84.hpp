// The two-stage certified-deletion game over conjugate-coding states.
//
// The challenger prepares |x^theta> for uniform x, theta in {0,1}^n and hands
// the qubits to the adversary's first stage, which must immediately output a
// claim y (graded on the Hadamard positions). The second stage then learns
// theta together with the data bits at the Hadamard positions and must output
// z (graded on the computational positions). Winning requires both:
//
//   y[i] = x[i] for every i with theta[i] = 1, and
//   z[i] = x[i] for every i with theta[i] = 0.
//
// The tension is that producing y destroys the information needed for z and
// vice versa; the two shipped reference strategies sit at the two extremes.
#pragma once

#include <any>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "skl/qsim.hpp"

namespace skl {

struct BB84String {
  Bitstring x;
  Bitstring theta;
  std::vector<BB84Qubit> qubits;
};

// Uniform x, theta and the matching qubit list.
BB84String sample_bb84(size_t n, Rng& rng);

// Two-stage adversary. Stage 0 consumes/uses the qubit registers (payload
// length 0) and returns the Hadamard-position claim y plus arbitrary retained
// state. Stage 1 sees theta and x restricted to the Hadamard positions
// (zeros elsewhere) and returns the computational-position claim z.
struct CdAdversary {
  std::string name;
  std::function<std::pair<Bitstring, std::any>(std::vector<BranchedRegister>& qubits, Rng&)> stage0;
  std::function<Bitstring(std::any& state, const Bitstring& theta, const Bitstring& x_on_hadamard, Rng&)> stage1;
};

struct CdOutcome {
  Bitstring y;
  Bitstring z;
  bool won = false;
};

// One round of the game against the given adversary.
CdOutcome run_cdbb84(size_t n, const CdAdversary& adv, Rng& rng);

// Reference strategies.
// Honest deleter: Hadamard-measures everything for y, then guesses z blind.
// Wins with probability 2^-(#computational positions).
CdAdversary honest_deleter_adversary();
// Basis hoarder: computationally measures everything and keeps the results
// for z, guessing y blind. Wins with probability 2^-(#Hadamard positions).
CdAdversary basis_hoarder_adversary();

// Exact win probability of a reference strategy on a fixed (x, theta),
// computed qubit-by-qubit from the statevector oracle's measurement
// distributions (used by the exhaustive small-n checks).
enum class RefStrategy { HonestDeleter, BasisHoarder };
double exact_win_probability(RefStrategy strat, const Bitstring& x, const Bitstring& theta);

}  // namespace skl
