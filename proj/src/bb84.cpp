#include "skl/bb84.hpp"

#include "skl/statevector.hpp"

namespace skl {

BB84String sample_bb84(size_t n, Rng& rng) {
  BB84String s;
  s.x = Bitstring::random(n, rng);
  s.theta = Bitstring::random(n, rng);
  s.qubits.reserve(n);
  for (size_t i = 0; i < n; ++i) s.qubits.push_back(BB84Qubit{s.x.get(i), s.theta.get(i)});
  return s;
}

CdOutcome run_cdbb84(size_t n, const CdAdversary& adv, Rng& rng) {
  const BB84String s = sample_bb84(n, rng);
  std::vector<BranchedRegister> regs;
  regs.reserve(n);
  const Bitstring empty(0);
  for (const auto& q : s.qubits) regs.push_back(embed(q, empty, empty, rng));

  Rng adv_rng = rng.split("cdbb84-adversary");
  auto [y, st] = adv.stage0(regs, adv_rng);

  Bitstring x_on_hadamard(n);
  for (size_t i = 0; i < n; ++i)
    if (s.theta.get(i)) x_on_hadamard.set(i, s.x.get(i));
  Bitstring z = adv.stage1(st, s.theta, x_on_hadamard, adv_rng);

  CdOutcome out;
  out.won = true;
  for (size_t i = 0; i < n; ++i) {
    if (s.theta.get(i) && y.get(i) != s.x.get(i)) out.won = false;
    if (!s.theta.get(i) && z.get(i) != s.x.get(i)) out.won = false;
  }
  out.y = std::move(y);
  out.z = std::move(z);
  return out;
}

CdAdversary honest_deleter_adversary() {
  CdAdversary a;
  a.name = "honest-deleter";
  a.stage0 = [](std::vector<BranchedRegister>& qubits, Rng& rng) {
    Bitstring y(qubits.size());
    for (size_t i = 0; i < qubits.size(); ++i) {
      // Payload length is 0, so the outcome is just the control-qubit bit e;
      // on a Hadamard-basis qubit it equals the encoded data bit exactly.
      y.set(i, hadamard_measure(qubits[i], rng).e);
    }
    return std::make_pair(std::move(y), std::any{});
  };
  a.stage1 = [](std::any&, const Bitstring& theta, const Bitstring&, Rng& rng) {
    // Nothing retained: guess the computational positions blind.
    return Bitstring::random(theta.size(), rng);
  };
  return a;
}

CdAdversary basis_hoarder_adversary() {
  CdAdversary a;
  a.name = "basis-hoarder";
  a.stage0 = [](std::vector<BranchedRegister>& qubits, Rng& rng) {
    Bitstring measured(qubits.size());
    for (size_t i = 0; i < qubits.size(); ++i) {
      measured.set(i, computational_measure(qubits[i], rng).first);
    }
    // y must be produced now, with no basis information: blind guess.
    Bitstring y = Bitstring::random(qubits.size(), rng);
    return std::make_pair(std::move(y), std::any{std::move(measured)});
  };
  a.stage1 = [](std::any& st, const Bitstring&, const Bitstring&, Rng&) {
    return std::any_cast<Bitstring&>(st);
  };
  return a;
}

double exact_win_probability(RefStrategy strat, const Bitstring& x, const Bitstring& theta) {
  // Both reference strategies act qubit-by-qubit, so the win probability
  // factorizes; each factor is read off the statevector oracle rather than
  // assumed.
  double p = 1.0;
  const Bitstring empty(0);
  Rng dummy(0);
  for (size_t i = 0; i < x.size(); ++i) {
    const BranchedRegister reg = embed(BB84Qubit{x.get(i), theta.get(i)}, empty, empty, dummy);
    if (strat == RefStrategy::HonestDeleter) {
      if (theta.get(i)) {
        // Probability the Hadamard readout reproduces x[i].
        p *= sv::hadamard_all_distribution(reg)[static_cast<size_t>(x.get(i))];
      } else {
        p *= 0.5;  // blind guess on a computational position
      }
    } else {
      if (theta.get(i)) {
        p *= 0.5;  // blind guess on a Hadamard position
      } else {
        p *= sv::computational_distribution(reg)[static_cast<size_t>(x.get(i))];
      }
    }
  }
  return p;
}

}  // namespace skl
