#include "skl/statevector.hpp"

#include <bit>
#include <cassert>
#include <cmath>

namespace skl::sv {

namespace {

uint64_t basis_index(int bit, const Bitstring& payload) {
  return static_cast<uint64_t>(bit) | (payload.as_uint() << 1);
}

}  // namespace

State state_of(const BranchedRegister& reg) {
  State st;
  st.n_qubits = 1 + reg.payload_len;
  assert(st.n_qubits <= 20);
  st.amp.assign(uint64_t{1} << st.n_qubits, {0.0, 0.0});
  if (reg.kind == BranchedRegister::Kind::Collapsed) {
    st.amp[basis_index(reg.bit, reg.payload)] = {1.0, 0.0};
    return st;
  }
  const double r = 1.0 / std::sqrt(2.0);
  st.amp[basis_index(0, reg.payload0)] += r;
  st.amp[basis_index(1, reg.payload1)] += (reg.phase_bit ? -r : r);
  return st;
}

std::vector<double> hadamard_all_distribution(const BranchedRegister& reg) {
  const State st = state_of(reg);
  const uint64_t dim = st.amp.size();
  const double norm = 1.0 / std::sqrt(static_cast<double>(dim));
  std::vector<double> probs(dim, 0.0);
  for (uint64_t y = 0; y < dim; ++y) {
    std::complex<double> a{0.0, 0.0};
    for (uint64_t z = 0; z < dim; ++z) {
      const int sign = (std::popcount(y & z) & 1) ? -1 : 1;
      a += static_cast<double>(sign) * st.amp[z];
    }
    a *= norm;
    probs[y] = std::norm(a);
  }
  return probs;
}

std::vector<double> computational_distribution(const BranchedRegister& reg) {
  const State st = state_of(reg);
  std::vector<double> probs(st.amp.size(), 0.0);
  for (size_t z = 0; z < st.amp.size(); ++z) probs[z] = std::norm(st.amp[z]);
  return probs;
}

std::vector<double> oracle_outcome_distribution(const BranchedRegister& reg, const BranchFn& f, size_t out_bits) {
  std::vector<double> probs(uint64_t{1} << out_bits, 0.0);
  auto add = [&](int bit, const Bitstring& payload, double p) {
    const Bitstring v = f(bit, payload);
    assert(v.size() == out_bits);
    probs[v.as_uint()] += p;
  };
  if (reg.kind == BranchedRegister::Kind::Collapsed) {
    add(reg.bit, reg.payload, 1.0);
  } else {
    add(0, reg.payload0, 0.5);
    add(1, reg.payload1, 0.5);
  }
  return probs;
}

}  // namespace skl::sv
