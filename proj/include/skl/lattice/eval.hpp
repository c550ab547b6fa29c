// Homomorphic circuit evaluation on gadget-encoded matrices.
//
// A function on l input bits is a NAND circuit over wires 1..l (wire 1 is
// reserved for the constant-1 input convention); evaluation produces, for a
// block matrix B = [B_1 | ... | B_l] (blocks n x m), integer matrices H and
// H_hat (ml x m) satisfying the exact identity
//
//   [B - x (x) G] * H_hat  =  B * H - f(x) * G   (mod q),
//
// where x (x) G = [x_1 G | ... | x_l G] and G is the gadget padded to m
// columns. The per-gate rules are
//
//   W_v   = G^{-1}(B * H_v)                      (binary, m x m)
//   H_w   = S_1 - H_u * W_v
//   H_hat_w = S_1 - H_hat_u * W_v - x_u * H_hat_v
//
// with S_i the block selector (identity at block i). Input wires map to
// selectors; a NAND then satisfies the identity inductively because
// G * W_v = B * H_v and x_1 = 1. Norms obey ||H||_inf <= (2m)^depth.
//
// Wire matrices are kept block-sparse: the circuits this project signs with
// touch a handful of blocks, so products against B and against trapdoors
// cost O(m^2) per nonzero block instead of O(l m^3).
#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "skl/bits.hpp"
#include "skl/lattice/gadget.hpp"
#include "skl/lattice/zq.hpp"

namespace skl {

struct Circuit {
  // Wires are 1-based: inputs 1..n_inputs, gate g's output is wire
  // n_inputs + 1 + g. Gate inputs must reference earlier wires.
  struct Gate {
    size_t u = 0;
    size_t v = 0;
  };

  size_t n_inputs = 0;
  std::vector<Gate> gates;
  size_t output_wire = 0;

  size_t wire_count() const { return n_inputs + gates.size(); }
  void validate() const;  // throws invalid_argument on malformed structure
  size_t depth() const;
  int evaluate(const Bitstring& x) const;  // x indexed from 0 == wire 1
};

// Block-sparse ml x m integer matrix (blocks of m rows each).
class WireMatrix {
 public:
  WireMatrix() = default;
  WireMatrix(size_t n_blocks, size_t m, int64_t q);
  static WireMatrix selector(size_t n_blocks, size_t m, int64_t q, size_t block);

  size_t n_blocks() const { return n_blocks_; }
  size_t m() const { return m_; }

  bool has_block(size_t j) const { return nz_.count(j) != 0; }
  const std::map<size_t, ZqMatrix>& blocks() const { return nz_; }

  int64_t linf() const;
  ZqMatrix dense() const;  // (n_blocks * m) x m

  WireMatrix operator-(const WireMatrix& o) const;
  WireMatrix right_mul(const ZqMatrix& w) const;  // this * w, w is m x m

 private:
  size_t n_blocks_ = 0;
  size_t m_ = 0;
  int64_t q_ = 2;
  std::map<size_t, ZqMatrix> nz_;
};

// B * H for B = n x (l m) against block-sparse H.
ZqMatrix mul_wide(const ZqMatrix& b, const WireMatrix& h);

// x (x) G = [x_1 G | ... | x_l G] with G the n x m padded gadget.
ZqMatrix x_tensor_g(const Bitstring& x, const GadgetParams& gp_m);

WireMatrix eval_f(const Circuit& c, const ZqMatrix& b, size_t max_depth);
WireMatrix eval_fx(const Circuit& c, const Bitstring& x, const ZqMatrix& b, size_t max_depth);

}  // namespace skl
