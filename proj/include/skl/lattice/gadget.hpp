// The powers-of-two gadget matrix G = I_n (x) (1, 2, ..., 2^(w-1)), w =
// ceil(log2 q), zero-padded on the right to k >= n*w columns, together with:
//
//  * an explicit short basis S of the lattice { z : G z = 0 mod q } with
//    ||S||_inf <= 2 (bidiagonal (2, -1) columns plus the binary expansion of
//    q; identity on the padded coordinates);
//  * deterministic binary decomposition ("G-inverse"): digits(v) is the
//    {0,1}-vector with G * digits(v) = v mod q;
//  * exact noisy inversion: recover (s, e) from y^T = s^T G + e^T whenever
//    ||S^T e||_inf < q/2, with a distinguished failure signal otherwise.
#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "skl/lattice/zq.hpp"

namespace skl {

struct GadgetParams {
  size_t n = 1;
  size_t k = 1;
  int64_t q = 3;

  size_t digits_per_row() const;  // w = ceil(log2 q)
};

// Throws if k < n * w.
void check_gadget_params(const GadgetParams& gp);

ZqMatrix gadget(const GadgetParams& gp);        // n x k
ZqMatrix gadget_basis(const GadgetParams& gp);  // k x k, integer entries, |.| <= 2

// Binary decomposition of each column of V (n x c) into a {0,1} matrix D
// (k x c) with G * D = V mod q.
ZqMatrix gadget_decompose(const GadgetParams& gp, const ZqMatrix& v);

// Exact recovery of (s, e) from y^T = s^T G + e^T. Returns nullopt when the
// reconstruction is inconsistent (noise outside the contracted set). s is
// n x 1, e is k x 1.
std::optional<std::pair<ZqMatrix, ZqMatrix>> gadget_invert(const GadgetParams& gp, const ZqMatrix& y);

}  // namespace skl
