// Trapdoor generation and preimage sampling for matrices of the shape
// A = [A_bar | A_bar R + G].
//
// The trapdoor is the small lifting matrix R: a gadget-side solution z with
// G z = v - A_bar p lifts to the full preimage (p - R z, z), which satisfies
// A x = v exactly and inherits the norm bound ||x||_inf <= cut(p) + ones(z).
// Preimage sampling (sampre) runs this with a narrow Gaussian p; the same
// mechanism with a wide Gaussian is the trapdoor regime of dgauss_coset.
// Exact membership and the norm bound are hard contracts checked on every
// sample; closeness of the preimage law to a true lattice Gaussian is only
// validated statistically at coarse tolerance by the tests.
//
// invert_lwe recovers (s, e) from y^T = s^T A + e^T via the gadget: the
// combination y2^T - y1^T R cancels A_bar and leaves an s^T G + noise
// instance for gadget_invert, exact whenever ||e||_inf stays within
// beta_err = q / (5 k (m ||R||_inf + 1)).
#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "skl/lattice/gadget.hpp"
#include "skl/lattice/zq.hpp"

namespace skl {

// The opaque trapdoor payload: enough to rebuild [A_bar | A_bar R + G] and
// to lift gadget preimages. Also reused for derived signing trapdoors, where
// R is not ternary and the gadget block is padded.
struct LweTrapdoor {
  ZqMatrix a_bar;   // n x m_bar
  ZqMatrix r;       // m_bar x k_g
  GadgetParams gp;  // gadget over the trailing k_g columns

  size_t m() const { return a_bar.cols() + gp.k; }
  ZqMatrix full_matrix() const;  // [a_bar | a_bar r + G]
};

struct Trapdoor {
  ZqMatrix a;  // n x m
  LweTrapdoor td;
  int64_t beta_sam = 0;  // preimage norm bound: 24 + n * ceil(log2 q)
};

// m must be at least n*ceil(log2 q) + 1; statistical quality wants
// m >= 2 n ceil(log2 q) (Condition 2), which the schemes enforce separately.
Trapdoor trapgen(size_t n, size_t m, int64_t q, Rng& rng);

// Small random matrix with the preimage marginals (i.i.d. width-2 Gaussian
// entries, cut 24); the reference object preimages are compared against.
ZqMatrix sam(size_t rows, size_t cols, int64_t q, Rng& rng);

// Per column v: A * out = v exactly and ||out||_inf <= beta_sam.
ZqMatrix sampre(const Trapdoor& trap, const ZqMatrix& v, Rng& rng);

// Recover (s, e) with y^T = s^T [A] + e^T for A = [A_bar | A_bar R + G]
// described by (a_full, r, gp). Returns nullopt if reconstruction fails or
// the recovered noise exceeds beta_err (the distinguished failure signal).
std::optional<std::pair<ZqMatrix, ZqMatrix>> invert_lwe(const ZqMatrix& a_full, const ZqMatrix& r,
                                                        const GadgetParams& gp, const ZqMatrix& y);

// The noise bound the inversion lemma contracts for: q / (5 k (m ||R||_inf + 1)).
int64_t invert_lwe_noise_bound(const ZqMatrix& r, const GadgetParams& gp);

}  // namespace skl
