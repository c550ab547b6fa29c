// Discrete Gaussian sampling over Z and over cosets { x in box^m : A x = y },
// where box = (-q/2, q/2] is the canonical entry range.
//
// One-dimensional sampling targets rho_sigma(x) = exp(-pi x^2 / sigma^2) on
// Z intersected with [-cut, cut], cut = min(12 sigma, q/2): an inverse-CDF
// table for small widths, rejection from a uniform proposal with acceptance
// weight rho for large widths. Both are exact for the truncated target and
// bit-stable given the seed.
//
// Coset sampling has two regimes:
//  * direct (small q, one-row A): all but one coordinate are proposed from
//    the 1D sampler, the remaining coordinate is forced by the congruence,
//    and the proposal is accepted with probability rho(forced coordinate).
//    This is exact rejection sampling from the restricted-coset law.
//  * trapdoor (scheme scale): x = (p - R z, z) with p Gaussian of width
//    sigma and z the binary gadget decomposition forced by membership. The
//    law is Gaussian only up to a trapdoor-dependent shift several orders
//    below sigma; membership and norm contracts are exact, distributional
//    quality is validated statistically by the callers.
#pragma once

#include <cstdint>
#include <vector>

#include "skl/lattice/zq.hpp"
#include "skl/rng.hpp"

namespace skl {

struct LweTrapdoor;  // trapdoor.hpp

class DiscreteGaussian1D {
 public:
  // Throws if sigma < 1 or cut < 1.
  DiscreteGaussian1D(double sigma, int64_t cut);

  int64_t sample(Rng& rng) const;
  double sigma() const { return sigma_; }
  int64_t cut() const { return cut_; }

  // Unnormalized target weight rho(x), 0 outside the cut.
  double weight(int64_t x) const;

 private:
  double sigma_ = 1.0;
  int64_t cut_ = 1;
  std::vector<double> cdf_;  // inverse-CDF table for small widths; empty in rejection mode
};

// Width admissibility for coset sampling: sigma in (sqrt(8m), q/sqrt(8m)).
void check_sigma(double sigma, size_t m, int64_t q);

// Direct regime: A is 1 x m with an invertible first entry, y is 1 x 1.
// Returns x (m x 1) with A x = y mod q, exactly distributed as the
// rho_sigma-weighted law on the coset (truncated at the cut).
ZqMatrix dgauss_coset_direct(const ZqMatrix& a, const ZqMatrix& y, double sigma, Rng& rng);

// Trapdoor regime: the matrix is the trapdoor's own [A_bar | A_bar R + G],
// y is n x 1. Exact membership A x = y; width sigma.
ZqMatrix dgauss_coset_trapdoor(const LweTrapdoor& td, const ZqMatrix& y, double sigma, Rng& rng);

// Dispatcher per the q-size regime (direct when the rejection rate is
// tractable, trapdoor otherwise; the trapdoor may be null only in the direct
// regime).
ZqMatrix dgauss_coset(const ZqMatrix& a, const ZqMatrix& y, double sigma, const LweTrapdoor* td, Rng& rng);

}  // namespace skl
