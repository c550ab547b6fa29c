#include "skl/lattice/dgauss.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "skl/lattice/gadget.hpp"
#include "skl/lattice/trapdoor.hpp"

namespace skl {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
// Inverse-CDF tables up to this width; rejection beyond (table size grows as
// 24 sigma + 1).
constexpr double kTableSigmaMax = 512.0;

}  // namespace

DiscreteGaussian1D::DiscreteGaussian1D(double sigma, int64_t cut) : sigma_(sigma), cut_(cut) {
  if (!(sigma >= 1.0)) throw std::invalid_argument("gaussian width must be >= 1");
  if (cut < 1) throw std::invalid_argument("gaussian cut must be >= 1");
  if (sigma <= kTableSigmaMax) {
    cdf_.reserve(static_cast<size_t>(2 * cut_ + 1));
    double acc = 0.0;
    for (int64_t x = -cut_; x <= cut_; ++x) {
      acc += weight(x);
      cdf_.push_back(acc);
    }
    for (double& v : cdf_) v /= acc;
  }
}

double DiscreteGaussian1D::weight(int64_t x) const {
  if (x < -cut_ || x > cut_) return 0.0;
  const double t = static_cast<double>(x) / sigma_;
  return std::exp(-kPi * t * t);
}

int64_t DiscreteGaussian1D::sample(Rng& rng) const {
  if (!cdf_.empty()) {
    const double u = rng.unit();
    const auto it = std::lower_bound(cdf_.begin(), cdf_.end(), u);
    const int64_t idx = it == cdf_.end() ? static_cast<int64_t>(cdf_.size()) - 1 : it - cdf_.begin();
    return idx - cut_;
  }
  // Rejection from the uniform proposal on [-cut, cut]: acceptance weight is
  // rho(x) <= 1, so the truncated target is hit exactly. Expected tries are
  // about 2 cut / sigma (roughly 24 at the usual cut of 12 sigma).
  for (;;) {
    const int64_t x = rng.range_i64(-cut_, cut_);
    if (rng.unit() < weight(x)) return x;
  }
}

void check_sigma(double sigma, size_t m, int64_t q) {
  const double lo = std::sqrt(8.0 * static_cast<double>(m));
  const double hi = static_cast<double>(q) / lo;
  if (!(sigma > lo && sigma < hi)) throw std::invalid_argument("gaussian width outside (sqrt(8m), q/sqrt(8m))");
}

namespace {

int64_t gauss_cut(double sigma, int64_t q) {
  const int64_t twelve = static_cast<int64_t>(12.0 * sigma);
  return std::min(twelve, (q - 1) / 2);
}

// Modular inverse for odd prime q via Fermat; a must be nonzero mod q.
int64_t inv_mod(int64_t a, int64_t q) {
  int64_t base = a % q;
  if (base < 0) base += q;
  if (base == 0) throw std::invalid_argument("no inverse for 0");
  int64_t result = 1;
  int64_t exp = q - 2;
  while (exp > 0) {
    if (exp & 1) result = static_cast<int64_t>(static_cast<int128>(result) * base % q);
    base = static_cast<int64_t>(static_cast<int128>(base) * base % q);
    exp >>= 1;
  }
  return result;
}

}  // namespace

ZqMatrix dgauss_coset_direct(const ZqMatrix& a, const ZqMatrix& y, double sigma, Rng& rng) {
  if (a.rows() != 1 || y.rows() != 1 || y.cols() != 1 || a.modulus() != y.modulus())
    throw std::invalid_argument("direct coset sampler needs one-row A and scalar y");
  const int64_t q = a.modulus();
  const size_t m = a.cols();
  check_sigma(sigma, m, q);
  if (a.at(0, 0) == 0) throw std::invalid_argument("direct coset sampler needs invertible A[0]");
  const int64_t a0_inv = inv_mod(a.at(0, 0), q);
  const DiscreteGaussian1D d1(sigma, gauss_cut(sigma, q));

  ZqMatrix x(m, 1, q);
  for (;;) {
    // Free coordinates from the truncated 1D law; the first coordinate is
    // forced by the congruence and accepted with its own rho weight, which
    // is exactly conditional sampling on the coset.
    int128 rest = 0;
    for (size_t j = 1; j < m; ++j) {
      const int64_t v = d1.sample(rng);
      x.set(j, 0, v);
      rest += static_cast<int128>(a.at(0, j)) * v % q;
    }
    const int64_t target = canonical_mod(static_cast<int128>(y.at(0, 0)) - rest, q);
    const int64_t forced = canonical_mod(static_cast<int128>(a0_inv) * target, q);
    if (rng.unit() < d1.weight(forced)) {
      x.set(0, 0, forced);
      return x;
    }
  }
}

ZqMatrix dgauss_coset_trapdoor(const LweTrapdoor& td, const ZqMatrix& y, double sigma, Rng& rng) {
  const int64_t q = td.a_bar.modulus();
  const size_t m_bar = td.a_bar.cols();
  const size_t k_g = td.gp.k;
  if (y.rows() != td.a_bar.rows() || y.cols() != 1 || y.modulus() != q)
    throw std::invalid_argument("trapdoor coset sampler shape mismatch");
  check_sigma(sigma, m_bar + k_g, q);
  const DiscreteGaussian1D d1(sigma, gauss_cut(sigma, q));

  ZqMatrix p(m_bar, 1, q);
  for (size_t j = 0; j < m_bar; ++j) p.set(j, 0, d1.sample(rng));
  const ZqMatrix z = gadget_decompose(td.gp, y - td.a_bar * p);
  const ZqMatrix x1 = p - td.r * z;

  ZqMatrix x(m_bar + k_g, 1, q);
  x.set_block(0, 0, x1);
  x.set_block(m_bar, 0, z);
  return x;
}

ZqMatrix dgauss_coset(const ZqMatrix& a, const ZqMatrix& y, double sigma, const LweTrapdoor* td, Rng& rng) {
  // With a trapdoor in hand, use it: one lift per sample, no rejection on the
  // congruence. Otherwise the direct regime is feasible only when the expected
  // rejection count (about q / sigma for a single congruence) stays desk-scale.
  ZqMatrix x = [&] {
    if (td != nullptr) return dgauss_coset_trapdoor(*td, y, sigma, rng);
    const bool direct_ok = a.rows() == 1 && static_cast<double>(a.modulus()) / sigma < 65536.0;
    if (!direct_ok) throw std::invalid_argument("trapdoor required for large-modulus coset sampling");
    return dgauss_coset_direct(a, y, sigma, rng);
  }();
  if (a * x != y) throw std::logic_error("coset sampler membership violated");
  return x;
}

}  // namespace skl
