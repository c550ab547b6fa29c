#include "skl/lattice/trapdoor.hpp"

#include <stdexcept>

#include "skl/lattice/dgauss.hpp"

namespace skl {

ZqMatrix LweTrapdoor::full_matrix() const { return a_bar.hstack(a_bar * r + gadget(gp)); }

Trapdoor trapgen(size_t n, size_t m, int64_t q, Rng& rng) {
  GadgetParams gp;
  gp.n = n;
  gp.q = q;
  gp.k = 1;  // provisional; fixed below once w is known
  const size_t w = gp.digits_per_row();
  gp.k = n * w;
  if (m < gp.k + 1) throw std::invalid_argument("trapgen m too small for n*ceil(log2 q) gadget columns");
  const size_t m_bar = m - gp.k;

  Trapdoor out;
  out.td.a_bar = ZqMatrix::uniform(n, m_bar, q, rng);
  out.td.r = ZqMatrix(m_bar, gp.k, q);
  for (size_t i = 0; i < m_bar; ++i)
    for (size_t j = 0; j < gp.k; ++j) out.td.r.set(i, j, static_cast<int64_t>(rng.below(3)) - 1);
  out.td.gp = gp;
  out.a = out.td.full_matrix();
  out.beta_sam = 24 + static_cast<int64_t>(gp.k);
  return out;
}

ZqMatrix sam(size_t rows, size_t cols, int64_t q, Rng& rng) {
  const DiscreteGaussian1D d1(2.0, 24);
  ZqMatrix out(rows, cols, q);
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j) out.set(i, j, d1.sample(rng));
  return out;
}

ZqMatrix sampre(const Trapdoor& trap, const ZqMatrix& v, Rng& rng) {
  const ZqMatrix& a_bar = trap.td.a_bar;
  if (v.rows() != a_bar.rows() || v.modulus() != a_bar.modulus())
    throw std::invalid_argument("sampre target shape mismatch");
  const size_t m_bar = a_bar.cols();
  const size_t k_g = trap.td.gp.k;
  const DiscreteGaussian1D d1(2.0, 24);

  ZqMatrix out(m_bar + k_g, v.cols(), v.modulus());
  for (size_t c = 0; c < v.cols(); ++c) {
    ZqMatrix p(m_bar, 1, v.modulus());
    for (size_t j = 0; j < m_bar; ++j) p.set(j, 0, d1.sample(rng));
    const ZqMatrix z = gadget_decompose(trap.td.gp, v.column(c) - a_bar * p);
    const ZqMatrix x1 = p - trap.td.r * z;
    out.set_block(0, c, x1);
    out.set_block(m_bar, c, z);
  }
  if (out.linf() > trap.beta_sam) throw std::logic_error("sampre norm contract violated");
  return out;
}

int64_t invert_lwe_noise_bound(const ZqMatrix& r, const GadgetParams& gp) {
  const int64_t m = static_cast<int64_t>(r.rows());
  const int64_t k = static_cast<int64_t>(gp.k);
  return gp.q / (5 * k * (m * r.linf() + 1));
}

std::optional<std::pair<ZqMatrix, ZqMatrix>> invert_lwe(const ZqMatrix& a_full, const ZqMatrix& r,
                                                        const GadgetParams& gp, const ZqMatrix& y) {
  const size_t m = r.rows();
  const size_t k = gp.k;
  if (a_full.cols() != m + k || y.rows() != m + k || y.cols() != 1 || a_full.rows() != gp.n)
    throw std::invalid_argument("invert_lwe shape mismatch");

  const ZqMatrix y1 = y.block(0, 0, m, 1);
  const ZqMatrix y2 = y.block(m, 0, k, 1);
  // y2 - R^T y1 = (s^T G + e2^T - e1^T R)^T: a gadget instance whose noise
  // e2 - R^T e1 is within gadget_invert's reach for contracted e.
  auto inverted = gadget_invert(gp, y2 - r.transpose() * y1);
  if (!inverted) return std::nullopt;
  ZqMatrix s = std::move(inverted->first);

  ZqMatrix e = y - a_full.transpose() * s;
  if (e.linf() > invert_lwe_noise_bound(r, gp)) return std::nullopt;
  return std::make_pair(std::move(s), std::move(e));
}

}  // namespace skl
