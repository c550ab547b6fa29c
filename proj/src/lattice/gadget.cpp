#include "skl/lattice/gadget.hpp"

#include <bit>
#include <stdexcept>

namespace skl {

size_t GadgetParams::digits_per_row() const {
  return std::bit_width(static_cast<uint64_t>(q) - 1);
}

void check_gadget_params(const GadgetParams& gp) {
  if (gp.q < 3) throw std::invalid_argument("gadget modulus must be >= 3");
  if (gp.n < 1) throw std::invalid_argument("gadget n must be >= 1");
  if (gp.k < gp.n * gp.digits_per_row()) throw std::invalid_argument("gadget k below n*ceil(log2 q)");
}

ZqMatrix gadget(const GadgetParams& gp) {
  check_gadget_params(gp);
  const size_t w = gp.digits_per_row();
  ZqMatrix g(gp.n, gp.k, gp.q);
  for (size_t i = 0; i < gp.n; ++i)
    for (size_t j = 0; j < w; ++j) g.set(i, i * w + j, int64_t{1} << j);
  return g;
}

ZqMatrix gadget_basis(const GadgetParams& gp) {
  check_gadget_params(gp);
  const size_t w = gp.digits_per_row();
  ZqMatrix s(gp.k, gp.k, gp.q);
  for (size_t i = 0; i < gp.n; ++i) {
    const size_t base = i * w;
    for (size_t j = 0; j + 1 < w; ++j) {
      s.set(base + j, base + j, 2);
      s.set(base + j + 1, base + j, -1);
    }
    // Last column of the block: the binary expansion of q, so that
    // g . column = q = 0 mod q.
    for (size_t t = 0; t < w; ++t) s.set(base + t, base + w - 1, (gp.q >> t) & 1);
  }
  // Padded coordinates are unconstrained by G; identity columns span them.
  for (size_t c = gp.n * w; c < gp.k; ++c) s.set(c, c, 1);
  return s;
}

ZqMatrix gadget_decompose(const GadgetParams& gp, const ZqMatrix& v) {
  check_gadget_params(gp);
  if (v.rows() != gp.n || v.modulus() != gp.q) throw std::invalid_argument("gadget_decompose shape mismatch");
  const size_t w = gp.digits_per_row();
  ZqMatrix d(gp.k, v.cols(), gp.q);
  for (size_t c = 0; c < v.cols(); ++c) {
    for (size_t i = 0; i < gp.n; ++i) {
      int64_t lift = v.at(i, c) % gp.q;
      if (lift < 0) lift += gp.q;
      for (size_t j = 0; j < w; ++j) d.set(i * w + j, c, (lift >> j) & 1);
    }
  }
  return d;
}

std::optional<std::pair<ZqMatrix, ZqMatrix>> gadget_invert(const GadgetParams& gp, const ZqMatrix& y) {
  check_gadget_params(gp);
  if (y.rows() != gp.k || y.cols() != 1 || y.modulus() != gp.q) throw std::invalid_argument("gadget_invert shape mismatch");
  const size_t w = gp.digits_per_row();

  // c = S^T y mod q equals the integer vector S^T e whenever the noise obeys
  // ||S^T e||_inf < q/2; back-substitute per block to recover e itself.
  const ZqMatrix c = gadget_basis(gp).transpose() * y;

  std::vector<int128> e(gp.k, 0);
  for (size_t i = 0; i < gp.n; ++i) {
    const size_t base = i * w;
    // With e[base+j] = 2^j e0 - t_j: t_0 = 0, t_{j+1} = 2 t_j + c_j, and the
    // q-expansion row pins e0 = (c_{w-1} + sum_j q_j t_j) / q (always an
    // integer division when the input is consistent; the block determinant
    // is q).
    std::vector<int128> t(w, 0);
    for (size_t j = 0; j + 1 < w; ++j) t[j + 1] = 2 * t[j] + c.at(base + j, 0);
    int128 dot = 0;
    for (size_t j = 0; j < w; ++j)
      if ((gp.q >> j) & 1) dot += t[j];
    const int128 num = c.at(base + w - 1, 0) + dot;
    if (num % gp.q != 0) return std::nullopt;
    const int128 e0 = num / gp.q;
    for (size_t j = 0; j < w; ++j) {
      const int128 ej = (static_cast<int128>(1) << j) * e0 - t[j];
      // Outside the canonical entry range the reconstruction cannot be the
      // contracted small-noise solution: signal failure rather than wrap.
      if (ej > gp.q / 2 || ej < -((static_cast<int128>(gp.q) - 1) / 2)) return std::nullopt;
      e[base + j] = ej;
    }
  }
  for (size_t c_pad = gp.n * w; c_pad < gp.k; ++c_pad) e[c_pad] = c.at(c_pad, 0);

  ZqMatrix e_mat(gp.k, 1, gp.q);
  for (size_t j = 0; j < gp.k; ++j) e_mat.set(j, 0, static_cast<int64_t>(e[j]));

  // s_i reads off the weight-1 gadget column of each block.
  ZqMatrix s(gp.n, 1, gp.q);
  for (size_t i = 0; i < gp.n; ++i)
    s.set(i, 0, canonical_mod(static_cast<int128>(y.at(i * w, 0)) - static_cast<int128>(e[i * w]), gp.q));

  // Full consistency check: reject any reconstruction that does not satisfy
  // y^T = s^T G + e^T exactly.
  const ZqMatrix expect = gadget(gp).transpose() * s + e_mat;
  if (expect != y) return std::nullopt;
  return std::make_pair(std::move(s), std::move(e_mat));
}

}  // namespace skl
