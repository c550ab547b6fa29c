#include "skl/lattice/eval.hpp"

#include <algorithm>
#include <stdexcept>

namespace skl {

void Circuit::validate() const {
  if (n_inputs < 1) throw std::invalid_argument("circuit needs at least one input wire");
  if (output_wire < 1 || output_wire > wire_count()) throw std::invalid_argument("circuit output wire out of range");
  for (size_t g = 0; g < gates.size(); ++g) {
    const size_t own = n_inputs + 1 + g;
    if (gates[g].u < 1 || gates[g].u >= own || gates[g].v < 1 || gates[g].v >= own)
      throw std::invalid_argument("circuit gate references a later or invalid wire");
  }
}

size_t Circuit::depth() const {
  std::vector<size_t> d(wire_count() + 1, 0);
  for (size_t g = 0; g < gates.size(); ++g) {
    const size_t own = n_inputs + 1 + g;
    d[own] = 1 + std::max(d[gates[g].u], d[gates[g].v]);
  }
  return d[output_wire];
}

int Circuit::evaluate(const Bitstring& x) const {
  if (x.size() != n_inputs) throw std::invalid_argument("circuit input length mismatch");
  std::vector<int> val(wire_count() + 1, 0);
  for (size_t i = 0; i < n_inputs; ++i) val[i + 1] = x.get(i);
  for (size_t g = 0; g < gates.size(); ++g)
    val[n_inputs + 1 + g] = 1 - (val[gates[g].u] & val[gates[g].v]);
  return val[output_wire];
}

WireMatrix::WireMatrix(size_t n_blocks, size_t m, int64_t q) : n_blocks_(n_blocks), m_(m), q_(q) {}

WireMatrix WireMatrix::selector(size_t n_blocks, size_t m, int64_t q, size_t block) {
  WireMatrix out(n_blocks, m, q);
  out.nz_.emplace(block, ZqMatrix::identity(m, q));
  return out;
}

int64_t WireMatrix::linf() const {
  int64_t best = 0;
  for (const auto& [j, mat] : nz_) best = std::max(best, mat.linf());
  return best;
}

ZqMatrix WireMatrix::dense() const {
  ZqMatrix out(n_blocks_ * m_, m_, q_);
  for (const auto& [j, mat] : nz_) out.set_block(j * m_, 0, mat);
  return out;
}

WireMatrix WireMatrix::operator-(const WireMatrix& o) const {
  if (n_blocks_ != o.n_blocks_ || m_ != o.m_ || q_ != o.q_) throw std::invalid_argument("wire matrix shape mismatch");
  WireMatrix out(n_blocks_, m_, q_);
  out.nz_ = nz_;
  for (const auto& [j, mat] : o.nz_) {
    auto it = out.nz_.find(j);
    if (it == out.nz_.end())
      out.nz_.emplace(j, mat.negated());
    else
      it->second = it->second - mat;
  }
  return out;
}

WireMatrix WireMatrix::right_mul(const ZqMatrix& w) const {
  if (w.rows() != m_ || w.cols() != m_) throw std::invalid_argument("wire matrix product shape mismatch");
  WireMatrix out(n_blocks_, m_, q_);
  for (const auto& [j, mat] : nz_) out.nz_.emplace(j, mat * w);
  return out;
}

ZqMatrix mul_wide(const ZqMatrix& b, const WireMatrix& h) {
  if (b.cols() != h.n_blocks() * h.m()) throw std::invalid_argument("wide product shape mismatch");
  ZqMatrix out(b.rows(), h.m(), b.modulus());
  for (const auto& [j, mat] : h.blocks()) out = out + b.block(0, j * h.m(), b.rows(), h.m()) * mat;
  return out;
}

ZqMatrix x_tensor_g(const Bitstring& x, const GadgetParams& gp_m) {
  const ZqMatrix g = gadget(gp_m);
  ZqMatrix out(gp_m.n, x.size() * gp_m.k, gp_m.q);
  for (size_t j = 0; j < x.size(); ++j)
    if (x.get(j)) out.set_block(0, j * gp_m.k, g);
  return out;
}

namespace {

struct EvalContext {
  const Circuit& c;
  const ZqMatrix& b;
  GadgetParams gp;
  size_t m;
};

EvalContext make_context(const Circuit& c, const ZqMatrix& b, size_t max_depth) {
  c.validate();
  if (c.depth() > max_depth) throw std::invalid_argument("circuit depth exceeds the evaluation budget");
  if (b.cols() % c.n_inputs != 0) throw std::invalid_argument("block matrix width not divisible by input count");
  EvalContext ctx{c, b, GadgetParams{}, b.cols() / c.n_inputs};
  ctx.gp.n = b.rows();
  ctx.gp.q = b.modulus();
  ctx.gp.k = ctx.m;
  check_gadget_params(ctx.gp);  // needs m >= n ceil(log2 q)
  return ctx;
}

// Shared recursion: computes H for every wire; when x is non-null, also
// H_hat and the wire values.
struct Evaluator {
  const EvalContext& ctx;
  const Bitstring* x;
  std::vector<WireMatrix> h;
  std::vector<WireMatrix> h_hat;
  std::vector<int> val;

  explicit Evaluator(const EvalContext& ctx_, const Bitstring* x_) : ctx(ctx_), x(x_) {
    const size_t wires = ctx.c.wire_count() + 1;
    h.resize(wires);
    if (x) {
      h_hat.resize(wires);
      val.assign(wires, 0);
    }
    const size_t l = ctx.c.n_inputs;
    for (size_t i = 0; i < l; ++i) {
      h[i + 1] = WireMatrix::selector(l, ctx.m, ctx.gp.q, i);
      if (x) {
        h_hat[i + 1] = h[i + 1];
        val[i + 1] = x->get(i);
      }
    }
    for (size_t g = 0; g < ctx.c.gates.size(); ++g) {
      const size_t own = l + 1 + g;
      const size_t u = ctx.c.gates[g].u;
      const size_t v = ctx.c.gates[g].v;
      const ZqMatrix w_v = gadget_decompose(ctx.gp, mul_wide(ctx.b, h[v]));
      const WireMatrix s1 = WireMatrix::selector(l, ctx.m, ctx.gp.q, 0);
      h[own] = s1 - h[u].right_mul(w_v);
      if (x) {
        WireMatrix hat = s1 - h_hat[u].right_mul(w_v);
        if (val[u]) hat = hat - h_hat[v];
        h_hat[own] = std::move(hat);
        val[own] = 1 - (val[u] & val[v]);
      }
    }
  }
};

}  // namespace

WireMatrix eval_f(const Circuit& c, const ZqMatrix& b, size_t max_depth) {
  const EvalContext ctx = make_context(c, b, max_depth);
  Evaluator ev(ctx, nullptr);
  return std::move(ev.h[c.output_wire]);
}

WireMatrix eval_fx(const Circuit& c, const Bitstring& x, const ZqMatrix& b, size_t max_depth) {
  if (x.size() != c.n_inputs) throw std::invalid_argument("evaluation input length mismatch");
  if (x.get(0) != 1) throw std::invalid_argument("input convention requires the first bit set");
  const EvalContext ctx = make_context(c, b, max_depth);
  Evaluator ev(ctx, &x);
  return std::move(ev.h_hat[c.output_wire]);
}

}  // namespace skl
