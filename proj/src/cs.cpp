#include "skl/cs.hpp"

#include <bit>
#include <stdexcept>

#include "skl/encode.hpp"
#include "skl/lattice/dgauss.hpp"

namespace skl {

namespace {

void write_params(enc::Writer& w, const LatticeParams& p) {
  const std::vector<uint8_t> name(p.name.begin(), p.name.end());
  w.bytes(name);
  w.u64(p.n);
  w.u64(p.m);
  w.u64(p.k);
  w.i64(p.q);
  w.u64(std::bit_cast<uint64_t>(p.sigma));
  w.i64(p.beta_sam);
  w.i64(p.beta_ver);
  w.i64(p.beta_err);
  const std::string sis = p.beta_sis.str();
  w.bytes(std::vector<uint8_t>(sis.begin(), sis.end()));
  w.u64(p.d);
  w.u64(p.ell);
  w.u64(p.iota);
}

LatticeParams read_params(enc::Reader& r) {
  LatticeParams p;
  const auto name = r.bytes();
  p.name.assign(name.begin(), name.end());
  p.n = r.u64();
  p.m = r.u64();
  p.k = r.u64();
  p.q = r.i64();
  p.sigma = std::bit_cast<double>(r.u64());
  p.beta_sam = r.i64();
  p.beta_ver = r.i64();
  p.beta_err = r.i64();
  const auto sis = r.bytes();
  p.beta_sis = BigInt(std::string(sis.begin(), sis.end()));
  p.d = r.u64();
  p.ell = r.u64();
  p.iota = r.u64();
  return p;
}

bool params_equal(const LatticeParams& a, const LatticeParams& b) {
  return a.name == b.name && a.n == b.n && a.m == b.m && a.k == b.k && a.q == b.q && a.sigma == b.sigma &&
         a.beta_sam == b.beta_sam && a.beta_ver == b.beta_ver && a.beta_err == b.beta_err &&
         a.beta_sis == b.beta_sis && a.d == b.d && a.ell == b.ell && a.iota == b.iota;
}

GadgetParams padded_gadget(const LatticeParams& p) {
  return GadgetParams{p.n, p.m, p.q};
}

// m * ell * beta_sam * (2m)^d + beta_sam: what condition 3 budgets for the
// infinity norm of R H_hat + R'.
int64_t derived_trapdoor_bound(const LatticeParams& p) {
  int128 b = static_cast<int128>(p.m) * p.ell * p.beta_sam;
  for (size_t i = 0; i < p.d; ++i) b *= 2 * static_cast<int128>(p.m);
  b += p.beta_sam;
  if (b > static_cast<int128>(p.q)) b = p.q;  // caps at the representable range
  return static_cast<int64_t>(b);
}

}  // namespace

std::vector<uint8_t> CsVerificationKey::encode() const {
  enc::Writer w(enc::Tag::cs_vk);
  write_params(w, params);
  w.bytes(a.encode());
  w.bytes(b.encode());
  w.bytes(c.encode());
  return w.take();
}

CsVerificationKey CsVerificationKey::decode(const std::vector<uint8_t>& bytes) {
  enc::Reader r(bytes, enc::Tag::cs_vk);
  CsVerificationKey vk;
  vk.params = read_params(r);
  vk.a = ZqMatrix::decode(r.bytes());
  vk.b = ZqMatrix::decode(r.bytes());
  vk.c = ZqMatrix::decode(r.bytes());
  r.expect_end();
  return vk;
}

bool CsVerificationKey::operator==(const CsVerificationKey& o) const {
  return params_equal(params, o.params) && a == o.a && b == o.b && c == o.c;
}

std::vector<uint8_t> CsConstrainedKey::encode() const {
  enc::Writer w(enc::Tag::cs_constrained_key);
  w.bytes(vk.encode());
  w.bits(f);
  w.bytes(r.encode());
  w.bytes(r_prime.encode());
  return w.take();
}

CsConstrainedKey CsConstrainedKey::decode(const std::vector<uint8_t>& bytes) {
  enc::Reader rd(bytes, enc::Tag::cs_constrained_key);
  CsConstrainedKey k;
  k.vk = CsVerificationKey::decode(rd.bytes());
  k.f = rd.bits();
  k.r = ZqMatrix::decode(rd.bytes());
  k.r_prime = ZqMatrix::decode(rd.bytes());
  rd.expect_end();
  return k;
}

std::vector<uint8_t> CsSignature::encode() const {
  enc::Writer w(enc::Tag::cs_signature);
  w.bytes(x.encode());
  return w.take();
}

CsSignature CsSignature::decode(const std::vector<uint8_t>& bytes) {
  enc::Reader r(bytes, enc::Tag::cs_signature);
  CsSignature s{ZqMatrix::decode(r.bytes())};
  r.expect_end();
  return s;
}

CsKeys cs_setup(const LatticeParams& p, Rng& rng) {
  if (!validate_params(p).all_pass) throw ParamError("parameter set rejected by the condition report");
  CsKeys keys;
  keys.td = trapgen(p.n, p.m, p.q, rng);
  keys.vk.params = p;
  keys.vk.a = keys.td.a;
  keys.vk.b = ZqMatrix::uniform(p.n, p.m * p.ell, p.q, rng);
  keys.vk.c = ZqMatrix::uniform(p.n, p.m, p.q, rng);
  return keys;
}

CsConstrainedKey cs_constrain(const CsKeys& keys, const Bitstring& f, Rng& rng) {
  const LatticeParams& p = keys.vk.params;
  if (f.size() != p.ell) throw std::invalid_argument("constraint description length mismatch");
  if (f.get(0) != 1) throw std::invalid_argument("constraint description must start with 1");
  CsConstrainedKey key;
  key.vk = keys.vk;
  key.f = f;
  key.r = sampre(keys.td, keys.vk.b - x_tensor_g(f, padded_gadget(p)), rng);
  key.r_prime = sampre(keys.td, keys.vk.c, rng);
  return key;
}

Circuit cs_message_circuit(size_t ell, size_t iota, const Bitstring& msg) {
  if (msg.size() != iota + 1) throw std::invalid_argument("message must be iota + 1 bits");
  if (iota > 20 || ell < (size_t{1} << iota) + 1)
    throw std::invalid_argument("description length cannot hold the truth table");
  const size_t idx = msg.slice(0, iota).as_uint();
  const size_t table_wire = 2 + idx;  // wire 1 is the constant-1 input
  Circuit c;
  c.n_inputs = ell;
  if (msg.get(iota) == 1) {
    c.output_wire = table_wire;
  } else {
    c.gates.push_back({table_wire, table_wire});
    c.output_wire = ell + 1;
  }
  return c;
}

int cs_predicate(const LatticeParams& p, const Bitstring& f, const Bitstring& msg) {
  return cs_message_circuit(p.ell, p.iota, msg).evaluate(f);
}

CsSignature cs_sign(const CsConstrainedKey& sk, const Bitstring& msg, Rng& rng) {
  const LatticeParams& p = sk.vk.params;
  const size_t m = p.m;
  const Circuit circuit = cs_message_circuit(p.ell, p.iota, msg);
  const WireMatrix h_hat = eval_fx(circuit, sk.f, sk.vk.b, p.d);

  // Derived trapdoor R_d = R H_hat + R' for [A | B H + C], built block by
  // block against H_hat's sparsity.
  ZqMatrix rd = sk.r_prime;
  for (const auto& [j, blk] : h_hat.blocks()) rd = rd + sk.r.block(0, j * m, m, m) * blk;
  if (rd.linf() > derived_trapdoor_bound(p)) throw Error("derived trapdoor norm bound violated");

  LweTrapdoor sig_td{sk.vk.a, rd, padded_gadget(p)};
  // When f(msg) = 1 this matrix equals [A | B H + C]; when the predicate
  // rejects, signing proceeds against the matrix the trapdoor actually opens
  // and the result simply fails verification.
  const ZqMatrix a_sign = sig_td.full_matrix();
  const ZqMatrix y(p.n, 1, p.q);
  CsSignature sig;
  do {
    sig.x = dgauss_coset(a_sign, y, p.sigma, &sig_td, rng);
  } while (sig.x.is_zero());
  return sig;
}

bool cs_vrfy(const CsVerificationKey& vk, const Bitstring& msg, const CsSignature& sig) {
  const LatticeParams& p = vk.params;
  if (sig.x.rows() != 2 * p.m || sig.x.cols() != 1 || sig.x.modulus() != p.q) return false;
  Circuit circuit;
  try {
    circuit = cs_message_circuit(p.ell, p.iota, msg);
  } catch (const std::invalid_argument&) {
    return false;
  }
  const WireMatrix h = eval_f(circuit, vk.b, p.d);
  const ZqMatrix a_sign = vk.a.hstack(mul_wide(vk.b, h) + vk.c);
  return (a_sign * sig.x).is_zero() && sig.x.linf() != 0 && sig.x.linf() <= p.beta_ver;
}

size_t cs_key_pack_len(const LatticeParams& p) {
  return (p.ell + 7) / 8 + p.m * p.m * p.ell + p.m * p.m;
}

namespace {

void pack_matrix(std::vector<uint8_t>& out, const ZqMatrix& m, int64_t beta) {
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) {
      const int64_t v = m.at(i, j);
      if (v < -beta || v > beta) throw Error("matrix entry outside the packable range");
      out.push_back(static_cast<uint8_t>(v + 128));
    }
}

ZqMatrix unpack_matrix(const std::vector<uint8_t>& in, size_t& pos, size_t rows, size_t cols, int64_t q,
                       int64_t beta) {
  ZqMatrix m(rows, cols, q);
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j) {
      const int64_t v = static_cast<int64_t>(in[pos++]) - 128;
      if (v < -beta || v > beta) throw DecodeError("packed matrix entry out of range");
      m.set(i, j, v);
    }
  return m;
}

}  // namespace

std::vector<uint8_t> cs_key_pack(const CsConstrainedKey& key) {
  const LatticeParams& p = key.vk.params;
  if (p.beta_sam >= 128) throw Error("beta_sam too large for one-byte packing");
  std::vector<uint8_t> out;
  out.reserve(cs_key_pack_len(p));
  const auto fb = key.f.to_bytes();
  out.insert(out.end(), fb.begin(), fb.end());
  pack_matrix(out, key.r, p.beta_sam);
  pack_matrix(out, key.r_prime, p.beta_sam);
  return out;
}

CsConstrainedKey cs_key_unpack(const CsVerificationKey& vk, const std::vector<uint8_t>& bytes) {
  const LatticeParams& p = vk.params;
  if (bytes.size() != cs_key_pack_len(p)) throw DecodeError("packed key length mismatch");
  CsConstrainedKey key;
  key.vk = vk;
  key.f = Bitstring::from_bytes(std::vector<uint8_t>(bytes.begin(), bytes.begin() + (p.ell + 7) / 8))
              .slice(0, p.ell);
  size_t pos = (p.ell + 7) / 8;
  key.r = unpack_matrix(bytes, pos, p.m, p.m * p.ell, p.q, p.beta_sam);
  key.r_prime = unpack_matrix(bytes, pos, p.m, p.m, p.q, p.beta_sam);
  return key;
}

std::pair<BranchedRegister, CsSignature> cs_qsign(const CsVerificationKey& vk, const BranchedRegister& reg,
                                                  const Bitstring& msg, Rng& rng,
                                                  size_t payload_offset_bits) {
  const size_t pack_bits = 8 * cs_key_pack_len(vk.params);
  const auto key_of = [&](const Bitstring& payload) {
    if (payload.size() < payload_offset_bits + pack_bits)
      throw DecodeError("register payload too short for a packed key");
    return cs_key_unpack(vk, payload.slice(payload_offset_bits, pack_bits).to_bytes());
  };
  if (reg.kind == BranchedRegister::Kind::Collapsed) {
    const CsConstrainedKey key = key_of(reg.payload);
    if (cs_predicate(vk.params, key.f, msg) != 1)
      throw CoherenceViolation("resident branch's constraint rejects the message");
    return {reg, cs_sign(key, msg, rng)};
  }
  const CsConstrainedKey key0 = key_of(reg.payload0);
  const CsConstrainedKey key1 = key_of(reg.payload1);
  if (cs_predicate(vk.params, key0.f, msg) != 1 || cs_predicate(vk.params, key1.f, msg) != 1)
    throw CoherenceViolation("a branch's constraint rejects the message");
  return {reg, cs_sign(key0, msg, rng)};
}

}  // namespace skl
