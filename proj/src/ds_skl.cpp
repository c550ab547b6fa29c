#include "skl/ds_skl.hpp"

#include <stdexcept>

#include "skl/encode.hpp"
#include "skl/teprf.hpp"

namespace skl {

namespace {

// 1 || truth table, zero-padded to the description length.
Bitstring constraint_description(const LatticeParams& p, const Bitstring& sk) {
  const Bitstring table = teprf_table_bits(sk);
  Bitstring f(p.ell);
  f.set(0, 1);
  for (size_t j = 0; j < table.size(); ++j) f.set(1 + j, table.get(j));
  return f;
}

void encode_register(enc::Writer& w, const BranchedRegister& reg) {
  if (reg.kind == BranchedRegister::Kind::Collapsed) {
    w.u8(0);
    w.u8(static_cast<uint8_t>(reg.bit));
    w.bits(reg.payload);
  } else {
    w.u8(1);
    w.u8(static_cast<uint8_t>(reg.phase_bit));
    w.bits(reg.payload0);
    w.bits(reg.payload1);
  }
}

bool cert_shape_ok(const DsVerificationKeys& vks, const DsCertificate& cert) {
  if (cert.pairs.size() != vks.theta.size()) return false;
  for (size_t i = 0; i < cert.pairs.size(); ++i) {
    if (!vks.theta.get(i)) continue;
    if (cert.pairs[i].d.size() != vks.payloads[i][0].size()) return false;
  }
  return true;
}

}  // namespace

std::vector<uint8_t> DsLeasedKey::encode() const {
  enc::Writer w(enc::Tag::ds_leased_key);
  w.u64(legs.size());
  w.u64(teprf_bits);
  for (size_t i = 0; i < legs.size(); ++i) {
    w.bytes(svks[i].encode());
    encode_register(w, legs[i]);
  }
  return w.take();
}

bool DsLeasedKey::operator==(const DsLeasedKey& o) const {
  return teprf_bits == o.teprf_bits && svks == o.svks && legs == o.legs;
}

std::vector<uint8_t> DsVerificationKeys::encode() const {
  enc::Writer w(enc::Tag::ds_verification_keys);
  w.u64(payloads.size());
  w.u64(teprf_bits);
  w.bits(theta);
  w.bits(x_bits);
  for (size_t i = 0; i < payloads.size(); ++i) {
    w.bytes(svk[i].encode());
    w.u8(theta.get(i) ? 1 : 0);
    if (theta.get(i)) {
      w.bits(payloads[i][0]);
      w.bits(payloads[i][1]);
    }
  }
  return w.take();
}

std::vector<uint8_t> DsSignature::encode() const {
  enc::Writer w(enc::Tag::ds_signature);
  w.u64(parts.size());
  for (const auto& part : parts) {
    w.u8(static_cast<uint8_t>(part.t));
    w.bytes(part.sig.encode());
  }
  return w.take();
}

DsSignature DsSignature::decode(const std::vector<uint8_t>& bytes) {
  enc::Reader r(bytes, enc::Tag::ds_signature);
  DsSignature sig;
  const uint64_t count = r.u64();
  for (uint64_t i = 0; i < count; ++i) {
    Part part;
    part.t = r.u8() & 1;
    part.sig = CsSignature::decode(r.bytes());
    sig.parts.push_back(std::move(part));
  }
  r.expect_end();
  return sig;
}

DsKeyBundle ds_keygen_with_theta(const LatticeParams& p, const Bitstring& theta, Rng& rng) {
  const size_t n = theta.size();
  if (n == 0) throw std::invalid_argument("leased signing key needs at least one leg");
  if (p.iota > 20 || p.ell < (size_t{1} << p.iota) + 1)
    throw ParamError("description length cannot hold the truth table");

  DsKeyBundle out;
  out.key.params = p;
  out.key.teprf_bits = teprf_key_bits(TeprfMode::Table, p.iota);
  out.vks.theta = theta;
  out.vks.x_bits = Bitstring(n);
  out.vks.teprf_bits = out.key.teprf_bits;
  out.vks.payloads.resize(n);
  out.vks.delta.resize(n);

  for (size_t i = 0; i < n; ++i) {
    const int x_i = rng.bit();
    out.vks.x_bits.set(i, x_i);
    const Bitstring target = Bitstring::random(p.iota, rng);
    const TeprfKeyPair tp = teprf_keygen(TeprfMode::Table, p.iota, target, rng);
    const CsKeys cs = cs_setup(p, rng);
    const CsConstrainedKey k0 = cs_constrain(cs, constraint_description(p, tp.sk0), rng);
    const CsConstrainedKey k1 = cs_constrain(cs, constraint_description(p, tp.sk1), rng);
    const Bitstring payload0 = tp.sk0.concat(Bitstring::from_bytes(cs_key_pack(k0)));
    const Bitstring payload1 = tp.sk1.concat(Bitstring::from_bytes(cs_key_pack(k1)));

    out.key.svks.push_back(cs.vk);
    out.key.legs.push_back(embed(BB84Qubit{x_i, theta.get(i)}, payload0, payload1, rng));
    out.vks.svk.push_back(cs.vk);
    if (theta.get(i)) {
      out.vks.payloads[i] = {payload0, payload1};
      out.vks.delta[i] = payload0 ^ payload1;
    }
  }
  return out;
}

DsKeyBundle ds_keygen(size_t n, const LatticeParams& p, Rng& rng) {
  return ds_keygen_with_theta(p, Bitstring::random(n, rng), rng);
}

std::pair<DsLeasedKey, DsSignature> ds_sign(const DsLeasedKey& key, const Bitstring& m, Rng& rng) {
  const size_t iota = key.params.iota;
  if (m.size() != key.n() * iota) throw std::invalid_argument("message length must be n * iota bits");

  DsLeasedKey out = key;
  DsSignature sig;
  for (size_t i = 0; i < key.n(); ++i) {
    const Bitstring s_i = m.slice(i * iota, iota);
    const auto prf_out = [&](int, const Bitstring& payload) {
      Bitstring t(1);
      t.set(0, teprf_eval(payload.slice(0, key.teprf_bits), s_i));
      return t;
    };
    auto [t_bits, reg1] = oracle_measure(out.legs[i], prf_out, rng);
    const int t_i = t_bits.get(0);
    auto [reg2, part_sig] = cs_qsign(key.svks[i], reg1, s_i.concat(t_bits), rng, key.teprf_bits);
    out.legs[i] = std::move(reg2);
    sig.parts.push_back({t_i, std::move(part_sig)});
  }
  return {std::move(out), std::move(sig)};
}

bool ds_sigvrfy(const DsVerificationKeys& vks, const Bitstring& m, const DsSignature& sig) {
  const size_t n = vks.svk.size();
  if (sig.parts.size() != n) return false;
  if (n == 0) return m.empty();
  const size_t iota = vks.svk[0].params.iota;
  if (m.size() != n * iota) return false;
  for (size_t i = 0; i < n; ++i) {
    if (sig.parts[i].t != 0 && sig.parts[i].t != 1) return false;
    Bitstring msg_i = m.slice(i * iota, iota);
    Bitstring t(1);
    t.set(0, sig.parts[i].t);
    if (!cs_vrfy(vks.svk[i], msg_i.concat(t), sig.parts[i].sig)) return false;
  }
  return true;
}

DsCertificate ds_del(const DsLeasedKey& key, Rng& rng) {
  DsCertificate cert;
  for (const auto& leg : key.legs) cert.pairs.push_back(hadamard_measure(leg, rng));
  return cert;
}

DelVrfyResult ds_delvrfy(const DsVerificationKeys& vks, const DsCertificate& cert) {
  if (!cert_shape_ok(vks, cert)) return {false, DelVrfyStatus::rejected_shape};
  for (size_t i = 0; i < cert.pairs.size(); ++i) {
    if (!vks.theta.get(i)) continue;
    const int expected = vks.x_bits.get(i) ^ cert.pairs[i].d.dot(vks.delta[i]);
    if (cert.pairs[i].e != expected) return {false, DelVrfyStatus::rejected_relation};
  }
  return {true, DelVrfyStatus::accepted};
}

}  // namespace skl
