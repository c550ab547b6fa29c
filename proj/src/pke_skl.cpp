#include "skl/pke_skl.hpp"

#include <stdexcept>

#include "skl/encode.hpp"

namespace skl {

SklKeyBundle skl_keygen_with_theta(size_t n, const PkeParams& params, const Bitstring& theta, Rng& rng) {
  if (theta.size() != n) throw std::invalid_argument("theta length != n");
  SklKeyBundle out;
  out.pk.params = params;
  out.pk.ek_grid.reserve(n);
  out.dk.legs.reserve(n);
  out.vk.theta = theta;
  out.vk.x_had = Bitstring(n);
  out.vk.dk_pairs_had.resize(n);
  for (size_t i = 0; i < n; ++i) {
    const int x_i = rng.bit();
    BitPkeKeyPair kp0 = pke_keygen(params, rng);
    BitPkeKeyPair kp1 = pke_keygen(params, rng);
    out.pk.ek_grid.push_back({kp0.ek, kp1.ek});
    out.dk.legs.push_back(embed(BB84Qubit{x_i, theta.get(i)}, kp0.dk, kp1.dk, rng));
    if (theta.get(i)) {
      out.vk.x_had.set(i, x_i);
      out.vk.dk_pairs_had[i] = {std::move(kp0.dk), std::move(kp1.dk)};
    }
  }
  return out;
}

SklKeyBundle skl_keygen(size_t n, const PkeParams& params, Rng& rng) {
  Bitstring theta = Bitstring::random(n, rng);
  return skl_keygen_with_theta(n, params, theta, rng);
}

std::vector<uint8_t> SklDecryptionKey::encode() const {
  enc::Writer w(enc::Tag::skl_decryption_key);
  w.u64(legs.size());
  for (const BranchedRegister& leg : legs) {
    if (leg.kind == BranchedRegister::Kind::Collapsed) {
      w.u8(0);
      w.u8(static_cast<uint8_t>(leg.bit));
      w.bits(leg.payload);
    } else {
      w.u8(1);
      w.u8(static_cast<uint8_t>(leg.phase_bit));
      w.bits(leg.payload0);
      w.bits(leg.payload1);
    }
  }
  return w.take();
}

SklCiphertext skl_enc(const SklPublicKey& pk, const Bitstring& message, Rng& rng) {
  if (message.size() != pk.n()) throw std::invalid_argument("message length != key size");
  SklCiphertext ct;
  ct.ct_grid.reserve(pk.n());
  for (size_t i = 0; i < pk.n(); ++i) {
    const int bit = message.get(i);
    ct.ct_grid.push_back({pke_enc(pk.ek_grid[i][0], bit, rng), pke_enc(pk.ek_grid[i][1], bit, rng)});
  }
  return ct;
}

std::pair<Bitstring, SklDecryptionKey> skl_dec(const SklDecryptionKey& dk, const SklCiphertext& ct, Rng& rng) {
  if (ct.n() != dk.legs.size()) throw std::invalid_argument("ciphertext/key size mismatch");
  Bitstring message(dk.legs.size());
  SklDecryptionKey post;
  post.legs.reserve(dk.legs.size());
  for (size_t i = 0; i < dk.legs.size(); ++i) {
    auto decrypt_leg = [&](int branch, const Bitstring& payload) {
      Bitstring out(1);
      out.set(0, pke_dec(payload, ct.ct_grid[i][static_cast<size_t>(branch)]));
      return out;
    };
    auto [bit, next] = oracle_measure(dk.legs[i], decrypt_leg, rng);
    message.set(i, bit.get(0));
    post.legs.push_back(std::move(next));
  }
  return {std::move(message), std::move(post)};
}

SklCertificate skl_del(const SklDecryptionKey& dk, Rng& rng) {
  SklCertificate cert;
  cert.pairs.reserve(dk.legs.size());
  for (const BranchedRegister& leg : dk.legs) cert.pairs.push_back(hadamard_measure(leg, rng));
  return cert;
}

namespace {

bool cert_shape_ok(const SklVerificationKey& vk, const SklCertificate& cert) {
  if (cert.pairs.size() != vk.theta.size()) return false;
  for (size_t i = 0; i < cert.pairs.size(); ++i) {
    if (!vk.theta.get(i)) continue;
    const auto& [dk0, dk1] = vk.dk_pairs_had[i];
    if (cert.pairs[i].d.size() != dk0.size() || dk0.size() != dk1.size()) return false;
  }
  return true;
}

}  // namespace

DelVrfyResult skl_delvrfy(const SklVerificationKey& vk, const SklCertificate& cert) {
  if (!cert_shape_ok(vk, cert)) return {false, DelVrfyStatus::rejected_shape};
  for (size_t i = 0; i < cert.pairs.size(); ++i) {
    if (!vk.theta.get(i)) continue;
    const auto& [dk0, dk1] = vk.dk_pairs_had[i];
    const int expected = vk.x_had.get(i) ^ cert.pairs[i].d.dot(dk0 ^ dk1);
    if (cert.pairs[i].e != expected) return {false, DelVrfyStatus::rejected_relation};
  }
  return {true, DelVrfyStatus::accepted};
}

std::optional<Bitstring> skl_convert_certificate(const SklVerificationKey& vk, const SklCertificate& cert) {
  if (!cert_shape_ok(vk, cert)) return std::nullopt;
  Bitstring y(cert.pairs.size());
  for (size_t i = 0; i < cert.pairs.size(); ++i) {
    if (!vk.theta.get(i)) continue;
    const auto& [dk0, dk1] = vk.dk_pairs_had[i];
    y.set(i, cert.pairs[i].e ^ cert.pairs[i].d.dot(dk0 ^ dk1));
  }
  return y;
}

IndCiphertext ind_enc(const SklPublicKey& pk, int message_bit, Rng& rng) {
  IndCiphertext ct;
  Bitstring x = Bitstring::random(pk.n(), rng);
  ct.r = Bitstring::random(pk.n(), rng);
  ct.ow_ct = skl_enc(pk, x, rng);
  ct.b = x.dot(ct.r) ^ (message_bit & 1);
  return ct;
}

std::pair<int, SklDecryptionKey> ind_dec(const SklDecryptionKey& dk, const IndCiphertext& ct, Rng& rng) {
  auto [x_tilde, post] = skl_dec(dk, ct.ow_ct, rng);
  return {x_tilde.dot(ct.r) ^ ct.b, std::move(post)};
}

}  // namespace skl
