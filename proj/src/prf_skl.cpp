#include "skl/prf_skl.hpp"

#include <stdexcept>

#include "skl/encode.hpp"
#include "skl/sponge.hpp"

namespace skl {

UpfKeyBundle upf_keygen_with_theta(size_t n, size_t ell, const Bitstring& theta, Rng& rng) {
  if (n < 1 || ell < 1) throw std::invalid_argument("upf dimensions must be positive");
  if (theta.size() != n) throw std::invalid_argument("theta length != n");
  UpfKeyBundle out;
  out.msk.ell = ell;
  out.lk.ell = ell;
  out.vk.theta = theta;
  out.vk.x_had = Bitstring(n);
  out.vk.sk_pairs_had.resize(n);
  for (size_t i = 0; i < n; ++i) {
    const int x_i = rng.bit();
    Bitstring target = Bitstring::random(ell, rng);
    TeprfKeyPair pair = teprf_keygen(ell, target, rng);
    out.lk.legs.push_back(embed(BB84Qubit{x_i, theta.get(i)}, pair.sk0, pair.sk1, rng));
    if (theta.get(i)) {
      out.vk.x_had.set(i, x_i);
      out.vk.sk_pairs_had[i] = {pair.sk0, pair.sk1};
    }
    out.msk.sk0_list.push_back(std::move(pair.sk0));
    out.msk.shadow_targets.push_back(std::move(target));
  }
  return out;
}

UpfKeyBundle upf_keygen(size_t n, size_t ell, Rng& rng) {
  Bitstring theta = Bitstring::random(n, rng);
  return upf_keygen_with_theta(n, ell, theta, rng);
}

std::vector<uint8_t> UpfLeasedKey::encode() const {
  enc::Writer w(enc::Tag::upf_leased_key);
  w.u64(ell);
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

Bitstring upf_eval(const UpfMasterKey& msk, const Bitstring& s) {
  if (s.size() != msk.n() * msk.ell) throw std::invalid_argument("upf input length mismatch");
  Bitstring t(msk.n());
  for (size_t i = 0; i < msk.n(); ++i)
    t.set(i, teprf_eval(msk.sk0_list[i], s.slice(i * msk.ell, msk.ell)));
  return t;
}

std::pair<Bitstring, UpfLeasedKey> upf_leval(const UpfLeasedKey& lk, const Bitstring& s, Rng& rng) {
  if (s.size() != lk.n() * lk.ell) throw std::invalid_argument("upf input length mismatch");
  Bitstring t(lk.n());
  UpfLeasedKey post;
  post.ell = lk.ell;
  post.legs.reserve(lk.n());
  for (size_t i = 0; i < lk.n(); ++i) {
    const Bitstring block = s.slice(i * lk.ell, lk.ell);
    auto eval_leg = [&](int, const Bitstring& payload) {
      Bitstring out(1);
      out.set(0, teprf_eval(payload, block));
      return out;
    };
    auto [bit, next] = oracle_measure(lk.legs[i], eval_leg, rng);
    t.set(i, bit.get(0));
    post.legs.push_back(std::move(next));
  }
  return {std::move(t), std::move(post)};
}

UpfCertificate upf_del(const UpfLeasedKey& lk, Rng& rng) {
  UpfCertificate cert;
  cert.pairs.reserve(lk.n());
  for (const BranchedRegister& leg : lk.legs) cert.pairs.push_back(hadamard_measure(leg, rng));
  return cert;
}

namespace {

bool cert_shape_ok(const UpfVerificationKey& vk, const UpfCertificate& cert) {
  if (cert.pairs.size() != vk.theta.size()) return false;
  for (size_t i = 0; i < cert.pairs.size(); ++i) {
    if (!vk.theta.get(i)) continue;
    const auto& [sk0, sk1] = vk.sk_pairs_had[i];
    if (cert.pairs[i].d.size() != sk0.size() || sk0.size() != sk1.size()) return false;
  }
  return true;
}

}  // namespace

DelVrfyResult upf_delvrfy(const UpfVerificationKey& vk, const UpfCertificate& cert) {
  if (!cert_shape_ok(vk, cert)) return {false, DelVrfyStatus::rejected_shape};
  for (size_t i = 0; i < cert.pairs.size(); ++i) {
    if (!vk.theta.get(i)) continue;
    const auto& [sk0, sk1] = vk.sk_pairs_had[i];
    const int expected = vk.x_had.get(i) ^ cert.pairs[i].d.dot(sk0 ^ sk1);
    if (cert.pairs[i].e != expected) return {false, DelVrfyStatus::rejected_relation};
  }
  return {true, DelVrfyStatus::accepted};
}

std::optional<Bitstring> upf_convert_certificate(const UpfVerificationKey& vk, const UpfCertificate& cert) {
  if (!cert_shape_ok(vk, cert)) return std::nullopt;
  Bitstring y(cert.pairs.size());
  for (size_t i = 0; i < cert.pairs.size(); ++i) {
    if (!vk.theta.get(i)) continue;
    const auto& [sk0, sk1] = vk.sk_pairs_had[i];
    y.set(i, cert.pairs[i].e ^ cert.pairs[i].d.dot(sk0 ^ sk1));
  }
  return y;
}

namespace {

void check_prf_input(size_t n, size_t ell, const PrfInput& input) {
  if (input.s_prime.size() != n * ell || input.r.size() != n)
    throw std::invalid_argument("prf input shape mismatch");
}

}  // namespace

int prf_eval(const UpfMasterKey& msk, const PrfInput& input) {
  check_prf_input(msk.n(), msk.ell, input);
  return upf_eval(msk, input.s_prime).dot(input.r);
}

std::pair<int, UpfLeasedKey> prf_leval(const UpfLeasedKey& lk, const PrfInput& input, Rng& rng) {
  check_prf_input(lk.n(), lk.ell, input);
  auto [t, post] = upf_leval(lk, input.s_prime, rng);
  return {t.dot(input.r), std::move(post)};
}

int prf_composed_eval(const UpfMasterKey& msk, const std::vector<uint8_t>& prf_key, const PrfInput& input) {
  return prf_eval(msk, input) ^ sponge_prf_bit(prf_key, input.s_prime.concat(input.r));
}

std::pair<int, UpfLeasedKey> prf_composed_leval(const UpfLeasedKey& lk, const std::vector<uint8_t>& prf_key,
                                                const PrfInput& input, Rng& rng) {
  auto [bit, post] = prf_leval(lk, input, rng);
  return {bit ^ sponge_prf_bit(prf_key, input.s_prime.concat(input.r)), std::move(post)};
}

}  // namespace skl
