// Security-game harness: challenger transcriptions, reference adversaries and
// the deterministic sweep driver. See experiments.hpp for the contract.

#include "skl/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <thread>

#include <nlohmann/json.hpp>

#include "skl/ds_skl.hpp"
#include "skl/encode.hpp"
#include "skl/error.hpp"
#include "skl/pke_skl.hpp"
#include "skl/prf_skl.hpp"

namespace skl {
namespace {

// ---- canonical encodings of the artifacts the challenger reveals ----------

std::vector<uint8_t> encode_skl_pk(const SklPublicKey& pk) {
  enc::Writer w(enc::Tag::skl_public_key);
  w.u8(pk.params.scheme_id());
  w.u64(pk.n());
  for (const auto& pair : pk.ek_grid) {
    w.bytes(pair[0]);
    w.bytes(pair[1]);
  }
  return w.take();
}

std::vector<uint8_t> encode_skl_vk(const SklVerificationKey& vk) {
  enc::Writer w(enc::Tag::skl_verification_key);
  w.bits(vk.theta);
  w.bits(vk.x_had);
  w.u64(vk.dk_pairs_had.size());
  for (const auto& [dk0, dk1] : vk.dk_pairs_had) {
    w.bits(dk0);
    w.bits(dk1);
  }
  return w.take();
}

std::vector<uint8_t> encode_skl_ct(const SklCiphertext& ct) {
  enc::Writer w(enc::Tag::raw);
  w.u64(ct.n());
  for (const auto& pair : ct.ct_grid) {
    w.bytes(pair[0].encode());
    w.bytes(pair[1].encode());
  }
  return w.take();
}

std::vector<uint8_t> encode_ind_ct(const IndCiphertext& ct) {
  enc::Writer w(enc::Tag::ind_ciphertext);
  w.bytes(encode_skl_ct(ct.ow_ct));
  w.bits(ct.r);
  w.u8(static_cast<uint8_t>(ct.b));
  return w.take();
}

std::vector<uint8_t> encode_upf_vk(const UpfVerificationKey& vk) {
  enc::Writer w(enc::Tag::upf_verification_key);
  w.bits(vk.theta);
  w.bits(vk.x_had);
  w.u64(vk.sk_pairs_had.size());
  for (const auto& [sk0, sk1] : vk.sk_pairs_had) {
    w.bits(sk0);
    w.bits(sk1);
  }
  return w.take();
}

std::vector<uint8_t> encode_svk_list(const std::vector<CsVerificationKey>& svks) {
  enc::Writer w(enc::Tag::raw);
  w.u64(svks.size());
  for (const auto& svk : svks) w.bytes(svk.encode());
  return w.take();
}

std::vector<uint8_t> encode_bits_blob(const Bitstring& b) {
  enc::Writer w(enc::Tag::raw);
  w.bits(b);
  return w.take();
}

std::string digest2(const std::vector<uint8_t>& a, const std::vector<uint8_t>& b) {
  std::vector<uint8_t> joined = a;
  joined.insert(joined.end(), b.begin(), b.end());
  return enc::hex_digest(joined);
}

// ---- adversary invocation with the abort-on-throw contract ----------------

bool call_stage0(const VraAdversary& adv, const VraView& view, Rng& rng, DeletionCertificate& cert,
                 std::any& state, TrialRecord& rec) {
  try {
    std::tie(cert, state) = adv.stage0(view, rng);
    return true;
  } catch (const std::exception&) {
    rec.aborted = true;
    return false;
  }
}

bool call_stage1(const VraAdversary& adv, std::any& state, const VraChallenge& ch, Rng& rng,
                 std::vector<uint8_t>& answer, TrialRecord& rec) {
  try {
    answer = adv.stage1(state, ch, rng);
    return true;
  } catch (const std::exception&) {
    rec.aborted = true;
    return false;
  }
}

// Undersized answers read as zero (lenient zero-padding).
int answer_bit(const std::vector<uint8_t>& a, size_t i) {
  return (i / 8) < a.size() ? (a[i / 8] >> (i % 8)) & 1 : 0;
}

// ---- shared stage-0 behaviors for the reference strategies ----------------

DeletionCertificate random_cert_like(const std::vector<BranchedRegister>& legs, Rng& rng) {
  DeletionCertificate cert;
  cert.pairs.reserve(legs.size());
  for (const auto& leg : legs) {
    HadamardOutcome out;
    out.e = rng.bit();
    out.d = Bitstring::random(leg.payload_len, rng);
    cert.pairs.push_back(out);
  }
  return cert;
}

std::vector<uint8_t> random_answer(size_t answer_bits, Rng& rng) {
  std::vector<uint8_t> a((answer_bits + 7) / 8);
  for (auto& byte : a) byte = static_cast<uint8_t>(rng.below(256));
  return a;
}

}  // namespace

std::string_view game_name(Game g) {
  switch (g) {
    case Game::ind_vra: return "ind-vra";
    case Game::ow_vra: return "ow-vra";
    case Game::pr_vra: return "pr-vra";
    case Game::up_vra: return "up-vra";
    case Game::ruf_vra: return "ruf-vra";
    case Game::cdbb84: return "cdbb84";
  }
  return "unknown";
}

std::optional<Game> game_from_name(std::string_view name) {
  for (Game g : {Game::ind_vra, Game::ow_vra, Game::pr_vra, Game::up_vra, Game::ruf_vra, Game::cdbb84})
    if (name == game_name(g)) return g;
  return std::nullopt;
}

VraAdversary honest_deleter_vra() {
  VraAdversary adv;
  adv.name = "honest-deleter";
  adv.stage0 = [](const VraView& view, Rng& rng) {
    DeletionCertificate cert;
    cert.pairs.reserve(view.legs->size());
    for (auto& leg : *view.legs) cert.pairs.push_back(hadamard_measure(leg, rng));
    return std::pair<DeletionCertificate, std::any>{std::move(cert), std::any{}};
  };
  adv.stage1 = [](std::any&, const VraChallenge& ch, Rng& rng) { return random_answer(ch.answer_bits, rng); };
  return adv;
}

VraAdversary basis_hoarder_vra() {
  VraAdversary adv;
  adv.name = "basis-hoarder";
  adv.stage0 = [](const VraView& view, Rng& rng) {
    // Keep every computational readout, then fabricate the certificate.
    std::vector<std::pair<int, Bitstring>> hoard;
    hoard.reserve(view.legs->size());
    for (auto& leg : *view.legs) hoard.push_back(computational_measure(leg, rng));
    DeletionCertificate cert = random_cert_like(*view.legs, rng);
    return std::pair<DeletionCertificate, std::any>{std::move(cert), std::any{std::move(hoard)}};
  };
  adv.stage1 = [](std::any&, const VraChallenge& ch, Rng& rng) { return random_answer(ch.answer_bits, rng); };
  return adv;
}

VraAdversary cert_forger_vra() {
  VraAdversary adv;
  adv.name = "cert-forger";
  adv.stage0 = [](const VraView& view, Rng& rng) {
    return std::pair<DeletionCertificate, std::any>{random_cert_like(*view.legs, rng), std::any{}};
  };
  adv.stage1 = [](std::any&, const VraChallenge& ch, Rng& rng) { return random_answer(ch.answer_bits, rng); };
  return adv;
}

std::vector<VraAdversary> reference_vra_adversaries() {
  return {honest_deleter_vra(), basis_hoarder_vra(), cert_forger_vra()};
}

TrialRecord run_ind_vra(const PkeParams& params, size_t n, const VraAdversary& adv, int coin, Rng& rng) {
  Rng adv_rng = rng.split("adversary");
  TrialRecord rec;
  SklKeyBundle kb = skl_keygen(n, params, rng);
  const auto pk_bytes = encode_skl_pk(kb.pk);
  const auto dvk_bytes = encode_skl_vk(kb.vk);
  rec.keys_digest = digest2(pk_bytes, dvk_bytes);

  DeletionCertificate cert;
  std::any state;
  if (!call_stage0(adv, VraView{Game::ind_vra, pk_bytes, &kb.dk.legs}, adv_rng, cert, state, rec)) return rec;
  rec.cert_digest = enc::hex_digest(cert.encode(enc::Tag::skl_certificate));
  rec.cert_accepted = skl_delvrfy(kb.vk, cert).accepted;
  if (!rec.cert_accepted) return rec;  // the challenger outputs 0 on a rejected certificate

  const IndCiphertext ct = ind_enc(kb.pk, coin, rng);
  VraChallenge ch{Game::ind_vra, dvk_bytes, encode_ind_ct(ct), 1};
  rec.challenge_digest = enc::hex_digest(ch.body);
  std::vector<uint8_t> answer;
  if (!call_stage1(adv, state, ch, adv_rng, answer, rec)) return rec;
  rec.answer_digest = enc::hex_digest(answer);
  rec.outcome = answer_bit(answer, 0) == coin ? 1 : 0;
  return rec;
}

TrialRecord run_ow_vra(const PkeParams& params, size_t n, const VraAdversary& adv, Rng& rng) {
  Rng adv_rng = rng.split("adversary");
  TrialRecord rec;
  SklKeyBundle kb = skl_keygen(n, params, rng);
  const auto pk_bytes = encode_skl_pk(kb.pk);
  const auto dvk_bytes = encode_skl_vk(kb.vk);
  rec.keys_digest = digest2(pk_bytes, dvk_bytes);

  DeletionCertificate cert;
  std::any state;
  if (!call_stage0(adv, VraView{Game::ow_vra, pk_bytes, &kb.dk.legs}, adv_rng, cert, state, rec)) return rec;
  rec.cert_digest = enc::hex_digest(cert.encode(enc::Tag::skl_certificate));
  rec.cert_accepted = skl_delvrfy(kb.vk, cert).accepted;
  if (!rec.cert_accepted) return rec;

  const Bitstring x_star = Bitstring::random(n, rng);
  const SklCiphertext ct = skl_enc(kb.pk, x_star, rng);
  VraChallenge ch{Game::ow_vra, dvk_bytes, encode_skl_ct(ct), n};
  rec.challenge_digest = enc::hex_digest(ch.body);
  std::vector<uint8_t> answer;
  if (!call_stage1(adv, state, ch, adv_rng, answer, rec)) return rec;
  rec.answer_digest = enc::hex_digest(answer);
  rec.outcome = 1;
  for (size_t i = 0; i < n; ++i)
    if (answer_bit(answer, i) != x_star.get(i)) {
      rec.outcome = 0;
      break;
    }
  return rec;
}

TrialRecord run_pr_vra(size_t n, size_t ell, const VraAdversary& adv, int coin, Rng& rng) {
  Rng adv_rng = rng.split("adversary");
  TrialRecord rec;
  UpfKeyBundle kb = upf_keygen(n, ell, rng);
  const auto dvk_bytes = encode_upf_vk(kb.vk);
  rec.keys_digest = enc::hex_digest(dvk_bytes);

  DeletionCertificate cert;
  std::any state;
  if (!call_stage0(adv, VraView{Game::pr_vra, {}, &kb.lk.legs}, adv_rng, cert, state, rec)) return rec;
  rec.cert_digest = enc::hex_digest(cert.encode(enc::Tag::skl_certificate));
  rec.cert_accepted = upf_delvrfy(kb.vk, cert).accepted;
  if (!rec.cert_accepted) return rec;

  const PrfInput s_star{Bitstring::random(n * ell, rng), Bitstring::random(n, rng)};
  const int t_real = prf_eval(kb.msk, s_star);
  const int t_random = rng.bit();
  const int t_sent = coin == 0 ? t_real : t_random;
  enc::Writer w(enc::Tag::raw);
  w.bits(s_star.s_prime);
  w.bits(s_star.r);
  w.u8(static_cast<uint8_t>(t_sent));
  VraChallenge ch{Game::pr_vra, dvk_bytes, w.take(), 1};
  rec.challenge_digest = enc::hex_digest(ch.body);
  std::vector<uint8_t> answer;
  if (!call_stage1(adv, state, ch, adv_rng, answer, rec)) return rec;
  rec.answer_digest = enc::hex_digest(answer);
  rec.outcome = answer_bit(answer, 0) == coin ? 1 : 0;
  return rec;
}

TrialRecord run_up_vra(size_t n, size_t ell, const VraAdversary& adv, Rng& rng) {
  Rng adv_rng = rng.split("adversary");
  TrialRecord rec;
  UpfKeyBundle kb = upf_keygen(n, ell, rng);
  const auto dvk_bytes = encode_upf_vk(kb.vk);
  rec.keys_digest = enc::hex_digest(dvk_bytes);

  DeletionCertificate cert;
  std::any state;
  if (!call_stage0(adv, VraView{Game::up_vra, {}, &kb.lk.legs}, adv_rng, cert, state, rec)) return rec;
  rec.cert_digest = enc::hex_digest(cert.encode(enc::Tag::skl_certificate));
  rec.cert_accepted = upf_delvrfy(kb.vk, cert).accepted;
  if (!rec.cert_accepted) return rec;

  const PrfInput s_star{Bitstring::random(n * ell, rng), Bitstring::random(n, rng)};
  enc::Writer w(enc::Tag::raw);
  w.bits(s_star.s_prime);
  w.bits(s_star.r);
  VraChallenge ch{Game::up_vra, dvk_bytes, w.take(), 1};
  rec.challenge_digest = enc::hex_digest(ch.body);
  std::vector<uint8_t> answer;
  if (!call_stage1(adv, state, ch, adv_rng, answer, rec)) return rec;
  rec.answer_digest = enc::hex_digest(answer);
  rec.outcome = answer_bit(answer, 0) == prf_eval(kb.msk, s_star) ? 1 : 0;
  return rec;
}

TrialRecord run_ruf_vra(const LatticeParams& params, size_t n, const VraAdversary& adv, Rng& rng) {
  Rng adv_rng = rng.split("adversary");
  TrialRecord rec;
  DsKeyBundle kb = ds_keygen(n, params, rng);
  const auto pub_bytes = encode_svk_list(kb.vks.svk);
  const auto dvk_bytes = kb.vks.encode();
  rec.keys_digest = digest2(pub_bytes, dvk_bytes);

  DeletionCertificate cert;
  std::any state;
  if (!call_stage0(adv, VraView{Game::ruf_vra, pub_bytes, &kb.key.legs}, adv_rng, cert, state, rec)) return rec;
  rec.cert_digest = enc::hex_digest(cert.encode(enc::Tag::ds_certificate));
  rec.cert_accepted = ds_delvrfy(kb.vks, cert).accepted;
  if (!rec.cert_accepted) return rec;

  const Bitstring m_star = Bitstring::random(n * params.iota, rng);
  VraChallenge ch{Game::ruf_vra, dvk_bytes, encode_bits_blob(m_star), 0};
  rec.challenge_digest = enc::hex_digest(ch.body);
  std::vector<uint8_t> answer;
  if (!call_stage1(adv, state, ch, adv_rng, answer, rec)) return rec;
  rec.answer_digest = enc::hex_digest(answer);
  // A non-decoding forgery is simply a losing one.
  try {
    const DsSignature sig = DsSignature::decode(answer);
    rec.outcome = ds_sigvrfy(kb.vks, m_star, sig) ? 1 : 0;
  } catch (const Error&) {
    rec.outcome = 0;
  }
  return rec;
}

namespace {

size_t sweep_threads() {
  const char* env = std::getenv("SKL_THREADS");
  if (env == nullptr) return 1;
  char* end = nullptr;
  const unsigned long v = std::strtoul(env, &end, 10);
  if (end == env || v == 0) return 1;
  return static_cast<size_t>(std::min<unsigned long>(v, 16));
}

// Runs fn once per trial on a per-trial generator derived up front, writing
// records by index so the result is identical at any worker count.
template <typename TrialFn>
std::vector<TrialRecord> run_trials(uint64_t trials, Rng& stream, const TrialFn& fn) {
  std::vector<uint64_t> seeds(trials);
  for (auto& s : seeds) s = stream.u64();
  std::vector<TrialRecord> recs(trials);
  const size_t workers = std::max<size_t>(1, std::min<size_t>(sweep_threads(), trials));
  auto body = [&](size_t w) {
    for (uint64_t t = w; t < trials; t += workers) {
      Rng trial_rng(seeds[t]);
      recs[t] = fn(trial_rng);
      recs[t].index = t;
    }
  };
  if (workers == 1) {
    body(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (size_t w = 0; w < workers; ++w) pool.emplace_back(body, w);
    for (auto& th : pool) th.join();
  }
  return recs;
}

SweepRow summarize(Game game, const std::string& adversary, const std::vector<TrialRecord>& recs) {
  SweepRow row;
  row.game = std::string(game_name(game));
  row.adversary = adversary;
  row.trials = recs.size();
  for (const auto& r : recs) {
    row.cert_accepts += r.cert_accepted ? 1 : 0;
    row.wins += r.outcome;
    row.aborted += r.aborted ? 1 : 0;
  }
  const double nt = recs.empty() ? 1.0 : static_cast<double>(recs.size());
  row.win_rate = static_cast<double>(row.wins) / nt;
  const double half = 3.0 * std::sqrt(row.win_rate * (1.0 - row.win_rate) / nt);
  row.ci_low = std::max(0.0, row.win_rate - half);
  row.ci_high = std::min(1.0, row.win_rate + half);
  return row;
}

std::string fmt_rate(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

nlohmann::json record_json(const TrialRecord& r) {
  return nlohmann::json{{"index", r.index},
                        {"keys_digest", r.keys_digest},
                        {"cert_digest", r.cert_digest},
                        {"cert_accepted", r.cert_accepted},
                        {"challenge_digest", r.challenge_digest},
                        {"answer_digest", r.answer_digest},
                        {"aborted", r.aborted},
                        {"outcome", r.outcome}};
}

}  // namespace

std::string SweepReport::to_csv() const {
  std::string out = "game,adversary,trials,cert_accepts,wins,aborted,win_rate,ci_low,ci_high\n";
  for (const auto& r : rows) {
    out += r.game + "," + r.adversary + "," + std::to_string(r.trials) + "," + std::to_string(r.cert_accepts) +
           "," + std::to_string(r.wins) + "," + std::to_string(r.aborted) + "," + fmt_rate(r.win_rate) + "," +
           fmt_rate(r.ci_low) + "," + fmt_rate(r.ci_high) + "\n";
  }
  return out;
}

std::string SweepReport::to_json() const {
  nlohmann::json j;
  j["spec"] = {{"game", std::string(game_name(spec.game))},
               {"n", spec.n},
               {"ell", spec.ell},
               {"lattice_preset", spec.lattice.name},
               {"trials", spec.trials},
               {"seed", spec.seed}};
  j["rows"] = nlohmann::json::array();
  for (size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    nlohmann::json row{{"game", r.game},         {"adversary", r.adversary}, {"trials", r.trials},
                       {"cert_accepts", r.cert_accepts}, {"wins", r.wins},   {"aborted", r.aborted},
                       {"win_rate", r.win_rate}, {"ci_low", r.ci_low},       {"ci_high", r.ci_high}};
    row["trials_detail"] = nlohmann::json::array();
    if (i < records.size())
      for (const auto& rec : records[i]) row["trials_detail"].push_back(record_json(rec));
    j["rows"].push_back(std::move(row));
  }
  return j.dump(2) + "\n";
}

SweepReport sweep(const ExperimentSpec& spec, const std::vector<VraAdversary>& adversaries) {
  if (spec.trials == 0) throw UsageError("sweep needs at least one trial");
  if (spec.game == Game::cdbb84)
    throw UsageError("the conjugate-coding game uses its own adversary type; call sweep_cdbb84");
  SweepReport report;
  report.spec = spec;
  Rng root(spec.seed);
  for (const auto& adv : adversaries) {
    Rng stream = root.split(adv.name);
    auto recs = run_trials(spec.trials, stream, [&](Rng& trial_rng) {
      switch (spec.game) {
        case Game::ind_vra: {
          const int coin = trial_rng.bit();
          return run_ind_vra(spec.pke, spec.n, adv, coin, trial_rng);
        }
        case Game::ow_vra:
          return run_ow_vra(spec.pke, spec.n, adv, trial_rng);
        case Game::pr_vra: {
          const int coin = trial_rng.bit();
          return run_pr_vra(spec.n, spec.ell, adv, coin, trial_rng);
        }
        case Game::up_vra:
          return run_up_vra(spec.n, spec.ell, adv, trial_rng);
        default:
          return run_ruf_vra(spec.lattice, spec.n, adv, trial_rng);
      }
    });
    report.rows.push_back(summarize(spec.game, adv.name, recs));
    report.records.push_back(std::move(recs));
  }
  return report;
}

SweepReport sweep_cdbb84(const ExperimentSpec& spec, const std::vector<CdAdversary>& adversaries) {
  if (spec.trials == 0) throw UsageError("sweep needs at least one trial");
  SweepReport report;
  report.spec = spec;
  report.spec.game = Game::cdbb84;
  Rng root(spec.seed);
  for (const auto& adv : adversaries) {
    Rng stream = root.split(adv.name);
    auto recs = run_trials(spec.trials, stream, [&](Rng& trial_rng) {
      const CdOutcome out = run_cdbb84(spec.n, adv, trial_rng);
      TrialRecord rec;
      rec.cert_digest = enc::hex_digest(encode_bits_blob(out.y));
      rec.answer_digest = enc::hex_digest(encode_bits_blob(out.z));
      rec.outcome = out.won ? 1 : 0;
      return rec;
    });
    report.rows.push_back(summarize(Game::cdbb84, adv.name, recs));
    report.records.push_back(std::move(recs));
  }
  return report;
}

}  // namespace skl
