// Game harness: challenger bookkeeping (certificate gate, abort handling,
// digests), the derivable win rates of the naive reference adversaries, and
// the thread-invariant determinism of the sweep driver.

#include <doctest.h>

#include <cstdlib>
#include <nlohmann/json.hpp>

#include "skl/experiments.hpp"
#include "skl/stats.hpp"

using namespace skl;

namespace {

VraAdversary empty_cert_adversary() {
  VraAdversary adv;
  adv.name = "empty-cert";
  adv.stage0 = [](const VraView&, Rng&) {
    return std::pair<DeletionCertificate, std::any>{DeletionCertificate{}, std::any{}};
  };
  adv.stage1 = [](std::any&, const VraChallenge&, Rng&) { return std::vector<uint8_t>{}; };
  return adv;
}

VraAdversary throwing_adversary(bool in_stage1) {
  VraAdversary adv = honest_deleter_vra();
  adv.name = "saboteur";
  if (in_stage1) {
    adv.stage1 = [](std::any&, const VraChallenge&, Rng&) -> std::vector<uint8_t> {
      throw std::runtime_error("refuses to answer");
    };
  } else {
    adv.stage0 = [](const VraView&, Rng&) -> std::pair<DeletionCertificate, std::any> {
      throw std::runtime_error("refuses to delete");
    };
  }
  return adv;
}

}  // namespace

TEST_CASE("game names roundtrip") {
  for (Game g : {Game::ind_vra, Game::ow_vra, Game::pr_vra, Game::up_vra, Game::ruf_vra, Game::cdbb84}) {
    const auto back = game_from_name(game_name(g));
    REQUIRE(back.has_value());
    CHECK(*back == g);
  }
  CHECK_FALSE(game_from_name("ind").has_value());
  CHECK_FALSE(game_from_name("").has_value());
}

TEST_CASE("indistinguishability game against the honest deleter") {
  Rng rng(601);
  uint64_t wins = 0;
  const uint64_t trials = 300;
  for (uint64_t t = 0; t < trials; ++t) {
    const int coin = rng.bit();
    const TrialRecord rec = run_ind_vra(pke_reference_params(), 4, honest_deleter_vra(), coin, rng);
    CHECK(rec.cert_accepted);  // a faithful deletion always verifies
    CHECK_FALSE(rec.aborted);
    CHECK_FALSE(rec.keys_digest.empty());
    CHECK_FALSE(rec.challenge_digest.empty());
    wins += rec.outcome;
  }
  CHECK(stats::within_k_sigma(wins, trials, 0.5, 4.0));  // blind guessing
}

TEST_CASE("rejected certificates end the trial with outcome 0") {
  Rng rng(602);
  for (int t = 0; t < 10; ++t) {
    const TrialRecord rec = run_ind_vra(pke_reference_params(), 4, empty_cert_adversary(), rng.bit(), rng);
    CHECK_FALSE(rec.cert_accepted);
    CHECK(rec.outcome == 0);
    CHECK(rec.challenge_digest.empty());  // nothing was revealed
    CHECK(rec.answer_digest.empty());
    CHECK_FALSE(rec.aborted);
  }
}

TEST_CASE("throwing stages abort the trial") {
  Rng rng(603);
  const TrialRecord r0 = run_ow_vra(pke_reference_params(), 4, throwing_adversary(false), rng);
  CHECK(r0.aborted);
  CHECK(r0.outcome == 0);
  CHECK(r0.cert_digest.empty());

  const TrialRecord r1 = run_ow_vra(pke_reference_params(), 4, throwing_adversary(true), rng);
  CHECK(r1.aborted);
  CHECK(r1.outcome == 0);
  CHECK(r1.cert_accepted);  // the honest stage 0 ran before the sabotage
  CHECK(r1.answer_digest.empty());
}

TEST_CASE("one-wayness: blind answers almost never hit the preimage") {
  Rng rng(604);
  uint64_t wins = 0;
  const uint64_t trials = 200;
  for (uint64_t t = 0; t < trials; ++t) wins += run_ow_vra(pke_reference_params(), 6, honest_deleter_vra(), rng).outcome;
  CHECK(stats::within_k_sigma(wins, trials, 1.0 / 64, 4.0));
}

TEST_CASE("forged certificates clear the gate at the conjugate-coding rate") {
  ExperimentSpec spec;
  spec.game = Game::ind_vra;
  spec.n = 4;
  spec.trials = 400;
  spec.seed = 605;
  const SweepReport rep = sweep(spec, {cert_forger_vra(), basis_hoarder_vra()});
  REQUIRE(rep.rows.size() == 2);
  for (const auto& row : rep.rows) {
    CHECK(stats::within_k_sigma(row.cert_accepts, row.trials, 0.31640625, 3.5));  // (3/4)^4
    // Conditioned on acceptance, a blind guess wins half the time.
    CHECK(row.wins <= row.cert_accepts);
  }
}

TEST_CASE("pseudorandomness and unpredictability games at small sizes") {
  ExperimentSpec spec;
  spec.game = Game::pr_vra;
  spec.n = 3;
  spec.ell = 4;
  spec.trials = 200;
  spec.seed = 606;
  const SweepReport pr = sweep(spec, {honest_deleter_vra()});
  REQUIRE(pr.rows.size() == 1);
  CHECK(pr.rows[0].cert_accepts == 200);
  CHECK(stats::within_k_sigma(pr.rows[0].wins, 200, 0.5, 4.0));

  spec.game = Game::up_vra;
  const SweepReport up = sweep(spec, {honest_deleter_vra()});
  CHECK(stats::within_k_sigma(up.rows[0].wins, 200, 0.5, 4.0));
}

TEST_CASE("unforgeability: honest deletion verifies, random bytes never forge") {
  ExperimentSpec spec;
  spec.game = Game::ruf_vra;
  spec.n = 1;
  spec.trials = 3;
  spec.seed = 607;
  const SweepReport rep = sweep(spec, {honest_deleter_vra()});
  REQUIRE(rep.rows.size() == 1);
  CHECK(rep.rows[0].cert_accepts == 3);
  CHECK(rep.rows[0].wins == 0);
  CHECK(rep.rows[0].aborted == 0);
}

TEST_CASE("conjugate-coding sweep matches the closed-form rate") {
  ExperimentSpec spec;
  spec.n = 6;
  spec.trials = 600;
  spec.seed = 608;
  const SweepReport rep = sweep_cdbb84(spec, {honest_deleter_adversary(), basis_hoarder_adversary()});
  REQUIRE(rep.rows.size() == 2);
  for (const auto& row : rep.rows) {
    CHECK(row.game == "cdbb84");
    CHECK(row.cert_accepts == 0);  // no certificate stage in this game
    CHECK(stats::within_k_sigma(row.wins, row.trials, 0.177978515625, 3.5));  // (3/4)^6
  }
}

TEST_CASE("sweep rejects misuse") {
  ExperimentSpec spec;
  spec.trials = 0;
  CHECK_THROWS_AS(sweep(spec, {honest_deleter_vra()}), UsageError);
  CHECK_THROWS_AS(sweep_cdbb84(spec, {honest_deleter_adversary()}), UsageError);
  spec.trials = 5;
  spec.game = Game::cdbb84;
  CHECK_THROWS_AS(sweep(spec, {honest_deleter_vra()}), UsageError);
}

TEST_CASE("sweep output is deterministic and thread-invariant") {
  ExperimentSpec spec;
  spec.game = Game::ind_vra;
  spec.n = 3;
  spec.trials = 40;
  spec.seed = 609;
  const auto advs = reference_vra_adversaries();

  const SweepReport a = sweep(spec, advs);
  const SweepReport b = sweep(spec, advs);
  CHECK(a.to_csv() == b.to_csv());
  CHECK(a.to_json() == b.to_json());

  setenv("SKL_THREADS", "3", 1);
  const SweepReport c = sweep(spec, advs);
  unsetenv("SKL_THREADS");
  CHECK(c.to_csv() == a.to_csv());
  CHECK(c.to_json() == a.to_json());
}

TEST_CASE("reports carry full transcripts") {
  ExperimentSpec spec;
  spec.game = Game::up_vra;
  spec.n = 2;
  spec.ell = 3;
  spec.trials = 12;
  spec.seed = 610;
  const SweepReport rep = sweep(spec, {honest_deleter_vra(), empty_cert_adversary()});

  const std::string csv = rep.to_csv();
  CHECK(csv.rfind("game,adversary,trials,cert_accepts,wins,aborted,win_rate,ci_low,ci_high\n", 0) == 0);
  CHECK(csv.find("up-vra,honest-deleter,12,") != std::string::npos);

  const auto j = nlohmann::json::parse(rep.to_json());
  REQUIRE(j["rows"].size() == 2);
  CHECK(j["rows"][0]["trials_detail"].size() == 12);
  CHECK(j["spec"]["seed"] == 610);
  // The empty-cert rows never win and never reveal a challenge.
  CHECK(j["rows"][1]["wins"] == 0);
  for (const auto& rec : j["rows"][1]["trials_detail"]) CHECK(rec["challenge_digest"] == "");
}

TEST_CASE("challenger draws are adversary-independent") {
  // Adversary randomness comes from a split-off child stream, so two
  // different adversaries on the same trial generator face the same keys.
  Rng r1(611), r2(611);
  const TrialRecord a = run_up_vra(2, 3, honest_deleter_vra(), r1);
  const TrialRecord b = run_up_vra(2, 3, empty_cert_adversary(), r2);
  CHECK(a.keys_digest == b.keys_digest);
  CHECK(a.cert_accepted);
  CHECK_FALSE(b.cert_accepted);
}
