// Executable security-game harness: the five revocation games over the leased
// schemes (indistinguishability, one-wayness, pseudorandomness,
// unpredictability, unforgeability), plus a sweep driver for the
// conjugate-coding deletion game from bb84.hpp.
//
// Challenger logic is a literal transcription of each game: the adversary's
// first stage receives the public material and the leased key and must commit
// to a deletion certificate; if verification rejects, the trial's outcome is
// 0 and nothing further is revealed. Only after an accepted certificate does
// the second stage see the deletion-verification key together with the
// challenge. The harness does not measure security — the shipped adversaries
// are deliberately naive baselines whose exact win rates are derivable and
// serve as regression anchors for the game mechanics.
//
// Adversaries are (stage0, stage1) pairs with an opaque retained state.
// Everything the challenger reveals crosses the interface in canonical
// encoded form; the leased key is handed over as the live register list,
// since measuring it is the entire point. A throwing stage marks the trial
// aborted (outcome 0); an undersized answer is graded as if zero-padded.
#pragma once

#include <any>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "skl/bb84.hpp"
#include "skl/cert.hpp"
#include "skl/lattice/params.hpp"
#include "skl/pke_base.hpp"
#include "skl/qsim.hpp"
#include "skl/rng.hpp"

namespace skl {

enum class Game { ind_vra, ow_vra, pr_vra, up_vra, ruf_vra, cdbb84 };

std::string_view game_name(Game g);
std::optional<Game> game_from_name(std::string_view name);

// What stage 0 sees. The register list is mutable on purpose: the adversary
// may measure, mangle or ignore the leased key before committing to its
// certificate. The challenger never touches the legs again afterwards.
struct VraView {
  Game game = Game::ind_vra;
  std::vector<uint8_t> public_bytes;  // scheme public material, canonical form (empty if none)
  std::vector<BranchedRegister>* legs = nullptr;
};

// What stage 1 sees once the certificate has been accepted.
struct VraChallenge {
  Game game = Game::ind_vra;
  std::vector<uint8_t> dvk_bytes;  // the revealed deletion-verification key
  std::vector<uint8_t> body;       // game-specific challenge encoding
  size_t answer_bits = 1;          // expected answer width; 0 = free-form bytes
};

struct VraAdversary {
  std::string name;
  std::function<std::pair<DeletionCertificate, std::any>(const VraView&, Rng&)> stage0;
  std::function<std::vector<uint8_t>(std::any& state, const VraChallenge&, Rng&)> stage1;
};

// Reference strategies.
//   honest deleter: Hadamard-measures every leg (a faithful deletion), then
//     answers challenges blind — certificate accepts with probability 1,
//     challenge answers are uniform guesses.
//   basis hoarder: computationally measures every leg and retains the
//     readouts, fabricating a uniformly random certificate — accepted with
//     probability 2^-h for h Hadamard legs; answers blind.
//   certificate forger: measures nothing, submits a random shape-correct
//     certificate; answers blind. Statistically identical to the hoarder in
//     these games, but the retained state differs.
VraAdversary honest_deleter_vra();
VraAdversary basis_hoarder_vra();
VraAdversary cert_forger_vra();
std::vector<VraAdversary> reference_vra_adversaries();

// One game trial, fully recorded. Digests are short FNV traces of the
// canonical encodings (human-readable replay anchors, not commitments).
struct TrialRecord {
  uint64_t index = 0;
  std::string keys_digest;
  std::string cert_digest;
  bool cert_accepted = false;
  std::string challenge_digest;  // empty if the certificate was rejected
  std::string answer_digest;     // likewise
  bool aborted = false;          // an adversary stage threw
  int outcome = 0;
};

// Single-trial runners. The challenger draws from rng; adversary stages draw
// from a child stream split off at the start, so the challenge values do not
// depend on which adversary is playing.
TrialRecord run_ind_vra(const PkeParams& params, size_t n, const VraAdversary& adv, int coin, Rng& rng);
TrialRecord run_ow_vra(const PkeParams& params, size_t n, const VraAdversary& adv, Rng& rng);
TrialRecord run_pr_vra(size_t n, size_t ell, const VraAdversary& adv, int coin, Rng& rng);
TrialRecord run_up_vra(size_t n, size_t ell, const VraAdversary& adv, Rng& rng);
TrialRecord run_ruf_vra(const LatticeParams& params, size_t n, const VraAdversary& adv, Rng& rng);

struct ExperimentSpec {
  Game game = Game::ind_vra;
  size_t n = 16;                          // legs / qubit count
  size_t ell = 16;                        // per-block input length (pr/up games)
  PkeParams pke = pke_reference_params(); // ind/ow games
  LatticeParams lattice = toy_params();   // ruf game
  uint64_t trials = 100;
  uint64_t seed = 0;
};

struct SweepRow {
  std::string game;
  std::string adversary;
  uint64_t trials = 0;
  uint64_t cert_accepts = 0;
  uint64_t wins = 0;
  uint64_t aborted = 0;
  double win_rate = 0.0;
  // 3-sigma binomial band around the observed rate, clamped to [0, 1].
  double ci_low = 0.0;
  double ci_high = 0.0;
};

struct SweepReport {
  ExperimentSpec spec;
  std::vector<SweepRow> rows;
  // records[i] holds the per-trial transcript for rows[i].
  std::vector<std::vector<TrialRecord>> records;

  std::string to_csv() const;   // rows only, stable formatting
  std::string to_json() const;  // rows plus full transcripts
};

// Runs trials x adversaries. Per-trial generators are derived from
// (seed, adversary name, trial index) up front, so results are byte-identical
// regardless of how many worker threads the SKL_THREADS environment variable
// allows (default 1, clamped to [1, 16]).
SweepReport sweep(const ExperimentSpec& spec, const std::vector<VraAdversary>& adversaries);

// Same driver for the conjugate-coding deletion game. There is no
// certificate stage; cert_accepts stays 0 in these rows.
SweepReport sweep_cdbb84(const ExperimentSpec& spec, const std::vector<CdAdversary>& adversaries);

}  // namespace skl
