// Command-line front end: scheme demos, lattice parameter reports and
// security-game sweeps. Kept as a library function so tests can drive the
// exact production code path with argv vectors.
//
// Commands:
//   skl demo <pke|prf|ds> --seed S [--n N] [--ell L] [--preset P]
//   skl params [--preset P] [--q .. --m .. --sigma .. ...] [--format csv|json]
//   skl experiment --game G --seed S [--n N] [--ell L] [--trials T]
//                  [--preset P] [--pke reference|zero-noise]
//                  [--adversary NAME]... [--output PATH] [--format csv|json]
//   skl --config FILE        (whole invocation from one JSON file)
//
// Every flag is long-form. --seed is mandatory wherever randomness is drawn;
// given the seed, all output (stdout and files) is byte-stable. Exit codes:
// 0 success, 1 correctness failure (a demo pipeline step failed), 2 usage.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace skl {

struct CliConfig {
  std::string command;                    // demo | params | experiment
  std::string scheme = "pke";             // demo target
  std::string game = "ind-vra";           // experiment game
  size_t n = 16;                          // legs / qubit count
  size_t ell = 8;                         // per-block input length (prf demo, pr/up games)
  std::string preset = "toy";             // lattice preset (params, ds demo, ruf game)
  std::string pke = "reference";          // bit-PKE flavor for ind/ow games
  std::optional<uint64_t> seed;
  uint64_t trials = 100;
  std::vector<std::string> adversaries;   // empty = all reference strategies
  std::string output;                     // report path; empty = stdout
  std::string format = "csv";             // csv | json
  // Explicit lattice values for the params command, layered over the preset.
  // Keys: n, m, k, q, sigma, beta-sam, beta-ver, beta-err, beta-sis, d, ell,
  // iota. Values are decimal strings (beta-sis may exceed 64 bits).
  std::map<std::string, std::string> lattice_values;
};

// Dispatch a parsed config. Throws UsageError on semantic misuse.
int run_config(const CliConfig& cfg);

// Full argv entry point: parses flags (or --config FILE), maps errors to the
// exit-code contract, never throws.
int cli_main(int argc, const char* const* argv);

}  // namespace skl
