// CLI front end. Flag parsing is CLI11; every command funnels through
// run_config so the JSON-config path and the flag path share one dispatcher.

#include "skl/cli_app.hpp"

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "skl/ds_skl.hpp"
#include "skl/encode.hpp"
#include "skl/error.hpp"
#include "skl/experiments.hpp"
#include "skl/lattice/params.hpp"
#include "skl/pke_skl.hpp"
#include "skl/prf_skl.hpp"

namespace skl {
namespace {

using nlohmann::json;

std::string hexd(const std::vector<uint8_t>& bytes) { return enc::hex_digest(bytes); }

void emit(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open output file: " + path);
  out << content;
}

// ---- lattice preset / override resolution ---------------------------------

LatticeParams resolve_preset(const std::string& preset) {
  if (preset == "toy") return toy_params();
  if (preset == "schema-y8") return schema_params(8, 1, 2, 9, 3);
  if (preset.rfind("fail-c", 0) == 0 && preset.size() == 7 && preset[6] >= '1' && preset[6] <= '7')
    return failure_fixtures()[static_cast<size_t>(preset[6] - '1')];
  throw UsageError("unknown lattice preset: " + preset +
                   " (expected toy, schema-y8, or fail-c1..fail-c7)");
}

uint64_t parse_u64(const std::string& key, const std::string& value) {
  try {
    size_t pos = 0;
    const uint64_t v = std::stoull(value, &pos);
    if (pos != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw UsageError("bad integer for --" + key + ": " + value);
  }
}

LatticeParams apply_lattice_values(LatticeParams p, const std::map<std::string, std::string>& values) {
  for (const auto& [key, value] : values) {
    if (key == "n") p.n = parse_u64(key, value);
    else if (key == "m") p.m = parse_u64(key, value);
    else if (key == "k") p.k = parse_u64(key, value);
    else if (key == "q") p.q = static_cast<int64_t>(parse_u64(key, value));
    else if (key == "sigma") p.sigma = std::stod(value);
    else if (key == "beta-sam") p.beta_sam = static_cast<int64_t>(parse_u64(key, value));
    else if (key == "beta-ver") p.beta_ver = static_cast<int64_t>(parse_u64(key, value));
    else if (key == "beta-err") p.beta_err = static_cast<int64_t>(parse_u64(key, value));
    else if (key == "beta-sis") p.beta_sis = BigInt(value);  // arbitrary precision
    else if (key == "d") p.d = parse_u64(key, value);
    else if (key == "ell") p.ell = parse_u64(key, value);
    else if (key == "iota") p.iota = parse_u64(key, value);
    else throw UsageError("unknown lattice value: " + key);
  }
  if (!values.empty()) p.name += "+overrides";
  return p;
}

// ---- params ---------------------------------------------------------------

int cmd_params(const CliConfig& cfg) {
  LatticeParams p = apply_lattice_values(resolve_preset(cfg.preset), cfg.lattice_values);
  const ParamReport report = validate_params(p);
  emit(cfg.output, cfg.format == "json" ? report.to_json() : report.pretty());
  return 0;  // a failing condition is a finding, not a command error
}

// ---- demos ----------------------------------------------------------------

int cmd_demo_pke(const CliConfig& cfg, Rng& rng) {
  std::cout << "demo pke  n=" << cfg.n << " seed=" << *cfg.seed << "\n";
  const PkeParams params = cfg.pke == "zero-noise" ? pke_zero_noise_params() : pke_reference_params();
  SklKeyBundle kb = skl_keygen(cfg.n, params, rng);
  const auto dk_before = kb.dk.encode();
  std::cout << "leased dk    : " << hexd(dk_before) << "\n";

  const Bitstring message = Bitstring::random(cfg.n, rng);
  const SklCiphertext ct = skl_enc(kb.pk, message, rng);
  auto [decrypted, dk_after_use] = skl_dec(kb.dk, ct, rng);
  const bool dec_ok = decrypted == message;
  const bool unchanged = dk_after_use.encode() == dk_before;
  std::cout << "message      : " << message.to_string() << "\n";
  std::cout << "decrypted    : " << decrypted.to_string() << (dec_ok ? "  [match]" : "  [MISMATCH]") << "\n";
  std::cout << "key unchanged: " << (unchanged ? "yes" : "no") << "\n";

  const int secret_bit = rng.bit();
  const IndCiphertext ict = ind_enc(kb.pk, secret_bit, rng);
  auto [ind_bit, dk_after_ind] = ind_dec(dk_after_use, ict, rng);
  const bool ind_ok = ind_bit == secret_bit;
  std::cout << "wrapped bit  : " << secret_bit << " -> " << ind_bit << (ind_ok ? "  [match]" : "  [MISMATCH]")
            << "\n";

  const SklCertificate cert = skl_del(dk_after_ind, rng);
  std::cout << "certificate  : " << hexd(cert.encode(enc::Tag::skl_certificate)) << "\n";
  const bool accepted = skl_delvrfy(kb.vk, cert).accepted;
  std::cout << "delvrfy      : " << (accepted ? "ACCEPT" : "REJECT") << "\n";
  return (dec_ok && unchanged && ind_ok && accepted) ? 0 : 1;
}

int cmd_demo_prf(const CliConfig& cfg, Rng& rng) {
  std::cout << "demo prf  n=" << cfg.n << " ell=" << cfg.ell << " seed=" << *cfg.seed << "\n";
  UpfKeyBundle kb = upf_keygen(cfg.n, cfg.ell, rng);
  UpfLeasedKey lk = kb.lk;
  const auto lk_bytes = lk.encode();
  std::cout << "leased key   : " << hexd(lk_bytes) << "\n";

  bool ok = true;
  for (int round = 0; round < 3; ++round) {
    // Redraw inputs that would land on a hidden target, keeping the
    // walkthrough on the agreeing-branch path where reuse is exact.
    Bitstring s;
    std::pair<Bitstring, UpfLeasedKey> got;
    do {
      s = Bitstring::random(cfg.n * cfg.ell, rng);
      got = upf_leval(lk, s, rng);
    } while (!(got.second == lk));
    const Bitstring expected = upf_eval(kb.msk, s);
    const bool match = got.first == expected;
    ok = ok && match;
    std::cout << "eval " << round << "       : input " << hexd(s.to_bytes()) << " -> "
              << got.first.to_string() << (match ? "  [match]" : "  [MISMATCH]") << "\n";
    lk = got.second;
  }
  std::cout << "key unchanged: " << (lk.encode() == lk_bytes ? "yes" : "no") << "\n";

  const UpfCertificate cert = upf_del(lk, rng);
  std::cout << "certificate  : " << hexd(cert.encode(enc::Tag::skl_certificate)) << "\n";
  const bool accepted = upf_delvrfy(kb.vk, cert).accepted;
  std::cout << "delvrfy      : " << (accepted ? "ACCEPT" : "REJECT") << "\n";
  return (ok && accepted) ? 0 : 1;
}

int cmd_demo_ds(const CliConfig& cfg, Rng& rng) {
  std::cout << "demo ds  n=" << cfg.n << " preset=" << cfg.preset << " seed=" << *cfg.seed << "\n";
  const LatticeParams params = resolve_preset(cfg.preset);
  DsKeyBundle kb = ds_keygen(cfg.n, params, rng);
  const auto key_before = kb.key.encode();
  std::cout << "leased key   : " << hexd(key_before) << "\n";
  std::cout << "verif keys   : " << hexd(kb.vks.encode()) << "\n";

  // Redraw messages that would land on a hidden target (see demo prf).
  Bitstring message;
  std::pair<DsLeasedKey, DsSignature> signed_out;
  do {
    message = Bitstring::random(cfg.n * params.iota, rng);
    signed_out = ds_sign(kb.key, message, rng);
  } while (!(signed_out.first.encode() == key_before));
  std::cout << "message      : " << message.to_string() << "\n";
  std::cout << "signature    : " << hexd(signed_out.second.encode()) << "\n";
  const bool sig_ok = ds_sigvrfy(kb.vks, message, signed_out.second);
  std::cout << "sigvrfy      : " << (sig_ok ? "ACCEPT" : "REJECT") << "\n";
  std::cout << "key unchanged: yes\n";

  const DsCertificate cert = ds_del(signed_out.first, rng);
  std::cout << "certificate  : " << hexd(cert.encode(enc::Tag::ds_certificate)) << "\n";
  const bool accepted = ds_delvrfy(kb.vks, cert).accepted;
  std::cout << "delvrfy      : " << (accepted ? "ACCEPT" : "REJECT") << "\n";
  return (sig_ok && accepted) ? 0 : 1;
}

int cmd_demo(const CliConfig& cfg) {
  if (!cfg.seed) throw UsageError("demo needs --seed");
  Rng rng(*cfg.seed);
  if (cfg.scheme == "pke") return cmd_demo_pke(cfg, rng);
  if (cfg.scheme == "prf") return cmd_demo_prf(cfg, rng);
  if (cfg.scheme == "ds") return cmd_demo_ds(cfg, rng);
  throw UsageError("unknown demo scheme: " + cfg.scheme + " (expected pke, prf or ds)");
}

// ---- experiment -----------------------------------------------------------

int cmd_experiment(const CliConfig& cfg) {
  if (!cfg.seed) throw UsageError("experiment needs --seed");
  const auto game = game_from_name(cfg.game);
  if (!game) throw UsageError("unknown game: " + cfg.game);

  ExperimentSpec spec;
  spec.game = *game;
  spec.n = cfg.n;
  spec.ell = cfg.ell;
  spec.pke = cfg.pke == "zero-noise" ? pke_zero_noise_params() : pke_reference_params();
  spec.lattice = resolve_preset(cfg.preset);
  spec.trials = cfg.trials;
  spec.seed = *cfg.seed;

  SweepReport report;
  if (*game == Game::cdbb84) {
    std::vector<CdAdversary> all{honest_deleter_adversary(), basis_hoarder_adversary()};
    std::vector<CdAdversary> picked;
    for (const auto& adv : all)
      if (cfg.adversaries.empty() ||
          std::find(cfg.adversaries.begin(), cfg.adversaries.end(), adv.name) != cfg.adversaries.end())
        picked.push_back(adv);
    if (picked.empty()) throw UsageError("no matching adversary for cdbb84");
    report = sweep_cdbb84(spec, picked);
  } else {
    std::vector<VraAdversary> picked;
    for (const auto& adv : reference_vra_adversaries())
      if (cfg.adversaries.empty() ||
          std::find(cfg.adversaries.begin(), cfg.adversaries.end(), adv.name) != cfg.adversaries.end())
        picked.push_back(adv);
    if (picked.empty()) throw UsageError("no matching adversary");
    report = sweep(spec, picked);
  }
  emit(cfg.output, cfg.format == "json" ? report.to_json() : report.to_csv());
  return 0;
}

// ---- JSON config path -----------------------------------------------------

CliConfig config_from_json(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read config file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw UsageError(std::string("config parse error: ") + e.what());
  }
  if (!j.is_object()) throw UsageError("config must be a JSON object");

  CliConfig cfg;
  for (const auto& [key, value] : j.items()) {
    try {
      if (key == "command") cfg.command = value.get<std::string>();
      else if (key == "scheme") cfg.scheme = value.get<std::string>();
      else if (key == "game") cfg.game = value.get<std::string>();
      else if (key == "n") cfg.n = value.get<size_t>();
      else if (key == "ell") cfg.ell = value.get<size_t>();
      else if (key == "preset") cfg.preset = value.get<std::string>();
      else if (key == "pke") cfg.pke = value.get<std::string>();
      else if (key == "seed") cfg.seed = value.get<uint64_t>();
      else if (key == "trials") cfg.trials = value.get<uint64_t>();
      else if (key == "adversaries") cfg.adversaries = value.get<std::vector<std::string>>();
      else if (key == "output") cfg.output = value.get<std::string>();
      else if (key == "format") cfg.format = value.get<std::string>();
      else if (key == "lattice") {
        if (!value.is_object()) throw UsageError("config key 'lattice' must be an object");
        for (const auto& [lk, lv] : value.items())
          cfg.lattice_values[lk] = lv.is_string() ? lv.get<std::string>() : lv.dump();
      } else {
        throw UsageError("unknown config key: " + key);
      }
    } catch (const json::exception&) {
      throw UsageError("config key '" + key + "' has the wrong type");
    }
  }
  if (cfg.command.empty()) throw UsageError("config needs a 'command' key");
  return cfg;
}

}  // namespace

int run_config(const CliConfig& cfg) {
  if (cfg.format != "csv" && cfg.format != "json")
    throw UsageError("unknown format: " + cfg.format + " (expected csv or json)");
  if (cfg.command == "demo") return cmd_demo(cfg);
  if (cfg.command == "params") return cmd_params(cfg);
  if (cfg.command == "experiment") return cmd_experiment(cfg);
  throw UsageError("unknown command: " + cfg.command + " (expected demo, params or experiment)");
}

int cli_main(int argc, const char* const* argv) {
  try {
    // Config-file mode replaces flag parsing wholesale.
    for (int i = 1; i < argc; ++i) {
      if (std::string_view(argv[i]) == "--config") {
        if (argc != 3 || i != 1) throw UsageError("--config FILE must be the only argument");
        return run_config(config_from_json(argv[2]));
      }
    }

    CliConfig cfg;
    uint64_t seed_value = 0;
    CLI::App app{"secure-key-leasing toolkit: demos, parameter reports, game sweeps"};
    app.require_subcommand(1);

    auto add_seed = [&](CLI::App* sub) { return sub->add_option("--seed", seed_value, "run seed"); };
    auto add_common = [&](CLI::App* sub) {
      sub->add_option("--output", cfg.output, "write the report here instead of stdout");
      sub->add_option("--format", cfg.format, "csv (default) or json");
    };

    CLI::App* demo = app.add_subcommand("demo", "one honest pipeline with artifact digests");
    demo->add_option("scheme", cfg.scheme, "pke, prf or ds")->required();
    demo->add_option("--n", cfg.n, "legs");
    demo->add_option("--ell", cfg.ell, "per-block input length (prf)");
    demo->add_option("--preset", cfg.preset, "lattice preset (ds)");
    add_seed(demo)->required();

    CLI::App* params = app.add_subcommand("params", "seven-condition lattice parameter report");
    params->add_option("--preset", cfg.preset, "toy, schema-y8, fail-c1..fail-c7");
    for (const char* key : {"n", "m", "k", "q", "sigma", "beta-sam", "beta-ver", "beta-err", "beta-sis",
                            "d", "ell", "iota"}) {
      params->add_option_function<std::string>(
          std::string("--") + key, [&cfg, key](const std::string& v) { cfg.lattice_values[key] = v; },
          "override this value");
    }
    add_common(params);

    CLI::App* experiment = app.add_subcommand("experiment", "security-game sweep");
    experiment->add_option("--game", cfg.game, "ind-vra, ow-vra, pr-vra, up-vra, ruf-vra, cdbb84");
    experiment->add_option("--n", cfg.n, "legs");
    experiment->add_option("--ell", cfg.ell, "per-block input length (pr/up)");
    experiment->add_option("--preset", cfg.preset, "lattice preset (ruf)");
    experiment->add_option("--pke", cfg.pke, "reference or zero-noise (ind/ow)");
    experiment->add_option("--trials", cfg.trials, "trials per adversary");
    experiment->add_option("--adversary", cfg.adversaries, "restrict to named strategies (repeatable)");
    add_seed(experiment)->required();
    add_common(experiment);

    try {
      app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
      const int code = app.exit(e);
      return code == 0 ? 0 : 2;
    }

    cfg.command = app.get_subcommands().front()->get_name();
    if (demo->parsed() || experiment->parsed()) cfg.seed = seed_value;
    return run_config(cfg);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace skl
