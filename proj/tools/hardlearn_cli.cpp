// hardlearn command-line tool. All functionality lives behind the C API in
// libhardlearn; this binary only parses flags, resolves configuration and
// routes results to stdout / --out.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hardlearn.h"
#include "json.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

int exit_code_for(int hl_status) {
  return hl_status == HL_ERR_USAGE ? kExitUsage : kExitDomain;
}

[[noreturn]] void fail(int hl_status) {
  std::cerr << "error: " << hl_last_error() << "\n";
  std::exit(exit_code_for(hl_status));
}

struct Common {
  std::string config_path;
  std::string preset;
  std::vector<std::string> overrides;
  std::uint64_t seed = 0;
  bool seed_set = false;
  std::string out_path;

  void attach(CLI::App* cmd) {
    cmd->add_option("--config", config_path, "key=value configuration file");
    cmd->add_option("--preset", preset, "named preset (desk-prf, desk-pke, paper-asymptotic)");
    cmd->add_option("--set", overrides, "explicit key=value override (repeatable)");
    cmd->add_option("--seed", seed, "master seed (fallback: HARDLEARN_SEED, then 1)")
        ->each([this](const std::string&) { seed_set = true; });
    cmd->add_option("--out", out_path, "write the result record to this path");
  }

  std::uint64_t resolve_seed() const {
    if (seed_set) return seed;
    if (const char* env = std::getenv("HARDLEARN_SEED")) {
      try {
        return std::stoull(env);
      } catch (const std::exception&) {
        std::cerr << "error: HARDLEARN_SEED is not an integer\n";
        std::exit(kExitUsage);
      }
    }
    return 1;
  }

  // Merge config file, preset and --set overrides through the library.
  json resolve_values(const std::string& preset_alias = "") const {
    std::string preset_name = preset;
    if (preset_name == "desk" && !preset_alias.empty()) {
      preset_name = preset_alias;
    }
    std::vector<const char*> ov;
    ov.reserve(overrides.size());
    for (const auto& s : overrides) {
      ov.push_back(s.c_str());
    }
    char* resolved = hl_config_resolve(config_path.empty() ? nullptr : config_path.c_str(),
                                       preset_name.empty() ? nullptr : preset_name.c_str(),
                                       ov.data(), ov.size());
    if (!resolved) fail(HL_ERR_USAGE);
    json parsed = json::parse(std::string(resolved));
    hl_string_free(resolved);
    const std::string warning = parsed.value("warning", "");
    if (!warning.empty()) {
      std::cerr << "warning: " << warning << "\n";
    }
    return parsed["values"];
  }
};

std::uint64_t cfg_u64(const json& values, const std::string& key, std::uint64_t fallback) {
  if (!values.contains(key)) return fallback;
  return std::stoull(values[key].get<std::string>());
}

double cfg_double(const json& values, const std::string& key, double fallback) {
  if (!values.contains(key)) return fallback;
  return std::stod(values[key].get<std::string>());
}

std::string cfg_string(const json& values, const std::string& key, const std::string& fallback) {
  if (!values.contains(key)) return fallback;
  return values[key].get<std::string>();
}

void emit(const char* record_json, const Common& common) {
  if (!record_json) fail(HL_ERR_DOMAIN);
  std::cout << record_json << "\n";
  if (!common.out_path.empty()) {
    std::ofstream out(common.out_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot open '" << common.out_path << "' for writing\n";
      std::exit(kExitDomain);
    }
    out << record_json << "\n";
  }
}

void emit_and_free(char* record_json, const Common& common) {
  emit(record_json, common);
  hl_string_free(record_json);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"desk-scale lattice PRF / PKE / learning-reduction workbench"};
  app.require_subcommand(1);

  // ---- selftest ----
  auto* selftest = app.add_subcommand("selftest", "run the built-in invariant suites");

  // ---- gen ----
  auto* gen = app.add_subcommand("gen", "generate LWE/RLWE/RLWR sample batches");
  Common gen_common;
  gen_common.attach(gen);
  std::string gen_type = "rlwr", gen_arm = "planted", gen_path;
  gen->add_option("--type", gen_type, "lwe | rlwe | rlwr");
  gen->add_option("--arm", gen_arm, "planted | uniform");
  gen->add_option("--batch-out", gen_path, "output batch file")->required();

  // ---- prf ----
  auto* prf = app.add_subcommand("prf", "one-bit RLWR PRF operations");
  prf->require_subcommand(1);
  Common prf_common;
  auto* prf_keygen = prf->add_subcommand("keygen", "sample a PRF key");
  auto* prf_eval = prf->add_subcommand("eval", "evaluate the PRF on one input");
  auto* prf_table = prf->add_subcommand("table", "materialize the full truth table");
  auto* prf_regime = prf->add_subcommand("regime", "secure-parameter regime report");
  std::string prf_key_path, prf_table_path;
  std::uint64_t prf_input = 0;
  for (CLI::App* cmd : {prf_keygen, prf_eval, prf_table, prf_regime}) {
    prf_common.attach(cmd);
  }
  prf_keygen->add_option("--key-out", prf_key_path, "key file to write")->required();
  prf_eval->add_option("--key", prf_key_path, "key file")->required();
  prf_eval->add_option("--x", prf_input, "input, read as an integer")->required();
  prf_table->add_option("--key", prf_key_path, "key file")->required();
  prf_table->add_option("--table-out", prf_table_path, "truth table file to write")->required();

  // ---- pke ----
  auto* pke = app.add_subcommand("pke", "LWE public-key encryption");
  pke->require_subcommand(1);
  Common pke_common;
  auto* pke_keygen = pke->add_subcommand("keygen", "generate a key pair");
  auto* pke_enc = pke->add_subcommand("enc", "encrypt one bit");
  auto* pke_dec = pke->add_subcommand("dec", "decrypt a ciphertext");
  auto* pke_err = pke->add_subcommand("error-rate", "Monte-Carlo decryption error estimate");
  std::string pke_priv = "pke_priv.txt", pke_pub = "pke_pub.txt", pke_ct = "ct.txt";
  std::string pke_rule = "nearest";
  int pke_bit = 0;
  for (CLI::App* cmd : {pke_keygen, pke_enc, pke_dec, pke_err}) {
    pke_common.attach(cmd);
  }
  pke_keygen->add_option("--priv-out", pke_priv, "private key file");
  pke_keygen->add_option("--pub-out", pke_pub, "public key file");
  pke_enc->add_option("--pub", pke_pub, "public key file")->required();
  pke_enc->add_option("--bit", pke_bit, "plaintext bit")->required();
  pke_enc->add_option("--ct-out", pke_ct, "ciphertext file");
  pke_dec->add_option("--priv", pke_priv, "private key file")->required();
  pke_dec->add_option("--ct", pke_ct, "ciphertext file")->required();
  pke_dec->add_option("--rule", pke_rule, "nearest | literal (--literal-rule shorthand)");
  bool pke_literal = false;
  pke_dec->add_flag("--literal-rule", pke_literal, "use the one-sided threshold rule");

  // ---- learn ----
  auto* learn = app.add_subcommand("learn", "run a learner against a truth-table target");
  Common learn_common;
  learn_common.attach(learn);
  std::string learn_algo, learn_target;
  std::uint64_t learn_budget = 4096;
  learn->add_option("algo", learn_algo, "gf2-linear | low-degree-1 | junta-4 | memorizing")
      ->required();
  learn->add_option("--target", learn_target, "truth table file")->required();
  learn->add_option("--budget", learn_budget, "unified oracle-call budget");

  // ---- fourier ----
  auto* fourier = app.add_subcommand("fourier", "Boolean Fourier analysis");
  fourier->require_subcommand(1);
  Common fourier_common;
  auto* fourier_wht = fourier->add_subcommand("wht", "spectrum of a truth table");
  auto* fourier_sample = fourier->add_subcommand("sample", "draw Fourier samples");
  std::string fourier_table, fourier_csv = "spectrum.csv";
  std::uint64_t fourier_n = 16;
  for (CLI::App* cmd : {fourier_wht, fourier_sample}) {
    fourier_common.attach(cmd);
  }
  fourier_wht->add_option("--table", fourier_table, "truth table file")->required();
  fourier_wht->add_option("--spectrum-out", fourier_csv, "CSV spectrum dump");
  fourier_sample->add_option("--table", fourier_table, "truth table file")->required();
  fourier_sample->add_option("-n,--draws", fourier_n, "number of samples");

  // ---- reduce ----
  auto* reduce = app.add_subcommand("reduce", "reductions and theorem arithmetic");
  reduce->require_subcommand(1);
  Common reduce_common;
  auto* r_prf = reduce->add_subcommand("prf-dist", "learner -> PRF distinguisher game");
  auto* r_pke = reduce->add_subcommand("pke-adv", "learner -> PKE adversary game");
  auto* r_bound = reduce->add_subcommand("bound", "random-function prediction bound");
  auto* r_tc0 = reduce->add_subcommand("params-tc0", "quasi-poly hardness parameter chain");
  auto* r_ac0 = reduce->add_subcommand("params-ac0", "sub-exponential hardness parameter chain");
  for (CLI::App* cmd : {r_prf, r_pke, r_bound, r_tc0, r_ac0}) {
    reduce_common.attach(cmd);
  }
  std::string rd_learner = "gf2-linear", rd_family = "linear", rd_ci = "wald";
  std::uint64_t rd_k = 16, rd_budget = 64, rd_trials = 2000;
  r_prf->add_option("--learner", rd_learner, "gf2-linear | low-degree-1 | memorizing | cheat");
  r_prf->add_option("--family", rd_family, "linear | prf-desk");
  r_prf->add_option("--k", rd_k, "input length");
  r_prf->add_option("--budget", rd_budget, "learner oracle budget");
  r_prf->add_option("--trials", rd_trials, "trials per arm");
  r_prf->add_option("--ci", rd_ci, "wald | clopper-pearson");

  std::string rp_learner = "cheat-decryptor";
  std::uint64_t rp_L = 64, rp_trials = 1000;
  r_pke->add_option("--learner", rp_learner, "cheat-decryptor | coin | memorizing");
  r_pke->add_option("--L", rp_L, "training multiset size (challenge held out)");
  r_pke->add_option("--trials", rp_trials, "trial count");

  std::uint64_t rb_k = 16, rb_queries = 16;
  r_bound->add_option("--k", rb_k, "input length")->required();
  r_bound->add_option("--queries", rb_queries, "membership-query budget")->required();

  double tc0_n = 1048576.0, tc0_alpha = 3.0, tc0_tau = 0.5, tc0_delta = 1.0;
  r_tc0->add_option("--n", tc0_n, "problem size n");
  r_tc0->add_option("--alpha", tc0_alpha, "k = log^alpha n");
  r_tc0->add_option("--tau", tc0_tau, "gamma = n^tau");
  r_tc0->add_option("--delta", tc0_delta, "beta(n) = n^-delta");

  double ac0_n = 4294967296.0, ac0_c = 5.0, ac0_eta = 2.25, ac0_a = 2.0;
  r_ac0->add_option("--n", ac0_n, "problem size n");
  r_ac0->add_option("--c", ac0_c, "d = log^c n");
  r_ac0->add_option("--eta", ac0_eta, "k = d^(1/eta)");
  r_ac0->add_option("--a", ac0_a, "corollary constant a");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  if (selftest->parsed()) {
    const int rc = hl_selftest();
    if (rc != HL_OK) {
      std::cerr << "selftest: " << hl_last_error() << "\n";
      return kExitDomain;
    }
    std::cout << "selftest: all invariants hold\n";
    return kExitOk;
  }

  if (gen->parsed()) {
    const json v = gen_common.resolve_values();
    const int rc = hl_gen_batch_file(
        gen_type.c_str(), static_cast<std::uint32_t>(cfg_u64(v, "d", 8)), cfg_u64(v, "q", 1024),
        cfg_u64(v, "p", 0), cfg_u64(v, "m", 100), cfg_double(v, "sigma", 3.0), gen_arm.c_str(),
        gen_common.resolve_seed(), 0, gen_path.c_str());
    if (rc != HL_OK) fail(rc);
    std::cout << "wrote " << gen_path << "\n";
    return kExitOk;
  }

  if (prf->parsed()) {
    const std::string alias = "desk-prf";
    if (prf_keygen->parsed()) {
      const json v = prf_common.resolve_values(alias);
      hl_prf_key* key = hl_prf_keygen(
          static_cast<std::uint32_t>(cfg_u64(v, "d", 8)), cfg_u64(v, "q", 1u << 20),
          cfg_u64(v, "p", 4), static_cast<std::uint32_t>(cfg_u64(v, "k", 16)),
          cfg_string(v, "secret_dist", "gaussian").c_str(), cfg_double(v, "sigma", 3.0),
          prf_common.resolve_seed(), 0);
      if (!key) fail(HL_ERR_DOMAIN);
      const int rc = hl_prf_key_save(key, prf_key_path.c_str());
      hl_prf_key_free(key);
      if (rc != HL_OK) fail(rc);
      std::cout << "wrote " << prf_key_path << "\n";
      return kExitOk;
    }
    if (prf_eval->parsed()) {
      hl_prf_key* key = hl_prf_key_load(prf_key_path.c_str());
      if (!key) fail(HL_ERR_IO);
      const int bit = hl_prf_eval_bit(key, prf_input);
      hl_prf_key_free(key);
      if (bit < 0) fail(-bit);
      std::cout << bit << "\n";
      return kExitOk;
    }
    if (prf_table->parsed()) {
      hl_prf_key* key = hl_prf_key_load(prf_key_path.c_str());
      if (!key) fail(HL_ERR_IO);
      hl_truth_table* t = hl_prf_truth_table(key);
      hl_prf_key_free(key);
      if (!t) fail(HL_ERR_DOMAIN);
      const int rc = hl_truth_table_save(t, prf_table_path.c_str());
      hl_truth_table_free(t);
      if (rc != HL_OK) fail(rc);
      std::cout << "wrote " << prf_table_path << "\n";
      return kExitOk;
    }
    if (prf_regime->parsed()) {
      const json v = prf_common.resolve_values(alias);
      char* rep = hl_prf_regime_report(
          static_cast<std::uint32_t>(cfg_u64(v, "d", 8)), cfg_u64(v, "q", 1u << 20),
          cfg_u64(v, "p", 4), static_cast<std::uint32_t>(cfg_u64(v, "k", 16)),
          cfg_string(v, "secret_dist", "gaussian").c_str(), cfg_double(v, "sigma", 3.0));
      emit_and_free(rep, prf_common);
      return kExitOk;
    }
  }

  if (pke->parsed()) {
    const std::string alias = "desk-pke";
    if (pke_keygen->parsed()) {
      const json v = pke_common.resolve_values(alias);
      hl_pke_keypair* kp = hl_pke_keygen(
          static_cast<std::uint32_t>(cfg_u64(v, "d", 32)), cfg_u64(v, "q", 1u << 15),
          static_cast<std::uint32_t>(cfg_u64(v, "m", 300)), cfg_double(v, "sigma", 10.0),
          pke_common.resolve_seed(), 0);
      if (!kp) fail(HL_ERR_DOMAIN);
      const int rc = hl_pke_save_keys(kp, pke_priv.c_str(), pke_pub.c_str());
      hl_pke_keypair_free(kp);
      if (rc != HL_OK) fail(rc);
      std::cout << "wrote " << pke_priv << " and " << pke_pub << "\n";
      return kExitOk;
    }
    if (pke_enc->parsed()) {
      hl_pke_keypair* kp = hl_pke_load_public(pke_pub.c_str());
      if (!kp) fail(HL_ERR_IO);
      const int rc =
          hl_pke_encrypt_file(kp, pke_bit, pke_common.resolve_seed(), 0, pke_ct.c_str());
      hl_pke_keypair_free(kp);
      if (rc != HL_OK) fail(rc);
      std::cout << "wrote " << pke_ct << "\n";
      return kExitOk;
    }
    if (pke_dec->parsed()) {
      hl_pke_keypair* kp = hl_pke_load_private(pke_priv.c_str());
      if (!kp) fail(HL_ERR_IO);
      const int bit =
          hl_pke_decrypt_file(kp, pke_ct.c_str(), pke_literal ? "literal" : pke_rule.c_str());
      hl_pke_keypair_free(kp);
      if (bit < 0) fail(-bit);
      std::cout << bit << "\n";
      return kExitOk;
    }
    if (pke_err->parsed()) {
      const json v = pke_common.resolve_values(alias);
      char* rep = hl_pke_error_rate_run(
          static_cast<std::uint32_t>(cfg_u64(v, "d", 32)), cfg_u64(v, "q", 1u << 15),
          static_cast<std::uint32_t>(cfg_u64(v, "m", 300)), cfg_double(v, "sigma", 10.0),
          cfg_u64(v, "trials", 10000), pke_common.resolve_seed());
      emit_and_free(rep, pke_common);
      return kExitOk;
    }
  }

  if (learn->parsed()) {
    char* rep = hl_learn_run(learn_algo.c_str(), learn_target.c_str(), learn_budget,
                             learn_common.resolve_seed());
    emit_and_free(rep, learn_common);
    return kExitOk;
  }

  if (fourier->parsed()) {
    if (fourier_wht->parsed()) {
      char* rep = hl_fourier_wht_run(fourier_table.c_str(), fourier_csv.c_str());
      emit_and_free(rep, fourier_common);
      return kExitOk;
    }
    if (fourier_sample->parsed()) {
      char* rep = hl_fourier_sample_run(fourier_table.c_str(), fourier_n,
                                        fourier_common.resolve_seed());
      emit_and_free(rep, fourier_common);
      return kExitOk;
    }
  }

  if (reduce->parsed()) {
    if (r_prf->parsed()) {
      char* rep =
          hl_reduce_prf_dist_run(rd_learner.c_str(), rd_family.c_str(),
                                 static_cast<std::uint32_t>(rd_k), rd_budget, rd_trials,
                                 reduce_common.resolve_seed(), rd_ci.c_str());
      emit_and_free(rep, reduce_common);
      return kExitOk;
    }
    if (r_pke->parsed()) {
      const json v = reduce_common.resolve_values("desk-pke");
      char* rep = hl_reduce_pke_adv_run(
          rp_learner.c_str(), static_cast<std::uint32_t>(cfg_u64(v, "d", 32)),
          cfg_u64(v, "q", 1u << 15), static_cast<std::uint32_t>(cfg_u64(v, "m", 300)),
          cfg_double(v, "sigma", 10.0), rp_L, rp_trials, reduce_common.resolve_seed());
      emit_and_free(rep, reduce_common);
      return kExitOk;
    }
    if (r_bound->parsed()) {
      char* rep = hl_reduce_bound_run(static_cast<std::uint32_t>(rb_k), rb_queries);
      emit_and_free(rep, reduce_common);
      return kExitOk;
    }
    if (r_tc0->parsed()) {
      char* rep = hl_reduce_params_tc0_run(tc0_n, tc0_alpha, tc0_tau, tc0_delta);
      emit_and_free(rep, reduce_common);
      return kExitOk;
    }
    if (r_ac0->parsed()) {
      char* rep = hl_reduce_params_ac0_run(ac0_n, ac0_c, ac0_eta, ac0_a);
      emit_and_free(rep, reduce_common);
      return kExitOk;
    }
  }

  std::cerr << "error: no subcommand handled\n";
  return kExitUsage;
}
