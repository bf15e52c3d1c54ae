#include "hardlearn.h"

#include <chrono>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>
#include <string>

#include "hardlearn/config.hpp"
#include "hardlearn/fourier.hpp"
#include "hardlearn/io.hpp"
#include "hardlearn/lattice.hpp"
#include "hardlearn/learners.hpp"
#include "hardlearn/pke.hpp"
#include "hardlearn/prf.hpp"
#include "hardlearn/reductions.hpp"
#include "hardlearn/ring.hpp"
#include "hardlearn/selftest.hpp"

using namespace hardlearn;

struct hl_ring_elem {
  RingElem e;
};
struct hl_prf_key {
  PrfKey key;
};
struct hl_truth_table {
  TruthTable t;
};
struct hl_pke_keypair {
  KeyPair kp;
};

namespace {

thread_local std::string g_last_error;

int code_of(const Error& e) {
  switch (e.code()) {
    case ErrorCode::Usage: return HL_ERR_USAGE;
    case ErrorCode::Io: return HL_ERR_IO;
    default: return HL_ERR_DOMAIN;
  }
}

int set_error(const Error& e) {
  g_last_error = e.what();
  return code_of(e);
}

int set_error_generic(const std::exception& e) {
  g_last_error = e.what();
  return HL_ERR_DOMAIN;
}

template <typename Fn>
int guarded(Fn&& fn) {
  try {
    fn();
    return HL_OK;
  } catch (const Error& e) {
    return set_error(e);
  } catch (const std::exception& e) {
    return set_error_generic(e);
  }
}

template <typename T, typename Fn>
T* guarded_new(Fn&& fn) {
  try {
    return new T{fn()};
  } catch (const Error& e) {
    set_error(e);
    return nullptr;
  } catch (const std::exception& e) {
    set_error_generic(e);
    return nullptr;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) return nullptr;
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
char* guarded_json(Fn&& fn) {
  try {
    return dup_string(fn());
  } catch (const Error& e) {
    set_error(e);
    return nullptr;
  } catch (const std::exception& e) {
    set_error_generic(e);
    return nullptr;
  }
}

class Stopwatch {
public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

private:
  std::chrono::steady_clock::time_point start_;
};

SecretDist secret_dist_from(const std::string& name, double sigma) {
  if (name == "uniform") {
    return UniformSecrets{};
  }
  if (name == "gaussian") {
    return GaussianSecrets{GaussianParams::with_default_tail(sigma)};
  }
  throw Error::usage("secret_dist must be 'uniform' or 'gaussian', got '" + name + "'");
}

JsonValue advantage_json(const AdvantageEstimate& est) {
  JsonValue v = JsonValue::object();
  v.set("p_planted", est.p_planted);
  v.set("p_uniform", est.p_uniform);
  v.set("advantage", est.advantage);
  v.set("std_error", est.std_error);
  v.set("ci95_low", est.ci_low);
  v.set("ci95_high", est.ci_high);
  v.set("trials", static_cast<std::int64_t>(est.trials));
  return v;
}

JsonValue params_report_json(const ParamsReport& rep) {
  JsonValue v = JsonValue::object();
  JsonValue derived = JsonValue::object();
  for (const auto& [k, val] : rep.derived) {
    derived.set(k, val);
  }
  v.set("derived", std::move(derived));
  JsonValue links = JsonValue::array();
  for (const auto& link : rep.links) {
    JsonValue lj = JsonValue::object();
    lj.set("name", link.name);
    lj.set("lhs_log2", link.lhs_log2);
    lj.set("rhs_log2", link.rhs_log2);
    lj.set("margin_log2", link.margin_log2);
    lj.set("pass", link.pass);
    links.push_back(std::move(lj));
  }
  v.set("links", std::move(links));
  JsonValue warnings = JsonValue::array();
  for (const auto& w : rep.warnings) {
    warnings.push_back(w);
  }
  v.set("warnings", std::move(warnings));
  v.set("all_pass", rep.all_pass);
  v.set("crosscheck_max_rel_err", rep.crosscheck_max_rel_err);
  return v;
}

std::string finish_record(JsonValue config, std::uint64_t seed, JsonValue metrics,
                          double wall_s) {
  ResultRecord rec;
  rec.tool_version = tool_version();
  rec.config = std::move(config);
  rec.seed = seed;
  rec.metrics = std::move(metrics);
  rec.wall_time_s = wall_s;
  return rec.to_canonical_json();
}

DistinguisherSpec spec_for(const std::string& learner, std::uint64_t budget) {
  DistinguisherSpec spec;
  spec.budget = budget;
  if (learner == "cheat") {
    spec.cheat = true;
    spec.learner = [](Oracles&, const RngSeed&) -> LearnerReport {
      throw Error::domain("cheat learner runs through the harness convention");
    };
  } else {
    spec.learner = make_named_learner(learner, budget);
  }
  return spec;
}

}  // namespace

extern "C" {

const char* hl_version(void) { return tool_version(); }

const char* hl_last_error(void) { return g_last_error.c_str(); }

void hl_string_free(char* s) { std::free(s); }

int hl_selftest(void) {
  try {
    const auto failures = run_selftest();
    if (failures.empty()) {
      return HL_OK;
    }
    std::string msg = "selftest failures:";
    for (const auto& f : failures) {
      msg += " [" + f + "]";
    }
    g_last_error = msg;
    return HL_ERR_DOMAIN;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return HL_ERR_DOMAIN;
  }
}

char* hl_config_resolve(const char* config_path, const char* preset,
                        const char* const* overrides, size_t n_overrides) {
  return guarded_json([&] {
    ExperimentConfig cfg = config_path ? ExperimentConfig::from_file(config_path)
                                       : ExperimentConfig::from_text("");
    std::string warning;
    if (preset) {
      const Preset p = resolve_preset(preset);
      apply_preset(cfg, p);
      warning = p.warning;
    }
    for (size_t i = 0; i < n_overrides; ++i) {
      const std::string kv = overrides[i];
      const auto eq = kv.find('=');
      if (eq == std::string::npos) {
        throw Error::usage("override '" + kv + "' is not key=value");
      }
      cfg.apply_override(kv.substr(0, eq), kv.substr(eq + 1));
    }
    JsonValue values = JsonValue::object();
    for (const auto& [k, v] : cfg.values()) {
      values.set(k, v);
    }
    JsonValue root = JsonValue::object();
    root.set("values", std::move(values));
    root.set("warning", warning);
    return root.dump_canonical();
  });
}

/* ---- ring ---------------------------------------------------------- */

hl_ring_elem* hl_ring_elem_uniform(uint32_t d, uint64_t q, uint64_t master_seed,
                                   uint64_t stream) {
  return guarded_new<hl_ring_elem>([&] {
    Philox4x32 rng(RngSeed{master_seed, stream});
    return sample_uniform_ring(RingParams{d, q}, rng);
  });
}

hl_ring_elem* hl_ring_elem_from_coeffs(uint32_t d, uint64_t q, const uint64_t* coeffs,
                                       size_t n) {
  return guarded_new<hl_ring_elem>([&] {
    return make_ring_elem(RingParams{d, q}, std::vector<std::uint64_t>(coeffs, coeffs + n));
  });
}

hl_ring_elem* hl_ring_elem_load(const char* path) {
  return guarded_new<hl_ring_elem>([&] {
    std::ifstream in(path);
    if (!in) throw Error::io(std::string("cannot open '") + path + "'");
    return parse_ring_elem(in);
  });
}

int hl_ring_elem_save(const hl_ring_elem* e, const char* path) {
  return guarded([&] { write_text_file(path, serialize_ring_elem(e->e)); });
}

void hl_ring_elem_free(hl_ring_elem* e) { delete e; }

int hl_ring_elem_dim(const hl_ring_elem* e, uint32_t* d_out) {
  *d_out = e->e.params.d;
  return HL_OK;
}

int hl_ring_elem_modulus(const hl_ring_elem* e, uint64_t* q_out) {
  *q_out = e->e.params.q;
  return HL_OK;
}

int hl_ring_elem_coeffs(const hl_ring_elem* e, uint64_t* out, size_t n) {
  return guarded([&] {
    if (n < e->e.coeffs.size()) {
      throw Error::usage("hl_ring_elem_coeffs: buffer too small");
    }
    std::copy(e->e.coeffs.begin(), e->e.coeffs.end(), out);
  });
}

hl_ring_elem* hl_ring_add(const hl_ring_elem* a, const hl_ring_elem* b) {
  return guarded_new<hl_ring_elem>([&] { return ring_add(a->e, b->e); });
}

hl_ring_elem* hl_ring_sub(const hl_ring_elem* a, const hl_ring_elem* b) {
  return guarded_new<hl_ring_elem>([&] { return ring_sub(a->e, b->e); });
}

hl_ring_elem* hl_ring_mul(const hl_ring_elem* a, const hl_ring_elem* b) {
  return guarded_new<hl_ring_elem>([&] { return ring_mul(a->e, b->e); });
}

hl_ring_elem* hl_ring_round(const hl_ring_elem* a, uint64_t p) {
  return guarded_new<hl_ring_elem>([&] { return round_elem(a->e, p); });
}

int hl_ring_msb_first_coeff(const hl_ring_elem* a) {
  try {
    return msb_first_coeff(a->e);
  } catch (const Error& e) {
    return -set_error(e);
  }
}

/* ---- sample batches -------------------------------------------------- */

int hl_gen_batch_file(const char* type, uint32_t d, uint64_t q, uint64_t p, uint64_t m,
                      double sigma, const char* arm, uint64_t master_seed, uint64_t stream,
                      const char* path) {
  return guarded([&] {
    const std::string ty = type;
    const std::string arm_s = arm;
    if (arm_s != "planted" && arm_s != "uniform") {
      throw Error::usage("arm must be 'planted' or 'uniform'");
    }
    const bool planted = arm_s == "planted";
    Philox4x32 rng(RngSeed{master_seed, stream});
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error::io(std::string("cannot open '") + path + "' for writing");

    if (ty == "lwe") {
      GaussianSampler chi(GaussianParams::with_default_tail(sigma));
      std::vector<std::uint64_t> secret;
      if (planted) {
        secret.resize(d);
        for (auto& v : secret) v = rng.uniform_below(q);
      }
      BatchHeader h{"lwe", d, q, 0, m};
      write_lwe_batch(out, h, [&] {
        LweSample s;
        s.a.resize(d);
        for (auto& v : s.a) v = rng.uniform_below(q);
        s.b = planted ? lwe_b_from(s.a, secret, chi.sample(rng), q) : rng.uniform_below(q);
        return s;
      });
      return;
    }

    const RingParams rp{d, q};
    if (ty == "rlwe") {
      GaussianSampler g(GaussianParams::with_default_tail(sigma));
      RingElem secret = planted ? sample_uniform_ring(rp, rng) : ring_zero(rp);
      BatchHeader h{"rlwe", d, q, 0, m};
      write_ring_batch(out, h, [&] {
        RlweSample s{sample_uniform_ring(rp, rng), ring_zero(rp)};
        s.b = planted ? ring_add(ring_mul(s.a, secret), sample_error_ring(rp, g, rng))
                      : sample_uniform_ring(rp, rng);
        return s;
      });
      return;
    }
    if (ty == "rlwr") {
      if (!is_power_of_two(p) || p < 2 || p > q) {
        throw Error::domain("rlwr: p must be a power of two with 2 <= p <= q");
      }
      RingElem secret = planted ? sample_uniform_ring(rp, rng) : ring_zero(rp);
      const RingParams pp{d, p};
      BatchHeader h{"rlwr", d, q, p, m};
      write_ring_batch(out, h, [&] {
        RlwrSample s{sample_uniform_ring(rp, rng), ring_zero(pp)};
        s.b = planted ? round_elem(ring_mul(s.a, secret), p) : sample_uniform_ring(pp, rng);
        return s;
      });
      return;
    }
    throw Error::usage("batch type must be lwe, rlwe or rlwr, got '" + ty + "'");
  });
}

/* ---- PRF ------------------------------------------------------------- */

hl_prf_key* hl_prf_keygen(uint32_t d, uint64_t q, uint64_t p, uint32_t k,
                          const char* secret_dist, double sigma, uint64_t master_seed,
                          uint64_t stream) {
  return guarded_new<hl_prf_key>([&] {
    PrfParams params{d, q, p, k, secret_dist_from(secret_dist, sigma)};
    Philox4x32 rng(RngSeed{master_seed, stream});
    return prf_keygen(params, rng);
  });
}

hl_prf_key* hl_prf_key_load(const char* path) {
  return guarded_new<hl_prf_key>([&] {
    std::ifstream in(path);
    if (!in) throw Error::io(std::string("cannot open '") + path + "'");
    return parse_prf_key(in);
  });
}

int hl_prf_key_save(const hl_prf_key* key, const char* path) {
  return guarded([&] { write_text_file(path, serialize_prf_key(key->key)); });
}

void hl_prf_key_free(hl_prf_key* key) { delete key; }

int hl_prf_eval_bit(const hl_prf_key* key, uint64_t x) {
  try {
    return prf_eval_bit(key->key, x);
  } catch (const Error& e) {
    return -set_error(e);
  }
}

hl_ring_elem* hl_prf_eval_ring(const hl_prf_key* key, uint64_t x) {
  return guarded_new<hl_ring_elem>([&] { return prf_eval_ring(key->key, x); });
}

hl_truth_table* hl_prf_truth_table(const hl_prf_key* key) {
  return guarded_new<hl_truth_table>([&] { return prf_truth_table(key->key); });
}

hl_truth_table* hl_truth_table_load(const char* path) {
  return guarded_new<hl_truth_table>([&] {
    std::ifstream in(path);
    if (!in) throw Error::io(std::string("cannot open '") + path + "'");
    return parse_truth_table(in);
  });
}

int hl_truth_table_save(const hl_truth_table* t, const char* path) {
  return guarded([&] { write_text_file(path, serialize_truth_table(t->t)); });
}

int hl_truth_table_bit(const hl_truth_table* t, uint64_t x) {
  if (x >= t->t.bits.size()) {
    g_last_error = "hl_truth_table_bit: index out of range";
    return -HL_ERR_USAGE;
  }
  return t->t.bits[x];
}

int hl_truth_table_k(const hl_truth_table* t) { return t->t.k; }

void hl_truth_table_free(hl_truth_table* t) { delete t; }

char* hl_prf_regime_report(uint32_t d, uint64_t q, uint64_t p, uint32_t k,
                           const char* secret_dist, double sigma) {
  return guarded_json([&] {
    PrfParams params{d, q, p, k, secret_dist_from(secret_dist, sigma)};
    const RegimeReport rep = check_prf_regime(params);
    JsonValue v = JsonValue::object();
    v.set("log2_q", rep.log2_q);
    v.set("log2_required_q", rep.log2_required_q);
    v.set("k_superlog", rep.k_superlog);
    v.set("gaussian_secrets", rep.gaussian_secrets);
    v.set("secure_regime", rep.secure_regime);
    return v.dump_canonical();
  });
}

/* ---- PKE -------------------------------------------------------------- */

hl_pke_keypair* hl_pke_keygen(uint32_t d, uint64_t q, uint32_t m, double sigma,
                              uint64_t master_seed, uint64_t stream) {
  return guarded_new<hl_pke_keypair>([&] {
    PkeParams params{d, q, m, GaussianParams::with_default_tail(sigma)};
    Philox4x32 rng(RngSeed{master_seed, stream});
    return pke_keygen(params, rng);
  });
}

int hl_pke_save_keys(const hl_pke_keypair* kp, const char* priv_path, const char* pub_path) {
  return guarded([&] {
    write_text_file(priv_path, serialize_private_key(kp->kp));
    write_text_file(pub_path, serialize_public_key(kp->kp));
  });
}

hl_pke_keypair* hl_pke_load_public(const char* pub_path) {
  return guarded_new<hl_pke_keypair>([&] {
    std::ifstream in(pub_path);
    if (!in) throw Error::io(std::string("cannot open '") + pub_path + "'");
    return parse_public_key(in);
  });
}

hl_pke_keypair* hl_pke_load_private(const char* priv_path) {
  return guarded_new<hl_pke_keypair>([&] {
    std::ifstream in(priv_path);
    if (!in) throw Error::io(std::string("cannot open '") + priv_path + "'");
    return parse_private_key(in);
  });
}

void hl_pke_keypair_free(hl_pke_keypair* kp) { delete kp; }

int hl_pke_encrypt_file(const hl_pke_keypair* pub, int bit, uint64_t master_seed,
                        uint64_t stream, const char* ct_path) {
  return guarded([&] {
    Philox4x32 rng(RngSeed{master_seed, stream});
    const Ciphertext ct = pke_encrypt(pub->kp, bit, rng);
    write_text_file(ct_path, serialize_ciphertext(ct));
  });
}

int hl_pke_decrypt_file(const hl_pke_keypair* priv, const char* ct_path, const char* rule) {
  try {
    std::ifstream in(ct_path);
    if (!in) throw Error::io(std::string("cannot open '") + ct_path + "'");
    const Ciphertext ct = parse_ciphertext(in);
    const std::string rule_s = rule;
    DecryptRule r;
    if (rule_s == "nearest") {
      r = DecryptRule::NearestCenter;
    } else if (rule_s == "literal") {
      r = DecryptRule::Literal;
    } else {
      throw Error::usage("rule must be 'nearest' or 'literal'");
    }
    return pke_decrypt(priv->kp, ct, r);
  } catch (const Error& e) {
    return -set_error(e);
  } catch (const std::exception& e) {
    set_error_generic(e);
    return -HL_ERR_DOMAIN;
  }
}

char* hl_pke_error_rate_run(uint32_t d, uint64_t q, uint32_t m, double sigma, uint64_t trials,
                            uint64_t master_seed) {
  return guarded_json([&] {
    Stopwatch sw;
    PkeParams params{d, q, m, GaussianParams::with_default_tail(sigma)};
    const DecryptionErrorEstimate est =
        estimate_decryption_error(params, trials, RngSeed{master_seed, 0});
    JsonValue config = JsonValue::object();
    config.set("subcommand", "pke error-rate");
    config.set("d", static_cast<std::int64_t>(d));
    config.set("q", static_cast<std::int64_t>(q));
    config.set("m", static_cast<std::int64_t>(m));
    config.set("sigma", sigma);
    config.set("trials", static_cast<std::int64_t>(trials));
    JsonValue metrics = JsonValue::object();
    metrics.set("rate_nearest", est.rate_nearest);
    metrics.set("rate_literal", est.rate_literal);
    metrics.set("ci95_nearest_low", est.ci_nearest_low);
    metrics.set("ci95_nearest_high", est.ci_nearest_high);
    metrics.set("ci95_literal_low", est.ci_literal_low);
    metrics.set("ci95_literal_high", est.ci_literal_high);
    const PkeAdvisory adv = check_pke_params(params);
    metrics.set("advisory_required_m", adv.required_m);
    metrics.set("advisory_satisfied", adv.satisfied);
    metrics.set("noise_budget", adv.noise_budget);
    return finish_record(std::move(config), master_seed, std::move(metrics), sw.seconds());
  });
}

/* ---- fourier ----------------------------------------------------------- */

char* hl_fourier_wht_run(const char* table_path, const char* spectrum_csv_path) {
  return guarded_json([&] {
    Stopwatch sw;
    std::ifstream in(table_path);
    if (!in) throw Error::io(std::string("cannot open '") + table_path + "'");
    const TruthTable t = parse_truth_table(in);
    const BoolFn f = truth_table_fn(t);
    const SignSpectrum spec = wht_spectrum(f);
    std::ostringstream csv;
    csv << "S,coefficient\n";
    for (std::size_t s = 0; s < spec.coef.size(); ++s) {
      csv << s << "," << canonical_double(spec.coef[s]) << "\n";
    }
    write_text_file(spectrum_csv_path, csv.str());
    JsonValue config = JsonValue::object();
    config.set("subcommand", "fourier wht");
    config.set("k", static_cast<std::int64_t>(t.k));
    JsonValue metrics = JsonValue::object();
    metrics.set("parseval_sum", spec.parseval_sum());
    double max_abs = 0.0;
    std::uint64_t argmax = 0;
    for (std::size_t s = 0; s < spec.coef.size(); ++s) {
      if (std::abs(spec.coef[s]) > max_abs) {
        max_abs = std::abs(spec.coef[s]);
        argmax = s;
      }
    }
    metrics.set("max_abs_coefficient", max_abs);
    metrics.set("argmax_set", static_cast<std::int64_t>(argmax));
    return finish_record(std::move(config), 0, std::move(metrics), sw.seconds());
  });
}

char* hl_fourier_sample_run(const char* table_path, uint64_t n, uint64_t master_seed) {
  return guarded_json([&] {
    Stopwatch sw;
    std::ifstream in(table_path);
    if (!in) throw Error::io(std::string("cannot open '") + table_path + "'");
    const TruthTable t = parse_truth_table(in);
    const BoolFn f = truth_table_fn(t);
    const SignSpectrum spec = wht_spectrum(f);
    FourierSampler sampler(spec);
    Philox4x32 rng(RngSeed{master_seed, 0});
    JsonValue sets = JsonValue::array();
    for (std::uint64_t i = 0; i < n; ++i) {
      sets.push_back(static_cast<std::int64_t>(sampler.sample(rng)));
    }
    JsonValue config = JsonValue::object();
    config.set("subcommand", "fourier sample");
    config.set("k", static_cast<std::int64_t>(t.k));
    config.set("n", static_cast<std::int64_t>(n));
    JsonValue metrics = JsonValue::object();
    metrics.set("samples", std::move(sets));
    return finish_record(std::move(config), master_seed, std::move(metrics), sw.seconds());
  });
}

/* ---- learners ------------------------------------------------------------ */

char* hl_learn_run(const char* algo, const char* target_table_path, uint64_t budget,
                   uint64_t master_seed) {
  return guarded_json([&] {
    Stopwatch sw;
    std::ifstream in(target_table_path);
    if (!in) throw Error::io(std::string("cannot open '") + target_table_path + "'");
    const TruthTable t = parse_truth_table(in);
    const BoolFn target = truth_table_fn(t);
    Learner learner = make_named_learner(algo, budget);
    const RngSeed seed{master_seed, 0};
    Oracles oracles(target, budget, derive_stream(seed, 0));
    LearnerReport rep = learner(oracles, derive_stream(seed, 1));
    const double agreement =
        hypothesis_agreement(rep.hypothesis, target, derive_stream(seed, 2));

    JsonValue config = JsonValue::object();
    config.set("subcommand", "learn");
    config.set("algo", std::string(algo));
    config.set("target", std::string(target_table_path));
    config.set("budget", static_cast<std::int64_t>(budget));
    JsonValue metrics = JsonValue::object();
    metrics.set("oracle_calls_used", static_cast<std::int64_t>(rep.oracle_calls_used));
    metrics.set("agreement", agreement);
    metrics.set("bias", agreement - 0.5);
    metrics.set("exact_claim", rep.exact_claim);
    metrics.set("hypothesis", rep.hypothesis.to_json());
    return finish_record(std::move(config), master_seed, std::move(metrics), sw.seconds());
  });
}

/* ---- reductions ------------------------------------------------------------ */

int hl_reduce_bound(uint32_t k, uint64_t queries, double* out) {
  return guarded([&] { *out = random_prediction_bound(k, queries); });
}

char* hl_reduce_prf_dist_run(const char* learner, const char* family, uint32_t k,
                             uint64_t budget, uint64_t trials, uint64_t master_seed,
                             const char* ci) {
  return guarded_json([&] {
    Stopwatch sw;
    const std::string fam = family;
    FamilySampler sampler;
    if (fam == "prf-desk") {
      PrfParams params;
      params.k = k;
      sampler = prf_family_sampler(params);
    } else if (fam == "linear") {
      sampler = linear_family_sampler(static_cast<int>(k));
    } else {
      throw Error::usage("family must be 'prf-desk' or 'linear', got '" + fam + "'");
    }
    const std::string ci_s = ci ? ci : "wald";
    CiMethod method;
    if (ci_s == "wald") {
      method = CiMethod::Wald;
    } else if (ci_s == "clopper-pearson") {
      method = CiMethod::ClopperPearson;
    } else {
      throw Error::usage("ci must be 'wald' or 'clopper-pearson', got '" + ci_s + "'");
    }
    const DistinguisherSpec spec = spec_for(learner, budget);
    const AdvantageEstimate est = learner_to_prf_distinguisher(
        spec, sampler, static_cast<int>(k), trials, RngSeed{master_seed, 0}, method);

    JsonValue config = JsonValue::object();
    config.set("subcommand", "reduce prf-dist");
    config.set("learner", std::string(learner));
    config.set("family", fam);
    config.set("k", static_cast<std::int64_t>(k));
    config.set("budget", static_cast<std::int64_t>(budget));
    config.set("trials", static_cast<std::int64_t>(trials));
    config.set("ci", ci_s);
    JsonValue metrics = advantage_json(est);
    metrics.set("p_planted_ci95_low", est.planted_ci_low);
    metrics.set("p_planted_ci95_high", est.planted_ci_high);
    metrics.set("p_uniform_ci95_low", est.uniform_ci_low);
    metrics.set("p_uniform_ci95_high", est.uniform_ci_high);
    return finish_record(std::move(config), master_seed, std::move(metrics), sw.seconds());
  });
}

char* hl_reduce_pke_adv_run(const char* learner, uint32_t d, uint64_t q, uint32_t m,
                            double sigma, uint64_t training_size, uint64_t trials,
                            uint64_t master_seed) {
  return guarded_json([&] {
    Stopwatch sw;
    PkeParams params{d, q, m, GaussianParams::with_default_tail(sigma)};
    const std::string learner_s = learner;
    PkeAdversaryResult res;
    if (learner_s == "cheat-decryptor") {
      res = cheat_decryptor_adversary(params, trials, RngSeed{master_seed, 0});
    } else {
      PkeAdversarySpec spec;
      spec.training_size = training_size;
      if (learner_s == "coin") {
        spec.learner = pke_coin_learner();
      } else if (learner_s == "memorizing") {
        spec.learner = pke_memorizing_learner();
      } else {
        throw Error::usage("learner must be cheat-decryptor, coin or memorizing");
      }
      res = learner_to_pke_adversary(spec, params, trials, RngSeed{master_seed, 0});
    }

    JsonValue config = JsonValue::object();
    config.set("subcommand", "reduce pke-adv");
    config.set("learner", learner_s);
    config.set("d", static_cast<std::int64_t>(d));
    config.set("q", static_cast<std::int64_t>(q));
    config.set("m", static_cast<std::int64_t>(m));
    config.set("sigma", sigma);
    config.set("L", static_cast<std::int64_t>(training_size));
    config.set("trials", static_cast<std::int64_t>(trials));
    JsonValue metrics = JsonValue::object();
    metrics.set("success", res.success);
    metrics.set("ci95_low", res.ci_low);
    metrics.set("ci95_high", res.ci_high);
    metrics.set("decryption_error", res.decryption_error);
    return finish_record(std::move(config), master_seed, std::move(metrics), sw.seconds());
  });
}

char* hl_reduce_params_tc0_run(double n, double alpha, double tau, double delta) {
  return guarded_json([&] {
    Stopwatch sw;
    const ParamsReport rep = tc0_param_report(n, alpha, tau, delta);
    JsonValue config = JsonValue::object();
    config.set("subcommand", "reduce params-tc0");
    config.set("n", n);
    config.set("alpha", alpha);
    config.set("tau", tau);
    config.set("delta", delta);
    return finish_record(std::move(config), 0, params_report_json(rep), sw.seconds());
  });
}

char* hl_reduce_params_ac0_run(double n, double c, double eta, double a) {
  return guarded_json([&] {
    Stopwatch sw;
    const ParamsReport rep = ac0_param_report(n, c, eta, a);
    JsonValue config = JsonValue::object();
    config.set("subcommand", "reduce params-ac0");
    config.set("n", n);
    config.set("c", c);
    config.set("eta", eta);
    config.set("a", a);
    return finish_record(std::move(config), 0, params_report_json(rep), sw.seconds());
  });
}

char* hl_reduce_bound_run(uint32_t k, uint64_t queries) {
  return guarded_json([&] {
    Stopwatch sw;
    const double bound = random_prediction_bound(k, queries);
    JsonValue config = JsonValue::object();
    config.set("subcommand", "reduce bound");
    config.set("k", static_cast<std::int64_t>(k));
    config.set("queries", static_cast<std::int64_t>(queries));
    JsonValue metrics = JsonValue::object();
    metrics.set("bound", bound);
    return finish_record(std::move(config), 0, std::move(metrics), sw.seconds());
  });
}

int hl_example_state_gap(double t, double L, double* out) {
  return guarded([&] { *out = example_state_gap(t, L); });
}

}  // extern "C"
