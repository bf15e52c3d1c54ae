#include <unistd.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "hardlearn.h"
#include "json.hpp"

namespace {

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("hardlearn_capi_" + std::to_string(::getpid()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
  std::string file(const char* name) const { return (path / name).string(); }
};

std::string take(char* s) {
  REQUIRE(s != nullptr);
  std::string out(s);
  hl_string_free(s);
  return out;
}

}  // namespace

TEST_SUITE("capi") {

TEST_CASE("version and selftest") {
  CHECK(std::string(hl_version()) == "0.1.0");
  CHECK(hl_selftest() == HL_OK);
}

TEST_CASE("ring handles: arithmetic, errors, file round trip") {
  TempDir tmp;
  hl_ring_elem* a = hl_ring_elem_uniform(8, 1024, 5, 0);
  hl_ring_elem* b = hl_ring_elem_uniform(8, 1024, 5, 1);
  REQUIRE(a);
  REQUIRE(b);

  hl_ring_elem* sum = hl_ring_add(a, b);
  REQUIRE(sum);
  hl_ring_elem* diff = hl_ring_sub(sum, b);
  REQUIRE(diff);
  std::vector<std::uint64_t> ca(8), cd(8);
  CHECK(hl_ring_elem_coeffs(a, ca.data(), ca.size()) == HL_OK);
  CHECK(hl_ring_elem_coeffs(diff, cd.data(), cd.size()) == HL_OK);
  CHECK(ca == cd);

  // Parameter mismatch surfaces as a domain error with a message.
  hl_ring_elem* other = hl_ring_elem_uniform(4, 1024, 5, 2);
  REQUIRE(other);
  CHECK(hl_ring_add(a, other) == nullptr);
  CHECK(std::string(hl_last_error()).find("mismatch") != std::string::npos);

  CHECK(hl_ring_elem_save(a, tmp.file("elem.txt").c_str()) == HL_OK);
  hl_ring_elem* loaded = hl_ring_elem_load(tmp.file("elem.txt").c_str());
  REQUIRE(loaded);
  std::vector<std::uint64_t> cl(8);
  CHECK(hl_ring_elem_coeffs(loaded, cl.data(), cl.size()) == HL_OK);
  CHECK(cl == ca);

  hl_ring_elem* rounded = hl_ring_round(a, 16);
  REQUIRE(rounded);
  uint64_t q = 0;
  CHECK(hl_ring_elem_modulus(rounded, &q) == HL_OK);
  CHECK(q == 16);
  std::vector<std::uint64_t> cr(8);
  CHECK(hl_ring_elem_coeffs(rounded, cr.data(), cr.size()) == HL_OK);
  CHECK(hl_ring_msb_first_coeff(rounded) == (cr[0] >= 8 ? 1 : 0));

  hl_ring_elem_free(a);
  hl_ring_elem_free(b);
  hl_ring_elem_free(sum);
  hl_ring_elem_free(diff);
  hl_ring_elem_free(other);
  hl_ring_elem_free(loaded);
  hl_ring_elem_free(rounded);
}

TEST_CASE("prf keys evaluate identically after a file round trip") {
  TempDir tmp;
  hl_prf_key* key = hl_prf_keygen(8, 1u << 20, 4, 10, "gaussian", 3.0, 7, 0);
  REQUIRE(key);
  CHECK(hl_prf_key_save(key, tmp.file("key.txt").c_str()) == HL_OK);
  hl_prf_key* back = hl_prf_key_load(tmp.file("key.txt").c_str());
  REQUIRE(back);
  for (std::uint64_t x = 0; x < 64; ++x) {
    CHECK(hl_prf_eval_bit(key, x) == hl_prf_eval_bit(back, x));
  }

  hl_truth_table* table = hl_prf_truth_table(key);
  REQUIRE(table);
  CHECK(hl_truth_table_k(table) == 10);
  CHECK(hl_truth_table_save(table, tmp.file("table.txt").c_str()) == HL_OK);
  hl_truth_table* table2 = hl_truth_table_load(tmp.file("table.txt").c_str());
  REQUIRE(table2);
  for (std::uint64_t x = 0; x < 1024; ++x) {
    CHECK(hl_truth_table_bit(table, x) == hl_truth_table_bit(table2, x));
    CHECK(hl_truth_table_bit(table, x) == hl_prf_eval_bit(key, x));
  }
  hl_truth_table_free(table);
  hl_truth_table_free(table2);
  hl_prf_key_free(key);
  hl_prf_key_free(back);
}

TEST_CASE("regime report flags the desk preset as not paper-secure") {
  const std::string rep = take(hl_prf_regime_report(8, 1u << 20, 4, 16, "gaussian", 3.0));
  const auto parsed = nlohmann::json::parse(rep);
  CHECK(parsed["gaussian_secrets"] == true);
  CHECK(parsed["secure_regime"] == false);
}

TEST_CASE("pke runs end to end through files") {
  TempDir tmp;
  hl_pke_keypair* kp = hl_pke_keygen(16, 1u << 12, 100, 3.0, 3, 0);
  REQUIRE(kp);
  CHECK(hl_pke_save_keys(kp, tmp.file("priv.txt").c_str(), tmp.file("pub.txt").c_str()) ==
        HL_OK);
  hl_pke_keypair* pub = hl_pke_load_public(tmp.file("pub.txt").c_str());
  hl_pke_keypair* priv = hl_pke_load_private(tmp.file("priv.txt").c_str());
  REQUIRE(pub);
  REQUIRE(priv);
  for (int bit : {0, 1}) {
    CHECK(hl_pke_encrypt_file(pub, bit, 11, static_cast<uint64_t>(bit), tmp.file("ct.txt").c_str()) ==
          HL_OK);
    CHECK(hl_pke_decrypt_file(priv, tmp.file("ct.txt").c_str(), "nearest") == bit);
  }
  CHECK(hl_pke_decrypt_file(priv, tmp.file("ct.txt").c_str(), "bogus") == -HL_ERR_USAGE);
  hl_pke_keypair_free(kp);
  hl_pke_keypair_free(pub);
  hl_pke_keypair_free(priv);
}

TEST_CASE("error-rate record carries deterministic metrics") {
  const std::string a = take(hl_pke_error_rate_run(16, 1u << 12, 100, 3.0, 200, 9));
  const std::string b = take(hl_pke_error_rate_run(16, 1u << 12, 100, 3.0, 200, 9));
  const auto ja = nlohmann::json::parse(a);
  const auto jb = nlohmann::json::parse(b);
  CHECK(ja["metrics"] == jb["metrics"]);
  CHECK(ja["metrics"]["rate_nearest"].is_number());
  CHECK(ja["tool_version"] == "0.1.0");
}

TEST_CASE("gen batch writes parseable files") {
  TempDir tmp;
  CHECK(hl_gen_batch_file("rlwr", 4, 16, 4, 50, 3.0, "planted", 21, 0,
                          tmp.file("batch.txt").c_str()) == HL_OK);
  std::ifstream in(tmp.file("batch.txt"));
  std::string header;
  std::getline(in, header);
  CHECK(header == "type=rlwr d=4 q=16 p=4 m=50");
  int lines = 0;
  std::string line;
  while (std::getline(in, line)) {
    ++lines;
  }
  CHECK(lines == 50);

  CHECK(hl_gen_batch_file("bogus", 4, 16, 4, 5, 3.0, "planted", 21, 0,
                          tmp.file("x.txt").c_str()) == HL_ERR_USAGE);
}

TEST_CASE("fourier wht and sampling work over truth-table files") {
  TempDir tmp;
  // Parity of bits 0 and 2 on k=4: table bit x = popcount(x & 0b0101) mod 2.
  hl_prf_key* key = hl_prf_keygen(4, 1u << 12, 4, 4, "gaussian", 3.0, 33, 0);
  REQUIRE(key);
  hl_truth_table* table = hl_prf_truth_table(key);
  REQUIRE(table);
  CHECK(hl_truth_table_save(table, tmp.file("t.txt").c_str()) == HL_OK);
  const std::string rep =
      take(hl_fourier_wht_run(tmp.file("t.txt").c_str(), tmp.file("spec.csv").c_str()));
  const auto parsed = nlohmann::json::parse(rep);
  CHECK(std::abs(parsed["metrics"]["parseval_sum"].get<double>() - 1.0) <= 1e-9);
  std::ifstream csv(tmp.file("spec.csv"));
  std::string first;
  std::getline(csv, first);
  CHECK(first == "S,coefficient");

  const std::string samples = take(hl_fourier_sample_run(tmp.file("t.txt").c_str(), 32, 5));
  const auto js = nlohmann::json::parse(samples);
  CHECK(js["metrics"]["samples"].size() == 32);
  hl_truth_table_free(table);
  hl_prf_key_free(key);
}

TEST_CASE("learn runs against a truth-table file") {
  TempDir tmp;
  hl_prf_key* key = hl_prf_keygen(8, 1u << 20, 4, 8, "gaussian", 3.0, 44, 0);
  REQUIRE(key);
  hl_truth_table* table = hl_prf_truth_table(key);
  REQUIRE(table);
  CHECK(hl_truth_table_save(table, tmp.file("t.txt").c_str()) == HL_OK);
  const std::string rep =
      take(hl_learn_run("memorizing", tmp.file("t.txt").c_str(), 256, 3));
  const auto parsed = nlohmann::json::parse(rep);
  CHECK(parsed["metrics"]["agreement"] == 1.0);  // 2^8 budget memorizes everything
  CHECK(parsed["metrics"]["exact_claim"] == true);
  CHECK(hl_learn_run("nope", tmp.file("t.txt").c_str(), 16, 3) == nullptr);
  hl_truth_table_free(table);
  hl_prf_key_free(key);
}

TEST_CASE("reduction entry points return records") {
  double bound = 0.0;
  CHECK(hl_reduce_bound(16, 16, &bound) == HL_OK);
  CHECK(bound == 0.5625);

  const std::string rec = take(hl_reduce_bound_run(16, 16));
  CHECK(rec.find("0.5625") != std::string::npos);

  const std::string tc0 = take(hl_reduce_params_tc0_run(1048576.0, 3.0, 0.5, 1.0));
  CHECK(nlohmann::json::parse(tc0)["metrics"]["all_pass"] == true);

  const std::string ac0 = take(hl_reduce_params_ac0_run(4294967296.0, 5.0, 2.25, 2.0));
  CHECK(nlohmann::json::parse(ac0)["metrics"]["all_pass"] == true);

  double gap = 0.0;
  CHECK(hl_example_state_gap(1.0, 4.0, &gap) == HL_OK);
  CHECK(std::abs(gap - (2.0 - std::sqrt(3.0))) <= 1e-12);

  const std::string dist = take(hl_reduce_prf_dist_run("cheat", "linear", 8, 16, 50, 2, "clopper-pearson"));
  const auto jd = nlohmann::json::parse(dist);
  CHECK(jd["metrics"]["p_planted"] == 1.0);
}

TEST_CASE("config resolution merges file, preset and overrides") {
  TempDir tmp;
  {
    std::ofstream out(tmp.file("cfg.txt"));
    out << "q=2048\n";
  }
  const char* overrides[] = {"sigma=12"};
  char* resolved =
      hl_config_resolve(tmp.file("cfg.txt").c_str(), "desk-pke", overrides, 1);
  REQUIRE(resolved);
  const auto parsed = nlohmann::json::parse(take(resolved));
  CHECK(parsed["values"]["q"] == "2048");     // file beats preset
  CHECK(parsed["values"]["m"] == "300");      // preset fills the gap
  CHECK(parsed["values"]["sigma"] == "12");   // override beats preset
  CHECK(hl_config_resolve(nullptr, "nope", nullptr, 0) == nullptr);
}

}  // TEST_SUITE
