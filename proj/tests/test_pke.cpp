#include <cmath>
#include <sstream>

#include "doctest.h"
#include "hardlearn/pke.hpp"

using namespace hardlearn;

namespace {

PkeParams desk() {
  return PkeParams{32, 1u << 15, 300, GaussianParams::with_default_tail(10.0)};
}

PkeParams tiny(double sigma) {
  return PkeParams{4, 256, 20, GaussianParams::with_default_tail(sigma)};
}

}  // namespace

TEST_SUITE("pke") {

TEST_CASE("keygen: b = A s + e, exactly A s when sigma vanishes") {
  Philox4x32 rng(RngSeed{70, 0});
  const KeyPair kp = pke_keygen(tiny(1e-9), rng);
  for (std::uint32_t i = 0; i < kp.params.m; ++i) {
    std::uint64_t dot = 0;
    for (std::uint32_t j = 0; j < kp.params.d; ++j) {
      dot = add_mod(dot, mul_mod(kp.A[i * kp.params.d + j], kp.s[j], kp.params.q), kp.params.q);
    }
    CHECK(kp.b[i] == dot);
  }
}

TEST_CASE("debug mode records e and the construction identity holds") {
  Philox4x32 rng(RngSeed{71, 0});
  const KeyPair kp = pke_keygen(tiny(10.0), rng, /*record_debug_e=*/true);
  REQUIRE(kp.debug_e.has_value());
  for (std::uint32_t i = 0; i < kp.params.m; ++i) {
    std::uint64_t dot = 0;
    for (std::uint32_t j = 0; j < kp.params.d; ++j) {
      dot = add_mod(dot, mul_mod(kp.A[i * kp.params.d + j], kp.s[j], kp.params.q), kp.params.q);
    }
    const std::int64_t e = centered_lift(sub_mod(kp.b[i], dot, kp.params.q), kp.params.q);
    CHECK(e == (*kp.debug_e)[i]);
  }
}

TEST_CASE("keygen is reproducible from the seed") {
  Philox4x32 r1(RngSeed{72, 0});
  Philox4x32 r2(RngSeed{72, 0});
  const KeyPair a = pke_keygen(desk(), r1);
  const KeyPair b = pke_keygen(desk(), r2);
  CHECK(a.s == b.s);
  CHECK(a.A == b.A);
  CHECK(a.b == b.b);
}

TEST_CASE("encrypting with the empty subset gives (0, bit * floor(q/2))") {
  Philox4x32 rng(RngSeed{73, 0});
  const KeyPair kp = pke_keygen(tiny(10.0), rng);
  const std::vector<std::uint8_t> empty(kp.params.m, 0);
  for (int bit : {0, 1}) {
    const Ciphertext ct = pke_encrypt_with_subset(kp, bit, empty);
    for (std::uint64_t v : ct.a) {
      CHECK(v == 0);
    }
    CHECK(ct.c == static_cast<std::uint64_t>(bit) * (kp.params.q / 2));
  }
}

TEST_CASE("singleton subsets pick out one row") {
  Philox4x32 rng(RngSeed{74, 0});
  const KeyPair kp = pke_keygen(tiny(10.0), rng);
  std::vector<std::uint8_t> subset(kp.params.m, 0);
  subset[7] = 1;
  const Ciphertext ct = pke_encrypt_with_subset(kp, 1, subset);
  for (std::uint32_t j = 0; j < kp.params.d; ++j) {
    CHECK(ct.a[j] == kp.A[7 * kp.params.d + j]);
  }
  CHECK(ct.c == add_mod(kp.b[7], kp.params.q / 2, kp.params.q));
}

TEST_CASE("ciphertexts of 0 and 1 under the same subset differ by floor(q/2)") {
  Philox4x32 rng(RngSeed{75, 0});
  const KeyPair kp = pke_keygen(tiny(10.0), rng);
  Philox4x32 coin_rng(RngSeed{75, 1});
  for (int rep = 0; rep < 20; ++rep) {
    const auto subset = draw_subset(kp.params.m, coin_rng);
    const Ciphertext c0 = pke_encrypt_with_subset(kp, 0, subset);
    const Ciphertext c1 = pke_encrypt_with_subset(kp, 1, subset);
    CHECK(c0.a == c1.a);
    CHECK(sub_mod(c1.c, c0.c, kp.params.q) == kp.params.q / 2);
  }
}

TEST_CASE("noise-free round trip is exact under both rules") {
  PkeParams p = tiny(1e-9);
  Philox4x32 rng(RngSeed{76, 0});
  for (int trial = 0; trial < 1000; ++trial) {
    const KeyPair kp = pke_keygen(p, rng);
    const int bit = rng.coin();
    const Ciphertext ct = pke_encrypt(kp, bit, rng);
    CHECK(pke_decrypt(kp, ct, DecryptRule::NearestCenter) == bit);
    CHECK(pke_decrypt(kp, ct, DecryptRule::Literal) == bit);
  }
}

TEST_CASE("v = q - 1 separates the nearest-center and literal rules") {
  // Construct s = 0 so that v = c directly.
  PkeParams p = tiny(1e-9);
  KeyPair kp;
  kp.params = p;
  kp.s.assign(p.d, 0);
  Ciphertext ct;
  ct.a.assign(p.d, 0);
  ct.c = p.q - 1;  // a zero bit that picked up -1 of noise
  CHECK(pke_decrypt(kp, ct, DecryptRule::NearestCenter) == 0);
  CHECK(pke_decrypt(kp, ct, DecryptRule::Literal) == 1);

  // v = floor(q/2) + 3 decrypts to 1 under both rules.
  ct.c = p.q / 2 + 3;
  CHECK(pke_decrypt(kp, ct, DecryptRule::NearestCenter) == 1);
  CHECK(pke_decrypt(kp, ct, DecryptRule::Literal) == 1);
}

TEST_CASE("dimension mismatch is rejected") {
  Philox4x32 rng(RngSeed{77, 0});
  const KeyPair kp = pke_keygen(tiny(10.0), rng);
  Ciphertext ct;
  ct.a.assign(2, 0);
  CHECK_THROWS_WITH_AS(pke_decrypt(kp, ct), doctest::Contains("dimension"), Error);
}

TEST_CASE("decryption error vanishes with the noise") {
  const auto est = estimate_decryption_error(tiny(1e-9), 500, RngSeed{78, 0});
  CHECK(est.rate_nearest == 0.0);
  CHECK(est.rate_literal == 0.0);
}

TEST_CASE("absurd noise sigma = q/4 pushes the error rate to 1/2") {
  PkeParams p = tiny(64.0);  // q = 256
  const std::uint64_t trials = 4000;
  const auto est = estimate_decryption_error(p, trials, RngSeed{79, 0});
  const double dev = 4.0 * 0.5 / std::sqrt(static_cast<double>(trials));
  CHECK(std::abs(est.rate_nearest - 0.5) <= dev);
}

TEST_CASE("nearest-center error rate is monotone in sigma on a grid") {
  const std::uint64_t trials = 1500;
  double prev = -1.0;
  for (double sigma : {10.0, 200.0, 1000.0, 4000.0}) {
    PkeParams p{32, 1u << 15, 300, GaussianParams::with_default_tail(sigma)};
    const auto est = estimate_decryption_error(p, trials, RngSeed{80, 0});
    CHECK(est.rate_nearest >= prev);
    prev = est.rate_nearest;
  }
}

TEST_CASE("correctness-theorem advisory reports the desk preset tradeoff") {
  const PkeAdvisory adv = check_pke_params(desk());
  CHECK(!adv.satisfied);  // m = 300 < (1+eps)(d+1) log q = 544.5
  CHECK(adv.required_m == doctest::Approx(1.1 * 33 * 15));
  // The desk preset is justified by its direct noise budget instead.
  CHECK(adv.noise_budget <= static_cast<double>(desk().q) / 8.0);
}

TEST_CASE("key and ciphertext files round-trip") {
  Philox4x32 rng(RngSeed{81, 0});
  const KeyPair kp = pke_keygen(tiny(10.0), rng);
  std::istringstream priv(serialize_private_key(kp));
  std::istringstream pub(serialize_public_key(kp));
  const KeyPair back = parse_key_files(priv, pub);
  CHECK(back.s == kp.s);
  CHECK(back.A == kp.A);
  CHECK(back.b == kp.b);

  const Ciphertext ct = pke_encrypt_with_subset(kp, 1, std::vector<std::uint8_t>(20, 1));
  std::istringstream ct_in(serialize_ciphertext(ct));
  const Ciphertext ct_back = parse_ciphertext(ct_in);
  CHECK(ct_back.a == ct.a);
  CHECK(ct_back.c == ct.c);
  CHECK(pke_decrypt(kp, ct_back) == pke_decrypt(kp, ct));
}

}  // TEST_SUITE
