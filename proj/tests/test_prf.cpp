#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "doctest.h"
#include "hardlearn/prf.hpp"
#include "oracle_helpers.hpp"

using namespace hardlearn;

namespace {

PrfParams small_params() {
  PrfParams p;
  p.d = 4;
  p.q = 64;
  p.p = 8;
  p.k = 3;
  p.secret_dist = UniformSecrets{};
  return p;
}

// Independent recomputation: big-integer product of the selected secrets in
// ascending order, then the rounding formula.
int eval_bit_oracle(const PrfKey& key, std::uint64_t x) {
  std::vector<std::uint64_t> prod = key.a.coeffs;
  for (std::uint32_t i = 0; i < key.params.k; ++i) {
    if ((x >> i) & 1u) {
      prod = oracle::negacyclic_mul_gmp(prod, key.s[i].coeffs, key.params.q);
    }
  }
  const std::uint64_t rounded =
      ((static_cast<unsigned __int128>(key.params.p) * prod[0] + key.params.q / 2) /
       key.params.q) %
      key.params.p;
  return rounded >= key.params.p / 2 ? 1 : 0;
}

}  // namespace

TEST_SUITE("prf") {

TEST_CASE("keygen is deterministic and distinct across streams") {
  const PrfParams params = small_params();
  Philox4x32 r1(RngSeed{50, 0});
  Philox4x32 r2(RngSeed{50, 0});
  const PrfKey k1 = prf_keygen(params, r1);
  const PrfKey k2 = prf_keygen(params, r2);
  CHECK(k1.a.coeffs == k2.a.coeffs);
  for (std::uint32_t i = 0; i < params.k; ++i) {
    CHECK(k1.s[i].coeffs == k2.s[i].coeffs);
  }

  std::set<std::vector<std::uint64_t>> seen;
  for (std::uint64_t stream = 0; stream < 20; ++stream) {
    Philox4x32 rng(RngSeed{50, stream});
    seen.insert(prf_keygen(params, rng).a.coeffs);
  }
  CHECK(seen.size() == 20);
}

TEST_CASE("gaussian secrets have B-bounded centered lifts") {
  PrfParams params;
  params.d = 8;
  params.q = 1u << 20;
  params.p = 4;
  params.k = 8;
  const GaussianParams g = GaussianParams::with_default_tail(3.0);
  params.secret_dist = GaussianSecrets{g};
  Philox4x32 rng(RngSeed{51, 0});
  const PrfKey key = prf_keygen(params, rng);
  for (const auto& s : key.s) {
    for (std::uint64_t c : s.coeffs) {
      CHECK(std::abs(centered_lift(c, params.q)) <= g.tail_bound);
    }
  }
}

TEST_CASE("empty product leaves a unchanged; single factor multiplies once") {
  const PrfParams params = small_params();
  Philox4x32 rng(RngSeed{52, 0});
  const PrfKey key = prf_keygen(params, rng);
  CHECK(prf_eval_ring(key, 0).coeffs == round_elem(key.a, params.p).coeffs);
  CHECK(prf_eval_ring(key, 1).coeffs ==
        round_elem(ring_mul(key.a, key.s[0]), params.p).coeffs);
}

TEST_CASE("evaluation matches the independent big-integer recomputation") {
  const PrfParams params = small_params();
  Philox4x32 rng(RngSeed{53, 0});
  const PrfKey key = prf_keygen(params, rng);
  for (std::uint64_t x = 0; x < 8; ++x) {
    CHECK(prf_eval_bit(key, x) == eval_bit_oracle(key, x));
  }
}

TEST_CASE("one-bit output is msb of rounded first coefficient, pointwise at k=8") {
  PrfParams params;
  params.d = 4;
  params.q = 1u << 12;
  params.p = 4;
  params.k = 8;
  params.secret_dist = GaussianSecrets{GaussianParams::with_default_tail(3.0)};
  Philox4x32 rng(RngSeed{54, 0});
  const PrfKey key = prf_keygen(params, rng);
  const TruthTable t = prf_truth_table(key);
  CHECK(t.bits.size() == 256);
  for (std::uint64_t x = 0; x < 256; ++x) {
    CHECK(static_cast<int>(t.bits[x]) == prf_eval_bit(key, x));
    CHECK(prf_eval_bit(key, x) == msb_first_coeff(prf_eval_ring(key, x)));
    CHECK(static_cast<int>(t.bits[x]) == eval_bit_oracle(key, x));
  }
}

TEST_CASE("product order does not change the evaluation") {
  const PrfParams params = small_params();
  Philox4x32 rng(RngSeed{55, 0});
  const PrfKey key = prf_keygen(params, rng);
  // Multiply the selected secrets in descending order instead.
  for (std::uint64_t x = 0; x < 8; ++x) {
    RingElem prod = key.a;
    for (int i = static_cast<int>(params.k) - 1; i >= 0; --i) {
      if ((x >> i) & 1u) {
        prod = ring_mul(prod, key.s[static_cast<std::size_t>(i)]);
      }
    }
    CHECK(round_elem(prod, params.p).coeffs == prf_eval_ring(key, x).coeffs);
  }
}

TEST_CASE("input length is enforced") {
  const PrfParams params = small_params();
  Philox4x32 rng(RngSeed{56, 0});
  const PrfKey key = prf_keygen(params, rng);
  CHECK_THROWS_WITH_AS(prf_eval_ring(key, 1u << 3), doctest::Contains("bits"), Error);
}

TEST_CASE("truth table guard refuses oversized k") {
  PrfParams params = small_params();
  params.k = 25;
  Philox4x32 rng(RngSeed{57, 0});
  const PrfKey key = prf_keygen(params, rng);
  CHECK_THROWS_WITH_AS(prf_truth_table(key), doctest::Contains("guard"), Error);
}

TEST_CASE("truth-table hex serialization round-trips and uses msb-first digits") {
  TruthTable t;
  t.k = 2;
  t.bits = {1, 0, 0, 1};  // value 0b1001 = 0x9
  const std::string text = serialize_truth_table(t);
  CHECK(text == "k=2\n9\n");
  std::istringstream in(text);
  const TruthTable back = parse_truth_table(in);
  CHECK(back.k == t.k);
  CHECK(back.bits == t.bits);

  TruthTable t3;
  t3.k = 3;
  t3.bits = {1, 1, 1, 1, 0, 0, 0, 1};  // 0b10001111 = 0x8f
  const std::string text3 = serialize_truth_table(t3);
  CHECK(text3 == "k=3\n8f\n");
  std::istringstream in3(text3);
  CHECK(parse_truth_table(in3).bits == t3.bits);
}

TEST_CASE("key files round-trip through the documented format") {
  const PrfParams params = small_params();
  Philox4x32 rng(RngSeed{58, 0});
  const PrfKey key = prf_keygen(params, rng);
  std::istringstream in(serialize_prf_key(key));
  const PrfKey back = parse_prf_key(in);
  CHECK(back.a.coeffs == key.a.coeffs);
  REQUIRE(back.s.size() == key.s.size());
  for (std::size_t i = 0; i < key.s.size(); ++i) {
    CHECK(back.s[i].coeffs == key.s[i].coeffs);
  }
  for (std::uint64_t x = 0; x < 8; ++x) {
    CHECK(prf_eval_bit(back, x) == prf_eval_bit(key, x));
  }
}

TEST_CASE("random function oracle: memoized, counted, reproducible, balanced") {
  RandomFunctionOracle f(16, RngSeed{59, 0});
  const int first = f.query(12345);
  const int second = f.query(12345);
  CHECK(first == second);
  CHECK(f.counter() == 2);

  // Fixed seed reproduces answers; query order is irrelevant.
  RandomFunctionOracle g1(16, RngSeed{59, 1});
  RandomFunctionOracle g2(16, RngSeed{59, 1});
  const int a1 = g1.query(7), b1 = g1.query(1234);
  const int b2 = g2.query(1234), a2 = g2.query(7);
  CHECK(a1 == a2);
  CHECK(b1 == b2);

  RandomFunctionOracle h(20, RngSeed{59, 2});
  std::uint64_t ones = 0;
  const std::uint64_t n = 10000;
  for (std::uint64_t i = 0; i < n; ++i) {
    ones += static_cast<std::uint64_t>(h.query(i));
  }
  const double dev = 4.0 * 0.5 * std::sqrt(static_cast<double>(n));
  CHECK(std::abs(static_cast<double>(ones) - n / 2.0) <= dev);
}

TEST_CASE("regime validator separates desk configs from a toy secure one") {
  // Desk preset: far below the required modulus.
  PrfParams desk;
  desk.d = 8;
  desk.q = 1u << 20;
  desk.p = 4;
  desk.k = 16;
  desk.secret_dist = GaussianSecrets{GaussianParams::with_default_tail(3.0)};
  const RegimeReport r1 = check_prf_regime(desk);
  CHECK(r1.gaussian_secrets);
  CHECK(!r1.secure_regime);
  CHECK(r1.log2_required_q > r1.log2_q);

  // Tiny artificial config that does satisfy the inequality.
  PrfParams toy;
  toy.d = 2;
  toy.q = 1u << 10;
  toy.p = 2;
  toy.k = 2;
  toy.secret_dist = GaussianSecrets{GaussianParams{0.5, 3}};
  const RegimeReport r2 = check_prf_regime(toy);
  CHECK(r2.secure_regime);

  // Uniform secrets: the lemma's hypothesis is not met.
  PrfParams uni = desk;
  uni.secret_dist = UniformSecrets{};
  const RegimeReport r3 = check_prf_regime(uni);
  CHECK(!r3.gaussian_secrets);
  CHECK(!r3.secure_regime);
}

TEST_CASE("truth-table monobit balance at a reduced desk preset") {
  PrfParams params;
  params.d = 8;
  params.q = 1u << 20;
  params.p = 4;
  params.k = 12;
  params.secret_dist = GaussianSecrets{GaussianParams::with_default_tail(3.0)};
  for (std::uint64_t stream = 0; stream < 5; ++stream) {
    Philox4x32 rng(RngSeed{60, stream});
    const PrfKey key = prf_keygen(params, rng);
    const TruthTable t = prf_truth_table(key);
    std::uint64_t ones = 0;
    for (std::uint8_t b : t.bits) {
      ones += b;
    }
    const double n = static_cast<double>(t.bits.size());
    const double dev = 5.0 * 0.5 * std::sqrt(n);
    CHECK(std::abs(static_cast<double>(ones) - n / 2.0) <= dev);
  }
}

}  // TEST_SUITE
