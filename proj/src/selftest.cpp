#include "hardlearn/selftest.hpp"

#include <bit>
#include <cmath>

#include "hardlearn/fourier.hpp"
#include "hardlearn/ring.hpp"

namespace hardlearn {

namespace {

void check(std::vector<std::string>& failures, bool ok, const std::string& what) {
  if (!ok) {
    failures.push_back(what);
  }
}

}  // namespace

std::vector<std::string> run_selftest() {
  std::vector<std::string> failures;

  // Ring identities at d=8, q=1024.
  const RingParams rp{8, 1024};
  Philox4x32 rng(RngSeed{0xfeed, 0});
  for (int i = 0; i < 20; ++i) {
    const RingElem a = sample_uniform_ring(rp, rng);
    const RingElem b = sample_uniform_ring(rp, rng);
    const RingElem c = sample_uniform_ring(rp, rng);
    check(failures, ring_add(a, ring_zero(rp)).coeffs == a.coeffs, "additive identity");
    check(failures, ring_mul(a, ring_one(rp)).coeffs == a.coeffs, "multiplicative identity");
    check(failures, ring_mul(a, b).coeffs == ring_mul(b, a).coeffs, "commutativity");
    check(failures,
          ring_mul(ring_mul(a, b), c).coeffs == ring_mul(a, ring_mul(b, c)).coeffs,
          "associativity");
    check(failures,
          ring_mul(a, ring_add(b, c)).coeffs ==
              ring_add(ring_mul(a, b), ring_mul(a, c)).coeffs,
          "distributivity");
    check(failures,
          ring_mul_karatsuba(a, b).coeffs == ring_mul_schoolbook(a, b).coeffs,
          "karatsuba equals schoolbook");
  }

  // X^{d-1} * X = -1 mod X^d + 1.
  {
    RingElem x_power = ring_zero(rp);
    x_power.coeffs[rp.d - 1] = 1;
    RingElem x = ring_zero(rp);
    x.coeffs[1] = 1;
    const RingElem prod = ring_mul(x_power, x);
    bool ok = prod.coeffs[0] == rp.q - 1;
    for (std::uint32_t i = 1; i < rp.d; ++i) {
      ok = ok && prod.coeffs[i] == 0;
    }
    check(failures, ok, "negacyclic wraparound X^(d-1) * X = -1");
  }

  // Rounding: identity at p=q and formula agreement at q=1024, p=16.
  {
    const RingParams qp{1, 1024};
    for (std::uint64_t v = 0; v < 1024; v += 17) {
      RingElem e = ring_zero(qp);
      e.coeffs[0] = v;
      check(failures, round_elem(e, 1024).coeffs[0] == v, "rounding identity at p=q");
      const std::uint64_t expect = ((16 * v + 512) / 1024) % 16;
      check(failures, round_elem(e, 16).coeffs[0] == expect, "rounding formula");
    }
  }

  // Fourier: Parseval and the double-WHT scaling on a few random tables.
  for (int rep = 0; rep < 5; ++rep) {
    const int k = 8;
    std::vector<std::uint8_t> table(1u << k);
    for (auto& b : table) {
      b = static_cast<std::uint8_t>(rng.coin());
    }
    const BoolFn f = BoolFn::from_table(k, table);
    const SignSpectrum spec = wht_spectrum(f);
    check(failures, std::abs(spec.parseval_sum() - 1.0) <= 1e-9, "Parseval");

    std::vector<std::int64_t> v(table.size());
    for (std::size_t i = 0; i < table.size(); ++i) {
      v[i] = sign_of_bit(table[i]);
    }
    std::vector<std::int64_t> orig = v;
    wht_int_inplace(v);
    wht_int_inplace(v);
    bool ok = true;
    for (std::size_t i = 0; i < v.size(); ++i) {
      ok = ok && v[i] == orig[i] * (1 << k);
    }
    check(failures, ok, "unscaled double WHT is 2^k * identity");
  }

  // Linear target: point-mass spectrum.
  {
    const int k = 10;
    const std::uint64_t s = 0x2b5;
    const BoolFn f =
        BoolFn::from_fn(k, [s](std::uint64_t x) { return std::popcount(s & x) & 1; });
    const SignSpectrum spec = wht_spectrum(f);
    bool ok = std::abs(std::abs(spec.coef[s]) - 1.0) < 1e-12;
    for (std::size_t i = 0; i < spec.coef.size(); ++i) {
      if (i != s) {
        ok = ok && spec.coef[i] == 0.0;
      }
    }
    check(failures, ok, "linear target has point-mass spectrum");
  }

  return failures;
}

}  // namespace hardlearn
