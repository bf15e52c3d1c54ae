#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "hardlearn/error.hpp"
#include "hardlearn/sampling.hpp"

namespace hardlearn {

// Largest supported modulus bit-length for the uint64 fast path. Everything
// the tool ships uses log q <= 20; the test-side big-integer oracle covers
// arbitrary precision independently.
constexpr int kMaxModulusBits = 62;

// Parameters of R_q = Z_q[X]/<X^d + 1>, d a power of two.
struct RingParams {
  std::uint32_t d = 1;
  std::uint64_t q = 2;

  bool operator==(const RingParams&) const = default;
};

bool is_power_of_two(std::uint64_t v);
void validate_ring_params(const RingParams& p);

// Residue polynomial: exactly d coefficients, each in [0, q).
struct RingElem {
  RingParams params;
  std::vector<std::uint64_t> coeffs;
};

RingElem ring_zero(const RingParams& p);
RingElem ring_one(const RingParams& p);
RingElem make_ring_elem(const RingParams& p, std::vector<std::uint64_t> coeffs);

RingElem ring_add(const RingElem& a, const RingElem& b);
RingElem ring_sub(const RingElem& a, const RingElem& b);
RingElem ring_neg(const RingElem& a);

// Negacyclic product. Dispatches to Karatsuba above a size threshold; both
// paths reduce mod q at every step and are bit-identical.
RingElem ring_mul(const RingElem& a, const RingElem& b);
RingElem ring_mul_schoolbook(const RingElem& a, const RingElem& b);
RingElem ring_mul_karatsuba(const RingElem& a, const RingElem& b);

// Coefficient-wise rounding R_q -> R_p for powers of two 2 <= p <= q:
// floor((p*x + q/2) / q) mod p (round half up, wrap to 0 at the top).
RingElem round_elem(const RingElem& x, std::uint64_t p);

// 1 iff coefficient 0 of x is >= p/2 on the [0, p) representative.
int msb_first_coeff(const RingElem& x);

RingElem sample_uniform_ring(const RingParams& p, Philox4x32& rng);

// Coefficient-wise discrete Gaussian error, reduced into [0, q):
// negative draws lift to q - |e|.
RingElem sample_error_ring(const RingParams& p, const GaussianSampler& g, Philox4x32& rng);

// Centered lift of a residue to (-q/2, q/2].
std::int64_t centered_lift(std::uint64_t v, std::uint64_t q);

// Text form: header line "d=<d> q=<q>", then one line of comma-separated
// decimal coefficients.
std::string serialize_ring_elem(const RingElem& x);
RingElem parse_ring_elem(std::istream& in);

std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t q);
std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t q);
std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t q);

}  // namespace hardlearn
