#include "hardlearn/ring.hpp"

#include <bit>
#include <istream>
#include <sstream>

namespace hardlearn {

namespace {

constexpr std::size_t kKaratsubaThreshold = 32;

void check_same_params(const RingElem& a, const RingElem& b, const char* op) {
  if (!(a.params == b.params)) {
    throw Error::domain(std::string(op) + ": ring parameter mismatch (d=" +
                        std::to_string(a.params.d) + ",q=" + std::to_string(a.params.q) +
                        " vs d=" + std::to_string(b.params.d) + ",q=" + std::to_string(b.params.q) + ")");
  }
}

// Linear (non-reduced) product of two length-n coefficient blocks into
// out[0..2n-2], all arithmetic mod q.
void linear_mul_schoolbook(const std::uint64_t* a, const std::uint64_t* b, std::size_t n,
                           std::uint64_t q, std::uint64_t* out) {
  for (std::size_t k = 0; k < 2 * n - 1; ++k) {
    out[k] = 0;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      out[i + j] = add_mod(out[i + j], mul_mod(a[i], b[j], q), q);
    }
  }
}

void linear_mul_karatsuba(const std::uint64_t* a, const std::uint64_t* b, std::size_t n,
                          std::uint64_t q, std::uint64_t* out) {
  if (n <= kKaratsubaThreshold) {
    linear_mul_schoolbook(a, b, n, q, out);
    return;
  }
  const std::size_t h = n / 2;  // n is a power of two here
  std::vector<std::uint64_t> lo(2 * h - 1), hi(2 * h - 1), mid(2 * h - 1);
  std::vector<std::uint64_t> asum(h), bsum(h);
  for (std::size_t i = 0; i < h; ++i) {
    asum[i] = add_mod(a[i], a[i + h], q);
    bsum[i] = add_mod(b[i], b[i + h], q);
  }
  linear_mul_karatsuba(a, b, h, q, lo.data());
  linear_mul_karatsuba(a + h, b + h, h, q, hi.data());
  linear_mul_karatsuba(asum.data(), bsum.data(), h, q, mid.data());

  for (std::size_t k = 0; k < 2 * n - 1; ++k) {
    out[k] = 0;
  }
  for (std::size_t k = 0; k < 2 * h - 1; ++k) {
    const std::uint64_t cross = sub_mod(sub_mod(mid[k], lo[k], q), hi[k], q);
    out[k] = add_mod(out[k], lo[k], q);
    out[k + h] = add_mod(out[k + h], cross, q);
    out[k + 2 * h] = add_mod(out[k + 2 * h], hi[k], q);
  }
}

RingElem fold_negacyclic(const RingParams& p, const std::vector<std::uint64_t>& linear) {
  RingElem r = ring_zero(p);
  const std::size_t d = p.d;
  for (std::size_t k = 0; k < d; ++k) {
    std::uint64_t v = linear[k];
    if (k + d < linear.size()) {
      v = sub_mod(v, linear[k + d], p.q);
    }
    r.coeffs[k] = v;
  }
  return r;
}

}  // namespace

std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t q) {
  std::uint64_t s = a + b;  // no overflow: a, b < q <= 2^62
  return s >= q ? s - q : s;
}

std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t q) {
  return a >= b ? a - b : a + q - b;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t q) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % q);
}

bool is_power_of_two(std::uint64_t v) {
  return v != 0 && (v & (v - 1)) == 0;
}

void validate_ring_params(const RingParams& p) {
  if (!is_power_of_two(p.d)) {
    throw Error::domain("RingParams: d=" + std::to_string(p.d) + " is not a power of two");
  }
  if (p.q < 2) {
    throw Error::domain("RingParams: q must be >= 2");
  }
  if (std::bit_width(p.q) > kMaxModulusBits) {
    throw Error::domain("RingParams: q exceeds the " + std::to_string(kMaxModulusBits) +
                        "-bit fast-path limit");
  }
}

RingElem ring_zero(const RingParams& p) {
  validate_ring_params(p);
  return RingElem{p, std::vector<std::uint64_t>(p.d, 0)};
}

RingElem ring_one(const RingParams& p) {
  RingElem r = ring_zero(p);
  r.coeffs[0] = 1 % p.q;
  return r;
}

RingElem make_ring_elem(const RingParams& p, std::vector<std::uint64_t> coeffs) {
  validate_ring_params(p);
  if (coeffs.size() != p.d) {
    throw Error::domain("RingElem: expected " + std::to_string(p.d) + " coefficients, got " +
                        std::to_string(coeffs.size()));
  }
  for (std::uint64_t c : coeffs) {
    if (c >= p.q) {
      throw Error::domain("RingElem: coefficient " + std::to_string(c) + " outside [0, q)");
    }
  }
  return RingElem{p, std::move(coeffs)};
}

RingElem ring_add(const RingElem& a, const RingElem& b) {
  check_same_params(a, b, "ring_add");
  RingElem r = a;
  for (std::size_t i = 0; i < r.coeffs.size(); ++i) {
    r.coeffs[i] = add_mod(a.coeffs[i], b.coeffs[i], a.params.q);
  }
  return r;
}

RingElem ring_sub(const RingElem& a, const RingElem& b) {
  check_same_params(a, b, "ring_sub");
  RingElem r = a;
  for (std::size_t i = 0; i < r.coeffs.size(); ++i) {
    r.coeffs[i] = sub_mod(a.coeffs[i], b.coeffs[i], a.params.q);
  }
  return r;
}

RingElem ring_neg(const RingElem& a) {
  RingElem r = a;
  for (auto& c : r.coeffs) {
    c = c == 0 ? 0 : a.params.q - c;
  }
  return r;
}

RingElem ring_mul_schoolbook(const RingElem& a, const RingElem& b) {
  check_same_params(a, b, "ring_mul");
  const std::size_t d = a.params.d;
  const std::uint64_t q = a.params.q;
  RingElem r = ring_zero(a.params);
  for (std::size_t i = 0; i < d; ++i) {
    if (a.coeffs[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      const std::uint64_t prod = mul_mod(a.coeffs[i], b.coeffs[j], q);
      const std::size_t k = i + j;
      if (k < d) {
        r.coeffs[k] = add_mod(r.coeffs[k], prod, q);
      } else {
        r.coeffs[k - d] = sub_mod(r.coeffs[k - d], prod, q);
      }
    }
  }
  return r;
}

RingElem ring_mul_karatsuba(const RingElem& a, const RingElem& b) {
  check_same_params(a, b, "ring_mul");
  const std::size_t d = a.params.d;
  if (d == 1) {
    RingElem r = ring_zero(a.params);
    r.coeffs[0] = mul_mod(a.coeffs[0], b.coeffs[0], a.params.q);
    return r;
  }
  std::vector<std::uint64_t> linear(2 * d - 1, 0);
  linear_mul_karatsuba(a.coeffs.data(), b.coeffs.data(), d, a.params.q, linear.data());
  return fold_negacyclic(a.params, linear);
}

RingElem ring_mul(const RingElem& a, const RingElem& b) {
  if (a.params.d > kKaratsubaThreshold) {
    return ring_mul_karatsuba(a, b);
  }
  return ring_mul_schoolbook(a, b);
}

RingElem round_elem(const RingElem& x, std::uint64_t p) {
  const std::uint64_t q = x.params.q;
  if (!is_power_of_two(q)) {
    throw Error::domain("round_elem: q=" + std::to_string(q) + " must be a power of two");
  }
  if (!is_power_of_two(p)) {
    throw Error::domain("round_elem: p=" + std::to_string(p) + " must be a power of two");
  }
  if (p < 2 || p > q) {
    throw Error::domain("round_elem: need 2 <= p <= q (p=" + std::to_string(p) +
                        ", q=" + std::to_string(q) + ")");
  }
  RingParams tp{x.params.d, p};
  RingElem r = ring_zero(tp);
  for (std::size_t i = 0; i < x.coeffs.size(); ++i) {
    const unsigned __int128 num = static_cast<unsigned __int128>(p) * x.coeffs[i] + q / 2;
    r.coeffs[i] = static_cast<std::uint64_t>((num / q) % p);
  }
  return r;
}

int msb_first_coeff(const RingElem& x) {
  const std::uint64_t p = x.params.q;
  if (!is_power_of_two(p)) {
    throw Error::domain("msb_first_coeff: modulus must be a power of two");
  }
  return x.coeffs[0] >= p / 2 ? 1 : 0;
}

RingElem sample_uniform_ring(const RingParams& p, Philox4x32& rng) {
  RingElem r = ring_zero(p);
  for (auto& c : r.coeffs) {
    c = rng.uniform_below(p.q);
  }
  return r;
}

RingElem sample_error_ring(const RingParams& p, const GaussianSampler& g, Philox4x32& rng) {
  RingElem r = ring_zero(p);
  for (auto& c : r.coeffs) {
    const std::int64_t e = g.sample(rng);
    if (e >= 0) {
      c = static_cast<std::uint64_t>(e) % p.q;
    } else {
      const std::uint64_t m = static_cast<std::uint64_t>(-e) % p.q;
      c = m == 0 ? 0 : p.q - m;
    }
  }
  return r;
}

std::int64_t centered_lift(std::uint64_t v, std::uint64_t q) {
  if (v > q / 2) {
    return static_cast<std::int64_t>(v) - static_cast<std::int64_t>(q);
  }
  return static_cast<std::int64_t>(v);
}

std::string serialize_ring_elem(const RingElem& x) {
  std::ostringstream out;
  out << "d=" << x.params.d << " q=" << x.params.q << "\n";
  for (std::size_t i = 0; i < x.coeffs.size(); ++i) {
    if (i) out << ",";
    out << x.coeffs[i];
  }
  out << "\n";
  return out.str();
}

RingElem parse_ring_elem(std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) {
    throw Error::io("parse_ring_elem: missing header line");
  }
  RingParams p;
  if (std::sscanf(header.c_str(), "d=%u q=%lu", &p.d, &p.q) != 2) {
    throw Error::io("parse_ring_elem: malformed header '" + header + "'");
  }
  std::string line;
  if (!std::getline(in, line)) {
    throw Error::io("parse_ring_elem: missing coefficient line");
  }
  std::vector<std::uint64_t> coeffs;
  std::stringstream ss(line);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    coeffs.push_back(std::stoull(tok));
  }
  return make_ring_elem(p, std::move(coeffs));
}

}  // namespace hardlearn
