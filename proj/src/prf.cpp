#include "hardlearn/prf.hpp"

#include <bit>
#include <cmath>
#include <istream>
#include <sstream>

namespace hardlearn {

void validate_prf_params(const PrfParams& p) {
  validate_ring_params(p.ring());
  if (!is_power_of_two(p.q) || !is_power_of_two(p.p)) {
    throw Error::domain("PrfParams: p and q must be powers of two");
  }
  if (p.p < 2 || p.p > p.q) {
    throw Error::domain("PrfParams: need 2 <= p <= q");
  }
  if (p.k < 1) {
    throw Error::domain("PrfParams: k must be >= 1");
  }
}

RegimeReport check_prf_regime(const PrfParams& params, const RegimeConstants& c) {
  validate_prf_params(params);
  RegimeReport rep;
  rep.log2_q = std::log2(static_cast<double>(params.q));

  double r = 0.0;
  if (const auto* g = std::get_if<GaussianSecrets>(&params.secret_dist)) {
    rep.gaussian_secrets = true;
    r = g->params.sigma;
  }
  const double log2_d = std::log2(static_cast<double>(params.d));
  rep.k_superlog = static_cast<double>(params.k) >= c.omega_log_const * std::max(1.0, log2_d);

  if (rep.gaussian_secrets && r > 0.0) {
    // log2 of p * k * (r sqrt(d+k) * C * log2 d)^k * d^C_exp
    const double factor =
        r * std::sqrt(static_cast<double>(params.d) + static_cast<double>(params.k)) *
        c.omega_log_const * std::max(1.0, log2_d);
    rep.log2_required_q = std::log2(static_cast<double>(params.p)) +
                          std::log2(static_cast<double>(params.k)) +
                          static_cast<double>(params.k) * std::log2(factor) +
                          c.omega_one_const * log2_d;
    rep.secure_regime = rep.k_superlog && rep.log2_q >= rep.log2_required_q;
  } else {
    rep.log2_required_q = std::numeric_limits<double>::infinity();
    rep.secure_regime = false;
  }
  return rep;
}

PrfKey prf_keygen(const PrfParams& params, Philox4x32& rng) {
  validate_prf_params(params);
  PrfKey key;
  key.params = params;
  const RingParams rp = params.ring();
  key.a = sample_uniform_ring(rp, rng);
  key.s.reserve(params.k);
  if (const auto* g = std::get_if<GaussianSecrets>(&params.secret_dist)) {
    GaussianSampler sampler(g->params);
    for (std::uint32_t i = 0; i < params.k; ++i) {
      key.s.push_back(sample_error_ring(rp, sampler, rng));
    }
  } else {
    for (std::uint32_t i = 0; i < params.k; ++i) {
      key.s.push_back(sample_uniform_ring(rp, rng));
    }
  }
  return key;
}

RingElem prf_eval_ring(const PrfKey& key, std::uint64_t x) {
  if (key.params.k < 64 && (x >> key.params.k) != 0) {
    throw Error::domain("prf_eval_ring: input has more than k=" +
                        std::to_string(key.params.k) + " bits");
  }
  RingElem prod = key.a;
  for (std::uint32_t i = 0; i < key.params.k; ++i) {
    if ((x >> i) & 1u) {
      prod = ring_mul(prod, key.s[i]);
    }
  }
  return round_elem(prod, key.params.p);
}

int prf_eval_bit(const PrfKey& key, std::uint64_t x) {
  return msb_first_coeff(prf_eval_ring(key, x));
}

TruthTable prf_truth_table(const PrfKey& key) {
  if (key.params.k > static_cast<std::uint32_t>(kMaxTableBits)) {
    throw Error::domain("prf_truth_table: k=" + std::to_string(key.params.k) +
                        " exceeds the 2^" + std::to_string(kMaxTableBits) + " table guard");
  }
  const std::uint64_t n = std::uint64_t{1} << key.params.k;
  TruthTable t;
  t.k = static_cast<int>(key.params.k);
  t.bits.resize(n);
  // Depth-first over bit positions with the running product on the stack:
  // one ring multiplication per table entry, O(k*d) memory, and factors
  // multiplied in ascending index order.
  struct Frame {
    std::uint32_t i;
    std::uint64_t x;
    RingElem prod;
  };
  std::vector<Frame> stack;
  stack.push_back(Frame{0, 0, key.a});
  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    if (f.i == key.params.k) {
      t.bits[f.x] = static_cast<std::uint8_t>(msb_first_coeff(round_elem(f.prod, key.params.p)));
      continue;
    }
    stack.push_back(
        Frame{f.i + 1, f.x | (std::uint64_t{1} << f.i), ring_mul(f.prod, key.s[f.i])});
    stack.push_back(Frame{f.i + 1, f.x, std::move(f.prod)});
  }
  return t;
}

BoolFn truth_table_fn(const TruthTable& t) {
  return BoolFn::from_table(t.k, t.bits);
}

RandomFunctionOracle::RandomFunctionOracle(int k, const RngSeed& seed) : k_(k), seed_(seed) {
  if (k < 1) {
    throw Error::domain("random_function_oracle: k must be >= 1");
  }
}

int RandomFunctionOracle::peek(std::uint64_t x) const {
  auto it = memo_.find(x);
  if (it != memo_.end()) {
    return it->second;
  }
  if (memo_.size() >= kMemoGuard) {
    throw Error::domain("random_function_oracle: memo guard of 2^26 entries reached");
  }
  Philox4x32 rng(derive_stream(seed_, x));
  const std::uint8_t bit = static_cast<std::uint8_t>(rng.next_u32() & 1u);
  memo_.emplace(x, bit);
  return bit;
}

int RandomFunctionOracle::query(std::uint64_t x) {
  ++counter_;
  return peek(x);
}

std::string serialize_truth_table(const TruthTable& t) {
  const std::size_t n = t.bits.size();
  const std::size_t digits = (n + 3) / 4;
  std::string hex(digits, '0');
  for (std::size_t i = 0; i < n; ++i) {
    if (t.bits[i] & 1) {
      // Bit i of the big number, most significant hex digit first.
      const std::size_t digit = digits - 1 - i / 4;
      const int shift = static_cast<int>(i % 4);
      const int cur = hex[digit] <= '9' ? hex[digit] - '0' : hex[digit] - 'a' + 10;
      const int now = cur | (1 << shift);
      hex[digit] = static_cast<char>(now < 10 ? '0' + now : 'a' + now - 10);
    }
  }
  std::ostringstream out;
  out << "k=" << t.k << "\n" << hex << "\n";
  return out.str();
}

TruthTable parse_truth_table(std::istream& in) {
  std::string header, hex;
  if (!std::getline(in, header) || !std::getline(in, hex)) {
    throw Error::io("parse_truth_table: truncated file");
  }
  TruthTable t;
  if (std::sscanf(header.c_str(), "k=%d", &t.k) != 1 || t.k < 1 || t.k > kMaxTableBits) {
    throw Error::io("parse_truth_table: malformed header '" + header + "'");
  }
  const std::size_t n = std::size_t{1} << t.k;
  const std::size_t digits = (n + 3) / 4;
  if (hex.size() != digits) {
    throw Error::io("parse_truth_table: expected " + std::to_string(digits) + " hex digits");
  }
  t.bits.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const char c = hex[digits - 1 - i / 4];
    int v;
    if (c >= '0' && c <= '9') {
      v = c - '0';
    } else if (c >= 'a' && c <= 'f') {
      v = c - 'a' + 10;
    } else if (c >= 'A' && c <= 'F') {
      v = c - 'A' + 10;
    } else {
      throw Error::io("parse_truth_table: bad hex digit");
    }
    t.bits[i] = static_cast<std::uint8_t>((v >> (i % 4)) & 1);
  }
  return t;
}

std::string serialize_prf_key(const PrfKey& key) {
  std::ostringstream out;
  out << "d=" << key.params.d << " q=" << key.params.q << " p=" << key.params.p
      << " k=" << key.params.k << "\n";
  auto line = [&out](const RingElem& e) {
    for (std::size_t i = 0; i < e.coeffs.size(); ++i) {
      if (i) out << ",";
      out << e.coeffs[i];
    }
    out << "\n";
  };
  line(key.a);
  for (const auto& s : key.s) {
    line(s);
  }
  return out.str();
}

PrfKey parse_prf_key(std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) {
    throw Error::io("parse_prf_key: missing header");
  }
  PrfParams params;
  if (std::sscanf(header.c_str(), "d=%u q=%lu p=%lu k=%u", &params.d, &params.q, &params.p,
                  &params.k) != 4) {
    throw Error::io("parse_prf_key: malformed header '" + header + "'");
  }
  // Secret distribution is not encoded in the file; keys evaluate the same
  // either way.
  params.secret_dist = UniformSecrets{};
  validate_prf_params(params);
  auto read_elem = [&in, &params]() {
    std::string line;
    if (!std::getline(in, line)) {
      throw Error::io("parse_prf_key: truncated key file");
    }
    std::vector<std::uint64_t> coeffs;
    std::stringstream ss(line);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      coeffs.push_back(std::stoull(tok));
    }
    return make_ring_elem(params.ring(), std::move(coeffs));
  };
  PrfKey key;
  key.params = params;
  key.a = read_elem();
  for (std::uint32_t i = 0; i < params.k; ++i) {
    key.s.push_back(read_elem());
  }
  return key;
}

}  // namespace hardlearn
