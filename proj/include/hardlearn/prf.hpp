#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "hardlearn/fourier.hpp"
#include "hardlearn/ring.hpp"
#include "hardlearn/sampling.hpp"

namespace hardlearn {

struct UniformSecrets {};
struct GaussianSecrets {
  GaussianParams params;
};
using SecretDist = std::variant<UniformSecrets, GaussianSecrets>;

struct PrfParams {
  std::uint32_t d = 8;
  std::uint64_t q = 1u << 20;
  std::uint64_t p = 4;
  std::uint32_t k = 16;
  SecretDist secret_dist = GaussianSecrets{GaussianParams::with_default_tail(3.0)};

  RingParams ring() const { return RingParams{d, q}; }
};

void validate_prf_params(const PrfParams& p);

// Advisory check of the secure-parameter regime
// q >= p * k * (r sqrt(d+k) * C_log * log2 d)^k * d^C_exp, with the hidden
// asymptotic constants made explicit and configurable. Desk presets are
// expected to fail this; that is the point of the report.
struct RegimeConstants {
  double omega_log_const = 1.0;  // stands in for omega(log d)
  double omega_one_const = 1.0;  // exponent standing in for d^{omega(1)}
};

struct RegimeReport {
  double log2_q = 0.0;
  double log2_required_q = 0.0;
  bool k_superlog = false;       // k >= omega_log_const * log2 d
  bool gaussian_secrets = false; // the lemma needs secrets from the error dist
  bool secure_regime = false;
};

RegimeReport check_prf_regime(const PrfParams& params, const RegimeConstants& c = {});

struct PrfKey {
  PrfParams params;
  RingElem a;
  std::vector<RingElem> s;
};

PrfKey prf_keygen(const PrfParams& params, Philox4x32& rng);

// f(x) = round_p(a * prod_{i: x_i = 1} s_i); the empty product leaves a
// unchanged. Bit i-1 of x encodes x_i.
RingElem prf_eval_ring(const PrfKey& key, std::uint64_t x);
int prf_eval_bit(const PrfKey& key, std::uint64_t x);

struct TruthTable {
  int k = 0;
  std::vector<std::uint8_t> bits;  // index = input read as an integer
};

// Materializes the full table (k <= 24). Subset products are built
// incrementally, one ring multiplication per entry.
TruthTable prf_truth_table(const PrfKey& key);

BoolFn truth_table_fn(const TruthTable& t);

// Lazily memoized uniformly random Boolean function. Answers are a pure
// hash of (seed, x), so repeat queries agree and query order is irrelevant.
class RandomFunctionOracle {
public:
  RandomFunctionOracle(int k, const RngSeed& seed);

  int query(std::uint64_t x);
  std::uint64_t counter() const { return counter_; }
  int k() const { return k_; }

  // Query function without counter side effects, for harness challenges.
  int peek(std::uint64_t x) const;

private:
  static constexpr std::size_t kMemoGuard = std::size_t{1} << 26;

  int k_ = 0;
  RngSeed seed_;
  std::uint64_t counter_ = 0;
  mutable std::unordered_map<std::uint64_t, std::uint8_t> memo_;
};

// File formats: truth table is "k=<k>" then one hex line, most significant
// digit first; key file is a params header then one CSV line per element
// (a first, then s_1..s_k).
std::string serialize_truth_table(const TruthTable& t);
TruthTable parse_truth_table(std::istream& in);
std::string serialize_prf_key(const PrfKey& key);
PrfKey parse_prf_key(std::istream& in);

}  // namespace hardlearn
