#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hardlearn/lattice.hpp"
#include "hardlearn/sampling.hpp"

namespace hardlearn {

struct PkeParams {
  std::uint32_t d = 32;
  std::uint64_t q = 1u << 15;
  std::uint32_t m = 300;
  GaussianParams chi = GaussianParams::with_default_tail(10.0);
};

void validate_pke_params(const PkeParams& p);

// Correctness-theorem requirement m >= (1+eps)(d+1) log2 q. The desk preset
// deliberately trades it for a direct noise-budget bound, so this is a
// report, not a gate.
struct PkeAdvisory {
  double required_m = 0.0;
  bool satisfied = false;
  double noise_budget = 0.0;  // sigma * sqrt(m/2)
  double quarter_q = 0.0;
};

PkeAdvisory check_pke_params(const PkeParams& p, double eps = 0.1);

struct KeyPair {
  PkeParams params;
  std::vector<std::uint64_t> s;  // private
  std::vector<std::uint64_t> A;  // public, m x d row-major
  std::vector<std::uint64_t> b;  // public, length m
  std::optional<std::vector<std::int64_t>> debug_e;  // recorded when requested
};

struct Ciphertext {
  std::vector<std::uint64_t> a;
  std::uint64_t c = 0;
};

enum class DecryptRule {
  NearestCenter,  // 0 iff v in [0, floor(q/4)] u [q - floor(q/4), q)
  Literal,        // the one-sided threshold: 0 iff v <= floor(q/4)
};

KeyPair pke_keygen(const PkeParams& params, Philox4x32& rng, bool record_debug_e = false);

// The encryption randomness is the subset S of [m], drawn by m fair coins.
std::vector<std::uint8_t> draw_subset(std::uint32_t m, Philox4x32& rng);
Ciphertext pke_encrypt_with_subset(const KeyPair& pub, int bit,
                                   const std::vector<std::uint8_t>& subset);
Ciphertext pke_encrypt(const KeyPair& pub, int bit, Philox4x32& rng);

int pke_decrypt(const KeyPair& priv, const Ciphertext& ct,
                DecryptRule rule = DecryptRule::NearestCenter);

struct DecryptionErrorEstimate {
  double rate_nearest = 0.0;
  double rate_literal = 0.0;
  double ci_nearest_low = 0.0, ci_nearest_high = 0.0;
  double ci_literal_low = 0.0, ci_literal_high = 0.0;
  std::uint64_t trials = 0;
};

// Fresh key, random bit, fresh randomness per trial; per-trial derived
// streams keep the estimate schedule-independent.
DecryptionErrorEstimate estimate_decryption_error(const PkeParams& params, std::uint64_t trials,
                                                  const RngSeed& seed);

// Key files: params header, then s / A / b as decimal CSV blocks.
// Ciphertext: one CSV line, a-part then c.
std::string serialize_private_key(const KeyPair& kp);
std::string serialize_public_key(const KeyPair& kp);
KeyPair parse_key_files(std::istream& priv, std::istream& pub);
KeyPair parse_public_key(std::istream& pub);
// Private key alone (params + s); enough to decrypt.
KeyPair parse_private_key(std::istream& priv);
std::string serialize_ciphertext(const Ciphertext& ct);
Ciphertext parse_ciphertext(std::istream& in);

}  // namespace hardlearn
