#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "hardlearn/error.hpp"

namespace hardlearn {

// Identifies one deterministic random stream. Distinct (master, stream)
// pairs yield independent Philox streams regardless of consumption order,
// so Monte-Carlo trials can be fanned out and still reproduce bit-exactly.
struct RngSeed {
  std::uint64_t master = 1;
  std::uint64_t stream = 0;
};

// Derives the index-th child stream of `seed`. Pure hash derivation: the
// same (seed, index) always names the same stream, independent of thread
// schedule.
RngSeed derive_stream(const RngSeed& seed, std::uint64_t index);

std::uint64_t mix64(std::uint64_t z);

// Philox 4x32-10 counter-based generator (Salmon et al., SC'11).
// Key = master seed, counter words 2..3 = stream id, words 0..1 = block.
class Philox4x32 {
public:
  explicit Philox4x32(const RngSeed& seed);

  std::uint32_t next_u32();
  std::uint64_t next_u64();

  // Uniform double in [0, 1) with 53 random bits.
  double next_double();

  // Unbiased uniform integer in [0, n), n >= 1. Rejection sampling.
  std::uint64_t uniform_below(std::uint64_t n);

  int coin() { return static_cast<int>(next_u32() & 1u); }

  const RngSeed& seed() const { return seed_; }

private:
  void refill();

  RngSeed seed_;
  std::array<std::uint32_t, 4> counter_;
  std::array<std::uint32_t, 2> key_;
  std::array<std::uint32_t, 4> buf_;
  int buf_pos_ = 4;
};

// Truncated discrete Gaussian over Z: weights exp(-x^2 / (2 sigma^2)) for
// x in [-B, B], sampled by inverse-CDF over the normalized table.
struct GaussianParams {
  double sigma = 1.0;
  std::int64_t tail_bound = 6;

  // B = max(1, ceil(6 sigma)), which keeps the untruncated tail mass
  // below 1e-6.
  static GaussianParams with_default_tail(double sigma);
};

class GaussianSampler {
public:
  explicit GaussianSampler(const GaussianParams& params);

  std::int64_t sample(Philox4x32& rng) const;

  const GaussianParams& params() const { return params_; }

  // Mean and variance of the truncated table, computed exactly from the
  // weights. Used as the test oracle for moment checks.
  double table_variance() const { return table_variance_; }

  // Estimate of the untruncated tail mass P(|e| > B), from extending the
  // table well past B.
  double tail_mass_estimate() const { return tail_mass_; }

  // Normalized probability of each value x in [-B, B].
  const std::vector<double>& probabilities() const { return prob_; }

private:
  GaussianParams params_;
  std::vector<double> prob_;  // index i -> P(x = i - B)
  std::vector<double> cum_;
  double table_variance_ = 0.0;
  double tail_mass_ = 0.0;
};

std::int64_t sample_discrete_gaussian(const GaussianSampler& sampler, Philox4x32& rng);

}  // namespace hardlearn
