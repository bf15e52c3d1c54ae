#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hardlearn/ring.hpp"
#include "hardlearn/sampling.hpp"

namespace hardlearn {

struct LweParams {
  std::uint32_t d = 1;
  std::uint64_t q = 2;
  std::uint32_t m = 1;
  GaussianParams chi;
};

void validate_lwe_params(const LweParams& p);

struct LweSample {
  std::vector<std::uint64_t> a;
  std::uint64_t b = 0;
};

struct RlweSample {
  RingElem a;
  RingElem b;
};

using RlwrSample = RlweSample;  // b lives over p instead of q

// Planted generators carry the secret of the matching type; Uniform makes
// b independent of a.
template <typename SecretT>
struct SampleSource {
  std::optional<SecretT> secret;

  static SampleSource planted(SecretT s) { return SampleSource{std::move(s)}; }
  static SampleSource uniform() { return SampleSource{std::nullopt}; }
  bool is_planted() const { return secret.has_value(); }
};

std::uint64_t lwe_b_from(const std::vector<std::uint64_t>& a,
                         const std::vector<std::uint64_t>& s, std::int64_t e,
                         std::uint64_t q);

std::vector<LweSample> gen_lwe_batch(const LweParams& params,
                                     const SampleSource<std::vector<std::uint64_t>>& source,
                                     Philox4x32& rng);

std::vector<RlweSample> gen_rlwe_batch(const RingParams& rp, const GaussianParams& chi,
                                       std::uint32_t m, const SampleSource<RingElem>& source,
                                       Philox4x32& rng);

std::vector<RlwrSample> gen_rlwr_batch(const RingParams& rp, std::uint64_t p, std::uint32_t m,
                                       const SampleSource<RingElem>& source, Philox4x32& rng);

// Normal form: secret drawn from the error distribution mod q.
RingElem normal_form_secret(const RingParams& rp, const GaussianSampler& g, Philox4x32& rng);
std::vector<std::uint64_t> normal_form_secret_vec(std::uint32_t d, std::uint64_t q,
                                                  const GaussianSampler& g, Philox4x32& rng);

enum class CiMethod { Wald, ClopperPearson };

struct AdvantageEstimate {
  double p_planted = 0.0;
  double p_uniform = 0.0;
  double advantage = 0.0;
  double std_error = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
  std::uint64_t trials = 0;
  CiMethod method = CiMethod::Wald;
  // Per-arm 95% intervals (Clopper-Pearson when requested).
  double planted_ci_low = 0.0, planted_ci_high = 0.0;
  double uniform_ci_low = 0.0, uniform_ci_high = 0.0;
};

// Runs `trials` independent games per arm. Trial t of each arm gets its
// own derived stream, split again between instance generation and the
// distinguisher, so results are schedule-independent. Distinguisher
// failures propagate with the trial index attached.
template <typename Inst>
AdvantageEstimate estimate_advantage(
    const std::function<int(Inst&, const RngSeed&)>& distinguisher,
    const std::function<Inst(const RngSeed&)>& gen_planted,
    const std::function<Inst(const RngSeed&)>& gen_uniform, std::uint64_t trials,
    const RngSeed& seed, CiMethod method = CiMethod::Wald);

AdvantageEstimate finish_advantage(std::uint64_t ones_planted, std::uint64_t ones_uniform,
                                   std::uint64_t trials, CiMethod method);

// Exact Clopper-Pearson 95% interval for x successes out of n.
std::pair<double, double> clopper_pearson_95(std::uint64_t x, std::uint64_t n);

// --- implementation ---

template <typename Inst>
AdvantageEstimate estimate_advantage(
    const std::function<int(Inst&, const RngSeed&)>& distinguisher,
    const std::function<Inst(const RngSeed&)>& gen_planted,
    const std::function<Inst(const RngSeed&)>& gen_uniform, std::uint64_t trials,
    const RngSeed& seed, CiMethod method) {
  if (trials < 1) {
    throw Error::domain("estimate_advantage: trials must be >= 1");
  }
  const RngSeed arm_planted = derive_stream(seed, 0);
  const RngSeed arm_uniform = derive_stream(seed, 1);
  std::uint64_t ones_p = 0, ones_u = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    for (int arm = 0; arm < 2; ++arm) {
      const RngSeed trial_seed = derive_stream(arm == 0 ? arm_planted : arm_uniform, t);
      const RngSeed gen_seed = derive_stream(trial_seed, 0);
      const RngSeed dist_seed = derive_stream(trial_seed, 1);
      try {
        Inst inst = arm == 0 ? gen_planted(gen_seed) : gen_uniform(gen_seed);
        const int out = distinguisher(inst, dist_seed) & 1;
        if (arm == 0) {
          ones_p += static_cast<std::uint64_t>(out);
        } else {
          ones_u += static_cast<std::uint64_t>(out);
        }
      } catch (const Error& e) {
        throw Error(e.code(), "trial " + std::to_string(t) + " (" +
                                  (arm == 0 ? "planted" : "uniform") + " arm): " + e.what());
      }
    }
  }
  return finish_advantage(ones_p, ones_u, trials, method);
}

}  // namespace hardlearn
