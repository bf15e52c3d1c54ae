#include "hardlearn/lattice.hpp"

#include <boost/math/distributions/beta.hpp>
#include <cmath>

namespace hardlearn {

void validate_lwe_params(const LweParams& p) {
  if (p.d < 1) throw Error::domain("LweParams: d must be >= 1");
  if (p.q < 2) throw Error::domain("LweParams: q must be >= 2");
  if (p.m < 1) throw Error::domain("LweParams: m must be >= 1");
}

std::uint64_t lwe_b_from(const std::vector<std::uint64_t>& a,
                         const std::vector<std::uint64_t>& s, std::int64_t e,
                         std::uint64_t q) {
  if (a.size() != s.size()) {
    throw Error::domain("lwe_b_from: dimension mismatch");
  }
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    acc = add_mod(acc, mul_mod(a[i], s[i], q), q);
  }
  std::uint64_t noise;
  if (e >= 0) {
    noise = static_cast<std::uint64_t>(e) % q;
  } else {
    const std::uint64_t m = static_cast<std::uint64_t>(-e) % q;
    noise = m == 0 ? 0 : q - m;
  }
  return add_mod(acc, noise, q);
}

std::vector<LweSample> gen_lwe_batch(const LweParams& params,
                                     const SampleSource<std::vector<std::uint64_t>>& source,
                                     Philox4x32& rng) {
  validate_lwe_params(params);
  if (source.is_planted() && source.secret->size() != params.d) {
    throw Error::domain("gen_lwe_batch: secret has dimension " +
                        std::to_string(source.secret->size()) + ", expected " +
                        std::to_string(params.d));
  }
  GaussianSampler chi(params.chi);
  std::vector<LweSample> out;
  out.reserve(params.m);
  for (std::uint32_t i = 0; i < params.m; ++i) {
    LweSample s;
    s.a.resize(params.d);
    for (auto& v : s.a) {
      v = rng.uniform_below(params.q);
    }
    if (source.is_planted()) {
      s.b = lwe_b_from(s.a, *source.secret, chi.sample(rng), params.q);
    } else {
      s.b = rng.uniform_below(params.q);
    }
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<RlweSample> gen_rlwe_batch(const RingParams& rp, const GaussianParams& chi,
                                       std::uint32_t m, const SampleSource<RingElem>& source,
                                       Philox4x32& rng) {
  validate_ring_params(rp);
  if (source.is_planted() && !(source.secret->params == rp)) {
    throw Error::domain("gen_rlwe_batch: secret ring parameters do not match");
  }
  GaussianSampler g(chi);
  std::vector<RlweSample> out;
  out.reserve(m);
  for (std::uint32_t i = 0; i < m; ++i) {
    RingElem a = sample_uniform_ring(rp, rng);
    RingElem b = source.is_planted()
                     ? ring_add(ring_mul(a, *source.secret), sample_error_ring(rp, g, rng))
                     : sample_uniform_ring(rp, rng);
    out.push_back(RlweSample{std::move(a), std::move(b)});
  }
  return out;
}

std::vector<RlwrSample> gen_rlwr_batch(const RingParams& rp, std::uint64_t p, std::uint32_t m,
                                       const SampleSource<RingElem>& source, Philox4x32& rng) {
  validate_ring_params(rp);
  if (!is_power_of_two(p) || !is_power_of_two(rp.q) || p < 2 || p > rp.q) {
    throw Error::domain("gen_rlwr_batch: need powers of two with 2 <= p <= q");
  }
  const RingParams pp{rp.d, p};
  std::vector<RlwrSample> out;
  out.reserve(m);
  for (std::uint32_t i = 0; i < m; ++i) {
    RingElem a = sample_uniform_ring(rp, rng);
    RingElem b = source.is_planted() ? round_elem(ring_mul(a, *source.secret), p)
                                     : sample_uniform_ring(pp, rng);
    out.push_back(RlwrSample{std::move(a), std::move(b)});
  }
  return out;
}

RingElem normal_form_secret(const RingParams& rp, const GaussianSampler& g, Philox4x32& rng) {
  return sample_error_ring(rp, g, rng);
}

std::vector<std::uint64_t> normal_form_secret_vec(std::uint32_t d, std::uint64_t q,
                                                  const GaussianSampler& g, Philox4x32& rng) {
  std::vector<std::uint64_t> s(d);
  for (auto& v : s) {
    const std::int64_t e = g.sample(rng);
    if (e >= 0) {
      v = static_cast<std::uint64_t>(e) % q;
    } else {
      const std::uint64_t m = static_cast<std::uint64_t>(-e) % q;
      v = m == 0 ? 0 : q - m;
    }
  }
  return s;
}

std::pair<double, double> clopper_pearson_95(std::uint64_t x, std::uint64_t n) {
  const double alpha = 0.05;
  double lo = 0.0, hi = 1.0;
  if (x > 0) {
    boost::math::beta_distribution<double> dist(static_cast<double>(x),
                                                static_cast<double>(n - x + 1));
    lo = boost::math::quantile(dist, alpha / 2);
  }
  if (x < n) {
    boost::math::beta_distribution<double> dist(static_cast<double>(x + 1),
                                                static_cast<double>(n - x));
    hi = boost::math::quantile(dist, 1 - alpha / 2);
  }
  return {lo, hi};
}

AdvantageEstimate finish_advantage(std::uint64_t ones_planted, std::uint64_t ones_uniform,
                                   std::uint64_t trials, CiMethod method) {
  AdvantageEstimate est;
  est.trials = trials;
  est.method = method;
  const double n = static_cast<double>(trials);
  est.p_planted = static_cast<double>(ones_planted) / n;
  est.p_uniform = static_cast<double>(ones_uniform) / n;
  est.advantage = std::abs(est.p_planted - est.p_uniform);
  est.std_error = std::sqrt(est.p_planted * (1.0 - est.p_planted) / n +
                            est.p_uniform * (1.0 - est.p_uniform) / n);
  if (method == CiMethod::Wald) {
    // Normal approximation; undercovers near the 0/1 boundary.
    est.ci_low = std::max(0.0, est.advantage - 1.96 * est.std_error);
    est.ci_high = std::min(1.0, est.advantage + 1.96 * est.std_error);
    const double se_p = std::sqrt(est.p_planted * (1.0 - est.p_planted) / n);
    const double se_u = std::sqrt(est.p_uniform * (1.0 - est.p_uniform) / n);
    est.planted_ci_low = std::max(0.0, est.p_planted - 1.96 * se_p);
    est.planted_ci_high = std::min(1.0, est.p_planted + 1.96 * se_p);
    est.uniform_ci_low = std::max(0.0, est.p_uniform - 1.96 * se_u);
    est.uniform_ci_high = std::min(1.0, est.p_uniform + 1.96 * se_u);
  } else {
    std::tie(est.planted_ci_low, est.planted_ci_high) = clopper_pearson_95(ones_planted, trials);
    std::tie(est.uniform_ci_low, est.uniform_ci_high) = clopper_pearson_95(ones_uniform, trials);
    est.ci_low = std::max(0.0, std::max(est.planted_ci_low - est.uniform_ci_high,
                                        est.uniform_ci_low - est.planted_ci_high));
    est.ci_high = std::min(1.0, std::max(est.planted_ci_high - est.uniform_ci_low,
                                         est.uniform_ci_high - est.planted_ci_low));
  }
  return est;
}

}  // namespace hardlearn
