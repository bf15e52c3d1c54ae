#include "hardlearn/sampling.hpp"

#include <cmath>
#include <limits>

namespace hardlearn {

namespace {

constexpr std::uint32_t kPhiloxW32A = 0x9E3779B9u;
constexpr std::uint32_t kPhiloxW32B = 0xBB67AE85u;
constexpr std::uint32_t kPhiloxM4x32A = 0xD2511F53u;
constexpr std::uint32_t kPhiloxM4x32B = 0xCD9E8D57u;

inline void mul_hilo(std::uint32_t a, std::uint32_t b, std::uint32_t* lo, std::uint32_t* hi) {
  std::uint64_t p = static_cast<std::uint64_t>(a) * b;
  *lo = static_cast<std::uint32_t>(p);
  *hi = static_cast<std::uint32_t>(p >> 32);
}

inline void philox_round(std::array<std::uint32_t, 4>& ctr, std::array<std::uint32_t, 2>& key) {
  std::uint32_t lo0, hi0, lo1, hi1;
  mul_hilo(kPhiloxM4x32A, ctr[0], &lo0, &hi0);
  mul_hilo(kPhiloxM4x32B, ctr[2], &lo1, &hi1);
  std::array<std::uint32_t, 4> out;
  out[0] = hi1 ^ ctr[1] ^ key[0];
  out[1] = lo1;
  out[2] = hi0 ^ ctr[3] ^ key[1];
  out[3] = lo0;
  ctr = out;
  key[0] += kPhiloxW32A;
  key[1] += kPhiloxW32B;
}

}  // namespace

std::uint64_t mix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

RngSeed derive_stream(const RngSeed& seed, std::uint64_t index) {
  RngSeed child;
  child.master = seed.master;
  child.stream = mix64(mix64(seed.stream) ^ (index * 0xD1B54A32D192ED03ull + 0x8CB92BA72F3D8DD7ull));
  return child;
}

Philox4x32::Philox4x32(const RngSeed& seed) : seed_(seed) {
  key_[0] = static_cast<std::uint32_t>(seed.master);
  key_[1] = static_cast<std::uint32_t>(seed.master >> 32);
  counter_[0] = 0;
  counter_[1] = 0;
  counter_[2] = static_cast<std::uint32_t>(seed.stream);
  counter_[3] = static_cast<std::uint32_t>(seed.stream >> 32);
}

void Philox4x32::refill() {
  std::array<std::uint32_t, 4> ctr = counter_;
  std::array<std::uint32_t, 2> key = key_;
  for (int r = 0; r < 10; ++r) {
    philox_round(ctr, key);
  }
  buf_ = ctr;
  buf_pos_ = 0;
  if (++counter_[0] == 0) {
    ++counter_[1];
  }
}

std::uint32_t Philox4x32::next_u32() {
  if (buf_pos_ >= 4) {
    refill();
  }
  return buf_[buf_pos_++];
}

std::uint64_t Philox4x32::next_u64() {
  std::uint64_t lo = next_u32();
  std::uint64_t hi = next_u32();
  return lo | (hi << 32);
}

double Philox4x32::next_double() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

std::uint64_t Philox4x32::uniform_below(std::uint64_t n) {
  if (n == 0) {
    throw Error::domain("uniform_below: bound must be positive");
  }
  if ((n & (n - 1)) == 0) {
    return next_u64() & (n - 1);
  }
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t r;
  do {
    r = next_u64();
  } while (r >= limit);
  return r % n;
}

GaussianParams GaussianParams::with_default_tail(double sigma) {
  GaussianParams p;
  p.sigma = sigma;
  p.tail_bound = std::max<std::int64_t>(1, static_cast<std::int64_t>(std::ceil(6.0 * sigma)));
  return p;
}

GaussianSampler::GaussianSampler(const GaussianParams& params) : params_(params) {
  if (!(params.sigma > 0.0)) {
    throw Error::domain("GaussianParams: sigma must be positive");
  }
  if (params.tail_bound < 1) {
    throw Error::domain("GaussianParams: tail bound must be >= 1");
  }
  const std::int64_t B = params.tail_bound;
  const double s2 = 2.0 * params.sigma * params.sigma;

  prob_.resize(static_cast<std::size_t>(2 * B + 1));
  double total = 0.0;
  for (std::int64_t x = -B; x <= B; ++x) {
    double w = std::exp(-static_cast<double>(x) * static_cast<double>(x) / s2);
    prob_[static_cast<std::size_t>(x + B)] = w;
    total += w;
  }

  // Extend past B to estimate the mass the truncation drops.
  double outside = 0.0;
  const std::int64_t ext = B + std::max<std::int64_t>(16, static_cast<std::int64_t>(std::ceil(10.0 * params.sigma)));
  for (std::int64_t x = B + 1; x <= ext; ++x) {
    outside += 2.0 * std::exp(-static_cast<double>(x) * static_cast<double>(x) / s2);
  }
  tail_mass_ = outside / (total + outside);

  cum_.resize(prob_.size());
  double acc = 0.0;
  double mean = 0.0;
  for (std::size_t i = 0; i < prob_.size(); ++i) {
    prob_[i] /= total;
    acc += prob_[i];
    cum_[i] = acc;
    mean += prob_[i] * (static_cast<double>(i) - static_cast<double>(B));
  }
  cum_.back() = 1.0;
  double var = 0.0;
  for (std::size_t i = 0; i < prob_.size(); ++i) {
    double x = static_cast<double>(i) - static_cast<double>(B) - mean;
    var += prob_[i] * x * x;
  }
  table_variance_ = var;
}

std::int64_t GaussianSampler::sample(Philox4x32& rng) const {
  const double u = rng.next_double();
  // First index with cum > u, so zero-mass buckets are never selected.
  std::size_t lo = 0, hi = cum_.size() - 1;
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    if (cum_[mid] <= u) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  return static_cast<std::int64_t>(lo) - params_.tail_bound;
}

std::int64_t sample_discrete_gaussian(const GaussianSampler& sampler, Philox4x32& rng) {
  return sampler.sample(rng);
}

}  // namespace hardlearn
