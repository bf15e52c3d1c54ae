#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "hardlearn/error.hpp"
#include "hardlearn/sampling.hpp"

namespace hardlearn {

constexpr int kMaxTableBits = 24;

// Boolean function on {0,1}^k. Inputs are packed as integers: bit i of the
// integer is input variable i+1. Sign convention for spectral work maps
// bit 0 -> +1 and bit 1 -> -1.
class BoolFn {
public:
  static BoolFn from_table(int k, std::vector<std::uint8_t> table);
  static BoolFn from_fn(int k, std::function<int(std::uint64_t)> fn);

  int k() const { return k_; }
  int eval(std::uint64_t x) const;
  bool has_table() const { return table_ != nullptr; }
  const std::vector<std::uint8_t>& table() const;

  // Evaluates everywhere and caches the table (k <= kMaxTableBits).
  void materialize();

private:
  int k_ = 0;
  std::function<int(std::uint64_t)> fn_;
  std::shared_ptr<std::vector<std::uint8_t>> table_;
};

inline int sign_of_bit(int bit) { return bit ? -1 : 1; }

// In-place unscaled Walsh-Hadamard butterflies; applying twice multiplies
// the table by 2^k exactly in integer arithmetic.
void wht_int_inplace(std::vector<std::int64_t>& v);

// Spectrum of the +/-1 lift: coef[S] = 2^-k * sum_x c(x) (-1)^{x.S}.
struct SignSpectrum {
  int k = 0;
  std::vector<double> coef;

  double parseval_sum() const;
};

SignSpectrum wht_spectrum(const BoolFn& f);

// Inverse-CDF sampler over the Fourier distribution {c_hat(S)^2}.
class FourierSampler {
public:
  explicit FourierSampler(const SignSpectrum& spec);

  std::uint64_t sample(Philox4x32& rng) const;

private:
  std::vector<double> cum_;
};

std::uint64_t fourier_sample(const SignSpectrum& spec, Philox4x32& rng);

// Counting wrapper around a point-query function.
struct BooleanOracle {
  std::function<int(std::uint64_t)> fn;
  std::uint64_t counter = 0;
  std::optional<std::uint64_t> budget;

  int query(std::uint64_t x) {
    if (budget && counter >= *budget) {
      throw BudgetExceeded("oracle budget of " + std::to_string(*budget) + " queries exhausted");
    }
    ++counter;
    return fn(x);
  }
};

// Labeled-example oracle: uniform x with its label.
struct ExampleOracle {
  int k = 0;
  std::function<int(std::uint64_t)> fn;
  Philox4x32 rng;
  std::uint64_t counter = 0;

  std::pair<std::uint64_t, int> draw() {
    ++counter;
    const std::uint64_t x = rng.uniform_below(std::uint64_t{1} << k);
    return {x, fn(x)};
  }
};

ExampleOracle uniform_example_oracle(const BoolFn& f, const RngSeed& seed);
BooleanOracle membership_oracle(const BoolFn& f);

// Everything a learner may consume, charged against one budget: uniform
// examples, membership queries and Fourier samples each cost 1 call. This
// matches the accounting where a quantum example costs one membership
// query. Fourier sampling is only available for table-backed targets; a
// black-box target (e.g. a PRF challenge oracle) offers examples and
// membership queries only.
class Oracles {
public:
  Oracles(const BoolFn& target, std::uint64_t budget, const RngSeed& seed,
          bool enable_fourier = true);

  int k() const { return target_.k(); }
  std::uint64_t budget() const { return budget_; }
  std::uint64_t used() const { return used_; }
  std::uint64_t remaining() const { return budget_ - used_; }
  bool fourier_available() const { return sampler_.has_value(); }

  std::pair<std::uint64_t, int> draw_example();
  int membership(std::uint64_t x);
  std::uint64_t draw_fourier_sample();

private:
  void charge();

  BoolFn target_;
  std::uint64_t budget_;
  std::uint64_t used_ = 0;
  std::optional<FourierSampler> sampler_;
  Philox4x32 rng_;
};

}  // namespace hardlearn
