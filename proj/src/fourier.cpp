#include "hardlearn/fourier.hpp"

#include <cmath>

namespace hardlearn {

BoolFn BoolFn::from_table(int k, std::vector<std::uint8_t> table) {
  if (k < 1 || k > kMaxTableBits) {
    throw Error::domain("BoolFn: k=" + std::to_string(k) + " outside [1, " +
                        std::to_string(kMaxTableBits) + "]");
  }
  if (table.size() != (std::size_t{1} << k)) {
    throw Error::domain("BoolFn: table length " + std::to_string(table.size()) +
                        " != 2^k");
  }
  BoolFn f;
  f.k_ = k;
  f.table_ = std::make_shared<std::vector<std::uint8_t>>(std::move(table));
  auto t = f.table_;
  f.fn_ = [t](std::uint64_t x) { return static_cast<int>((*t)[x] & 1); };
  return f;
}

BoolFn BoolFn::from_fn(int k, std::function<int(std::uint64_t)> fn) {
  if (k < 1 || k > 63) {
    throw Error::domain("BoolFn: k out of range");
  }
  BoolFn f;
  f.k_ = k;
  f.fn_ = std::move(fn);
  return f;
}

int BoolFn::eval(std::uint64_t x) const { return fn_(x) & 1; }

const std::vector<std::uint8_t>& BoolFn::table() const {
  if (!table_) {
    throw Error::domain("BoolFn: no truth table materialized");
  }
  return *table_;
}

void BoolFn::materialize() {
  if (table_) return;
  if (k_ > kMaxTableBits) {
    throw Error::domain("BoolFn: refusing to materialize 2^" + std::to_string(k_) + " entries");
  }
  const std::uint64_t n = std::uint64_t{1} << k_;
  auto t = std::make_shared<std::vector<std::uint8_t>>(n);
  for (std::uint64_t x = 0; x < n; ++x) {
    (*t)[x] = static_cast<std::uint8_t>(fn_(x) & 1);
  }
  table_ = t;
  fn_ = [t](std::uint64_t x) { return static_cast<int>((*t)[x] & 1); };
}

void wht_int_inplace(std::vector<std::int64_t>& v) {
  const std::size_t n = v.size();
  for (std::size_t len = 1; len < n; len <<= 1) {
    for (std::size_t i = 0; i < n; i += len << 1) {
      for (std::size_t j = i; j < i + len; ++j) {
        const std::int64_t a = v[j];
        const std::int64_t b = v[j + len];
        v[j] = a + b;
        v[j + len] = a - b;
      }
    }
  }
}

double SignSpectrum::parseval_sum() const {
  double s = 0.0;
  for (double c : coef) {
    s += c * c;
  }
  return s;
}

SignSpectrum wht_spectrum(const BoolFn& f) {
  if (f.k() > kMaxTableBits) {
    throw Error::domain("wht_spectrum: k=" + std::to_string(f.k()) + " too large");
  }
  BoolFn g = f;
  g.materialize();
  const auto& table = g.table();
  std::vector<std::int64_t> v(table.size());
  for (std::size_t i = 0; i < table.size(); ++i) {
    v[i] = sign_of_bit(table[i]);
  }
  wht_int_inplace(v);
  SignSpectrum spec;
  spec.k = f.k();
  spec.coef.resize(v.size());
  const double scale = std::ldexp(1.0, -f.k());
  for (std::size_t i = 0; i < v.size(); ++i) {
    spec.coef[i] = static_cast<double>(v[i]) * scale;
  }
  return spec;
}

FourierSampler::FourierSampler(const SignSpectrum& spec) {
  const double total = spec.parseval_sum();
  if (std::abs(total - 1.0) > 1e-9) {
    throw Error::domain("FourierSampler: spectrum is not normalized (sum of squares = " +
                        std::to_string(total) + ")");
  }
  cum_.resize(spec.coef.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < spec.coef.size(); ++i) {
    acc += spec.coef[i] * spec.coef[i];
    cum_[i] = acc;
  }
  cum_.back() = 1.0;
}

std::uint64_t FourierSampler::sample(Philox4x32& rng) const {
  const double u = rng.next_double();
  std::size_t lo = 0, hi = cum_.size() - 1;
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    if (cum_[mid] <= u) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  return lo;
}

std::uint64_t fourier_sample(const SignSpectrum& spec, Philox4x32& rng) {
  return FourierSampler(spec).sample(rng);
}

ExampleOracle uniform_example_oracle(const BoolFn& f, const RngSeed& seed) {
  ExampleOracle ex{f.k(), [f](std::uint64_t x) { return f.eval(x); }, Philox4x32(seed)};
  return ex;
}

BooleanOracle membership_oracle(const BoolFn& f) {
  return BooleanOracle{[f](std::uint64_t x) { return f.eval(x); }, 0, std::nullopt};
}

Oracles::Oracles(const BoolFn& target, std::uint64_t budget, const RngSeed& seed,
                 bool enable_fourier)
    : target_(target), budget_(budget), rng_(seed) {
  if (enable_fourier && target_.k() <= kMaxTableBits) {
    target_.materialize();
    sampler_.emplace(wht_spectrum(target_));
  }
}

void Oracles::charge() {
  if (used_ >= budget_) {
    throw BudgetExceeded("unified oracle budget of " + std::to_string(budget_) +
                         " calls exhausted");
  }
  ++used_;
}

std::pair<std::uint64_t, int> Oracles::draw_example() {
  charge();
  const std::uint64_t x = rng_.uniform_below(std::uint64_t{1} << target_.k());
  return {x, target_.eval(x)};
}

int Oracles::membership(std::uint64_t x) {
  charge();
  return target_.eval(x);
}

std::uint64_t Oracles::draw_fourier_sample() {
  if (!sampler_) {
    throw Error::domain("Oracles: Fourier sampling unavailable for black-box targets");
  }
  charge();
  return sampler_->sample(rng_);
}

}  // namespace hardlearn
