#include "hardlearn/learners.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <set>
#include <sstream>

#include "hardlearn/io.hpp"

namespace hardlearn {

namespace {

class Stopwatch {
public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

private:
  std::chrono::steady_clock::time_point start_;
};

int parity64(std::uint64_t v) { return std::popcount(v) & 1; }

}  // namespace

int Hypothesis::evaluate(std::uint64_t x) const {
  return std::visit(
      [x](const auto& rep) -> int {
        using T = std::decay_t<decltype(rep)>;
        if constexpr (std::is_same_v<T, HypTruthTable>) {
          return rep.bits[x] & 1;
        } else if constexpr (std::is_same_v<T, HypLinear>) {
          return (parity64(rep.s & x) ^ rep.constant) & 1;
        } else if constexpr (std::is_same_v<T, HypSignedPolynomial>) {
          double acc = 0.0;
          for (const auto& [set, c] : rep.coef) {
            acc += c * (parity64(set & x) ? -1.0 : 1.0);
          }
          // Sign convention 0 -> +1, 1 -> -1; a tie at zero outputs 1.
          return acc > 0.0 ? 0 : 1;
        } else if constexpr (std::is_same_v<T, HypJunta>) {
          std::uint64_t idx = 0;
          for (std::size_t i = 0; i < rep.vars.size(); ++i) {
            idx |= ((x >> rep.vars[i]) & 1u) << i;
          }
          return rep.subtable[idx] & 1;
        } else {
          return rep.fn(x) & 1;
        }
      },
      rep_);
}

int Hypothesis::k() const {
  return std::visit([](const auto& rep) { return rep.k; }, rep_);
}

std::string Hypothesis::kind() const {
  return std::visit(
      [](const auto& rep) -> std::string {
        using T = std::decay_t<decltype(rep)>;
        if constexpr (std::is_same_v<T, HypTruthTable>) return "truth_table";
        else if constexpr (std::is_same_v<T, HypLinear>) return "linear";
        else if constexpr (std::is_same_v<T, HypSignedPolynomial>) return "signed_polynomial";
        else if constexpr (std::is_same_v<T, HypJunta>) return "junta";
        else return "callback";
      },
      rep_);
}

JsonValue Hypothesis::to_json() const {
  JsonValue v = JsonValue::object();
  v.set("kind", kind());
  v.set("k", static_cast<std::int64_t>(k()));
  std::visit(
      [&v](const auto& rep) {
        using T = std::decay_t<decltype(rep)>;
        if constexpr (std::is_same_v<T, HypTruthTable>) {
          std::string bits(rep.bits.size(), '0');
          for (std::size_t i = 0; i < rep.bits.size(); ++i) {
            bits[i] = rep.bits[i] ? '1' : '0';
          }
          v.set("bits", bits);
        } else if constexpr (std::is_same_v<T, HypLinear>) {
          v.set("s", static_cast<std::int64_t>(rep.s));
          v.set("constant", static_cast<std::int64_t>(rep.constant));
        } else if constexpr (std::is_same_v<T, HypSignedPolynomial>) {
          v.set("degree", static_cast<std::int64_t>(rep.degree));
          JsonValue coefs = JsonValue::object();
          for (const auto& [set, c] : rep.coef) {
            coefs.set(std::to_string(set), c);
          }
          v.set("coefficients", std::move(coefs));
        } else if constexpr (std::is_same_v<T, HypJunta>) {
          JsonValue vars = JsonValue::array();
          for (int var : rep.vars) {
            vars.push_back(static_cast<std::int64_t>(var));
          }
          v.set("vars", std::move(vars));
          std::string bits(rep.subtable.size(), '0');
          for (std::size_t i = 0; i < rep.subtable.size(); ++i) {
            bits[i] = rep.subtable[i] ? '1' : '0';
          }
          v.set("subtable", bits);
        } else {
          // Callback hypotheses are in-memory only.
        }
      },
      rep_);
  return v;
}

std::string Hypothesis::serialize_json() const { return to_json().dump_canonical(); }

LearnerReport gf2_linear_learner(Oracles& oracles, const RngSeed& /*seed*/) {
  Stopwatch sw;
  const int k = oracles.k();
  if (k > 62) {
    throw Error::domain("gf2_linear_learner: k too large for bitmask rows");
  }

  // Row: k variable bits, then the affine column, then the label.
  const std::uint64_t affine_bit = std::uint64_t{1} << k;
  const std::uint64_t label_bit = std::uint64_t{1} << (k + 1);
  std::vector<std::uint64_t> basis(static_cast<std::size_t>(k) + 1, 0);
  int rank = 0;
  bool inconsistent = false;

  std::vector<std::pair<std::uint64_t, int>> sample;
  const std::uint64_t want = std::min<std::uint64_t>(oracles.remaining(),
                                                     4ull * (static_cast<std::uint64_t>(k) + 1));
  auto absorb = [&](std::uint64_t x, int y) {
    std::uint64_t row = x | affine_bit | (y ? label_bit : 0);
    for (int i = k; i >= 0; --i) {
      if (!((row >> i) & 1u)) continue;
      if (basis[static_cast<std::size_t>(i)] == 0) {
        basis[static_cast<std::size_t>(i)] = row;
        ++rank;
        return;
      }
      row ^= basis[static_cast<std::size_t>(i)];
    }
    if (row & label_bit) {
      inconsistent = true;  // reduced to 0 = 1
    }
  };

  for (std::uint64_t i = 0; i < want; ++i) {
    auto [x, y] = oracles.draw_example();
    sample.emplace_back(x, y);
    absorb(x, y);
  }
  while (rank < k + 1 && !inconsistent && oracles.remaining() > 0) {
    auto [x, y] = oracles.draw_example();
    sample.emplace_back(x, y);
    absorb(x, y);
  }

  // Back-substitute with free variables set to zero. A stored row's
  // leading bit is its pivot, so solving pivots in ascending order only
  // ever reads already-assigned variables.
  HypLinear lin;
  lin.k = k;
  std::uint64_t solution = 0;  // bits 0..k-1 = s, bit k = constant
  for (int i = 0; i <= k; ++i) {
    const std::uint64_t row = basis[static_cast<std::size_t>(i)];
    if (row == 0) continue;
    const int rhs = (row & label_bit) ? 1 : 0;
    const int dot = parity64(row & solution & (label_bit - 1));
    if ((rhs ^ dot) & 1) {
      solution |= std::uint64_t{1} << i;
    }
  }
  lin.s = solution & (affine_bit - 1);
  lin.constant = (solution >> k) & 1;

  LearnerReport rep;
  rep.algo = "gf2-linear";
  rep.exact_claim = rank == k + 1 && !inconsistent;

  if (!inconsistent) {
    rep.hypothesis = Hypothesis(lin);
  } else {
    // Best-effort: score candidate affine functions on the collected
    // sample and keep the winner.
    std::vector<HypLinear> candidates;
    candidates.push_back(lin);
    candidates.push_back(HypLinear{k, 0, 0});
    candidates.push_back(HypLinear{k, 0, 1});
    for (int i = 0; i < k; ++i) {
      candidates.push_back(HypLinear{k, std::uint64_t{1} << i, 0});
      candidates.push_back(HypLinear{k, std::uint64_t{1} << i, 1});
    }
    std::size_t best = 0;
    std::uint64_t best_score = 0;
    for (std::size_t ci = 0; ci < candidates.size(); ++ci) {
      std::uint64_t score = 0;
      for (const auto& [x, y] : sample) {
        score += (parity64(candidates[ci].s & x) ^ candidates[ci].constant) == y;
      }
      if (score > best_score) {
        best_score = score;
        best = ci;
      }
    }
    rep.hypothesis = Hypothesis(candidates[best]);
  }

  rep.oracle_calls_used = oracles.used();
  rep.wall_time_s = sw.seconds();
  return rep;
}

LearnerReport low_degree_learner(const LowDegreeOptions& opt, Oracles& oracles,
                                 const RngSeed& /*seed*/) {
  Stopwatch sw;
  const int k = oracles.k();
  if (opt.degree < 0 || opt.degree > k) {
    throw Error::domain("low_degree_learner: degree out of range");
  }
  if (opt.exhaustive && opt.n_samples != (std::uint64_t{1} << k)) {
    throw Error::domain("low_degree_learner: exhaustive mode requires n_samples = 2^k");
  }

  // Each subset of size <= degree is built exactly once along its
  // ascending-index chain.
  std::vector<std::uint64_t> sets;
  std::function<void(int, int, std::uint64_t)> enumerate = [&](int start, int left,
                                                               std::uint64_t cur) {
    sets.push_back(cur);
    if (left == 0) return;
    for (int i = start; i < k; ++i) {
      enumerate(i + 1, left - 1, cur | (std::uint64_t{1} << i));
    }
  };
  enumerate(0, opt.degree, 0);
  std::sort(sets.begin(), sets.end());

  std::vector<double> sums(sets.size(), 0.0);
  auto accumulate = [&](std::uint64_t x, int y) {
    const double sign_y = y ? -1.0 : 1.0;
    for (std::size_t s = 0; s < sets.size(); ++s) {
      sums[s] += sign_y * (parity64(sets[s] & x) ? -1.0 : 1.0);
    }
  };

  if (opt.exhaustive) {
    for (std::uint64_t x = 0; x < opt.n_samples; ++x) {
      accumulate(x, oracles.membership(x));
    }
  } else {
    for (std::uint64_t i = 0; i < opt.n_samples; ++i) {
      auto [x, y] = oracles.draw_example();
      accumulate(x, y);
    }
  }

  HypSignedPolynomial poly;
  poly.k = k;
  poly.degree = opt.degree;
  for (std::size_t s = 0; s < sets.size(); ++s) {
    poly.coef[sets[s]] = sums[s] / static_cast<double>(opt.n_samples);
  }

  LearnerReport rep;
  rep.hypothesis = Hypothesis(std::move(poly));
  rep.algo = "low-degree";
  rep.exact_claim = false;
  rep.oracle_calls_used = oracles.used();
  rep.wall_time_s = sw.seconds();
  return rep;
}

LearnerReport junta_learner(const JuntaOptions& opt, Oracles& oracles, const RngSeed& /*seed*/) {
  Stopwatch sw;
  const int k = oracles.k();
  if (opt.junta_bound > 20) {
    throw Error::domain("junta_learner: junta bound above 20 unsupported");
  }

  // Phase 1: Fourier samples vote on the relevant variables. Every sampled
  // set is a subset of the true junta, so the union only grows within it.
  std::uint64_t support = 0;
  int stable = 0;
  std::uint64_t fourier_used = 0;
  while (fourier_used < opt.max_fourier_samples && oracles.remaining() > 0 &&
         stable < opt.patience) {
    const std::uint64_t set = oracles.draw_fourier_sample();
    ++fourier_used;
    const std::uint64_t next = support | set;
    if (next == support) {
      ++stable;
    } else {
      support = next;
      stable = 0;
    }
  }

  std::vector<int> vars;
  for (int i = 0; i < k; ++i) {
    if ((support >> i) & 1u) {
      vars.push_back(i);
    }
  }
  if (static_cast<int>(vars.size()) > opt.junta_bound) {
    throw Error::domain("junta_learner: identified " + std::to_string(vars.size()) +
                        " variables, target is not a " + std::to_string(opt.junta_bound) +
                        "-junta");
  }

  // Phase 2: reconstruct the subfunction by majority vote per restriction.
  const std::size_t cells = std::size_t{1} << vars.size();
  std::vector<std::int64_t> votes(cells, 0);
  std::vector<std::uint64_t> counts(cells, 0);
  std::uint64_t examples = 0;
  while (examples < opt.max_examples && oracles.remaining() > 0) {
    auto [x, y] = oracles.draw_example();
    ++examples;
    std::uint64_t idx = 0;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      idx |= ((x >> vars[i]) & 1u) << i;
    }
    votes[idx] += y ? 1 : -1;
    ++counts[idx];
  }

  HypJunta junta;
  junta.k = k;
  junta.vars = vars;
  junta.subtable.resize(cells);
  for (std::size_t idx = 0; idx < cells; ++idx) {
    if (counts[idx] == 0) {
      // Uncovered restriction: one membership query pins it down.
      std::uint64_t x = 0;
      for (std::size_t i = 0; i < vars.size(); ++i) {
        x |= ((idx >> i) & 1u) << vars[i];
      }
      junta.subtable[idx] =
          oracles.remaining() > 0 ? static_cast<std::uint8_t>(oracles.membership(x)) : 0;
    } else {
      junta.subtable[idx] = votes[idx] > 0 ? 1 : 0;
    }
  }

  LearnerReport rep;
  rep.hypothesis = Hypothesis(std::move(junta));
  rep.algo = "junta";
  rep.exact_claim = false;
  rep.oracle_calls_used = oracles.used();
  rep.wall_time_s = sw.seconds();
  return rep;
}

LearnerReport memorizing_learner(Oracles& oracles, const RngSeed& seed) {
  Stopwatch sw;
  const int k = oracles.k();
  const std::uint64_t domain = std::uint64_t{1} << k;
  Philox4x32 rng(seed);
  const std::uint64_t salt = rng.next_u64();

  std::map<std::uint64_t, int> memo;
  std::set<std::uint64_t> seen;
  const std::uint64_t budget = oracles.remaining();
  const std::uint64_t target_points = std::min(budget, domain);
  while (memo.size() < target_points) {
    const std::uint64_t x = rng.uniform_below(domain);
    if (!seen.insert(x).second) continue;  // distinct points only
    memo[x] = oracles.membership(x);
  }

  HypCallback cb;
  cb.k = k;
  auto memo_ptr = std::make_shared<std::map<std::uint64_t, int>>(std::move(memo));
  cb.fn = [memo_ptr, salt](std::uint64_t x) -> int {
    auto it = memo_ptr->find(x);
    if (it != memo_ptr->end()) {
      return it->second;
    }
    return static_cast<int>(mix64(x ^ salt) & 1u);
  };

  LearnerReport rep;
  rep.hypothesis = Hypothesis(std::move(cb));
  rep.algo = "memorizing";
  rep.exact_claim = target_points == domain;
  rep.oracle_calls_used = oracles.used();
  rep.wall_time_s = sw.seconds();
  return rep;
}

LearnerReport cheat_learner(const BoolFn& target) {
  LearnerReport rep;
  HypCallback cb;
  cb.k = target.k();
  cb.fn = [target](std::uint64_t x) { return target.eval(x); };
  rep.hypothesis = Hypothesis(std::move(cb));
  rep.algo = "cheat";
  rep.exact_claim = true;
  rep.oracle_calls_used = 0;
  rep.wall_time_s = 0.0;
  return rep;
}

double hypothesis_agreement(const Hypothesis& h, const BoolFn& target, const RngSeed& seed,
                            std::uint64_t samples) {
  const int k = target.k();
  if (k <= 16) {
    const std::uint64_t n = std::uint64_t{1} << k;
    std::uint64_t agree = 0;
    for (std::uint64_t x = 0; x < n; ++x) {
      agree += h.evaluate(x) == target.eval(x);
    }
    return static_cast<double>(agree) / static_cast<double>(n);
  }
  Philox4x32 rng(seed);
  std::uint64_t agree = 0;
  for (std::uint64_t i = 0; i < samples; ++i) {
    const std::uint64_t x = rng.uniform_below(std::uint64_t{1} << k);
    agree += h.evaluate(x) == target.eval(x);
  }
  return static_cast<double>(agree) / static_cast<double>(samples);
}

Learner make_named_learner(const std::string& name, std::uint64_t budget) {
  if (name == "gf2-linear") {
    return [](Oracles& o, const RngSeed& s) { return gf2_linear_learner(o, s); };
  }
  if (name == "low-degree-1" || name == "lmn-1") {
    return [budget](Oracles& o, const RngSeed& s) {
      LowDegreeOptions opt;
      opt.degree = 1;
      opt.n_samples = budget;
      return low_degree_learner(opt, o, s);
    };
  }
  if (name == "junta-4") {
    return [](Oracles& o, const RngSeed& s) {
      JuntaOptions opt;
      return junta_learner(opt, o, s);
    };
  }
  if (name == "memorizing") {
    return [](Oracles& o, const RngSeed& s) { return memorizing_learner(o, s); };
  }
  throw Error::usage("unknown learner '" + name + "'");
}

}  // namespace hardlearn
