#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "hardlearn/fourier.hpp"
#include "hardlearn/io.hpp"

namespace hardlearn {

struct LearnerBudget {
  std::uint64_t max_oracle_calls = 0;
  double max_time_s = 0.0;  // advisory; recorded, not enforced
};

// Hypothesis representations. Callback covers the cheat learner, which
// hands back the target itself; it does not serialize.
struct HypTruthTable {
  int k = 0;
  std::vector<std::uint8_t> bits;
};
struct HypLinear {
  int k = 0;
  std::uint64_t s = 0;  // bit i set -> variable i+1 participates
  int constant = 0;
};
struct HypSignedPolynomial {
  int k = 0;
  int degree = 0;
  std::map<std::uint64_t, double> coef;  // S -> estimated coefficient
};
struct HypJunta {
  int k = 0;
  std::vector<int> vars;               // ascending variable indices (0-based)
  std::vector<std::uint8_t> subtable;  // indexed by packed junta assignment
};
struct HypCallback {
  int k = 0;
  std::function<int(std::uint64_t)> fn;
};

class Hypothesis {
public:
  using Rep = std::variant<HypTruthTable, HypLinear, HypSignedPolynomial, HypJunta, HypCallback>;

  Hypothesis() : rep_(HypLinear{}) {}
  explicit Hypothesis(Rep rep) : rep_(std::move(rep)) {}

  int evaluate(std::uint64_t x) const;
  int k() const;
  const Rep& rep() const { return rep_; }
  std::string kind() const;

  JsonValue to_json() const;
  std::string serialize_json() const;

private:
  Rep rep_;
};

struct LearnerReport {
  Hypothesis hypothesis;
  std::uint64_t oracle_calls_used = 0;
  double wall_time_s = 0.0;
  bool exact_claim = false;  // set when the learner believes it solved exactly
  std::string algo;
};

using Learner = std::function<LearnerReport(Oracles&, const RngSeed&)>;

// Gaussian elimination over GF(2) with an affine column. Exact on
// linear/affine targets once the collected system has full rank. On
// inconsistent systems the best-effort fallback picks the best of the
// eliminated solution, the constants and the (negated) dictators by sample
// agreement, and the report is flagged non-exact.
LearnerReport gf2_linear_learner(Oracles& oracles, const RngSeed& seed);

struct LowDegreeOptions {
  int degree = 1;
  std::uint64_t n_samples = 1000;
  // Sweep all 2^k inputs once instead of sampling (test/diagnostic mode;
  // requires n_samples == 2^k).
  bool exhaustive = false;
};

LearnerReport low_degree_learner(const LowDegreeOptions& opt, Oracles& oracles,
                                 const RngSeed& seed);

struct JuntaOptions {
  int junta_bound = 4;
  std::uint64_t max_fourier_samples = 200;
  int patience = 50;  // consecutive non-growing samples before support is final
  std::uint64_t max_examples = 2000;
};

LearnerReport junta_learner(const JuntaOptions& opt, Oracles& oracles, const RngSeed& seed);

// Memorizes `budget` distinct uniformly chosen points; everywhere else the
// hypothesis answers a coin fixed per point by hashing, so it is a bona
// fide function.
LearnerReport memorizing_learner(Oracles& oracles, const RngSeed& seed);

LearnerReport cheat_learner(const BoolFn& target);

// Fraction of agreement with the target: exhaustive for k <= 16, sampled
// at `samples` points above.
double hypothesis_agreement(const Hypothesis& h, const BoolFn& target, const RngSeed& seed,
                            std::uint64_t samples = 10000);

Learner make_named_learner(const std::string& name, std::uint64_t budget);

}  // namespace hardlearn
