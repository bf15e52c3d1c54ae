#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "hardlearn/fourier.hpp"
#include "hardlearn/lattice.hpp"
#include "hardlearn/learners.hpp"
#include "hardlearn/pke.hpp"
#include "hardlearn/prf.hpp"

namespace hardlearn {

// ---- learner -> PRF distinguisher ----------------------------------------

// A challenge function handed to the distinguisher: black-box query access
// plus a flag for the cheat convention.
struct ChallengeFn {
  int k = 0;
  std::function<int(std::uint64_t)> fn;
  bool planted = false;
};

using FamilySampler = std::function<ChallengeFn(const RngSeed&)>;

struct DistinguisherSpec {
  Learner learner;
  std::uint64_t budget = 64;
  int challenge_count = 1;
  // Cheat convention: on the planted arm the hypothesis is the challenge
  // function itself; on the uniform arm there is no key to cheat with, so
  // the harness substitutes a coin hypothesis.
  bool cheat = false;
};

// Wraps the learner per the reduction: run it against the challenge
// oracle, draw a fresh uniform x*, output 1 iff h(x*) agrees. The
// challenge query is the distinguisher's own and is not charged to the
// learner budget. A learner failure counts as output 0.
AdvantageEstimate learner_to_prf_distinguisher(const DistinguisherSpec& spec,
                                               const FamilySampler& planted_family, int k,
                                               std::uint64_t trials, const RngSeed& seed,
                                               CiMethod method = CiMethod::Wald);

FamilySampler prf_family_sampler(const PrfParams& params);
FamilySampler linear_family_sampler(int k);
FamilySampler junta_family_sampler(int k, int junta_size);

// Mean hypothesis agreement of a learner against planted targets, with the
// same black-box oracle modality as the distinguishing game.
double measure_planted_bias(const DistinguisherSpec& spec, const FamilySampler& family, int k,
                            std::uint64_t trials, const RngSeed& seed);

// ---- random-function prediction bound ------------------------------------

// min(1, 1/2 + sqrt(k*q / 2^k)).
double random_prediction_bound(std::uint32_t k, std::uint64_t queries);

// ---- theorem parameter arithmetic ----------------------------------------

struct InequalityLink {
  std::string name;
  double lhs_log2 = 0.0;  // both sides in log2 space
  double rhs_log2 = 0.0;
  bool pass = false;      // lhs >= rhs (within fp slack for equality cases)
  double margin_log2 = 0.0;
};

struct ParamsReport {
  std::map<std::string, double> derived;
  std::vector<InequalityLink> links;
  std::vector<std::string> warnings;
  bool all_pass = false;
  // Largest relative disagreement between the double log-space evaluation
  // and the high-precision recomputation.
  double crosscheck_max_rel_err = 0.0;
};

// Feasibility of the distinguisher corollary at explicit (M, k, a, t, beta):
// t <= M^{D-a} and beta >= 2 sqrt(k / M^a), with D = k / log2 M required to
// lie in [2, M / (4 log2 M)].
ParamsReport corollary_feasibility(double M, double k, double a, double t, double beta);

// Parameter chain of the quasi-polynomial hardness theorem:
// k = log^alpha n, gamma = n^tau, log2 q = gamma k/(k+1), M = gamma k,
// D = k / log2 M, minimal a = 2(delta+1)/tau.
ParamsReport tc0_param_report(double n, double alpha, double tau, double delta);

// Parameter chain of the sub-exponential hardness theorem:
// d = log^c n, k = d^(1/eta), log2 q = k^2/(k+1) log2 d, M = k^2 log2 d,
// D = sqrt(M)/log2 M, nu = c/eta - 1.
ParamsReport ac0_param_report(double n, double c, double eta, double a);

// ---- quantum example-state gap -------------------------------------------

// t * (2 - 2 sqrt((L-1)/L)): the squared distance between the ideal and
// real training states, exactly linear in the copy count.
double example_state_gap(double t, double L);

// ---- learner -> PKE adversary ---------------------------------------------

using PkeHypothesis = std::function<int(const Ciphertext&)>;
// Trains on a labeled multiset of (ciphertext, bit); returns a predictor.
using PkeLearner =
    std::function<PkeHypothesis(const std::vector<std::pair<Ciphertext, int>>&, const RngSeed&)>;

struct PkeAdversarySpec {
  PkeLearner learner;
  std::uint64_t training_size = 64;  // L; the challenge is the held-out pair
  std::uint64_t training_draws = 0;  // uniform draws shown to the learner; 0 = whole multiset
};

struct PkeAdversaryResult {
  double success = 0.0;
  double ci_low = 0.0, ci_high = 0.0;
  std::uint64_t trials = 0;
  // Context: decryption error of the underlying scheme at these params.
  double decryption_error = 0.0;
};

// Per trial: fresh keypair, challenge (r*, b*) -> e*, training multiset of
// L-1 random (r, b) encryptions, learner trained on uniform draws from the
// multiset, output h(e*). Learner failure counts as a coin flip.
PkeAdversaryResult learner_to_pke_adversary(const PkeAdversarySpec& spec, const PkeParams& params,
                                            std::uint64_t trials, const RngSeed& seed);

// Built-in adversary learners.
PkeLearner pke_coin_learner();
PkeLearner pke_memorizing_learner();
// Ignores the training set and decrypts with the private key; the harness
// wires the key in per trial.
struct CheatDecryptorTag {};

PkeAdversaryResult cheat_decryptor_adversary(const PkeParams& params, std::uint64_t trials,
                                             const RngSeed& seed);

}  // namespace hardlearn
