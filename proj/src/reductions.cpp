#include "hardlearn/reductions.hpp"

#include <mpfr.h>

#include <algorithm>
#include <bit>
#include <cmath>

namespace hardlearn {

namespace {

// Equality-boundary links must pass, so allow a whisker of fp slack.
constexpr double kLinkSlack = 1e-12;

InequalityLink make_link(const std::string& name, double lhs, double rhs) {
  InequalityLink link;
  link.name = name;
  link.lhs_log2 = lhs;
  link.rhs_log2 = rhs;
  link.margin_log2 = lhs - rhs;
  link.pass = lhs >= rhs - kLinkSlack * std::max({1.0, std::abs(lhs), std::abs(rhs)});
  return link;
}

void finish_report(ParamsReport& rep) {
  rep.all_pass = true;
  for (const auto& link : rep.links) {
    rep.all_pass = rep.all_pass && link.pass;
  }
}

// 256-bit floating point recomputation of the same quantities; the
// double-path log-space arithmetic must agree to 1e-9 relative error.
class Real {
public:
  Real() { mpfr_init2(v_, 256); }
  explicit Real(double d) : Real() { mpfr_set_d(v_, d, MPFR_RNDN); }
  Real(const Real& o) : Real() { mpfr_set(v_, o.v_, MPFR_RNDN); }
  Real& operator=(const Real& o) {
    mpfr_set(v_, o.v_, MPFR_RNDN);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  friend Real operator+(const Real& a, const Real& b) {
    Real r;
    mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator-(const Real& a, const Real& b) {
    Real r;
    mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator*(const Real& a, const Real& b) {
    Real r;
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator/(const Real& a, const Real& b) {
    Real r;
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  static Real log2(const Real& a) {
    Real r;
    mpfr_log2(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  static Real pow(const Real& a, const Real& b) {
    Real r;
    mpfr_pow(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  static Real sqrt(const Real& a) {
    Real r;
    mpfr_sqrt(r.v_, a.v_, MPFR_RNDN);
    return r;
  }

private:
  mpfr_t v_;
};

double rel_err(double a, double b) {
  return std::abs(a - b) / std::max(1.0, std::abs(b));
}

// Track the worst double-vs-mpfr disagreement over named checkpoints.
struct CrossCheck {
  double worst = 0.0;
  void note(double dbl, const Real& precise) {
    worst = std::max(worst, rel_err(dbl, precise.to_double()));
  }
};

int coin_from(const RngSeed& seed, std::uint64_t x, std::uint64_t salt) {
  return static_cast<int>(mix64(mix64(seed.stream ^ salt) ^ x) & 1u);
}

}  // namespace

// ---- PRF game --------------------------------------------------------------

FamilySampler prf_family_sampler(const PrfParams& params) {
  validate_prf_params(params);
  return [params](const RngSeed& seed) {
    Philox4x32 rng(seed);
    auto key = std::make_shared<PrfKey>(prf_keygen(params, rng));
    ChallengeFn ch;
    ch.k = static_cast<int>(params.k);
    ch.planted = true;
    ch.fn = [key](std::uint64_t x) { return prf_eval_bit(*key, x); };
    return ch;
  };
}

FamilySampler linear_family_sampler(int k) {
  return [k](const RngSeed& seed) {
    Philox4x32 rng(seed);
    const std::uint64_t s = rng.uniform_below(std::uint64_t{1} << k);
    ChallengeFn ch;
    ch.k = k;
    ch.planted = true;
    ch.fn = [s](std::uint64_t x) { return std::popcount(s & x) & 1; };
    return ch;
  };
}

FamilySampler junta_family_sampler(int k, int junta_size) {
  return [k, junta_size](const RngSeed& seed) {
    Philox4x32 rng(seed);
    // Choose junta_size distinct variables, then a random subtable.
    std::vector<int> vars;
    while (static_cast<int>(vars.size()) < junta_size) {
      const int v = static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(k)));
      if (std::find(vars.begin(), vars.end(), v) == vars.end()) {
        vars.push_back(v);
      }
    }
    std::sort(vars.begin(), vars.end());
    std::vector<std::uint8_t> sub(std::size_t{1} << junta_size);
    for (auto& b : sub) {
      b = static_cast<std::uint8_t>(rng.coin());
    }
    ChallengeFn ch;
    ch.k = k;
    ch.planted = true;
    ch.fn = [vars, sub](std::uint64_t x) {
      std::uint64_t idx = 0;
      for (std::size_t i = 0; i < vars.size(); ++i) {
        idx |= ((x >> vars[i]) & 1u) << i;
      }
      return static_cast<int>(sub[idx]);
    };
    return ch;
  };
}

namespace {

ChallengeFn uniform_challenge(int k, const RngSeed& seed) {
  auto oracle = std::make_shared<RandomFunctionOracle>(k, seed);
  ChallengeFn ch;
  ch.k = k;
  ch.planted = false;
  ch.fn = [oracle](std::uint64_t x) { return oracle->query(x); };
  return ch;
}

int run_prf_distinguisher(const DistinguisherSpec& spec, ChallengeFn& inst,
                          const RngSeed& dist_seed) {
  const RngSeed learner_seed = derive_stream(dist_seed, 0);
  const RngSeed challenge_seed = derive_stream(dist_seed, 1);

  Hypothesis h;
  bool have_h = false;
  if (spec.cheat) {
    if (inst.planted) {
      HypCallback cb;
      cb.k = inst.k;
      cb.fn = inst.fn;
      h = Hypothesis(std::move(cb));
    } else {
      // No key to cheat with on the uniform arm: coin hypothesis.
      HypCallback cb;
      cb.k = inst.k;
      const RngSeed coin_seed = learner_seed;
      cb.fn = [coin_seed](std::uint64_t x) { return coin_from(coin_seed, x, 0x1eaf); };
      h = Hypothesis(std::move(cb));
    }
    have_h = true;
  } else {
    BoolFn target = BoolFn::from_fn(inst.k, inst.fn);
    Oracles oracles(target, spec.budget, learner_seed, /*enable_fourier=*/false);
    try {
      LearnerReport rep = spec.learner(oracles, derive_stream(learner_seed, 1));
      h = std::move(rep.hypothesis);
      have_h = true;
    } catch (const Error&) {
      have_h = false;  // learner failure counts as output 0
    }
  }
  if (!have_h) {
    return 0;
  }
  Philox4x32 rng(challenge_seed);
  int out = 1;
  for (int c = 0; c < std::max(1, spec.challenge_count); ++c) {
    const std::uint64_t x = rng.uniform_below(std::uint64_t{1} << inst.k);
    out &= (h.evaluate(x) == inst.fn(x)) ? 1 : 0;
  }
  return out;
}

}  // namespace

AdvantageEstimate learner_to_prf_distinguisher(const DistinguisherSpec& spec,
                                               const FamilySampler& planted_family, int k,
                                               std::uint64_t trials, const RngSeed& seed,
                                               CiMethod method) {
  auto distinguisher = [&spec](ChallengeFn& inst, const RngSeed& s) {
    return run_prf_distinguisher(spec, inst, s);
  };
  auto gen_planted = [&planted_family](const RngSeed& s) { return planted_family(s); };
  auto gen_uniform = [k](const RngSeed& s) { return uniform_challenge(k, s); };
  return estimate_advantage<ChallengeFn>(distinguisher, gen_planted, gen_uniform, trials, seed,
                                         method);
}

double measure_planted_bias(const DistinguisherSpec& spec, const FamilySampler& family,
                            int /*k*/, std::uint64_t trials, const RngSeed& seed) {
  double total = 0.0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    const RngSeed trial_seed = derive_stream(seed, t);
    ChallengeFn inst = family(derive_stream(trial_seed, 0));
    const RngSeed learner_seed = derive_stream(trial_seed, 1);
    BoolFn target = BoolFn::from_fn(inst.k, inst.fn);
    double agreement = 0.5;
    if (spec.cheat) {
      agreement = 1.0;
    } else {
      Oracles oracles(target, spec.budget, learner_seed, /*enable_fourier=*/false);
      try {
        LearnerReport rep = spec.learner(oracles, derive_stream(learner_seed, 1));
        agreement =
            hypothesis_agreement(rep.hypothesis, target, derive_stream(trial_seed, 2));
      } catch (const Error&) {
        agreement = 0.5;
      }
    }
    total += agreement - 0.5;
  }
  return total / static_cast<double>(trials);
}

// ---- prediction bound ------------------------------------------------------

double random_prediction_bound(std::uint32_t k, std::uint64_t queries) {
  if (k < 1) {
    throw Error::domain("random_prediction_bound: k must be >= 1");
  }
  const double ratio = static_cast<double>(k) * static_cast<double>(queries) /
                       std::ldexp(1.0, static_cast<int>(k));
  return std::min(1.0, 0.5 + std::sqrt(ratio));
}

// ---- theorem arithmetic -----------------------------------------------------

ParamsReport corollary_feasibility(double M, double k, double a, double t, double beta) {
  if (M < 2 || k < 1) {
    throw Error::domain("corollary_feasibility: need M >= 2 and k >= 1");
  }
  ParamsReport rep;
  CrossCheck xc;

  const double log2M = std::log2(M);
  const double D = k / log2M;
  rep.derived["M"] = M;
  rep.derived["k"] = k;
  rep.derived["a"] = a;
  rep.derived["D"] = D;

  Real rM(M), rk(k), ra(a);
  const Real rlog2M = Real::log2(rM);
  const Real rD = rk / rlog2M;
  xc.note(log2M, rlog2M);
  xc.note(D, rD);

  // Out-of-range D is flagged, not fatal.
  if (D < 2.0 || D > M / (4.0 * log2M)) {
    rep.warnings.push_back("D outside the corollary range [2, M/(4 log M)]");
  }

  // t <= M^{D-a}, compared in log2 space.
  const double lhs_budget = (D - a) * log2M;
  const double rhs_budget = std::log2(t);
  xc.note(lhs_budget, (rD - ra) * rlog2M);
  xc.note(rhs_budget, Real::log2(Real(t)));
  rep.links.push_back(make_link("time_budget_t_le_M^(D-a)", lhs_budget, rhs_budget));

  // beta >= 2 sqrt(k / M^a).
  const double lhs_bias = std::log2(beta);
  const double rhs_bias = 1.0 + 0.5 * (std::log2(k) - a * log2M);
  xc.note(lhs_bias, Real::log2(Real(beta)));
  xc.note(rhs_bias, Real(1.0) + Real(0.5) * (Real::log2(rk) - ra * rlog2M));
  rep.links.push_back(make_link("bias_beta_ge_2sqrt(k/M^a)", lhs_bias, rhs_bias));

  rep.crosscheck_max_rel_err = xc.worst;
  finish_report(rep);
  return rep;
}

ParamsReport tc0_param_report(double n, double alpha, double tau, double delta) {
  if (!(alpha > 2.0)) {
    throw Error::domain("tc0_param_report: need alpha > 2");
  }
  if (!(tau > 0.0 && tau < 1.0)) {
    throw Error::domain("tc0_param_report: need 0 < tau < 1");
  }
  if (!(delta > 0.0)) {
    throw Error::domain("tc0_param_report: need delta > 0");
  }
  ParamsReport rep;
  CrossCheck xc;

  const double log2n = std::log2(n);
  const double k = std::pow(log2n, alpha);
  const double log2gamma = tau * log2n;  // gamma = n^tau
  const double log2q = log2gamma * k / (k + 1.0);
  // M = (k+1) log2 q = gamma k.
  const double M = std::pow(2.0, log2gamma) * k;
  const double log2M = log2gamma + std::log2(k);
  const double D = k / log2M;
  const double a = 2.0 * (delta + 1.0) / tau;

  rep.derived["k"] = k;
  rep.derived["log2_gamma"] = log2gamma;
  rep.derived["log2_q"] = log2q;
  rep.derived["M_log2"] = log2M;
  rep.derived["D"] = D;
  rep.derived["a"] = a;
  rep.derived["log2_beta"] = -delta * log2n;

  Real rlog2n = Real::log2(Real(n));
  Real rk = Real::pow(rlog2n, Real(alpha));
  Real rlog2gamma = Real(tau) * rlog2n;
  Real rlog2M = rlog2gamma + Real::log2(rk);
  Real rD = rk / rlog2M;
  Real ra = Real(2.0) * (Real(delta) + Real(1.0)) / Real(tau);
  xc.note(k, rk);
  xc.note(log2M, rlog2M);
  xc.note(D, rD);
  xc.note(a, ra);

  // Chain link 1: delta <= tau a / 2 - 1, i.e. n^-delta >= n^(1 - tau a/2).
  rep.links.push_back(make_link("exponent_delta_le_tau_a_over_2_minus_1", tau * a / 2.0 - 1.0,
                                delta));
  xc.note(tau * a / 2.0 - 1.0, Real(tau) * ra / Real(2.0) - Real(1.0));

  // Chain link 2: n^-(tau a/2 - 1) >= 2 sqrt(k / M^a) in log2 space.
  const double lhs2 = -(tau * a / 2.0 - 1.0) * log2n;
  const double rhs2 = 1.0 + 0.5 * (std::log2(k) - a * log2M);
  rep.links.push_back(make_link("middle_n^-(tau_a/2-1)_ge_2sqrt(k/M^a)", lhs2, rhs2));
  xc.note(lhs2, (Real(1.0) - Real(tau) * ra / Real(2.0)) * rlog2n);
  xc.note(rhs2, Real(1.0) + Real(0.5) * (Real::log2(rk) - ra * rlog2M));

  // Theorem precondition: beta(n) = n^-delta >= 2 sqrt(k / M^a).
  const double lhs3 = -delta * log2n;
  rep.links.push_back(make_link("bias_beta_ge_2sqrt(k/M^a)", lhs3, rhs2));
  xc.note(lhs3, Real(0.0) - Real(delta) * rlog2n);

  // Corollary range for D.
  rep.links.push_back(make_link("D_range_low", D, 2.0));
  rep.links.push_back(make_link("D_range_high", M / (4.0 * log2M), D));
  xc.note(M / (4.0 * log2M),
          Real::pow(Real(2.0), rlog2gamma) * rk / (Real(4.0) * rlog2M));

  // Budget: M^{D-a} >= t(n) for the quasi-polynomial budget t(n) =
  // 2^{(log2 n)^2}.
  const double lhs4 = (D - a) * log2M;
  const double rhs4 = log2n * log2n;
  rep.links.push_back(make_link("time_budget_M^(D-a)_ge_quasipoly", lhs4, rhs4));
  xc.note(lhs4, (rD - ra) * rlog2M);
  xc.note(rhs4, rlog2n * rlog2n);

  rep.crosscheck_max_rel_err = xc.worst;
  finish_report(rep);
  return rep;
}

ParamsReport ac0_param_report(double n, double c, double eta, double a) {
  if (!(c > eta && eta > 2.0)) {
    throw Error::domain("ac0_param_report: need c > eta > 2");
  }
  if (!(a >= 2.0)) {
    throw Error::domain("ac0_param_report: need a >= 2");
  }
  ParamsReport rep;
  CrossCheck xc;

  const double log2n = std::log2(n);
  const double d = std::pow(log2n, c);
  const double k = std::pow(d, 1.0 / eta);
  const double log2d = std::log2(d);
  const double log2q = k * k / (k + 1.0) * log2d;
  const double M = k * k * log2d;  // (k+1) log2 q by construction
  const double log2M = std::log2(M);
  const double D = std::sqrt(M) / log2M;
  const double nu = c / eta - 1.0;

  rep.derived["d"] = d;
  rep.derived["k"] = k;
  rep.derived["log2_q"] = log2q;
  rep.derived["M"] = M;
  rep.derived["D"] = D;
  rep.derived["nu"] = nu;
  const double log2beta = 1.0 + (c * (1.0 - 2.0 * a) / (2.0 * eta)) * std::log2(log2n);
  rep.derived["log2_beta"] = log2beta;

  Real rlog2n = Real::log2(Real(n));
  Real rd = Real::pow(rlog2n, Real(c));
  Real rk = Real::pow(rd, Real(1.0) / Real(eta));
  Real rlog2d = Real::log2(rd);
  Real rM = rk * rk * rlog2d;
  Real rlog2M = Real::log2(rM);
  Real rD = Real::sqrt(rM) / rlog2M;
  xc.note(d, rd);
  xc.note(k, rk);
  xc.note(M, rM);
  xc.note(D, rD);
  xc.note(log2q, rk * rk / (rk + Real(1.0)) * rlog2d);

  // Consistency: M = (k+1) log2 q exactly by construction.
  const double m_alt = (k + 1.0) * log2q;
  rep.links.push_back(make_link("M_eq_(k+1)log2q", -std::abs(std::log2(M / m_alt)), -1e-9));

  // Bias chain: beta(n) = 2 (log2 n)^{c(1-2a)/2 eta} >= 2 sqrt(k/k^{2a})
  // >= 2 sqrt(k/M^a).
  const double mid = 1.0 + 0.5 * (std::log2(k) - 2.0 * a * std::log2(k));
  const double rhs = 1.0 + 0.5 * (std::log2(k) - a * log2M);
  rep.links.push_back(make_link("bias_beta_ge_2sqrt(k/k^2a)", log2beta, mid));
  rep.links.push_back(make_link("bias_2sqrt(k/k^2a)_ge_2sqrt(k/M^a)", mid, rhs));
  rep.links.push_back(make_link("bias_beta_ge_2sqrt(k/M^a)", log2beta, rhs));
  xc.note(log2beta, Real(1.0) + Real(c) * (Real(1.0) - Real(2.0) * Real(a)) /
                                    (Real(2.0) * Real(eta)) * Real::log2(rlog2n));
  xc.note(rhs, Real(1.0) + Real(0.5) * (Real::log2(rk) - Real(a) * rlog2M));

  // Budget chain: (D-a) log2 M >= sqrt(M)/2 >= d^{1/eta}.
  const double lhs_budget = (D - a) * log2M;
  const double half_sqrtM = std::sqrt(M) / 2.0;
  rep.links.push_back(make_link("budget_(D-a)log2M_ge_sqrtM/2", lhs_budget, half_sqrtM));
  rep.links.push_back(make_link("budget_sqrtM/2_ge_d^(1/eta)", half_sqrtM, k));
  rep.links.push_back(make_link("time_budget_M^(D-a)_ge_2^d^(1/eta)", lhs_budget, k));
  xc.note(lhs_budget, (rD - Real(a)) * rlog2M);
  xc.note(half_sqrtM, Real::sqrt(rM) / Real(2.0));

  // Corollary range for D.
  rep.links.push_back(make_link("D_range_low", D, 2.0));
  rep.links.push_back(make_link("D_range_high", M / (4.0 * log2M), D));

  rep.crosscheck_max_rel_err = xc.worst;
  finish_report(rep);
  return rep;
}

// ---- example-state gap -------------------------------------------------------

double example_state_gap(double t, double L) {
  if (L < 2.0) {
    throw Error::domain("example_state_gap: need L >= 2");
  }
  if (t < 0.0) {
    throw Error::domain("example_state_gap: need t >= 0");
  }
  const double single = 2.0 - 2.0 * std::sqrt((L - 1.0) / L);
  return t * single;
}

// ---- PKE adversary -----------------------------------------------------------

PkeLearner pke_coin_learner() {
  return [](const std::vector<std::pair<Ciphertext, int>>&, const RngSeed& seed) {
    return PkeHypothesis([seed](const Ciphertext& ct) {
      std::uint64_t h = mix64(seed.stream ^ 0xc01),
                    acc = h;
      for (std::uint64_t v : ct.a) {
        acc = mix64(acc ^ v);
      }
      acc = mix64(acc ^ ct.c);
      return static_cast<int>(acc & 1u);
    });
  };
}

PkeLearner pke_memorizing_learner() {
  return [](const std::vector<std::pair<Ciphertext, int>>& training, const RngSeed& seed) {
    auto table = std::make_shared<std::map<std::vector<std::uint64_t>, int>>();
    for (const auto& [ct, bit] : training) {
      std::vector<std::uint64_t> flat = ct.a;
      flat.push_back(ct.c);
      (*table)[flat] = bit;
    }
    const std::uint64_t salt = mix64(seed.stream ^ 0x3e3);
    return PkeHypothesis([table, salt](const Ciphertext& ct) {
      std::vector<std::uint64_t> flat = ct.a;
      flat.push_back(ct.c);
      auto it = table->find(flat);
      if (it != table->end()) {
        return it->second;
      }
      std::uint64_t acc = salt;
      for (std::uint64_t v : flat) {
        acc = mix64(acc ^ v);
      }
      return static_cast<int>(acc & 1u);
    });
  };
}

namespace {

PkeAdversaryResult run_pke_game(const PkeParams& params, std::uint64_t trials,
                                const RngSeed& seed,
                                const std::function<int(const KeyPair&, const Ciphertext&,
                                                        const std::vector<std::pair<Ciphertext, int>>&,
                                                        const RngSeed&)>& predict) {
  if (trials < 1) {
    throw Error::domain("learner_to_pke_adversary: trials must be >= 1");
  }
  std::uint64_t wins = 0, dec_errors = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    const RngSeed trial_seed = derive_stream(seed, t);
    Philox4x32 rng(derive_stream(trial_seed, 0));
    KeyPair kp = pke_keygen(params, rng);
    const int b_star = rng.coin();
    const Ciphertext e_star = pke_encrypt(kp, b_star, rng);
    dec_errors += pke_decrypt(kp, e_star) != b_star;
    wins += predict(kp, e_star, {}, trial_seed) == b_star;
  }
  PkeAdversaryResult res;
  res.trials = trials;
  res.success = static_cast<double>(wins) / static_cast<double>(trials);
  std::tie(res.ci_low, res.ci_high) = clopper_pearson_95(wins, trials);
  res.decryption_error = static_cast<double>(dec_errors) / static_cast<double>(trials);
  return res;
}

}  // namespace

PkeAdversaryResult learner_to_pke_adversary(const PkeAdversarySpec& spec, const PkeParams& params,
                                            std::uint64_t trials, const RngSeed& seed) {
  if (spec.training_size < 2) {
    throw Error::domain("learner_to_pke_adversary: training size L must be >= 2");
  }
  std::uint64_t wins = 0, dec_errors = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    const RngSeed trial_seed = derive_stream(seed, t);
    Philox4x32 rng(derive_stream(trial_seed, 0));
    KeyPair kp = pke_keygen(params, rng);
    const int b_star = rng.coin();
    const Ciphertext e_star = pke_encrypt(kp, b_star, rng);
    dec_errors += pke_decrypt(kp, e_star) != b_star;

    // S_real: L-1 fresh uniformly random (r, b) pairs, encrypted.
    std::vector<std::pair<Ciphertext, int>> multiset;
    multiset.reserve(spec.training_size - 1);
    for (std::uint64_t i = 0; i + 1 < spec.training_size; ++i) {
      const int b = rng.coin();
      multiset.emplace_back(pke_encrypt(kp, b, rng), b);
    }

    // The learner sees uniform draws from the multiset (the classical
    // shadow of the real training state).
    std::vector<std::pair<Ciphertext, int>> shown;
    if (spec.training_draws == 0) {
      shown = multiset;
    } else {
      Philox4x32 draw_rng(derive_stream(trial_seed, 1));
      shown.reserve(spec.training_draws);
      for (std::uint64_t i = 0; i < spec.training_draws; ++i) {
        shown.push_back(multiset[draw_rng.uniform_below(multiset.size())]);
      }
    }

    int guess;
    try {
      PkeHypothesis h = spec.learner(shown, derive_stream(trial_seed, 2));
      guess = h(e_star) & 1;
    } catch (const Error&) {
      Philox4x32 coin_rng(derive_stream(trial_seed, 3));
      guess = coin_rng.coin();
    }
    wins += guess == b_star;
  }
  PkeAdversaryResult res;
  res.trials = trials;
  res.success = static_cast<double>(wins) / static_cast<double>(trials);
  std::tie(res.ci_low, res.ci_high) = clopper_pearson_95(wins, trials);
  res.decryption_error = static_cast<double>(dec_errors) / static_cast<double>(trials);
  return res;
}

PkeAdversaryResult cheat_decryptor_adversary(const PkeParams& params, std::uint64_t trials,
                                             const RngSeed& seed) {
  return run_pke_game(params, trials, seed,
                      [](const KeyPair& kp, const Ciphertext& ct,
                         const std::vector<std::pair<Ciphertext, int>>&, const RngSeed&) {
                        return pke_decrypt(kp, ct, DecryptRule::NearestCenter);
                      });
}

}  // namespace hardlearn
