#include <cmath>

#include "doctest.h"
#include "hardlearn/reductions.hpp"

using namespace hardlearn;

namespace {

PrfParams desk_prf(std::uint32_t k = 16) {
  PrfParams p;
  p.d = 8;
  p.q = 1u << 20;
  p.p = 4;
  p.k = k;
  p.secret_dist = GaussianSecrets{GaussianParams::with_default_tail(3.0)};
  return p;
}

PkeParams desk_pke() {
  return PkeParams{32, 1u << 15, 300, GaussianParams::with_default_tail(10.0)};
}

}  // namespace

TEST_SUITE("reductions") {

TEST_CASE("random prediction bound: formula values") {
  CHECK(random_prediction_bound(16, 16) == doctest::Approx(0.5625).epsilon(1e-15));
  CHECK(random_prediction_bound(16, 0) == 0.5);
  CHECK(random_prediction_bound(4, 1u << 20) == 1.0);  // clamped
}

TEST_CASE("cheat learner distinguishes perfectly on the planted arm") {
  DistinguisherSpec spec;
  spec.cheat = true;
  spec.budget = 0;
  const auto est = learner_to_prf_distinguisher(spec, prf_family_sampler(desk_prf()), 16, 300,
                                                RngSeed{110, 0});
  CHECK(est.p_planted == 1.0);
  CHECK(std::abs(est.p_uniform - 0.5) <= 4.0 * 0.5 / std::sqrt(300.0));
  CHECK(est.advantage >= 0.4);
}

TEST_CASE("gf2 learner vs the linear family reaches advantage about one half") {
  DistinguisherSpec spec;
  spec.learner = make_named_learner("gf2-linear", 64);
  spec.budget = 64;
  const auto est = learner_to_prf_distinguisher(spec, linear_family_sampler(16), 16, 400,
                                                RngSeed{111, 0});
  CHECK(est.p_planted >= 0.98);
  CHECK(est.advantage >= 0.45);
}

TEST_CASE("memorizing learner gains nothing against the desk PRF") {
  DistinguisherSpec spec;
  spec.learner = make_named_learner("memorizing", 16);
  spec.budget = 16;
  const auto est = learner_to_prf_distinguisher(spec, prf_family_sampler(desk_prf()), 16, 300,
                                                RngSeed{112, 0});
  CHECK(est.advantage <= 0.02 + 3.0 * est.std_error);
}

TEST_CASE("advantage is at least the measured planted bias over two") {
  struct Pair {
    const char* name;
    DistinguisherSpec spec;
    FamilySampler family;
  };
  std::vector<Pair> pairs;
  {
    DistinguisherSpec cheat;
    cheat.cheat = true;
    pairs.push_back({"cheat/prf", cheat, prf_family_sampler(desk_prf())});
  }
  {
    DistinguisherSpec gf2;
    gf2.learner = make_named_learner("gf2-linear", 64);
    gf2.budget = 64;
    pairs.push_back({"gf2/linear", gf2, linear_family_sampler(16)});
  }
  {
    DistinguisherSpec memo;
    memo.learner = make_named_learner("memorizing", 16);
    memo.budget = 16;
    pairs.push_back({"memorizing/prf", memo, prf_family_sampler(desk_prf())});
  }
  {
    DistinguisherSpec lmn;
    lmn.learner = make_named_learner("low-degree-1", 512);
    lmn.budget = 512;
    pairs.push_back({"lmn1/prf", lmn, prf_family_sampler(desk_prf())});
  }
  for (auto& pair : pairs) {
    CAPTURE(pair.name);
    const double bias = measure_planted_bias(pair.spec, pair.family, 16, 40, RngSeed{113, 0});
    const auto est =
        learner_to_prf_distinguisher(pair.spec, pair.family, 16, 250, RngSeed{113, 1});
    const double bias_se = 0.5 / std::sqrt(40.0);
    CHECK(est.advantage >= bias / 2.0 - 3.0 * (est.std_error + bias_se));
  }
}

TEST_CASE("memorizing success on random functions stays under the lemma bound") {
  // Closed form 1/2 + q/2^{k+1} plus Monte Carlo, against 1/2 + sqrt(kq/2^k).
  const std::uint32_t k = 16;
  const std::uint64_t queries = 16;
  const double bound = random_prediction_bound(k, queries);
  const double closed_form = 0.5 + static_cast<double>(queries) / std::ldexp(1.0, k + 1);
  CHECK(closed_form <= bound);

  DistinguisherSpec spec;
  spec.learner = make_named_learner("memorizing", queries);
  spec.budget = queries;
  const auto est = learner_to_prf_distinguisher(spec, prf_family_sampler(desk_prf()),
                                                static_cast<int>(k), 400, RngSeed{114, 0});
  CHECK(est.p_uniform <= bound + 3.0 * est.std_error);
}

TEST_CASE("corollary feasibility: boundary equality passes, overdrawn budget fails") {
  const double M = std::ldexp(1.0, 20);
  const double k = 60.0, a = 1.0;
  const double D = k / 20.0;  // log2 M = 20
  const double beta_boundary = 2.0 * std::sqrt(k / std::pow(M, a));
  const double t_max = std::pow(M, D - a);

  const ParamsReport ok = corollary_feasibility(M, k, a, t_max, beta_boundary);
  CHECK(ok.all_pass);
  CHECK(ok.crosscheck_max_rel_err <= 1e-9);

  const ParamsReport bad = corollary_feasibility(M, k, a, t_max * 1.01, beta_boundary);
  CHECK(!bad.all_pass);
  bool found = false;
  for (const auto& link : bad.links) {
    if (link.name.find("time_budget") != std::string::npos) {
      found = true;
      CHECK(!link.pass);
      CHECK(link.margin_log2 < 0.0);
    }
  }
  CHECK(found);
}

TEST_CASE("tc0 parameter chain passes at the reference point") {
  const ParamsReport rep = tc0_param_report(std::ldexp(1.0, 20), 3.0, 0.5, 1.0);
  CHECK(rep.all_pass);
  CHECK(rep.crosscheck_max_rel_err <= 1e-9);
  CHECK(rep.derived.at("k") == doctest::Approx(8000.0));
  CHECK(rep.derived.at("a") == doctest::Approx(8.0));
  CHECK(rep.derived.at("D") == doctest::Approx(8000.0 / (10.0 + std::log2(8000.0))));
}

TEST_CASE("degenerate tau makes the budget link fail and is flagged") {
  const ParamsReport rep = tc0_param_report(1024.0, 2.5, 0.1, 1.0);
  CHECK(!rep.all_pass);
  bool budget_failed = false;
  for (const auto& link : rep.links) {
    if (link.name.find("time_budget") != std::string::npos && !link.pass) {
      budget_failed = true;
    }
  }
  CHECK(budget_failed);
}

TEST_CASE("increasing alpha never flips a passing budget link to failing") {
  bool passed_before = false;
  for (double alpha : {2.2, 2.6, 3.0, 3.5, 4.0, 5.0}) {
    const ParamsReport rep = tc0_param_report(std::ldexp(1.0, 20), alpha, 0.5, 1.0);
    bool budget_pass = false;
    for (const auto& link : rep.links) {
      if (link.name.find("time_budget") != std::string::npos) {
        budget_pass = link.pass;
      }
    }
    if (passed_before) {
      CHECK(budget_pass);
    }
    passed_before = passed_before || budget_pass;
  }
  CHECK(passed_before);
}

TEST_CASE("tc0 preconditions are enforced") {
  CHECK_THROWS_AS(tc0_param_report(1024.0, 2.0, 0.5, 1.0), Error);   // alpha <= 2
  CHECK_THROWS_AS(tc0_param_report(1024.0, 3.0, 1.0, 1.0), Error);   // tau >= 1
  CHECK_THROWS_AS(tc0_param_report(1024.0, 3.0, 0.5, -1.0), Error);  // delta <= 0
}

TEST_CASE("ac0 parameter chain passes at the reference point") {
  const ParamsReport rep = ac0_param_report(std::ldexp(1.0, 32), 5.0, 2.25, 2.0);
  CHECK(rep.all_pass);
  CHECK(rep.crosscheck_max_rel_err <= 1e-9);
  CHECK(rep.derived.at("nu") == doctest::Approx(5.0 / 2.25 - 1.0));
  CHECK(rep.derived.at("d") == doctest::Approx(std::pow(32.0, 5.0)));
  // The budget chain reproduces the intermediate sqrt(M)/2 bound.
  const double M = rep.derived.at("M");
  bool checked = false;
  for (const auto& link : rep.links) {
    if (link.name == "budget_(D-a)log2M_ge_sqrtM/2") {
      CHECK(link.rhs_log2 == doctest::Approx(std::sqrt(M) / 2.0));
      CHECK(link.pass);
      checked = true;
    }
  }
  CHECK(checked);
}

TEST_CASE("ac0 boundary c = eta violates the precondition") {
  CHECK_THROWS_WITH_AS(ac0_param_report(std::ldexp(1.0, 32), 2.25, 2.25, 2.0),
                       doctest::Contains("c > eta"), Error);
  CHECK_THROWS_AS(ac0_param_report(std::ldexp(1.0, 32), 5.0, 2.25, 1.0), Error);  // a < 2
}

TEST_CASE("example state gap: exact value, linearity, asymptote") {
  // Single-copy gap at L=4: inner product (L-1)/sqrt(L(L-1)) = sqrt(3)/2,
  // so the squared distance is 2 - sqrt(3).
  const double ip = 3.0 / std::sqrt(4.0 * 3.0);
  CHECK(example_state_gap(1, 4) == doctest::Approx(2.0 - 2.0 * ip).epsilon(1e-15));
  CHECK(example_state_gap(1, 4) == doctest::Approx(2.0 - std::sqrt(3.0)).epsilon(1e-12));
  CHECK(example_state_gap(0, 4) == 0.0);

  // Exact linearity in t.
  for (double t : {2.0, 7.0, 123.0}) {
    CHECK(example_state_gap(t, 17) == t * example_state_gap(1, 17));
  }

  // Series: 2 - 2 sqrt(1 - 1/L) = 1/L + O(1/L^2), so gap(t, L) -> t/L.
  const double L = 1e6;
  CHECK(example_state_gap(1, L) * L == doctest::Approx(1.0).epsilon(0.01));

  CHECK_THROWS_AS(example_state_gap(1, 1), Error);
}

TEST_CASE("cheat decryptor wins the PKE game up to decryption error") {
  const auto res = cheat_decryptor_adversary(desk_pke(), 300, RngSeed{115, 0});
  CHECK(res.success >= 0.99);
  CHECK(res.success >= 1.0 - res.decryption_error - 1e-12);
}

TEST_CASE("coin learner stays near one half") {
  PkeAdversarySpec spec;
  spec.learner = pke_coin_learner();
  spec.training_size = 16;
  const auto res = learner_to_pke_adversary(spec, desk_pke(), 400, RngSeed{116, 0});
  CHECK(res.success >= 0.4);
  CHECK(res.success <= 0.6);
}

TEST_CASE("memorizing adversary cannot hit fresh ciphertexts") {
  PkeAdversarySpec spec;
  spec.learner = pke_memorizing_learner();
  spec.training_size = 64;
  const auto res = learner_to_pke_adversary(spec, desk_pke(), 400, RngSeed{117, 0});
  // The challenge never collides with the training multiset at these sizes.
  CHECK(std::abs(res.success - 0.5) <= 4.0 * 0.5 / std::sqrt(400.0));
}

TEST_CASE("PKE game rejects degenerate training sizes") {
  PkeAdversarySpec spec;
  spec.learner = pke_coin_learner();
  spec.training_size = 1;
  CHECK_THROWS_AS(learner_to_pke_adversary(spec, desk_pke(), 10, RngSeed{118, 0}), Error);
}

TEST_CASE("distinguisher games are deterministic given the seed") {
  DistinguisherSpec spec;
  spec.learner = make_named_learner("gf2-linear", 64);
  spec.budget = 64;
  const auto a =
      learner_to_prf_distinguisher(spec, linear_family_sampler(12), 12, 100, RngSeed{119, 0});
  const auto b =
      learner_to_prf_distinguisher(spec, linear_family_sampler(12), 12, 100, RngSeed{119, 0});
  CHECK(a.p_planted == b.p_planted);
  CHECK(a.p_uniform == b.p_uniform);
}

}  // TEST_SUITE
