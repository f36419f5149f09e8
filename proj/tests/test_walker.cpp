#include <doctest.h>

#include <random>

#include "pgfr/walker.hpp"
#include "test_util.hpp"

using namespace pgfr;

TEST_CASE("sample at t = 0") {
  FidelitySample s = sample_fidelity({3, {1, 5}, true}, {0}, {3}, 0.0);
  CHECK(std::abs(s.alpha_est - std::complex<double>(1.0, 0.0)) < 1e-12);
  CHECK(std::abs(s.beta_est) < 1e-12);
  CHECK(s.revival_fidelity == doctest::Approx(1.0));
  CHECK(std::abs(s.leak) < 1e-10);
  PhasePair p = measure_phases(s);
  CHECK(p.delta1 == doctest::Approx(0.0));
  CHECK(p.delta2 == doctest::Approx(0.0));
}

TEST_CASE("inadmissible pairs are rejected") {
  ConnectionSet s{3, {1, 5}, true};
  CHECK_THROWS_AS(sample_fidelity(s, {0}, {7}, 1.0), std::invalid_argument);  // cross-coset
  CHECK_THROWS_AS(sample_fidelity(s, {0}, {1}, 1.0), std::invalid_argument);  // wrong offset
}

TEST_CASE("fidelity plus leak is one along random times") {
  std::mt19937_64 rng(5150);
  ConnectionSet s{4, {1, 7}, true};
  WalkEvaluator walk(s);
  for (int trial = 0; trial < 50; ++trial) {
    const double t = static_cast<double>(rng() % 100000) / 1000.0;
    FidelitySample f = sample_fidelity(walk, 4, {2}, {6}, t);
    CHECK(f.revival_fidelity + f.leak == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(f.revival_fidelity >= 0.0);
    CHECK(f.revival_fidelity <= 1.0 + 1e-10);
  }
}

TEST_CASE("low fidelity samples cannot be phase-read") {
  ConnectionSet s{3, {1, 5}, true};
  // pick a time with poor fidelity
  WalkEvaluator walk(s);
  FidelitySample bad = sample_fidelity(walk, 3, {0}, {3}, 0.9);
  REQUIRE(bad.revival_fidelity < 0.9);
  CHECK_THROWS_AS(measure_phases(bad, 0.9), std::invalid_argument);
}

TEST_CASE("revival search on the admitting n=3 instance") {
  ConnectionSet s{3, {1, 5}, true};
  SearchConfig config;
  config.epsilon = 1e-2;
  config.t_max = 100.0;
  config.coarse_steps = 20'000;
  config.integer_budget = 16;
  SearchReport r = search_revival_time(s, {0}, {3}, 3, config);
  CHECK(r.target_reached);
  CHECK(r.best_fidelity >= 0.99);
  // the d = 3 split forces |alpha| -> 1/2 and split -> +-2*pi/3
  CHECK(std::abs(std::abs(r.best.alpha_est) - 0.5) < 0.05);
  REQUIRE(r.phase_estimates.has_value());
  CHECK(std::abs(std::abs(r.phase_estimates->split()) - 2.0 * M_PI / 3.0) < 0.1);
  // trace fidelities are non-decreasing and end at the best sample
  for (std::size_t i = 1; i < r.trace.size(); ++i)
    CHECK(r.trace[i].revival_fidelity >= r.trace[i - 1].revival_fidelity);
  CHECK(r.trace.back().revival_fidelity == doctest::Approx(r.best_fidelity));
}

TEST_CASE("integer-restricted search improves with budget on the n=8 instance") {
  ConnectionSet s{8, {1, 15}, true};
  SearchConfig config;
  config.integer_times_only = true;
  config.epsilon = 1e-6;  // unreachable: forces full candidate sweep
  config.t_max = 1e12;
  config.top_k = 32;
  double previous = 0.0;
  for (std::size_t budget : {100u, 10'000u, 1'000'000u}) {
    config.integer_budget = budget;
    SearchReport r = search_revival_time(s, {0}, {8}, 2, config);
    const double beta2 = std::norm(r.best.beta_est);
    CHECK(beta2 >= previous - 1e-12);
    previous = beta2;
  }
  CHECK(previous > 0.5);
}

TEST_CASE("exact periodicity of an integer-spectrum walk recurs") {
  // coset-only set at n = 2 has eigenvalues {4, -4, 0}: period pi/2
  ConnectionSet s{2, {}, true};
  SearchConfig config;
  config.epsilon = 1e-7;
  config.t_max = 10.0;
  config.coarse_steps = 40'000;
  config.integer_budget = 1;
  SearchReport r = search_revival_time(s, {0}, {0}, 0, config);
  CHECK(r.periodicity_mode);
  CHECK(r.best_fidelity >= 1.0 - 1e-6);
  CHECK(r.best_time > 0.0);
}

TEST_CASE("fidelity is Lipschitz in time with constant twice the spectral radius") {
  ConnectionSet s{3, {1, 5}, true};
  WalkEvaluator walk(s);
  const double radius = walk.spectrum().entries[0].value;  // valency = largest eigenvalue
  const double step = 1e-4;
  double prev = sample_fidelity(walk, 3, {0}, {3}, 0.0).revival_fidelity;
  for (int i = 1; i <= 2000; ++i) {
    const double cur = sample_fidelity(walk, 3, {0}, {3}, step * i).revival_fidelity;
    CHECK(std::abs(cur - prev) <= 2.0 * radius * step * 1.01);
    prev = cur;
  }
}

TEST_CASE("denied instances offer no high-beta revival in a modest budget") {
  ConnectionSet s{6, {1, 11}, true};
  SearchConfig config;
  config.epsilon = 1e-3;
  config.t_max = 400.0;
  config.coarse_steps = 40'000;
  config.integer_budget = 1'000;
  config.top_k = 48;
  SearchReport r = search_revival_time(s, {0}, {6}, 1, config);
  for (const FidelitySample& f : r.evaluated)
    CHECK(!(f.revival_fidelity >= 0.999 && std::norm(f.beta_est) >= 0.01));
}
