#include <doctest.h>

#include <cmath>

#include "xdescent/errors.hpp"
#include "xdescent/randmodel.hpp"

using namespace xdescent;

TEST_CASE("config validation") {
  ExperimentConfig cfg;
  cfg.n = 5;
  cfg.trials = 10;

  cfg.p = 0.0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg.p = 1.0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg.p = 0.5;
  CHECK_NOTHROW(cfg.validate());

  cfg.n = 30;
  CHECK_THROWS_AS(cfg.validate(), SizeLimit);
  cfg.n = 20;
  cfg.trials = 100000;
  CHECK_THROWS_AS(cfg.validate(), BudgetExceeded);
}

TEST_CASE("sampling is deterministic in (seed, trial)") {
  SplitMix64 a = SplitMix64::for_trial(42, 3);
  SplitMix64 b = SplitMix64::for_trial(42, 3);
  const Digraph first = sample_digraph(5, 0.5, a);
  const Digraph second = sample_digraph(5, 0.5, b);
  CHECK(first == second);

  SplitMix64 c = SplitMix64::for_trial(42, 4);
  CHECK(sample_digraph(5, 0.5, c) != first);
}

TEST_CASE("extreme edge probabilities behave as expected") {
  SplitMix64 rng(1);
  const Digraph dense = sample_digraph(6, 0.999999, rng);
  CHECK(dense.edge_count() == 30);
}

TEST_CASE("experiments are reproducible") {
  ExperimentConfig cfg;
  cfg.n = 6;
  cfg.p = 0.5;
  cfg.trials = 50;
  cfg.seed = 99;
  const ExperimentReport a = run_experiment(cfg);
  const ExperimentReport b = run_experiment(cfg);
  CHECK(a.samples == b.samples);
  CHECK(a.empirical_mean == b.empirical_mean);
  CHECK(a.success_frequency == b.success_frequency);
}

TEST_CASE("nearly-complete digraphs give Y close to n!") {
  ExperimentConfig cfg;
  cfg.n = 3;
  cfg.p = 0.999;
  cfg.trials = 50;
  cfg.seed = 7;
  const ExperimentReport report = run_experiment(cfg);
  CHECK(report.empirical_mean == doctest::Approx(6.0).epsilon(0.05));
  CHECK(report.success_frequency == 1.0);
}

TEST_CASE("mean, success frequency and second moment at n = 8, p = 1/2") {
  ExperimentConfig cfg;
  cfg.n = 8;
  cfg.p = 0.5;
  cfg.trials = 200;
  cfg.seed = 42;
  const ExperimentReport report = run_experiment(cfg);

  CHECK(report.theoretical_mean == doctest::Approx(315.0));
  CHECK(report.success_threshold == doctest::Approx(157.5));
  CHECK(report.pz_bound == doctest::Approx(0.25 * std::exp(-1.0)));

  // E[Y^2] <= e E[Y]^2, so Var <= (e-1) E[Y]^2 and the standard error of the
  // mean is at most sqrt(e-1) * 315 / sqrt(trials).
  const double se = std::sqrt(std::exp(1.0) - 1.0) * 315.0 / std::sqrt(200.0);
  CHECK(std::abs(report.empirical_mean - 315.0) <= 3 * se);

  // success probability is bounded below by the Paley-Zygmund constant
  const double sigma = std::sqrt(report.success_frequency * (1 - report.success_frequency) /
                                 static_cast<double>(cfg.trials));
  CHECK(report.success_frequency >= report.pz_bound - 3 * sigma);

  const SecondMomentCheck check = second_moment_check(report);
  CHECK(check.bound == doctest::Approx(std::exp(1.0)));
  CHECK(check.within_bound);
}

TEST_CASE("empirical mean tracks n! p^(n-1) at n = 7, p = 0.6") {
  ExperimentConfig cfg;
  cfg.n = 7;
  cfg.p = 0.6;
  cfg.trials = 400;
  cfg.seed = 2024;
  const ExperimentReport report = run_experiment(cfg);
  const double mean = 5040.0 * std::pow(0.6, 6);
  CHECK(report.theoretical_mean == doctest::Approx(mean));
  const double se = std::sqrt(std::exp(1.0 / 0.6 - 1.0) - 1.0) * mean / std::sqrt(400.0);
  CHECK(std::abs(report.empirical_mean - mean) <= 3 * se);
}

TEST_CASE("second-moment ratio stays under exp(1/p - 1)") {
  SUBCASE("nearly deterministic Y at p close to 1") {
    ExperimentConfig cfg;
    cfg.n = 3;
    cfg.p = 0.999;
    cfg.trials = 100;
    cfg.seed = 5;
    const SecondMomentCheck check = second_moment_check(cfg);
    CHECK(check.ratio == doctest::Approx(1.0).epsilon(0.01));
    CHECK(check.within_bound);
  }
  SUBCASE("p = 1/2 at n = 7") {
    ExperimentConfig cfg;
    cfg.n = 7;
    cfg.p = 0.5;
    cfg.trials = 500;
    cfg.seed = 31;
    const SecondMomentCheck check = second_moment_check(cfg);
    CHECK(check.bound == doctest::Approx(std::exp(1.0)));
    CHECK(check.within_bound);
  }
  SUBCASE("p = 1/4 at n = 6") {
    ExperimentConfig cfg;
    cfg.n = 6;
    cfg.p = 0.25;
    cfg.trials = 500;
    cfg.seed = 37;
    const SecondMomentCheck check = second_moment_check(cfg);
    CHECK(check.bound == doctest::Approx(std::exp(3.0)));
    CHECK(check.within_bound);
  }
}

TEST_CASE("edge frequency sanity over all trials") {
  ExperimentConfig cfg;
  cfg.n = 6;
  cfg.p = 0.3;
  cfg.trials = 300;
  cfg.seed = 77;
  cfg.validate();

  long long edges = 0;
  for (int t = 0; t < cfg.trials; ++t) {
    SplitMix64 rng = SplitMix64::for_trial(cfg.seed, static_cast<std::uint64_t>(t));
    edges += sample_digraph(cfg.n, cfg.p, rng).edge_count();
  }
  const double total_pairs = static_cast<double>(cfg.trials) * cfg.n * (cfg.n - 1);
  const double expected = cfg.p * total_pairs;
  const double sigma = std::sqrt(total_pairs * cfg.p * (1 - cfg.p));
  CHECK(std::abs(static_cast<double>(edges) - expected) <= 4 * sigma);
}

TEST_CASE("report samples are exact integers") {
  ExperimentConfig cfg;
  cfg.n = 5;
  cfg.p = 0.7;
  cfg.trials = 40;
  cfg.seed = 3;
  const ExperimentReport report = run_experiment(cfg);
  REQUIRE(report.samples.size() == 40);
  Count sum = 0;
  for (const Count& y : report.samples) {
    CHECK(y >= 0);
    CHECK(y <= factorial(5));
    sum += y;
  }
  CHECK(report.empirical_mean == doctest::Approx(sum.get_d() / 40.0));
}
