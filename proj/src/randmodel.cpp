#include "xdescent/randmodel.hpp"

#include <cmath>
#include <stdexcept>

#include "xdescent/errors.hpp"
#include "xdescent/hampath.hpp"

namespace xdescent {

namespace {

std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

std::uint64_t SplitMix64::next() {
  const std::uint64_t out = mix64(state_);
  state_ += 0x9e3779b97f4a7c15ULL;
  return out;
}

double SplitMix64::next_unit() {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

SplitMix64 SplitMix64::for_trial(std::uint64_t seed, std::uint64_t trial) {
  // Both inputs go through the output finalizer so that stream start states
  // are scattered; offsetting the state by multiples of the increment would
  // alias different trials onto overlapping windows of one stream.
  return SplitMix64(mix64(seed) ^ mix64(~trial));
}

void ExperimentConfig::validate(const Limits& limits) const {
  if (n < 1) throw std::invalid_argument("experiment: n must be positive");
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("experiment: p must lie in (0,1)");
  if (trials < 1) throw std::invalid_argument("experiment: trials must be positive");
  if (n > limits.dp_max) throw SizeLimit("experiment", n, limits.dp_max);
  // Rough per-trial DP cost: 2^n masks times n^2 transitions.
  const long double cost =
      static_cast<long double>(trials) * std::pow(2.0L, n) * n * n;
  if (cost > static_cast<long double>(limits.work_limit)) {
    throw BudgetExceeded("experiment", static_cast<unsigned long long>(cost), limits.work_limit);
  }
}

Digraph sample_digraph(int n, double p, SplitMix64& rng) {
  Digraph d(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      if (rng.next_unit() < p) d.add_edge(i, j);
    }
  }
  return d;
}

ExperimentReport run_experiment(const ExperimentConfig& cfg, const Limits& limits) {
  cfg.validate(limits);

  ExperimentReport report;
  report.config = cfg;
  report.theoretical_mean =
      factorial(static_cast<unsigned long>(cfg.n)).get_d() * std::pow(cfg.p, cfg.n - 1);
  report.success_threshold = report.theoretical_mean / 2.0;
  report.pz_bound = 0.25 * std::exp(1.0 - 1.0 / cfg.p);

  // Exact threshold comparison: p is a dyadic rational, so n! p^{n-1} / 2 is
  // exactly representable as an mpq.
  Rational threshold(factorial(static_cast<unsigned long>(cfg.n)), Count(2));
  const Rational pq(cfg.p);
  for (int i = 1; i < cfg.n; ++i) threshold *= pq;
  threshold.canonicalize();

  double sum = 0.0;
  double sum_sq = 0.0;
  int successes = 0;
  for (int t = 0; t < cfg.trials; ++t) {
    SplitMix64 rng = SplitMix64::for_trial(cfg.seed, static_cast<std::uint64_t>(t));
    const Digraph sample = sample_digraph(cfg.n, cfg.p, rng);
    const Count paths = count_paths(sample, limits.dp_max);

    const double y = paths.get_d();
    sum += y;
    sum_sq += y * y;
    const bool met = Rational(paths) >= threshold;
    if (met) ++successes;
    if (cfg.keep_samples) report.samples.push_back(paths);
    report.threshold_met.push_back(met);
  }
  report.empirical_mean = sum / cfg.trials;
  report.empirical_second_moment = sum_sq / cfg.trials;
  report.success_frequency = static_cast<double>(successes) / cfg.trials;
  return report;
}

namespace {

double moment_ratio(const std::vector<double>& values) {
  double sum = 0.0, sum_sq = 0.0;
  for (double v : values) {
    sum += v;
    sum_sq += v * v;
  }
  const double mean = sum / static_cast<double>(values.size());
  const double m2 = sum_sq / static_cast<double>(values.size());
  return mean == 0.0 ? 0.0 : m2 / (mean * mean);
}

}  // namespace

SecondMomentCheck second_moment_check(const ExperimentReport& report) {
  SecondMomentCheck check;
  check.bound = std::exp(1.0 / report.config.p - 1.0);

  std::vector<double> values;
  values.reserve(report.samples.size());
  for (const Count& y : report.samples) values.push_back(y.get_d());
  if (values.empty()) {
    throw std::invalid_argument("second-moment check needs per-trial samples");
  }
  check.ratio = moment_ratio(values);

  // Bootstrap standard error of the ratio; the tolerance is three of them.
  const int resamples = 200;
  SplitMix64 rng = SplitMix64::for_trial(report.config.seed, 0x626f6f74ULL);
  std::vector<double> ratios;
  ratios.reserve(resamples);
  std::vector<double> draw(values.size());
  for (int b = 0; b < resamples; ++b) {
    for (std::size_t i = 0; i < values.size(); ++i) {
      draw[i] = values[static_cast<std::size_t>(rng.next() % values.size())];
    }
    ratios.push_back(moment_ratio(draw));
  }
  double mean = 0.0;
  for (double r : ratios) mean += r;
  mean /= resamples;
  double var = 0.0;
  for (double r : ratios) var += (r - mean) * (r - mean);
  var /= (resamples - 1);
  check.tolerance = 3.0 * std::sqrt(var);

  check.within_bound = check.ratio <= check.bound + check.tolerance;
  return check;
}

SecondMomentCheck second_moment_check(const ExperimentConfig& cfg, const Limits& limits) {
  ExperimentConfig with_samples = cfg;
  with_samples.keep_samples = true;
  return second_moment_check(run_experiment(with_samples, limits));
}

}  // namespace xdescent
