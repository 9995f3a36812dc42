#pragma once

#include <cstdint>
#include <vector>

#include "xdescent/count.hpp"
#include "xdescent/digraph.hpp"
#include "xdescent/limits.hpp"

namespace xdescent {

/// SplitMix64. Seedable and splittable: for_trial derives an independent
/// stream per (seed, trial), so serial and parallel runs agree.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  /// Uniform in [0,1), 53 mantissa bits.
  double next_unit();

  static SplitMix64 for_trial(std::uint64_t seed, std::uint64_t trial);

 private:
  std::uint64_t state_;
};

struct ExperimentConfig {
  int n = 0;
  double p = 0.5;       // edge probability, strictly inside (0,1)
  int trials = 0;
  std::uint64_t seed = 0;
  bool keep_samples = true;

  void validate(const Limits& limits = {}) const;
};

/// Random digraph: each ordered pair (i,j), i != j, is an edge independently
/// with probability p. Pairs are consumed in row-major order, so the result
/// is a pure function of the generator state.
Digraph sample_digraph(int n, double p, SplitMix64& rng);

/// Statistics of Y = path count of the sampled restriction digraph. The
/// per-trial Y values are exact; only the aggregates are floating point.
struct ExperimentReport {
  ExperimentConfig config;
  double empirical_mean = 0.0;
  double empirical_second_moment = 0.0;
  double success_frequency = 0.0;  // fraction of trials with Y >= threshold
  double theoretical_mean = 0.0;   // n! p^{n-1}
  double success_threshold = 0.0;  // n! p^{n-1} / 2
  double pz_bound = 0.0;           // exp(1 - 1/p) / 4
  std::vector<Count> samples;      // empty unless keep_samples
  std::vector<bool> threshold_met;
};

ExperimentReport run_experiment(const ExperimentConfig& cfg, const Limits& limits = {});

/// Empirical E[Y^2]/E[Y]^2 against the bound exp(1/p - 1). The tolerance is
/// three bootstrap standard errors of the ratio; within_bound means
/// ratio <= bound + tolerance.
struct SecondMomentCheck {
  bool within_bound = false;
  double ratio = 0.0;
  double bound = 0.0;
  double tolerance = 0.0;
};

SecondMomentCheck second_moment_check(const ExperimentReport& report);
SecondMomentCheck second_moment_check(const ExperimentConfig& cfg, const Limits& limits = {});

}  // namespace xdescent
