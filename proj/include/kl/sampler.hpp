#pragma once

#include <cstdint>
#include <utility>

#include "kl/permutation.hpp"

namespace kl {

// Deterministic cross-platform generator. Stream contract: draw k of the
// stream seeded by s is splitmix64 applied to the running state initialized
// with mix(s); sub-streams derive as seed ^ mix(index), so trial results do
// not depend on the worker layout.
class Rng {
 public:
  explicit Rng(uint64_t seed);
  static Rng for_index(uint64_t seed, uint64_t index);

  uint64_t next();
  uint64_t below(uint64_t n);  // unbiased via rejection
  Permutation permutation(int n);

  static uint64_t mix(uint64_t x);

 private:
  uint64_t state_;
};

struct ComparableSample {
  Permutation lo, hi;  // lo <= hi in Bruhat order (possibly equal)
  size_t rejections;
};

// Uniform over comparable ordered pairs by rejection.
ComparableSample sample_comparable_pair(int n, Rng& rng);

struct TrialConfig {
  int n = 6;
  size_t trials = 2000;
  uint64_t seed = 1;
  size_t budget = 1000000;  // per-pair reduction step budget
  int jobs = 1;
};

struct EstimateReport {
  TrialConfig config;
  size_t successes = 0;       // resolved by routes (1)+(2)
  size_t budget_exceeded = 0; // counted separately
  double pct = 0.0;
  double ci_lo = 0.0, ci_hi = 0.0;  // Wilson 95%
  double mean_rejections = 0.0;
};

// Fraction of sampled strict pairs resolved by the homogeneity routes;
// diagonal samples are redrawn.
EstimateReport estimate_success(const TrialConfig& config);

}  // namespace kl
