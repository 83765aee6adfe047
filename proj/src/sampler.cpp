#include "kl/sampler.hpp"

#include <atomic>
#include <cmath>
#include <thread>
#include <vector>

#include "kl/ideal.hpp"

namespace kl {

uint64_t Rng::mix(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d4ecb87f5af0edULL;
  return x ^ (x >> 31);
}

Rng::Rng(uint64_t seed) : state_(mix(seed)) {}

Rng Rng::for_index(uint64_t seed, uint64_t index) { return Rng(seed ^ mix(index)); }

uint64_t Rng::next() {
  state_ = mix(state_);
  return state_;
}

uint64_t Rng::below(uint64_t n) {
  uint64_t threshold = -n % n;  // 2^64 mod n
  for (;;) {
    uint64_t r = next();
    if (r >= threshold) return r % n;
  }
}

Permutation Rng::permutation(int n) {
  std::vector<int> word(n);
  for (int i = 0; i < n; ++i) word[i] = i + 1;
  for (int i = n - 1; i > 0; --i) {
    int j = int(below(uint64_t(i) + 1));
    std::swap(word[i], word[j]);
  }
  return Permutation(word);
}

ComparableSample sample_comparable_pair(int n, Rng& rng) {
  size_t rejections = 0;
  for (;;) {
    Permutation a = rng.permutation(n);
    Permutation b = rng.permutation(n);
    if (bruhat_leq(a, b)) return {a, b, rejections};
    if (bruhat_leq(b, a)) return {b, a, rejections};
    ++rejections;
  }
}

EstimateReport estimate_success(const TrialConfig& config) {
  EstimateReport rep;
  rep.config = config;

  std::vector<uint8_t> success(config.trials, 0);
  std::vector<uint8_t> exhausted(config.trials, 0);
  std::vector<size_t> rejections(config.trials, 0);

  std::atomic<size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      size_t k = next.fetch_add(1);
      if (k >= config.trials) break;
      Rng rng = Rng::for_index(config.seed, k);
      ComparableSample s = sample_comparable_pair(config.n, rng);
      size_t rej = s.rejections;
      while (s.lo == s.hi) {  // strict pairs only
        s = sample_comparable_pair(config.n, rng);
        rej += s.rejections;
      }
      rejections[k] = rej;
      try {
        bool ok = is_standardly_homogeneous(essential_minors(s.lo, s.hi), config.budget);
        if (!ok)
          ok = is_standardly_homogeneous(essential_minors(v_max(s.lo, s.hi), s.hi),
                                         config.budget);
        success[k] = ok ? 1 : 0;
      } catch (const BudgetExceeded&) {
        exhausted[k] = 1;
      }
    }
  };
  if (config.jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < config.jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  size_t usable = 0;
  double rejsum = 0;
  for (size_t k = 0; k < config.trials; ++k) {
    rejsum += double(rejections[k]);
    if (exhausted[k]) {
      ++rep.budget_exceeded;
      continue;
    }
    ++usable;
    if (success[k]) ++rep.successes;
  }
  rep.mean_rejections = config.trials ? rejsum / double(config.trials) : 0.0;

  if (usable > 0) {
    double p = double(rep.successes) / double(usable);
    rep.pct = 100.0 * p;
    // Wilson interval at 95%
    double z = 1.959963984540054;
    double nn = double(usable);
    double denom = 1.0 + z * z / nn;
    double center = (p + z * z / (2 * nn)) / denom;
    double half = (z / denom) * std::sqrt(p * (1 - p) / nn + z * z / (4 * nn * nn));
    rep.ci_lo = 100.0 * std::max(0.0, center - half);
    rep.ci_hi = 100.0 * std::min(1.0, center + half);
  }
  return rep;
}

}  // namespace kl
