#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "kl/ideal.hpp"

namespace kl {

enum class MultRoute { DirectHomogeneous, ViaVmax, CograssmannianDeterminant, Unresolved };

std::string to_string(MultRoute r);

struct MultiplicityOutcome {
  std::optional<mpz_class> value;
  MultRoute route = MultRoute::Unresolved;
  Permutation v_used;
  std::optional<size_t> facet_count;
  std::optional<mpz_class> tableau_count;
};

// Facts 5.1-5.2 pipeline: (1) facet count when I_{v,w} is standardly
// homogeneous; (2) move to v_max; (3) flagged determinant for
// co-Grassmannian w; (4) unresolved.
MultiplicityOutcome multiplicity(const Permutation& v, const Permutation& w);

// Row bounds b_m = max{ i : lambda(v)_i >= lambda(w)_m + i - m }, one entry
// per nonzero part of lambda(w).
std::vector<int> flag_vector(const Partition& lam_v, const Partition& lam_w);

// Semistandard tableaux of shape lambda with row-m entries <= b_m.
mpz_class flagged_ssyt_count(const Partition& lam, const std::vector<int>& b);

// det( C(b_i + lambda_i - i + j - 1, lambda_i - i + j) ), zero for negative
// lower index; exact integers.
mpz_class binomial_determinant(const Partition& lam, const std::vector<int>& b);

// The lambda(w)-shaped cross configuration in the corner of flatten(D(v));
// reduced with product w0*w for co-Grassmannian pairs.
PipeDream starting_pipe_dream(const Permutation& v, const Permutation& w);

struct PairRecord {
  Permutation v, w;
  bool homog_direct = false;
  bool homog_vmax = false;
  bool budget_exceeded = false;
};

struct GammaReport {
  int n = 0;
  bool exhaustive = true;
  size_t pairs = 0;
  size_t route1 = 0;          // resolved by homogeneity of I_{v,w}
  size_t route12 = 0;         // resolved by routes (1)+(2)
  size_t budget_exceeded = 0; // excluded from the fractions
  double pct_route1 = 0.0;
  double pct_route12 = 0.0;
  size_t conjecture_instances = 0;
  std::vector<std::pair<Permutation, Permutation>> conjecture_counterexamples;
};

// Exhaustive over Gamma_n (n <= 5) or a seeded uniform sample; also probes
// the parabolic-maximality conjecture instances encountered.
GammaReport gamma_statistics(int n, std::optional<std::pair<size_t, uint64_t>> sample,
                             int jobs = 1, size_t spair_budget = 1000000);

// All strict Bruhat-comparable pairs of S_n, lexicographic order.
std::vector<std::pair<Permutation, Permutation>> gamma_pairs(int n);

}  // namespace kl
