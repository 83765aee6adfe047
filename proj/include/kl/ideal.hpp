#pragma once

#include <optional>
#include <set>
#include <vector>

#include "kl/complex.hpp"
#include "kl/poly.hpp"

namespace kl {

// Generic matrix specialized to the opposite Schubert cell of v: a 1 at
// (n-v(i)+1, i) for each i, zeros right of and above each 1, free z-variables
// exactly on D(v).
class SpecializedMatrix {
 public:
  explicit SpecializedMatrix(const Permutation& v);

  const Permutation& v() const { return v_; }
  int n() const { return v_.n(); }
  // Entry as a polynomial: 0, 1, or the variable z_{ij}.
  const Polynomial& at(int row, int col) const { return e_[(row - 1) * n() + (col - 1)]; }
  std::vector<Box> free_boxes() const;
  std::string str() const;

 private:
  Permutation v_;
  std::vector<Polynomial> e_;
};

struct GeneratorSet {
  Permutation v, w;
  std::vector<Polynomial> minors;  // nonzero, monic under kl_lex, deduplicated
  TermOrder order;                 // kl_lex
  size_t zero_minors_dropped = 0;
  size_t duplicates_dropped = 0;
};

// Size 1+r^w_{ij} minors of the southwest i x j submatrix of Z^(v) for
// (i,j) in E(w) (or every (i,j) with all_minors).
GeneratorSet essential_minors(const Permutation& v, const Permutation& w,
                              bool all_minors = false);

// Squarefree monomial ideal, minimalized (no generator divides another).
struct MonomialIdeal {
  std::vector<Monomial> generators;  // sorted, canonical
  bool contains(const Monomial& m) const;
};

MonomialIdeal leading_term_ideal(const GeneratorSet& g);

struct BuchbergerReport {
  bool is_groebner;
  size_t spairs_checked;
  size_t spairs_skipped_coprime;
  std::optional<std::pair<size_t, size_t>> failing_pair;
};

// Reduces every S-polynomial to normal form under kl_lex; coprime-leading-term
// pairs are skipped. Throws BudgetExceeded past the configured S-pair budget.
BuchbergerReport buchberger_verify(const GeneratorSet& g, size_t budget = 1000000);

// Normal form of f modulo the generators (deterministic divisor choice).
// steps, when given, is decremented per division step; BudgetExceeded at 0.
Polynomial reduce_modulo(const Polynomial& f, const std::vector<Polynomial>& gens,
                         const TermOrder& ord, size_t* steps = nullptr);

// The unique reduced Groebner basis, assuming g is Groebner (Theorem-backed
// for the essential minors).
GeneratorSet interreduce(const GeneratorSet& g, size_t step_budget = 100000000);

// True iff the ideal is homogeneous for deg(z_ij) = 1. Fast path: homogeneous
// generators; otherwise decided on the interreduced basis.
bool is_standardly_homogeneous(const Permutation& v, const Permutation& w);
bool is_standardly_homogeneous(const GeneratorSet& g, size_t step_budget = 100000000);

// Minimal primes of the initial ideal, each given by its variable box set;
// computed as complements of the facets of the Stanley-Reisner complex of the
// monomial ideal.
std::vector<std::vector<Box>> monomial_ideal_primes(const MonomialIdeal& m,
                                                    const std::vector<Box>& variables);
std::vector<std::vector<Box>> initial_ideal_primes(const Permutation& v, const Permutation& w);

// Minimal nonfaces of Delta_{v,w} as squarefree monomials in the z-variables.
MonomialIdeal stanley_reisner_ideal(const PipeComplex& c);

}  // namespace kl
