#pragma once

#include "kl/complex.hpp"
#include "kl/poly.hpp"

namespace kl {

// The four torus gradings on C[z^(v)]; weights are stored additively as
// exponent vectors and "exponentiated" into Laurent monomials on demand.
struct WeightAssignment {
  enum Kind { Usual, MatrixSchubert, Dilation, Rescaling } kind = Rescaling;
  Permutation v;  // required for Usual

  static WeightAssignment usual(const Permutation& v) { return {Usual, v}; }
  static WeightAssignment rescaling() { return {Rescaling, {}}; }
  static WeightAssignment matrix_schubert() { return {MatrixSchubert, {}}; }
  static WeightAssignment dilation() { return {Dilation, {}}; }

  Monomial multiplicative(const Box& b) const;  // t^rho(b)
  Polynomial additive(const Box& b) const;      // rho(b) as a linear form
};

struct KPolyResult {
  Polynomial kpoly;
  Polynomial multidegree;
};

// Eq-style pipe-dream generating functions in the box variables t_ij.
Polynomial unspecialized_grothendieck(const Permutation& v, const Permutation& w);
Polynomial unspecialized_schubert(const Permutation& v, const Permutation& w);

// K-polynomial of the Reisner-Stanley ring of the complex under the given
// weights, computed both as the all-faces sum and as the interior-face
// alternating sum; the two must agree.
KPolyResult kpoly_via_complex(const PipeComplex& c, const WeightAssignment& wt);

// Ascent recursion for K(R/I_{v,w}, t) under the usual action; memoized,
// recursing on the last right ascent of v.
Polynomial kostant_kumar(const Permutation& v, const Permutation& w);
// Same recursion with the ascent picked by a caller-supplied rule (for the
// choice-independence property test).
Polynomial kostant_kumar_with_ascent(const Permutation& v, const Permutation& w,
                                     const std::function<int(const Permutation&)>& pick);

// Lowest-degree part of kpoly(1-t), computed with truncated power series
// (Laurent exponents allowed); expected_codim pins the sanity check.
Polynomial multidegree_from_kpoly(const Polynomial& kpoly, int expected_codim);

// Double polynomials via the matrix Schubert embedding into S_{2n}.
Polynomial double_schubert(const Permutation& w);
Polynomial double_grothendieck(const Permutation& w);

// Classical divided-difference construction, used only as an independent
// oracle against the pipe-dream route.
Polynomial divided_difference_schubert(const Permutation& w);
Polynomial divided_difference_grothendieck(const Permutation& w);

struct SpecializationTriple {
  Polynomial from_double;         // G_{w0w}(x_j -> t_v(j), y_i -> t_{n-i+1})
  Polynomial from_kpoly;          // Kostant-Kumar / complex route
  Polynomial from_unspecialized;  // t_ij substitution into Eq-style sums
  bool all_equal() const {
    return from_double == from_kpoly && from_kpoly == from_unspecialized;
  }
};

struct BuchRimanyiResult {
  SpecializationTriple groth;
  SpecializationTriple schub;
};

// All three members of each specialization identity; disagreement is reported
// by the caller (expected never).
BuchRimanyiResult specialize_buch_rimanyi(const Permutation& v, const Permutation& w);

}  // namespace kl
