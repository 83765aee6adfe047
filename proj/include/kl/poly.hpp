#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "kl/permutation.hpp"

namespace kl {

using Rat = mpq_class;

enum class VarKind : uint8_t { T, X, Y, Z };

// z(row, col) grid coordinates or t/x/y indices; identity is kind + indices.
struct Var {
  VarKind kind;
  int16_t a;  // t/x/y index, or z row
  int16_t b;  // z col

  static Var z(int row, int col) { return {VarKind::Z, int16_t(row), int16_t(col)}; }
  static Var t(int k) { return {VarKind::T, int16_t(k), 0}; }
  static Var x(int k) { return {VarKind::X, int16_t(k), 0}; }
  static Var y(int k) { return {VarKind::Y, int16_t(k), 0}; }
  static Var t_box(int row, int col) { return {VarKind::T, int16_t(row), int16_t(col)}; }

  std::string str() const;
  friend bool operator==(const Var&, const Var&) = default;
  // Canonical order: kind, then indices (z by (col, row)).
  friend bool operator<(const Var& u, const Var& v) {
    if (u.kind != v.kind) return u.kind < v.kind;
    if (u.kind == VarKind::Z) {
      if (u.b != v.b) return u.b < v.b;
      return u.a < v.a;
    }
    if (u.a != v.a) return u.a < v.a;
    return u.b < v.b;
  }
};

// Exponent vector, sparse: sorted by canonical Var order, exponents nonzero.
// Negative exponents are used by Laurent polynomials in t/x/y.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<std::pair<Var, int>> factors);
  static Monomial var(Var v, int e = 1) { return Monomial({{v, e}}); }

  const std::vector<std::pair<Var, int>>& factors() const { return f_; }
  bool is_one() const { return f_.empty(); }
  int exponent(const Var& v) const;
  int total_degree() const;
  bool squarefree() const;

  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const;
  Monomial divide(const Monomial& o) const;  // this / o, exact
  static Monomial lcm(const Monomial& a, const Monomial& b);
  static Monomial gcd(const Monomial& a, const Monomial& b);

  std::string str() const;
  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend bool operator<(const Monomial& a, const Monomial& b) { return a.f_ < b.f_; }

 private:
  std::vector<std::pair<Var, int>> f_;
};

// The lexicographic order favoring z-variables further right, ties broken by
// favoring the souther variable; the leading term of any nonzero minor of the
// generic matrix Z is then its NW-SE diagonal term.
bool kl_var_less(const Var& u, const Var& v);
// Pure lex on monomials with the largest variable compared first.
bool kl_lex_less(const Monomial& a, const Monomial& b);

struct TermOrder {
  enum Kind { KlLex, Diagonal, GradedThenKl } kind = KlLex;
  // Monomial comparison, "less" semantics; leading term = largest.
  bool less(const Monomial& a, const Monomial& b) const;
};

struct Term {
  Monomial mono;
  Rat coeff;
};

// Exact sparse multivariate (Laurent-capable) polynomial over big rationals.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(int c) { if (c != 0) terms_[Monomial()] = c; }
  explicit Polynomial(const Rat& c) { if (c != 0) terms_[Monomial()] = c; }
  static Polynomial var(Var v) { return term(Monomial::var(v), 1); }
  static Polynomial term(const Monomial& m, const Rat& c);

  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const std::map<Monomial, Rat>& terms() const { return terms_; }

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial operator*(const Rat& c) const;
  friend bool operator==(const Polynomial&, const Polynomial&) = default;
  friend bool operator<(const Polynomial& a, const Polynomial& b);  // arbitrary total order

  Term leading_term(const TermOrder& ord) const;  // throws on zero
  bool is_homogeneous() const;                    // standard grading, all kinds deg 1
  int min_total_degree() const;                   // throws on zero
  Polynomial lowest_degree_part() const;          // zero -> zero

  // Ring homomorphism; every variable of *this must be mapped. Negative
  // exponents require the image to be a single term (Laurent monomial).
  Polynomial substitute(const std::function<Polynomial(const Var&)>& sigma) const;

  std::string str() const;

 private:
  std::map<Monomial, Rat> terms_;
};

// Determinant by cofactor expansion along the sparsest column.
Polynomial det(const std::vector<std::vector<Polynomial>>& m);

// Multiply with all monomials of total degree > bound dropped (power-series
// arithmetic for the Laurent 1-t substitution).
Polynomial truncated_mul(const Polynomial& a, const Polynomial& b, int bound);
// (1 - t)^e truncated at total degree bound, e any integer.
Polynomial one_minus_var_pow(Var v, int e, int bound);

}  // namespace kl
