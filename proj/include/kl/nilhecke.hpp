#pragma once

#include <span>
#include <vector>

#include "kl/permutation.hpp"

namespace kl {

// Idempotent-presentation Demazure (0-Hecke) action on the basis {u_w}:
//   u_w u_i = u_w        if w s_i < w,
//   u_w u_i = u_{w s_i}  otherwise.
inline Permutation demazure_mul(const Permutation& w, int i) {
  return w.is_right_descent(i) ? w : w.right_mul_s(i);
}

// Left version: u_i u_w.
inline Permutation demazure_mul_left(int i, const Permutation& w) {
  return w.is_left_descent(i) ? w : w.left_mul_s(i);
}

// Left fold of demazure_mul over a generator word, starting at the identity.
Permutation demazure_product(std::span<const int> word, int n);

// Monoid product of u and v (fold a reduced word of v onto u).
Permutation demazure_star(const Permutation& u, const Permutation& v);

}  // namespace kl
