#include "kl/nilhecke.hpp"

namespace kl {

Permutation demazure_product(std::span<const int> word, int n) {
  Permutation p = Permutation::identity(n);
  for (int i : word) p = demazure_mul(p, i);
  return p;
}

Permutation demazure_star(const Permutation& u, const Permutation& v) {
  Permutation p = u;
  for (int i : v.reduced_word()) p = demazure_mul(p, i);
  return p;
}

}  // namespace kl
