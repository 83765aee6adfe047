#include "kl/ktheory.hpp"

#include <map>
#include <mutex>

namespace kl {

Monomial WeightAssignment::multiplicative(const Box& b) const {
  switch (kind) {
    case Usual: {
      int n = v.n();
      return Monomial({{Var::t(v(b.col)), 1}, {Var::t(n - b.row + 1), -1}});
    }
    case MatrixSchubert:
      return Monomial({{Var::x(b.col), 1}, {Var::y(b.row), -1}});
    case Dilation:
      return Monomial::var(Var::t(0));
    case Rescaling:
      return Monomial::var(Var::t_box(b.row, b.col));
  }
  return {};
}

Polynomial WeightAssignment::additive(const Box& b) const {
  switch (kind) {
    case Usual: {
      int n = v.n();
      return Polynomial::var(Var::t(v(b.col))) - Polynomial::var(Var::t(n - b.row + 1));
    }
    case MatrixSchubert:
      return Polynomial::var(Var::x(b.col)) - Polynomial::var(Var::y(b.row));
    case Dilation:
      return Polynomial::var(Var::t(0));
    case Rescaling:
      return Polynomial::var(Var::t_box(b.row, b.col));
  }
  return {};
}

Polynomial unspecialized_grothendieck(const Permutation& v, const Permutation& w) {
  if (!bruhat_leq(v, w)) return {};
  Permutation target = Permutation::longest(v.n()).compose(w);
  const int len = target.length();
  Polynomial sum;
  enumerate_pipes(v, target, false, [&](const PipeDream& p) {
    Polynomial prod(1);
    for (const Box& b : p.crosses)
      prod = prod * (Polynomial(1) - Polynomial::var(Var::t_box(b.row, b.col)));
    if ((p.size() - len) % 2 == 0)
      sum += prod;
    else
      sum -= prod;
    return true;
  });
  return sum;
}

Polynomial unspecialized_schubert(const Permutation& v, const Permutation& w) {
  if (!bruhat_leq(v, w)) return {};
  Permutation target = Permutation::longest(v.n()).compose(w);
  Polynomial sum;
  enumerate_pipes(v, target, true, [&](const PipeDream& p) {
    Monomial m;
    for (const Box& b : p.crosses) m = m * Monomial::var(Var::t_box(b.row, b.col));
    sum += Polynomial::term(m, 1);
    return true;
  });
  return sum;
}

Polynomial multidegree_from_kpoly(const Polynomial& kpoly, int expected_codim) {
  if (kpoly.is_zero()) return {};
  int bound = expected_codim;
  for (;;) {
    Polynomial total;
    for (const auto& [m, c] : kpoly.terms()) {
      Polynomial prod(c);
      for (const auto& [var, e] : m.factors())
        prod = truncated_mul(prod, one_minus_var_pow(var, e, bound), bound);
      total += prod;
    }
    if (!total.is_zero()) {
      Polynomial low = total.lowest_degree_part();
      if (low.min_total_degree() != expected_codim)
        throw TheoryViolation("multidegree is not in the expected codimension");
      return low;
    }
    bound += 4;  // all terms of degree <= bound cancelled; look higher
  }
}

KPolyResult kpoly_via_complex(const PipeComplex& c, const WeightAssignment& wt) {
  const auto& boxes = c.vertex_set();
  const int codim = c.target().length();

  Polynomial interior_form;
  if (!c.empty_complex()) {
    for (const Face& f : c.interior_faces()) {
      Polynomial prod(1);
      for (const Box& b : f.label.crosses)
        prod = prod * (Polynomial(1) - Polynomial::term(wt.multiplicative(b), 1));
      if ((f.label.size() - codim) % 2 == 0)
        interior_form += prod;
      else
        interior_form -= prod;
    }
  }

  Polynomial face_form;
  if (!c.empty_complex()) {
    for (uint32_t mask : c.all_face_masks()) {
      Polynomial prod(1);
      for (size_t k = 0; k < boxes.size(); ++k) {
        Monomial t = wt.multiplicative(boxes[k]);
        if (mask & (1u << k))
          prod = prod * Polynomial::term(t, 1);
        else
          prod = prod * (Polynomial(1) - Polynomial::term(t, 1));
      }
      face_form += prod;
    }
  }

  if (face_form != interior_form)
    throw TheoryViolation("face-sum and interior-sum K-polynomials disagree");

  KPolyResult r;
  r.kpoly = face_form;
  r.multidegree = multidegree_from_kpoly(r.kpoly, codim);
  return r;
}

namespace {

struct PairKey {
  uint64_t v, w;
  friend auto operator<=>(const PairKey&, const PairKey&) = default;
};

Polynomial kk_recurse(const Permutation& v, const Permutation& w,
                      const std::function<int(const Permutation&)>& pick,
                      std::map<PairKey, Polynomial>& memo, std::mutex* mu) {
  if (!bruhat_leq(v, w)) return {};
  const int n = v.n();
  if (v == Permutation::longest(n)) return Polynomial(1);  // then w = w0 too

  PairKey key{v.pack(), w.pack()};
  if (mu) {
    std::lock_guard<std::mutex> lock(*mu);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  } else {
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }

  int i = pick(v);
  Permutation vs = v.right_mul_s(i);
  Polynomial res;
  if (w.is_right_descent(i)) {
    res = kk_recurse(vs, w, pick, memo, mu);
  } else {
    Polynomial kvw = kk_recurse(vs, w, pick, memo, mu);
    Polynomial kvws = kk_recurse(vs, w.right_mul_s(i), pick, memo, mu);
    Polynomial root =
        Polynomial(1) - Polynomial::term(Monomial({{Var::t(v(i)), 1}, {Var::t(v(i + 1)), -1}}), 1);
    res = kvw + root * (kvws - kvw);
  }
  if (mu) {
    std::lock_guard<std::mutex> lock(*mu);
    memo.emplace(key, res);
  } else {
    memo.emplace(key, res);
  }
  return res;
}

std::map<PairKey, Polynomial>& global_kk_memo() {
  static std::map<PairKey, Polynomial> memo;
  return memo;
}
std::mutex& global_kk_mutex() {
  static std::mutex mu;
  return mu;
}

}  // namespace

Polynomial kostant_kumar(const Permutation& v, const Permutation& w) {
  auto last_ascent = [](const Permutation& p) { return p.last_right_ascent(); };
  return kk_recurse(v, w, last_ascent, global_kk_memo(), &global_kk_mutex());
}

Polynomial kostant_kumar_with_ascent(const Permutation& v, const Permutation& w,
                                     const std::function<int(const Permutation&)>& pick) {
  std::map<PairKey, Polynomial> memo;
  return kk_recurse(v, w, pick, memo, nullptr);
}

namespace {

Polynomial substitute_box_vars(const Polynomial& p,
                               const std::function<Polynomial(int, int)>& img) {
  return p.substitute([&](const Var& var) {
    if (var.kind != VarKind::T) throw std::invalid_argument("expected a t_ij variable");
    return img(var.a, var.b);
  });
}

}  // namespace

Polynomial double_schubert(const Permutation& w) {
  auto [star, what] = embed_matrix_schubert(w);
  Polynomial s = unspecialized_schubert(star, what);
  return substitute_box_vars(s, [](int i, int j) {
    return Polynomial::var(Var::x(j)) - Polynomial::var(Var::y(i));
  });
}

Polynomial double_grothendieck(const Permutation& w) {
  auto [star, what] = embed_matrix_schubert(w);
  Polynomial g = unspecialized_grothendieck(star, what);
  return substitute_box_vars(g, [](int i, int j) {
    return Polynomial::term(Monomial({{Var::x(j), 1}, {Var::y(i), -1}}), 1);
  });
}

namespace {

// c_k coefficients of f as a polynomial in x_i, then synthetic division by
// (x_i - x_{i+1}); remainder must vanish.
Polynomial divide_by_x_difference(const Polynomial& f, int i) {
  if (f.is_zero()) return {};
  Var xi = Var::x(i), xn = Var::x(i + 1);
  std::map<int, Polynomial> coeff;
  int dmax = 0;
  for (const auto& [m, c] : f.terms()) {
    int d = m.exponent(xi);
    if (d < 0) throw std::invalid_argument("negative x exponent in divided difference");
    std::vector<std::pair<Var, int>> rest;
    for (const auto& [var, e] : m.factors())
      if (!(var == xi)) rest.push_back({var, e});
    coeff[d] += Polynomial::term(Monomial(std::move(rest)), c);
    dmax = std::max(dmax, d);
  }
  Polynomial q, carry;  // carry = q_k while walking k = dmax-1 .. 0
  Polynomial xnp = Polynomial::var(xn);
  for (int k = dmax - 1; k >= 0; --k) {
    Polynomial qk = coeff.count(k + 1) ? coeff[k + 1] : Polynomial();
    qk += xnp * carry;
    q += Polynomial::term(Monomial::var(xi, k), 1) * qk;
    carry = qk;
  }
  Polynomial rem = (coeff.count(0) ? coeff[0] : Polynomial()) + xnp * carry;
  if (!rem.is_zero()) throw std::invalid_argument("division by (x_i - x_{i+1}) not exact");
  return q;
}

Polynomial swap_x(const Polynomial& f, int i) {
  return f.substitute([&](const Var& var) {
    if (var == Var::x(i)) return Polynomial::var(Var::x(i + 1));
    if (var == Var::x(i + 1)) return Polynomial::var(Var::x(i));
    return Polynomial::term(Monomial::var(var), 1);
  });
}

Polynomial ddiff(const Polynomial& f, int i) {  // partial_i, acting on x
  return divide_by_x_difference(f - swap_x(f, i), i);
}

Polynomial isobaric(const Polynomial& f, int i) {
  // pi_i f = (x_{i+1} f - x_i s_i f) / (x_{i+1} - x_i)
  Polynomial num = Polynomial::var(Var::x(i + 1)) * f - Polynomial::var(Var::x(i)) * swap_x(f, i);
  return -divide_by_x_difference(num, i);
}

Polynomial oracle(const Permutation& w, bool groth) {
  const int n = w.n();
  // descend from w0 along ascents
  std::map<uint64_t, Polynomial> table;
  Permutation w0 = Permutation::longest(n);
  Polynomial top(1);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; i + j <= n; ++j) {
      if (groth)
        top = top * (Polynomial(1) - Polynomial::term(Monomial({{Var::x(i), 1}, {Var::y(j), -1}}), 1));
      else
        top = top * (Polynomial::var(Var::x(i)) - Polynomial::var(Var::y(j)));
    }
  table[w0.pack()] = top;

  auto rec = [&](auto&& self, const Permutation& u) -> Polynomial {
    auto it = table.find(u.pack());
    if (it != table.end()) return it->second;
    int i = 0;
    for (int k = 1; k < n; ++k)
      if (!u.is_right_descent(k)) {
        i = k;
        break;
      }
    Polynomial up = self(self, u.right_mul_s(i));
    Polynomial res = groth ? isobaric(up, i) : ddiff(up, i);
    table.emplace(u.pack(), res);
    return res;
  };
  return rec(rec, w);
}

}  // namespace

Polynomial divided_difference_schubert(const Permutation& w) { return oracle(w, false); }
Polynomial divided_difference_grothendieck(const Permutation& w) { return oracle(w, true); }

BuchRimanyiResult specialize_buch_rimanyi(const Permutation& v, const Permutation& w) {
  if (!bruhat_leq(v, w)) throw std::invalid_argument("requires v <= w");
  const int n = v.n();
  Permutation w0w = Permutation::longest(n).compose(w);
  const int codim = w0w.length();

  auto xy_to_t = [&](const Var& var) -> Polynomial {
    if (var.kind == VarKind::X) return Polynomial::var(Var::t(v(var.a)));
    if (var.kind == VarKind::Y) return Polynomial::var(Var::t(n - var.a + 1));
    throw std::invalid_argument("expected x/y variable");
  };

  BuchRimanyiResult r;
  r.groth.from_double = double_grothendieck(w0w).substitute(xy_to_t);
  r.groth.from_kpoly = kostant_kumar(v, w);
  r.groth.from_unspecialized =
      substitute_box_vars(unspecialized_grothendieck(v, w), [&](int i, int j) {
        return Polynomial::term(Monomial({{Var::t(v(j)), 1}, {Var::t(n - i + 1), -1}}), 1);
      });

  r.schub.from_double = double_schubert(w0w).substitute(xy_to_t);
  r.schub.from_kpoly = multidegree_from_kpoly(r.groth.from_kpoly, codim);
  r.schub.from_unspecialized =
      substitute_box_vars(unspecialized_schubert(v, w), [&](int i, int j) {
        return Polynomial::var(Var::t(v(j))) - Polynomial::var(Var::t(n - i + 1));
      });
  return r;
}

}  // namespace kl
