#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kl/ktheory.hpp"
#include "kl/mult.hpp"

using namespace kl;

namespace {

uint64_t rng_state = 0x2468013579bdf024ULL;
uint64_t rnd() {
  rng_state ^= rng_state << 13;
  rng_state ^= rng_state >> 7;
  rng_state ^= rng_state << 17;
  return rng_state;
}

Polynomial tbox(int r, int c) { return Polynomial::var(Var::t_box(r, c)); }
Polynomial tv(int k) { return Polynomial::var(Var::t(k)); }
Polynomial xv(int k) { return Polynomial::var(Var::x(k)); }
Polynomial yv(int k) { return Polynomial::var(Var::y(k)); }
Polynomial one() { return Polynomial(1); }

std::vector<Permutation> all_perms(int n) {
  std::vector<int> w(n);
  for (int i = 0; i < n; ++i) w[i] = i + 1;
  std::vector<Permutation> out;
  do out.push_back(Permutation(w));
  while (std::next_permutation(w.begin(), w.end()));
  return out;
}

}  // namespace

TEST_CASE("unspecialized polynomials of the worked example") {
  Permutation v = Permutation::parse("31452"), w = Permutation::parse("53142");
  Polynomial g = unspecialized_grothendieck(v, w);
  Polynomial expect_g =
      (one() - tbox(4, 2)) * (one() - tbox(2, 1)) * (one() - tbox(2, 2)) +
      (one() - tbox(4, 2)) * (one() - tbox(2, 1)) * (one() - tbox(1, 3)) +
      (one() - tbox(4, 2)) * (one() - tbox(1, 2)) * (one() - tbox(1, 3)) -
      (one() - tbox(4, 2)) * (one() - tbox(2, 1)) * (one() - tbox(2, 2)) * (one() - tbox(1, 3)) -
      (one() - tbox(4, 2)) * (one() - tbox(2, 1)) * (one() - tbox(1, 2)) * (one() - tbox(1, 3));
  CHECK(g == expect_g);

  Polynomial s = unspecialized_schubert(v, w);
  Polynomial expect_s = tbox(4, 2) * tbox(2, 1) * tbox(2, 2) +
                        tbox(4, 2) * tbox(2, 1) * tbox(1, 3) +
                        tbox(4, 2) * tbox(1, 2) * tbox(1, 3);
  CHECK(s == expect_s);
}

TEST_CASE("unspecialized edge cases") {
  CHECK(unspecialized_grothendieck(Permutation::parse("21345"), Permutation::identity(5)).is_zero());
  CHECK(unspecialized_schubert(Permutation::parse("21345"), Permutation::identity(5)).is_zero());
  Permutation v = Permutation::parse("231");
  Polynomial prod(1);
  for (const Box& b : rothe_diagram(v)) prod = prod * (one() - tbox(b.row, b.col));
  CHECK(unspecialized_grothendieck(v, v) == prod);
}

TEST_CASE("schubert is the lowest part of grothendieck(1-t)") {
  auto pairs = gamma_pairs(4);
  for (const auto& [v, w] : pairs) {
    Polynomial g = unspecialized_grothendieck(v, w);
    Polynomial sub = g.substitute(
        [](const Var& var) { return Polynomial(1) - Polynomial::var(var); });
    CHECK(sub.lowest_degree_part() == unspecialized_schubert(v, w));
  }
}

TEST_CASE("kpoly via complex matches the pipe formulas under rescaling") {
  auto pairs = gamma_pairs(4);
  for (int t = 0; t < 25; ++t) {
    const auto& [v, w] = pairs[rnd() % pairs.size()];
    PipeComplex c(v, w);
    KPolyResult r = kpoly_via_complex(c, WeightAssignment::rescaling());
    CHECK(r.kpoly == unspecialized_grothendieck(v, w));
    CHECK(r.multidegree == unspecialized_schubert(v, w));
  }
  // w0 diagonal: the complex on an empty vertex set
  Permutation w0 = Permutation::longest(4);
  KPolyResult r = kpoly_via_complex(PipeComplex(w0, w0), WeightAssignment::rescaling());
  CHECK(r.kpoly == Polynomial(1));
}

TEST_CASE("kostant-kumar base cases and the S_2 ideal") {
  Permutation w0 = Permutation::longest(4);
  CHECK(kostant_kumar(w0, w0) == Polynomial(1));
  CHECK(kostant_kumar(Permutation::parse("2134"), Permutation::identity(4)).is_zero());

  // K(R/<z11>) = 1 - t1/t2 in S_2
  Polynomial k = kostant_kumar(Permutation::identity(2), Permutation::identity(2));
  Polynomial expect = one() - Polynomial::term(Monomial({{Var::t(1), 1}, {Var::t(2), -1}}), 1);
  CHECK(k == expect);
}

TEST_CASE("kostant-kumar equals the complex K-polynomial under the usual action") {
  Permutation v = Permutation::parse("31452"), w = Permutation::parse("53142");
  KPolyResult r = kpoly_via_complex(PipeComplex(v, w), WeightAssignment::usual(v));
  CHECK(r.kpoly == kostant_kumar(v, w));

  auto pairs = gamma_pairs(4);
  for (int t = 0; t < 20; ++t) {
    const auto& [a, b] = pairs[rnd() % pairs.size()];
    KPolyResult rr = kpoly_via_complex(PipeComplex(a, b), WeightAssignment::usual(a));
    CHECK(rr.kpoly == kostant_kumar(a, b));
  }
}

TEST_CASE("matrix-Schubert weights recover the double polynomials") {
  for (const Permutation& w : all_perms(3)) {
    auto [star, what] = embed_matrix_schubert(w);
    KPolyResult r = kpoly_via_complex(PipeComplex(star, what),
                                      WeightAssignment::matrix_schubert());
    CHECK(r.kpoly == double_grothendieck(w));
    CHECK(r.multidegree == double_schubert(w));
  }
}

TEST_CASE("dilation multidegree counts facets in the right codimension") {
  auto pairs = gamma_pairs(4);
  for (int t = 0; t < 25; ++t) {
    const auto& [v, w] = pairs[rnd() % pairs.size()];
    PipeComplex c(v, w);
    KPolyResult r = kpoly_via_complex(c, WeightAssignment::dilation());
    int codim = c.target().length();
    Polynomial expect =
        Polynomial::term(Monomial::var(Var::t(0), codim), Rat(long(c.facets().size())));
    CHECK(r.multidegree == expect);
  }
}

TEST_CASE("ascent choice independence") {
  auto pairs = gamma_pairs(5);
  auto first_ascent = [](const Permutation& p) {
    for (int i = 1; i < p.n(); ++i)
      if (!p.is_right_descent(i)) return i;
    return 0;
  };
  auto last_ascent = [](const Permutation& p) { return p.last_right_ascent(); };
  for (int t = 0; t < 50; ++t) {
    const auto& [v, w] = pairs[rnd() % pairs.size()];
    CHECK(kostant_kumar_with_ascent(v, w, first_ascent) ==
          kostant_kumar_with_ascent(v, w, last_ascent));
  }
}

TEST_CASE("double schubert of 13524: eight pipe dreams") {
  // Two reduced words, (4,2,3) and (2,4,3), each with four compatible
  // sequences; the six products displayed in the source example plus the two
  // (2,4,3)-word dreams, whose factors include x3 - y2.
  Polynomial expect =
      (xv(2) - yv(3)) * (xv(1) - yv(2)) * (xv(2) - yv(2)) +
      (xv(2) - yv(3)) * (xv(1) - yv(2)) * (xv(3) - yv(1)) +
      (xv(2) - yv(3)) * (xv(2) - yv(1)) * (xv(3) - yv(1)) +
      (xv(1) - yv(4)) * (xv(1) - yv(2)) * (xv(3) - yv(1)) +
      (xv(1) - yv(4)) * (xv(1) - yv(2)) * (xv(2) - yv(2)) +
      (xv(1) - yv(4)) * (xv(2) - yv(1)) * (xv(3) - yv(1)) +
      (xv(2) - yv(1)) * (xv(3) - yv(1)) * (xv(3) - yv(2)) +
      (xv(3) - yv(1)) * (xv(1) - yv(2)) * (xv(3) - yv(2));
  CHECK(double_schubert(Permutation::parse("13524")) == expect);
  CHECK(divided_difference_schubert(Permutation::parse("13524")) == expect);

  // y = 0 recovers the single Schubert polynomial, BJS expansion
  Polynomial single = expect.substitute([](const Var& var) {
    if (var.kind == VarKind::Y) return Polynomial(0);
    return Polynomial::var(var);
  });
  Polynomial bjs = xv(1) * xv(1) * xv(2) + xv(1) * xv(1) * xv(3) +
                   Polynomial(2) * xv(1) * xv(2) * xv(3) + xv(2) * xv(2) * xv(3) +
                   xv(1) * xv(2) * xv(2) + xv(1) * xv(3) * xv(3) + xv(2) * xv(3) * xv(3);
  CHECK(single == bjs);

  auto [star, what] = embed_matrix_schubert(Permutation::parse("13524"));
  CHECK(enumerate_pipes(star, Permutation::longest(10).compose(what), true).size() == 8);
}

TEST_CASE("double polynomial basics") {
  CHECK(double_schubert(Permutation::identity(3)) == Polynomial(1));
  CHECK(double_grothendieck(Permutation::identity(3)) == Polynomial(1));
  // top classes
  Polynomial top = (xv(1) - yv(1)) * (xv(1) - yv(2)) * (xv(2) - yv(1));
  CHECK(divided_difference_schubert(Permutation::longest(3)) == top);
  CHECK(double_schubert(Permutation::longest(3)) == top);
}

TEST_CASE("oracle agreement on all of S_3") {
  for (const Permutation& w : all_perms(3)) {
    CHECK(double_schubert(w) == divided_difference_schubert(w));
    CHECK(double_grothendieck(w) == divided_difference_grothendieck(w));
  }
}

TEST_CASE("schubert monomial positivity") {
  for (const Permutation& w : all_perms(3)) {
    Polynomial single = double_schubert(w).substitute([](const Var& var) {
      if (var.kind == VarKind::Y) return Polynomial(0);
      return Polynomial::var(var);
    });
    for (const auto& [m, c] : single.terms()) {
      CHECK(c > 0);
      CHECK(c.get_den() == 1);
    }
  }
}

TEST_CASE("specialization triples of the worked example") {
  Permutation v = Permutation::parse("31452"), w = Permutation::parse("53142");
  BuchRimanyiResult r = specialize_buch_rimanyi(v, w);
  CHECK(r.groth.all_equal());
  CHECK(r.schub.all_equal());

  // the two displayed sums in the t variables
  Polynomial lhs =
      (tv(1) - tv(3)) * (tv(3) - tv(4)) * (tv(1) - tv(4)) +
      (tv(1) - tv(3)) * (tv(3) - tv(4)) * (tv(4) - tv(5)) +
      (tv(1) - tv(3)) * (tv(1) - tv(5)) * (tv(4) - tv(5)) +
      (tv(3) - tv(2)) * (tv(3) - tv(4)) * (tv(4) - tv(5)) +
      (tv(3) - tv(2)) * (tv(3) - tv(4)) * (tv(1) - tv(4)) +
      (tv(3) - tv(2)) * (tv(1) - tv(5)) * (tv(4) - tv(5));
  Polynomial rhs =
      (tv(1) - tv(2)) * (tv(3) - tv(4)) * (tv(1) - tv(4)) +
      (tv(1) - tv(2)) * (tv(3) - tv(4)) * (tv(4) - tv(5)) +
      (tv(1) - tv(2)) * (tv(1) - tv(5)) * (tv(4) - tv(5));
  CHECK(lhs == rhs);
  CHECK(r.schub.from_unspecialized == rhs);
  CHECK(r.schub.from_double == lhs);
}

TEST_CASE("specialization diagonal cases") {
  Permutation v = Permutation::parse("231");
  BuchRimanyiResult r = specialize_buch_rimanyi(v, v);
  Polynomial expect(1);
  int n = v.n();
  for (const Box& b : rothe_diagram(v))
    expect = expect *
             (one() - Polynomial::term(Monomial({{Var::t(v(b.col)), 1}, {Var::t(n - b.row + 1), -1}}), 1));
  CHECK(r.groth.from_kpoly == expect);
  CHECK(r.groth.all_equal());

  Permutation w0 = Permutation::longest(4);
  BuchRimanyiResult rw = specialize_buch_rimanyi(w0, w0);
  CHECK(rw.groth.from_kpoly == Polynomial(1));
  CHECK(rw.schub.from_kpoly == Polynomial(1));
}

TEST_CASE("specialization triples on sampled S_6 pairs") {
  // exercises the embedding into S_12
  uint64_t state = 0x6666;
  auto rand6 = [&]() {
    std::vector<int> w(6);
    for (int i = 0; i < 6; ++i) w[i] = i + 1;
    for (int i = 5; i > 0; --i) {
      state ^= state << 13;
      state ^= state >> 7;
      state ^= state << 17;
      std::swap(w[i], w[state % (i + 1)]);
    }
    return Permutation(w);
  };
  int done = 0;
  while (done < 5) {
    Permutation a = rand6(), b = rand6();
    if (a == b || !bruhat_leq(a, b)) continue;
    BuchRimanyiResult r = specialize_buch_rimanyi(a, b);
    CHECK(r.groth.all_equal());
    CHECK(r.schub.all_equal());
    ++done;
  }
}

TEST_CASE("localization vanishes for incomparable pairs") {
  // v not <= w: all three routes must give zero
  Permutation v = Permutation::parse("3214"), w = Permutation::parse("2143");
  REQUIRE(!bruhat_leq(v, w));
  CHECK(unspecialized_grothendieck(v, w).is_zero());
  CHECK(kostant_kumar(v, w).is_zero());
  int n = v.n();
  Permutation w0w = Permutation::longest(n).compose(w);
  Polynomial loc = double_grothendieck(w0w).substitute([&](const Var& var) -> Polynomial {
    if (var.kind == VarKind::X) return Polynomial::var(Var::t(v(var.a)));
    if (var.kind == VarKind::Y) return Polynomial::var(Var::t(n - var.a + 1));
    return Polynomial::var(var);
  });
  CHECK(loc.is_zero());
}

TEST_CASE("multidegree from a Laurent K-polynomial") {
  // K = 1 - t1/t2: multidegree t1 - t2 in codimension 1
  Polynomial k = one() - Polynomial::term(Monomial({{Var::t(1), 1}, {Var::t(2), -1}}), 1);
  CHECK(multidegree_from_kpoly(k, 1) == tv(1) - tv(2));
  CHECK(multidegree_from_kpoly(Polynomial(), 3).is_zero());
}
