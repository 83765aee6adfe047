// Acceptance suite: one pass/fail line per criterion, selectable by group:
//   examples | groebner | primes | kpoly | double | props | gamma5 | montecarlo
// Exit code = number of failed criteria in the selected groups.

#include <chrono>
#include <cmath>
#include <cstring>
#include <iostream>
#include <map>
#include <set>

#include "kl/jsonio.hpp"

using namespace kl;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int criterion, bool ok, const std::string& detail) {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << criterion << ": " << detail << "\n";
  if (!ok) ++failures;
}

void note(const std::string& s) { std::cout << "  - " << s << "\n"; }

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

Polynomial xv(int k) { return Polynomial::var(Var::x(k)); }
Polynomial yv(int k) { return Polynomial::var(Var::y(k)); }
Polynomial tv(int k) { return Polynomial::var(Var::t(k)); }
Polynomial one() { return Polynomial(1); }

std::vector<Permutation> all_perms(int n) {
  std::vector<int> w(n);
  for (int i = 0; i < n; ++i) w[i] = i + 1;
  std::vector<Permutation> out;
  do out.push_back(Permutation(w));
  while (std::next_permutation(w.begin(), w.end()));
  return out;
}

std::vector<std::pair<Permutation, Permutation>> random_gamma5(size_t count, uint64_t seed) {
  Rng rng(seed);
  std::vector<std::pair<Permutation, Permutation>> out;
  while (out.size() < count) {
    ComparableSample s = sample_comparable_pair(5, rng);
    if (!(s.lo == s.hi)) out.push_back({s.lo, s.hi});
  }
  return out;
}

size_t facet_count(const Permutation& v, const Permutation& w) {
  return enumerate_pipes(v, Permutation::longest(v.n()).compose(w), true).size();
}

// ---------------------------------------------------------------- criterion 1
void criterion1() {
  auto t0 = Clock::now();
  RankMatrix r(Permutation::parse("365124"));
  int expect[6][6] = {{1, 2, 3, 4, 5, 6}, {1, 2, 3, 3, 4, 5}, {1, 2, 3, 3, 3, 4},
                      {0, 1, 2, 2, 2, 3}, {0, 1, 2, 2, 2, 2}, {0, 1, 1, 1, 1, 1}};
  bool ok = true;
  for (int i = 1; i <= 6; ++i)
    for (int j = 1; j <= 6; ++j)
      if (r.at(i, j) != expect[6 - i][j - 1]) ok = false;
  std::vector<Box> ess = essential_set(Permutation::parse("31524"));
  ok = ok && ess == std::vector<Box>{{2, 2}, {2, 4}, {4, 2}};
  double dt = seconds_since(t0);
  ok = ok && dt < 1.0;
  report(1, ok, "rank matrix of 365124 and essential set of 31524 match the worked examples");
}

// ---------------------------------------------------------------- criterion 2
void criterion2() {
  auto t0 = Clock::now();
  GeneratorSet g =
      essential_minors(Permutation::parse("43218765"), Permutation::parse("78564321"));
  Polynomial z11 = Polynomial::var(Var::z(1, 1));
  Polynomial corner = det({{Polynomial::var(Var::z(3, 1)), Polynomial::var(Var::z(3, 2)),
                            Polynomial::var(Var::z(3, 3))},
                           {Polynomial::var(Var::z(2, 1)), Polynomial::var(Var::z(2, 2)),
                            Polynomial::var(Var::z(2, 3))},
                           {Polynomial::var(Var::z(1, 1)), Polynomial::var(Var::z(1, 2)),
                            Polynomial::var(Var::z(1, 3))}});
  bool ok = g.minors.size() == 2;
  for (const Polynomial& p : g.minors)
    if (!(p == z11 || p == -z11 || p == corner || p == -corner)) ok = false;
  ok = ok && seconds_since(t0) < 1.0;
  report(2, ok, "essential minors of the matrix Schubert pair simplify to {z11, 3x3 corner minor}");
}

// ---------------------------------------------------------------- criterion 3
void criterion3() {
  auto t0 = Clock::now();
  size_t checked = 0;
  bool ok = true;
  for (const auto& [v, w] : gamma_pairs(4)) {
    if (!buchberger_verify(essential_minors(v, w)).is_groebner) ok = false;
    ++checked;
  }
  double gamma4_time = seconds_since(t0);
  note("Gamma_4: " + std::to_string(checked) + " pairs verified in " +
       std::to_string(gamma4_time) + " s");

  auto t1 = Clock::now();
  auto sample = random_gamma5(200, 20240917);
  for (const auto& [v, w] : sample)
    if (!buchberger_verify(essential_minors(v, w)).is_groebner) ok = false;
  double gamma5_time = seconds_since(t1);
  note("Gamma_5 sample: 200 pairs verified in " + std::to_string(gamma5_time) + " s");
  ok = ok && gamma4_time < 60.0 && gamma5_time < 600.0;
  report(3, ok, "Buchberger confirms the Groebner property on all Gamma_4 and 200 random Gamma_5 pairs");
}

// ---------------------------------------------------------------- criterion 4
void criterion4() {
  auto t0 = Clock::now();
  bool ok = true;
  auto check_pair = [&](const Permutation& v, const Permutation& w) {
    auto primes = initial_ideal_primes(v, w);
    PipeComplex c(v, w);
    std::vector<std::vector<Box>> cross_sets;
    for (const Face& f : c.facets()) cross_sets.push_back(f.label.crosses);
    std::sort(cross_sets.begin(), cross_sets.end());
    if (primes != cross_sets) ok = false;
    MonomialIdeal lt = leading_term_ideal(essential_minors(v, w));
    MonomialIdeal sr = stanley_reisner_ideal(c);
    auto a = lt.generators, b = sr.generators;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) ok = false;
  };
  for (const auto& [v, w] : gamma_pairs(4)) check_pair(v, w);
  for (const auto& [v, w] : random_gamma5(100, 777001)) check_pair(v, w);
  double dt = seconds_since(t0);
  ok = ok && dt < 600.0;
  report(4, ok, "initial-ideal minimal primes equal RedPipes cross-sets and the Stanley-Reisner ideal (Gamma_4 + 100 random Gamma_5), " +
                    std::to_string(dt) + " s");
}

// ---------------------------------------------------------------- criterion 5
void criterion5() {
  auto t0 = Clock::now();
  Permutation v = Permutation::parse("31524"), w = Permutation::parse("13254");
  bool ok = enumerate_pipes(v, w, true).size() == 4;
  ok = ok && enumerate_pipes(v, w, false).size() == 9;
  PipeComplex c(Permutation::parse("31452"), Permutation::parse("53142"));
  ok = ok && c.facets().size() == 3;
  ok = ok && c.interior_faces().size() == 5;
  TopologyReport topo = topology_check(c);
  ok = ok && topo.kind == TopologyReport::Ball && topo.dimension == 2;
  ok = ok && seconds_since(t0) < 1.0;
  report(5, ok, "|RedPipes|=4, |Pipes|=9, and the worked complex is a 2-ball with 3 facets / 5 interior faces");
}

// ---------------------------------------------------------------- criterion 6
void criterion6() {
  auto t0 = Clock::now();
  bool ok = true;
  auto check_pair = [&](const Permutation& v, const Permutation& w) {
    BuchRimanyiResult r = specialize_buch_rimanyi(v, w);
    if (!r.groth.all_equal() || !r.schub.all_equal()) ok = false;
    KPolyResult kc = kpoly_via_complex(PipeComplex(v, w), WeightAssignment::usual(v));
    if (kc.kpoly != r.groth.from_kpoly) ok = false;
    if (kc.multidegree != r.schub.from_kpoly) ok = false;
  };
  for (const auto& [v, w] : gamma_pairs(4)) check_pair(v, w);
  for (const auto& [v, w] : random_gamma5(100, 424242)) check_pair(v, w);

  // Example 4.6: the two displayed t-polynomials coincide after expansion
  Polynomial lhs = (tv(1) - tv(3)) * (tv(3) - tv(4)) * (tv(1) - tv(4)) +
                   (tv(1) - tv(3)) * (tv(3) - tv(4)) * (tv(4) - tv(5)) +
                   (tv(1) - tv(3)) * (tv(1) - tv(5)) * (tv(4) - tv(5)) +
                   (tv(3) - tv(2)) * (tv(3) - tv(4)) * (tv(4) - tv(5)) +
                   (tv(3) - tv(2)) * (tv(3) - tv(4)) * (tv(1) - tv(4)) +
                   (tv(3) - tv(2)) * (tv(1) - tv(5)) * (tv(4) - tv(5));
  Polynomial rhs = (tv(1) - tv(2)) * (tv(3) - tv(4)) * (tv(1) - tv(4)) +
                   (tv(1) - tv(2)) * (tv(3) - tv(4)) * (tv(4) - tv(5)) +
                   (tv(1) - tv(2)) * (tv(1) - tv(5)) * (tv(4) - tv(5));
  ok = ok && lhs == rhs;
  BuchRimanyiResult ex = specialize_buch_rimanyi(Permutation::parse("31452"),
                                                 Permutation::parse("53142"));
  ok = ok && ex.schub.from_double == lhs && ex.schub.from_unspecialized == rhs;
  double dt = seconds_since(t0);
  ok = ok && dt < 600.0;
  report(6, ok, "K-polynomial and multidegree triples agree (Gamma_4 + 100 random Gamma_5; Example 4.6 reproduced), " +
                    std::to_string(dt) + " s");
}

// ---------------------------------------------------------------- criterion 7
void criterion7() {
  auto t0 = Clock::now();
  Polynomial displayed =  // the six products of the source example
      (xv(2) - yv(3)) * (xv(1) - yv(2)) * (xv(2) - yv(2)) +
      (xv(2) - yv(3)) * (xv(1) - yv(2)) * (xv(3) - yv(1)) +
      (xv(2) - yv(3)) * (xv(2) - yv(1)) * (xv(3) - yv(1)) +
      (xv(1) - yv(4)) * (xv(1) - yv(2)) * (xv(3) - yv(1)) +
      (xv(1) - yv(4)) * (xv(1) - yv(2)) * (xv(2) - yv(2)) +
      (xv(1) - yv(4)) * (xv(2) - yv(1)) * (xv(3) - yv(1));
  Polynomial computed = double_schubert(Permutation::parse("13524"));
  bool example44 = computed == displayed;
  Polynomial missing = (xv(2) - yv(1)) * (xv(3) - yv(1)) * (xv(3) - yv(2)) +
                       (xv(3) - yv(1)) * (xv(1) - yv(2)) * (xv(3) - yv(2));
  bool corrected = computed == displayed + missing;

  bool oracle_ok = true;
  for (const Permutation& w : all_perms(4)) {
    if (double_schubert(w) != divided_difference_schubert(w)) oracle_ok = false;
    if (double_grothendieck(w) != divided_difference_grothendieck(w)) oracle_ok = false;
  }

  // third route: the localization identity at v = 12345, w = 53142, where the
  // two omitted dreams do not vanish
  Permutation v5 = Permutation::identity(5), w5 = Permutation::parse("53142");
  BuchRimanyiResult loc = specialize_buch_rimanyi(v5, w5);
  Polynomial disp_spec = displayed.substitute([&](const Var& var) -> Polynomial {
    if (var.kind == VarKind::X) return Polynomial::var(Var::t(v5(var.a)));
    if (var.kind == VarKind::Y) return Polynomial::var(Var::t(5 - var.a + 1));
    return Polynomial::var(var);
  });
  bool display_fails_localization = disp_spec != loc.schub.from_kpoly;
  bool computed_passes_localization = loc.schub.all_equal();
  double dt = seconds_since(t0);

  bool ok = example44 && oracle_ok && dt < 60.0;
  report(7, ok, "double polynomials: Example 4.4 display + oracle agreement on all of S_4");
  note(std::string(example44 ? "PASS" : "FAIL") +
       ": double_schubert(13524) equals the six displayed products");
  if (!example44) {
    note(std::string(corrected ? "PASS" : "FAIL") +
         ": it equals the display plus the two missing (2,4,3)-word dreams "
         "(x2-y1)(x3-y1)(x3-y2) + (x3-y1)(x1-y2)(x3-y2) - the example dropped them; "
         "see the eight-dream analysis in the test suite");
    note(std::string(display_fails_localization && computed_passes_localization ? "PASS" : "FAIL") +
         ": at (v,w) = (12345, 53142) the localization identity rejects the six-product "
         "display and accepts the eight-dream polynomial");
  }
  note(std::string(oracle_ok ? "PASS" : "FAIL") +
       ": pipe-dream route equals the divided-difference oracle for all w in S_4, " +
       std::to_string(dt) + " s");
}

// ---------------------------------------------------------------- criterion 8
void criterion8() {
  auto t0 = Clock::now();
  Permutation v = Permutation::parse("743198652"), w = Permutation::parse("975286431");
  auto dv = cograssmannian_data(v_max(v, w));
  auto dw = cograssmannian_data(w);
  bool ok = dv.has_value() && dw.has_value();
  mpz_class by_tableaux = 0, by_det = 0;
  if (ok) {
    auto b = flag_vector(dv->shape, dw->shape);
    ok = ok && b == std::vector<int>{1, 3, 4};
    ok = ok && dw->shape.parts == std::vector<int>{4, 2, 1, 0};
    by_tableaux = flagged_ssyt_count(dw->shape, b);
    by_det = binomial_determinant(dw->shape, b);
  }
  MultiplicityOutcome o = multiplicity(v, w);
  bool facet_route = o.value.has_value() && *o.value == 5 && o.facet_count == size_t(5);
  ok = ok && by_tableaux == 5 && by_det == 5 && facet_route;
  ok = ok && seconds_since(t0) < 5.0;
  report(8, ok, "multiplicity(743198652, 975286431) = 5 by tableaux, determinant, and facet count");
}

// ---------------------------------------------------------------- criterion 9
void criterion9() {
  auto t0 = Clock::now();
  bool ok = v_max(Permutation::parse("316298475"), Permutation::parse("896354721")) ==
            Permutation::parse("362198754");
  ok = ok && is_standardly_homogeneous(Permutation::parse("45213"), Permutation::parse("54231"));
  ok = ok && !is_standardly_homogeneous(Permutation::parse("13425"), Permutation::parse("34512"));
  ok = ok && !is_standardly_homogeneous(Permutation::parse("31524"), Permutation::parse("43512"));
  ok = ok && is_standardly_homogeneous(Permutation::parse("41532"), Permutation::parse("43512"));
  GeneratorSet red =
      interreduce(essential_minors(Permutation::parse("31524"), Permutation::parse("43512")));
  Polynomial z11 = Polynomial::var(Var::z(1, 1));
  Polynomial z12 = Polynomial::var(Var::z(1, 2));
  Polynomial g3 = Polynomial::var(Var::z(2, 4)) * Polynomial::var(Var::z(4, 2)) -
                  Polynomial::var(Var::z(2, 2));
  bool basis_ok = red.minors.size() == 3;
  for (const Polynomial& p : red.minors)
    if (!(p == z11 || p == z12 || p == g3 || p == -g3)) basis_ok = false;
  ok = ok && basis_ok && seconds_since(t0) < 5.0;
  report(9, ok, "v_max worked example and the four homogeneity classifications with the reduced basis");
}

// --------------------------------------------------------------- criterion 10
void criterion10() {
  auto t0 = Clock::now();
  GammaReport rep = gamma_statistics(5, std::nullopt, 2);
  double dt = seconds_since(t0);

  bool count_as_stated = rep.pairs == 3871;
  bool route1_as_stated = std::abs(rep.pct_route1 - 74.0) <= 1.0;
  bool route12_ok = std::abs(rep.pct_route12 - 98.5) <= 0.5;
  bool time_ok = dt < 1800.0;

  // three-way-validated ground truth
  size_t oracle_count = 0;
  {
    auto perms = all_perms(5);
    std::map<uint64_t, std::set<uint64_t>> below;
    std::sort(perms.begin(), perms.end(), [](const Permutation& a, const Permutation& b) {
      return a.length() < b.length();
    });
    for (const Permutation& w : perms) {
      auto& s = below[w.pack()];
      s.insert(w.pack());
      for (int a = 1; a <= 5; ++a)
        for (int b = a + 1; b <= 5; ++b) {
          std::vector<int> u = w.word();
          std::swap(u[a - 1], u[b - 1]);
          Permutation pu{u};
          if (pu.length() == w.length() - 1) {
            const auto& t = below[pu.pack()];
            s.insert(t.begin(), t.end());
          }
        }
      oracle_count += s.size() - 1;
    }
  }

  bool ok = count_as_stated && route1_as_stated && route12_ok && time_ok;
  report(10, ok, "Gamma_5 statistics at the stated values");
  note(std::string(count_as_stated ? "PASS" : "FAIL") + ": |Gamma_5| = 3871 as stated (measured " +
       std::to_string(rep.pairs) + ")");
  note(std::string(route1_as_stated ? "PASS" : "FAIL") + ": route-(1) = 74 +/- 1 (measured " +
       std::to_string(rep.pct_route1) + "%)");
  note(std::string(route12_ok ? "PASS" : "FAIL") + ": routes-(1)+(2) = 98.5 +/- 0.5 (measured " +
       std::to_string(rep.pct_route12) + "%)");
  note("cover-closure oracle count of strict comparable S_5 pairs: " +
       std::to_string(oracle_count) + (oracle_count == rep.pairs ? " (agrees)" : " (DISAGREES)"));
  note("sweep time " + std::to_string(dt) + " s; conjecture counterexamples: " +
       std::to_string(rep.conjecture_counterexamples.size()));
}

// --------------------------------------------------------------- criterion 11
void criterion11() {
  auto t0 = Clock::now();
  TrialConfig c6;
  c6.n = 6;
  c6.trials = 2000;
  c6.seed = 1;
  c6.jobs = 2;
  EstimateReport r6 = estimate_success(c6);
  TrialConfig c7 = c6;
  c7.n = 7;
  EstimateReport r7 = estimate_success(c7);
  double dt = seconds_since(t0);
  bool ok6 = r6.pct >= 90.0 && r6.pct <= 98.0;
  bool ok7 = r7.pct >= 81.0 && r7.pct <= 91.0;
  bool ok = ok6 && ok7 && dt < 3600.0 && r6.budget_exceeded == 0 && r7.budget_exceeded == 0;
  report(11, ok, "Monte Carlo: n=6 -> " + std::to_string(r6.pct) + "% (in [90,98]), n=7 -> " +
                     std::to_string(r7.pct) + "% (in [81,91]), " + std::to_string(dt) + " s");
}

// --------------------------------------------------------------- criterion 12
void criterion12() {
  auto t0 = Clock::now();
  bool ok = true;
  Rng rng(31337);

  // |D(v)| = l(w0 v) and the canonical word is reduced
  for (int n = 2; n <= 6; ++n)
    for (const Permutation& v : all_perms(n)) {
      Permutation w0v = Permutation::longest(n).compose(v);
      auto lab = canonical_labeling(v);
      if (int(lab.size()) != w0v.length()) ok = false;
      Permutation p = Permutation::identity(n);
      for (const LabeledBox& lb : lab) p = p.right_mul_s(lb.label);
      if (p != w0v) ok = false;
    }

  // strand permutation = target for reduced dreams
  for (int t = 0; t < 40; ++t) {
    Permutation v = rng.permutation(4 + int(rng.below(2)));
    Permutation target = rng.permutation(v.n());
    for (const PipeDream& p : enumerate_pipes(v, target, true))
      if (flatten(p).strand_permutation != target) ok = false;
  }

  // Bruhat rank-matrix test == cover-closure oracle on S_4
  {
    auto perms = all_perms(4);
    std::map<uint64_t, std::set<uint64_t>> below;
    std::sort(perms.begin(), perms.end(), [](const Permutation& a, const Permutation& b) {
      return a.length() < b.length();
    });
    for (const Permutation& w : perms) {
      auto& s = below[w.pack()];
      s.insert(w.pack());
      for (int a = 1; a <= 4; ++a)
        for (int b = a + 1; b <= 4; ++b) {
          std::vector<int> u = w.word();
          std::swap(u[a - 1], u[b - 1]);
          Permutation pu{u};
          if (pu.length() == w.length() - 1) {
            const auto& t2 = below[pu.pack()];
            s.insert(t2.begin(), t2.end());
          }
        }
    }
    for (const Permutation& v : perms)
      for (const Permutation& w : perms)
        if (bruhat_leq(v, w) != (below[w.pack()].count(v.pack()) > 0)) ok = false;
  }

  // flagged count == determinant on 100 random shapes
  for (int t = 0; t < 100; ++t) {
    int k = 1 + int(rng.below(4));
    Partition lam;
    int prev = 1 + int(rng.below(5));
    for (int i = 0; i < k; ++i) {
      lam.parts.push_back(prev);
      prev = std::max(0, prev - int(rng.below(3)));
    }
    std::vector<int> b(k);
    int lo = 0;
    for (int i = 0; i < k; ++i) {
      lo = std::max(lo + 1, i + 1);
      b[i] = lo + int(rng.below(3));
      lo = b[i];
    }
    if (flagged_ssyt_count(lam, b) != binomial_determinant(lam, b)) ok = false;
  }

  // Demazure product invariance under braid/commutation rewrites
  for (int t = 0; t < 300; ++t) {
    int n = 3 + int(rng.below(4));
    std::vector<int> word(2 + rng.below(10));
    for (int& x : word) x = 1 + int(rng.below(uint64_t(n - 1)));
    Permutation before = demazure_product(word, n);
    for (size_t k = 0; k + 1 < word.size(); ++k) {
      if (std::abs(word[k] - word[k + 1]) >= 2) {
        auto w2 = word;
        std::swap(w2[k], w2[k + 1]);
        if (demazure_product(w2, n) != before) ok = false;
      }
      if (k + 2 < word.size() && word[k] == word[k + 2] &&
          std::abs(word[k] - word[k + 1]) == 1) {
        auto w2 = word;
        w2[k] = word[k + 1];
        w2[k + 1] = word[k];
        w2[k + 2] = word[k + 1];
        if (demazure_product(w2, n) != before) ok = false;
      }
    }
  }

  // Kostant-Kumar ascent-choice independence on 50 random pairs
  {
    auto pairs = gamma_pairs(4);
    auto first_ascent = [](const Permutation& p) {
      for (int i = 1; i < p.n(); ++i)
        if (!p.is_right_descent(i)) return i;
      return 0;
    };
    auto last_ascent = [](const Permutation& p) { return p.last_right_ascent(); };
    for (int t = 0; t < 50; ++t) {
      const auto& [v, w] = pairs[rng.below(pairs.size())];
      if (kostant_kumar_with_ascent(v, w, first_ascent) !=
          kostant_kumar_with_ascent(v, w, last_ascent))
        ok = false;
    }
  }

  double dt = seconds_since(t0);
  ok = ok && dt < 300.0;
  report(12, ok, "property suites (diagram size, reduced words, strands, Bruhat oracle, "
                 "tableaux determinant, Demazure rewrites, ascent independence), " +
                     std::to_string(dt) + " s");
}

}  // namespace

int main(int argc, char** argv) {
  std::set<std::string> groups;
  for (int i = 1; i < argc; ++i) groups.insert(argv[i]);
  auto want = [&](const char* g) { return groups.empty() || groups.count(g) > 0; };

  if (want("examples")) {
    criterion1();
    criterion2();
    criterion5();
    criterion8();
    criterion9();
  }
  if (want("groebner")) criterion3();
  if (want("primes")) criterion4();
  if (want("kpoly")) criterion6();
  if (want("double")) criterion7();
  if (want("gamma5")) criterion10();
  if (want("montecarlo")) criterion11();
  if (want("props")) criterion12();
  return failures;
}
