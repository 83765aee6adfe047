#include "kl/mult.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace kl {

std::string to_string(MultRoute r) {
  switch (r) {
    case MultRoute::DirectHomogeneous: return "direct_homogeneous";
    case MultRoute::ViaVmax: return "via_vmax";
    case MultRoute::CograssmannianDeterminant: return "cograssmannian_determinant";
    case MultRoute::Unresolved: return "unresolved";
  }
  return "?";
}

static size_t facet_count(const Permutation& v, const Permutation& w) {
  Permutation target = Permutation::longest(v.n()).compose(w);
  size_t count = 0;
  enumerate_pipes(v, target, true, [&](const PipeDream&) {
    ++count;
    return true;
  });
  return count;
}

MultiplicityOutcome multiplicity(const Permutation& v, const Permutation& w) {
  if (!bruhat_leq(v, w)) throw std::invalid_argument("requires v <= w");
  MultiplicityOutcome out;
  if (is_standardly_homogeneous(v, w)) {
    out.route = MultRoute::DirectHomogeneous;
    out.v_used = v;
    out.facet_count = facet_count(v, w);
    out.value = mpz_class(*out.facet_count);
    return out;
  }
  Permutation vm = v_max(v, w);
  if (is_standardly_homogeneous(vm, w)) {
    out.route = MultRoute::ViaVmax;
    out.v_used = vm;
    out.facet_count = facet_count(vm, w);
    out.value = mpz_class(*out.facet_count);
    return out;
  }
  if (auto cg = cograssmannian_data(w)) {
    Permutation vcg = v_max(v, w);
    auto cgv = cograssmannian_data(vcg);
    if (cgv && cgv->ascent == cg->ascent && cgv->shape.contains(cg->shape)) {
      out.route = MultRoute::CograssmannianDeterminant;
      out.v_used = vcg;
      auto b = flag_vector(cgv->shape, cg->shape);
      out.tableau_count = binomial_determinant(cg->shape, b);
      out.value = out.tableau_count;
      return out;
    }
  }
  out.route = MultRoute::Unresolved;
  out.v_used = v;
  return out;
}

std::vector<int> flag_vector(const Partition& lam_v, const Partition& lam_w) {
  if (!lam_v.contains(lam_w)) throw std::invalid_argument("shapes not nested");
  int rows = 0;
  for (int m = 1; m <= lam_w.size(); ++m)
    if (lam_w.part(m) > 0) rows = m;
  std::vector<int> b;
  for (int m = 1; m <= rows; ++m) {
    int best = 0;
    for (int i = 1; i <= lam_v.size(); ++i)
      if (lam_v.part(i) >= lam_w.part(m) + i - m) best = i;
    b.push_back(best);
  }
  return b;
}

mpz_class flagged_ssyt_count(const Partition& lam, const std::vector<int>& b) {
  int rows = 0;
  for (int m = 1; m <= lam.size(); ++m)
    if (lam.part(m) > 0) rows = m;
  if (rows == 0) return 1;
  if (int(b.size()) < rows) throw std::invalid_argument("flag vector too short");

  std::vector<std::vector<int>> t(rows);
  for (int m = 0; m < rows; ++m) t[m].assign(lam.part(m + 1), 0);

  mpz_class count = 0;
  auto rec = [&](auto&& self, int r, int c) -> void {
    if (r == rows) {
      ++count;
      return;
    }
    int nr = r, nc = c + 1;
    if (nc >= lam.part(r + 1)) nr = r + 1, nc = 0;
    int lo = 1;
    if (c > 0) lo = std::max(lo, t[r][c - 1]);          // weakly increasing rows
    if (r > 0 && c < lam.part(r)) lo = std::max(lo, t[r - 1][c] + 1);  // strict columns
    for (int e = lo; e <= b[r]; ++e) {
      t[r][c] = e;
      self(self, nr, nc);
    }
  };
  rec(rec, 0, 0);
  return count;
}

static mpz_class binom(long a, long k) {
  if (k < 0 || a < 0 || k > a) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(k));
  return r;
}

mpz_class binomial_determinant(const Partition& lam, const std::vector<int>& b) {
  int rows = 0;
  for (int m = 1; m <= lam.size(); ++m)
    if (lam.part(m) > 0) rows = m;
  if (rows == 0) return 1;
  if (int(b.size()) < rows) throw std::invalid_argument("flag vector too short");

  // entries h_{lambda_i - i + j}(1^{b_i}) = C(b_i + d - 1, d)
  std::vector<std::vector<mpz_class>> m(rows, std::vector<mpz_class>(rows));
  for (int i = 1; i <= rows; ++i)
    for (int j = 1; j <= rows; ++j) {
      long d = lam.part(i) - i + j;
      m[i - 1][j - 1] = d < 0 ? 0 : binom(b[i - 1] + d - 1, d);
    }
  // Laplace expansion is fine at these sizes
  auto rec = [&](auto&& self, std::vector<int> rs, std::vector<int> cs) -> mpz_class {
    if (rs.size() == 1) return m[rs[0]][cs[0]];
    mpz_class acc = 0;
    std::vector<int> sub_cols(cs.begin() + 1, cs.end());
    for (size_t i = 0; i < rs.size(); ++i) {
      if (m[rs[i]][cs[0]] == 0) continue;
      std::vector<int> sub_rows;
      for (size_t r = 0; r < rs.size(); ++r)
        if (r != i) sub_rows.push_back(rs[r]);
      mpz_class term = m[rs[i]][cs[0]] * self(self, sub_rows, sub_cols);
      if (i % 2 == 0)
        acc += term;
      else
        acc -= term;
    }
    return acc;
  };
  std::vector<int> rs(rows), cs(rows);
  for (int i = 0; i < rows; ++i) rs[i] = i, cs[i] = i;
  return rec(rec, rs, cs);
}

PipeDream starting_pipe_dream(const Permutation& v, const Permutation& w) {
  auto cgv = cograssmannian_data(v);
  auto cgw = cograssmannian_data(w);
  if (!cgv || !cgw || cgv->ascent != cgw->ascent)
    throw std::invalid_argument("needs co-Grassmannian v, w with a common ascent");
  if (!cgv->shape.contains(cgw->shape)) throw std::invalid_argument("shapes not nested");

  auto diagram = rothe_diagram(v);
  int max_col = 0;
  for (const Box& b : diagram) max_col = std::max(max_col, b.col);

  // column max_col+1-m of flatten(D(v)) holds lambda(w)_m crosses at the bottom
  std::vector<Box> crosses;
  for (int m = 1; m <= cgw->shape.size(); ++m) {
    int col = max_col + 1 - m;
    std::vector<int> rows;  // diagram rows in this column, bottom-up
    for (const Box& b : diagram)
      if (b.col == col) rows.push_back(b.row);
    std::sort(rows.begin(), rows.end());
    int want = cgw->shape.part(m);
    if (want > int(rows.size()))
      throw std::invalid_argument("shape exceeds the flattened column");
    for (int k = 0; k < want; ++k) crosses.push_back({rows[k], col});
  }
  return make_dream(v, std::move(crosses));
}

std::vector<std::pair<Permutation, Permutation>> gamma_pairs(int n) {
  std::vector<Permutation> all;
  std::vector<int> word(n);
  for (int i = 0; i < n; ++i) word[i] = i + 1;
  do {
    all.push_back(Permutation(word));
  } while (std::next_permutation(word.begin(), word.end()));
  std::vector<std::pair<Permutation, Permutation>> pairs;
  for (const Permutation& v : all)
    for (const Permutation& w : all)
      if (!(v == w) && bruhat_leq(v, w)) pairs.push_back({v, w});
  return pairs;
}

namespace {

// splitmix64; the documented per-index stream used across the project
uint64_t mix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d4ecb87f5af0edULL;
  return x ^ (x >> 31);
}

Permutation random_perm(int n, uint64_t& state) {
  std::vector<int> word(n);
  for (int i = 0; i < n; ++i) word[i] = i + 1;
  for (int i = n - 1; i > 0; --i) {
    state = mix64(state);
    int j = int(state % uint64_t(i + 1));
    std::swap(word[i], word[j]);
  }
  return Permutation(word);
}

}  // namespace

GammaReport gamma_statistics(int n, std::optional<std::pair<size_t, uint64_t>> sample,
                             int jobs, size_t spair_budget) {
  GammaReport rep;
  rep.n = n;
  rep.exhaustive = !sample.has_value();

  std::vector<std::pair<Permutation, Permutation>> pairs;
  if (rep.exhaustive) {
    if (n > 5) throw std::invalid_argument("exhaustive sweep supported for n <= 5");
    pairs = gamma_pairs(n);
  } else {
    auto [count, seed] = *sample;
    for (size_t k = 0; k < count; ++k) {
      uint64_t state = mix64(seed ^ mix64(k));
      for (;;) {
        Permutation a = random_perm(n, state);
        Permutation b = random_perm(n, state);
        if (a == b) continue;
        if (bruhat_leq(a, b)) {
          pairs.push_back({a, b});
          break;
        }
        if (bruhat_leq(b, a)) {
          pairs.push_back({b, a});
          break;
        }
      }
    }
  }
  rep.pairs = pairs.size();

  std::vector<PairRecord> recs(pairs.size());
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      size_t k = next.fetch_add(1);
      if (k >= pairs.size()) break;
      auto& [v, w] = pairs[k];
      PairRecord r;
      r.v = v;
      r.w = w;
      try {
        r.homog_direct = is_standardly_homogeneous(v, w);
        if (!r.homog_direct) r.homog_vmax = is_standardly_homogeneous(v_max(v, w), w);
      } catch (const BudgetExceeded&) {
        r.budget_exceeded = true;
      }
      recs[k] = std::move(r);
    }
  };
  (void)spair_budget;
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  size_t usable = 0;
  for (const PairRecord& r : recs) {
    if (r.budget_exceeded) {
      ++rep.budget_exceeded;
      continue;
    }
    ++usable;
    if (r.homog_direct) ++rep.route1;
    if (r.homog_direct || r.homog_vmax) ++rep.route12;
  }
  if (usable > 0) {
    rep.pct_route1 = 100.0 * double(rep.route1) / double(usable);
    rep.pct_route12 = 100.0 * double(rep.route12) / double(usable);
  }

  // Conjecture instances: I_{v,w} homogeneous, ws_i < w, vs_i > v.
  for (const PairRecord& r : recs) {
    if (r.budget_exceeded || !r.homog_direct) continue;
    const Permutation& v = r.v;
    const Permutation& w = r.w;
    for (int i = 1; i < n; ++i) {
      if (w.is_right_descent(i) && !v.is_right_descent(i)) {
        ++rep.conjecture_instances;
        if (!is_standardly_homogeneous(v.right_mul_s(i), w))
          rep.conjecture_counterexamples.push_back({v.right_mul_s(i), w});
      }
      if (w.is_left_descent(i) && !v.is_left_descent(i)) {
        ++rep.conjecture_instances;
        if (!is_standardly_homogeneous(v.left_mul_s(i), w))
          rep.conjecture_counterexamples.push_back({v.left_mul_s(i), w});
      }
    }
  }
  return rep;
}

}  // namespace kl
