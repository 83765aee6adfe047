#include "kl/ideal.hpp"

#include <algorithm>
#include <map>

namespace kl {

SpecializedMatrix::SpecializedMatrix(const Permutation& v)
    : v_(v), e_(size_t(v.n()) * v.n()) {
  const int n = v.n();
  auto set = [&](int r, int c, Polynomial p) { e_[(r - 1) * n + (c - 1)] = std::move(p); };
  std::vector<std::vector<bool>> fixed(n + 1, std::vector<bool>(n + 1, false));
  for (int i = 1; i <= n; ++i) {
    int r = n - v(i) + 1;
    set(r, i, Polynomial(1));
    fixed[r][i] = true;
    for (int a = i + 1; a <= n; ++a) fixed[r][a] = true;  // zeros right of the 1
    for (int b = r + 1; b <= n; ++b) fixed[b][i] = true;  // zeros above the 1
  }
  for (int r = 1; r <= n; ++r)
    for (int c = 1; c <= n; ++c)
      if (!fixed[r][c]) set(r, c, Polynomial::var(Var::z(r, c)));
}

std::vector<Box> SpecializedMatrix::free_boxes() const {
  std::vector<Box> out;
  const int n = v_.n();
  for (int r = 1; r <= n; ++r)
    for (int c = 1; c <= n; ++c) {
      const Polynomial& p = at(r, c);
      if (!p.is_zero() && p != Polynomial(1)) out.push_back({r, c});
    }
  return out;
}

std::string SpecializedMatrix::str() const {
  const int n = v_.n();
  std::string out;
  for (int r = n; r >= 1; --r) {
    for (int c = 1; c <= n; ++c) {
      out += at(r, c).str();
      out += c == n ? "" : " ";
    }
    out += '\n';
  }
  return out;
}

namespace {

void subsets_of_size(int n, int k, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> pick;
  auto rec = [&](auto&& self, int start) -> void {
    if (int(pick.size()) == k) {
      f(pick);
      return;
    }
    for (int i = start; i <= n - (k - int(pick.size())) + 1; ++i) {
      pick.push_back(i);
      self(self, i + 1);
      pick.pop_back();
    }
  };
  rec(rec, 1);
}

Polynomial monic(const Polynomial& p, const TermOrder& ord) {
  Term lt = p.leading_term(ord);
  return p * (Rat(1) / lt.coeff);
}

}  // namespace

GeneratorSet essential_minors(const Permutation& v, const Permutation& w, bool all_minors) {
  if (v.n() != w.n()) throw std::invalid_argument("size mismatch");
  const int n = v.n();
  SpecializedMatrix zmat(v);
  RankMatrix rw(w);

  std::vector<Box> places;
  if (all_minors) {
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) places.push_back({i, j});
  } else {
    places = essential_set(w);
  }

  GeneratorSet g{v, w, {}, TermOrder{TermOrder::KlLex}, 0, 0};
  std::set<Polynomial> seen;
  for (const Box& e : places) {
    int sz = 1 + rw.at(e.row, e.col);
    if (sz > std::min(e.row, e.col)) continue;  // no minors of that size
    subsets_of_size(e.row, sz, [&](const std::vector<int>& rows) {
      subsets_of_size(e.col, sz, [&](const std::vector<int>& cols) {
        std::vector<std::vector<Polynomial>> m(sz, std::vector<Polynomial>(sz));
        for (int a = 0; a < sz; ++a)
          for (int b = 0; b < sz; ++b) m[a][b] = zmat.at(rows[sz - 1 - a], cols[b]);
        Polynomial d = det(m);
        if (d.is_zero()) {
          ++g.zero_minors_dropped;
          return;
        }
        d = monic(d, g.order);
        if (!seen.insert(d).second)
          ++g.duplicates_dropped;
        else
          g.minors.push_back(std::move(d));
      });
    });
  }
  return g;
}

bool MonomialIdeal::contains(const Monomial& m) const {
  for (const Monomial& g : generators)
    if (g.divides(m)) return true;
  return false;
}

static MonomialIdeal minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  MonomialIdeal out;
  for (size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < gens.size() && !redundant; ++j)
      if (j != i && gens[j].divides(gens[i])) redundant = true;
    if (!redundant) out.generators.push_back(gens[i]);
  }
  return out;
}

MonomialIdeal leading_term_ideal(const GeneratorSet& g) {
  std::vector<Monomial> lts;
  for (const Polynomial& p : g.minors) {
    Monomial m = p.leading_term(g.order).mono;
    if (!m.squarefree())
      throw TheoryViolation("non-squarefree leading term of an essential minor");
    lts.push_back(std::move(m));
  }
  return minimalize(std::move(lts));
}

Polynomial reduce_modulo(const Polynomial& f, const std::vector<Polynomial>& gens,
                         const TermOrder& ord, size_t* steps) {
  struct LT {
    Monomial mono;
    Rat coeff;
  };
  std::vector<LT> lts;
  lts.reserve(gens.size());
  for (const Polynomial& g : gens) {
    Term t = g.leading_term(ord);
    lts.push_back({t.mono, t.coeff});
  }
  Polynomial rem;
  Polynomial h = f;
  while (!h.is_zero()) {
    Term ht = h.leading_term(ord);
    bool divided = false;
    for (size_t k = 0; k < gens.size(); ++k) {
      if (lts[k].mono.divides(ht.mono)) {
        if (steps) {
          if (*steps == 0) throw BudgetExceeded("reduction step budget exhausted");
          --*steps;
        }
        Monomial q = ht.mono.divide(lts[k].mono);
        h -= Polynomial::term(q, ht.coeff / lts[k].coeff) * gens[k];
        divided = true;
        break;
      }
    }
    if (!divided) {
      Polynomial t = Polynomial::term(ht.mono, ht.coeff);
      rem += t;
      h -= t;
    }
  }
  return rem;
}

BuchbergerReport buchberger_verify(const GeneratorSet& g, size_t budget) {
  BuchbergerReport rep{true, 0, 0, std::nullopt};
  const auto& gens = g.minors;
  std::vector<Monomial> lts;
  lts.reserve(gens.size());
  for (const Polynomial& p : gens) lts.push_back(p.leading_term(g.order).mono);

  for (size_t i = 0; i < gens.size(); ++i)
    for (size_t j = i + 1; j < gens.size(); ++j) {
      if (Monomial::gcd(lts[i], lts[j]).is_one()) {
        ++rep.spairs_skipped_coprime;
        continue;
      }
      if (++rep.spairs_checked > budget)
        throw BudgetExceeded("S-pair budget exhausted");
      Monomial l = Monomial::lcm(lts[i], lts[j]);
      Term ti = gens[i].leading_term(g.order);
      Term tj = gens[j].leading_term(g.order);
      Polynomial s = Polynomial::term(l.divide(ti.mono), Rat(1) / ti.coeff) * gens[i] -
                     Polynomial::term(l.divide(tj.mono), Rat(1) / tj.coeff) * gens[j];
      if (!reduce_modulo(s, gens, g.order).is_zero()) {
        rep.is_groebner = false;
        rep.failing_pair = {i, j};
        return rep;
      }
    }
  return rep;
}

GeneratorSet interreduce(const GeneratorSet& g, size_t step_budget) {
  const TermOrder& ord = g.order;
  size_t steps = step_budget;
  // minimalize: drop generators whose leading term another leading term divides
  std::vector<Polynomial> kept;
  {
    std::vector<Monomial> lts;
    for (const Polynomial& p : g.minors) lts.push_back(p.leading_term(ord).mono);
    for (size_t i = 0; i < g.minors.size(); ++i) {
      bool drop = false;
      for (size_t j = 0; j < g.minors.size() && !drop; ++j) {
        if (j == i) continue;
        if (lts[j].divides(lts[i]) && !(lts[i] == lts[j] && j > i)) drop = true;
      }
      if (!drop) kept.push_back(g.minors[i]);
    }
  }
  // tail-reduce each against the others until stable
  for (size_t i = 0; i < kept.size(); ++i) {
    std::vector<Polynomial> others;
    others.reserve(kept.size() - 1);
    for (size_t j = 0; j < kept.size(); ++j)
      if (j != i) others.push_back(kept[j]);
    Term lt = kept[i].leading_term(ord);
    Polynomial tail = kept[i] - Polynomial::term(lt.mono, lt.coeff);
    kept[i] = Polynomial::term(lt.mono, 1) +
              reduce_modulo(tail, others, ord, &steps) * (Rat(1) / lt.coeff);
  }
  GeneratorSet out{g.v, g.w, std::move(kept), ord, g.zero_minors_dropped, g.duplicates_dropped};
  std::sort(out.minors.begin(), out.minors.end(), [&](const Polynomial& a, const Polynomial& b) {
    return ord.less(a.leading_term(ord).mono, b.leading_term(ord).mono);
  });
  return out;
}

bool is_standardly_homogeneous(const GeneratorSet& g, size_t step_budget) {
  bool all = true;
  for (const Polynomial& p : g.minors)
    if (!p.is_homogeneous()) {
      all = false;
      break;
    }
  if (all) return true;  // homogeneous generators generate a homogeneous ideal
  GeneratorSet red = interreduce(g, step_budget);
  for (const Polynomial& p : red.minors)
    if (!p.is_homogeneous()) return false;
  return true;
}

bool is_standardly_homogeneous(const Permutation& v, const Permutation& w) {
  if (!bruhat_leq(v, w)) throw std::invalid_argument("requires v <= w");
  return is_standardly_homogeneous(essential_minors(v, w));
}

std::vector<std::vector<Box>> monomial_ideal_primes(const MonomialIdeal& m,
                                                    const std::vector<Box>& variables) {
  const size_t nv = variables.size();
  if (nv > 25) throw std::invalid_argument("too many variables for prime enumeration");
  auto var_index = [&](const Var& v) {
    Box b{v.a, v.b};
    auto it = std::find(variables.begin(), variables.end(), b);
    if (it == variables.end()) throw std::invalid_argument("generator outside variable set");
    return size_t(it - variables.begin());
  };
  std::vector<uint32_t> gen_masks;
  for (const Monomial& g : m.generators) {
    uint32_t mask = 0;
    for (const auto& [v, e] : g.factors()) mask |= 1u << var_index(v);
    gen_masks.push_back(mask);
  }
  // faces of the Stanley-Reisner complex = subsets containing no generator
  std::vector<uint32_t> maximal;
  for (uint32_t s = 0; s < (1u << nv); ++s) {
    bool face = true;
    for (uint32_t gm : gen_masks)
      if ((gm & s) == gm) {
        face = false;
        break;
      }
    if (!face) continue;
    bool is_max = true;
    for (size_t k = 0; k < nv && is_max; ++k) {
      if (s & (1u << k)) continue;
      uint32_t bigger = s | (1u << k);
      bool bf = true;
      for (uint32_t gm : gen_masks)
        if ((gm & bigger) == gm) {
          bf = false;
          break;
        }
      if (bf) is_max = false;
    }
    if (is_max) maximal.push_back(s);
  }
  std::vector<std::vector<Box>> primes;
  for (uint32_t s : maximal) {
    std::vector<Box> p;
    for (size_t k = 0; k < nv; ++k)
      if (!(s & (1u << k))) p.push_back(variables[k]);
    primes.push_back(std::move(p));
  }
  std::sort(primes.begin(), primes.end());
  return primes;
}

std::vector<std::vector<Box>> initial_ideal_primes(const Permutation& v, const Permutation& w) {
  if (!bruhat_leq(v, w)) throw std::invalid_argument("requires v <= w");
  MonomialIdeal lt = leading_term_ideal(essential_minors(v, w));
  return monomial_ideal_primes(lt, rothe_diagram(v));
}

MonomialIdeal stanley_reisner_ideal(const PipeComplex& c) {
  const auto& boxes = c.vertex_set();
  const size_t nv = boxes.size();
  if (nv > 25) throw std::invalid_argument("too many vertices for nonface enumeration");

  std::vector<uint32_t> faces = c.all_face_masks();
  std::sort(faces.begin(), faces.end());
  auto is_face = [&](uint32_t m) {
    return std::binary_search(faces.begin(), faces.end(), m);
  };

  std::vector<Monomial> gens;
  for (uint32_t s = 0; s < (1u << nv); ++s) {
    if (is_face(s)) continue;
    // minimal nonface: all maximal proper subsets are faces
    bool minimal = true;
    for (size_t k = 0; k < nv && minimal; ++k)
      if (s & (1u << k))
        if (!is_face(s & ~(1u << k))) minimal = false;
    if (!minimal) continue;
    std::vector<std::pair<Var, int>> factors;
    for (size_t k = 0; k < nv; ++k)
      if (s & (1u << k)) factors.push_back({Var::z(boxes[k].row, boxes[k].col), 1});
    gens.push_back(Monomial(std::move(factors)));
  }
  return minimalize(std::move(gens));
}

}  // namespace kl
