#include "kl/poly.hpp"

#include <algorithm>

namespace kl {

std::string Var::str() const {
  // double-index variables separate with '_' once an index needs two digits
  auto grid = [](const char* base, int r, int c) {
    std::string s = base + std::to_string(r);
    if (r > 9 || c > 9) s += '_';
    return s + std::to_string(c);
  };
  switch (kind) {
    case VarKind::T:
      return b == 0 ? "t" + std::to_string(a) : grid("t", a, b);
    case VarKind::X:
      return "x" + std::to_string(a);
    case VarKind::Y:
      return "y" + std::to_string(a);
    case VarKind::Z:
      return grid("z", a, b);
  }
  return "?";
}

Monomial::Monomial(std::vector<std::pair<Var, int>> factors) : f_(std::move(factors)) {
  std::sort(f_.begin(), f_.end(),
            [](const auto& p, const auto& q) { return p.first < q.first; });
  size_t w = 0;
  for (size_t i = 0; i < f_.size();) {
    Var v = f_[i].first;
    long e = 0;
    while (i < f_.size() && f_[i].first == v) e += f_[i++].second;
    if (e != 0) f_[w++] = {v, int(e)};
  }
  f_.resize(w);
}

int Monomial::exponent(const Var& v) const {
  for (const auto& [u, e] : f_)
    if (u == v) return e;
  return 0;
}

int Monomial::total_degree() const {
  int d = 0;
  for (const auto& [u, e] : f_) d += e;
  return d;
}

bool Monomial::squarefree() const {
  for (const auto& [u, e] : f_)
    if (e != 1) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
  std::vector<std::pair<Var, int>> out;
  out.reserve(f_.size() + o.f_.size());
  size_t i = 0, j = 0;
  while (i < f_.size() || j < o.f_.size()) {
    if (j == o.f_.size() || (i < f_.size() && f_[i].first < o.f_[j].first))
      out.push_back(f_[i++]);
    else if (i == f_.size() || o.f_[j].first < f_[i].first)
      out.push_back(o.f_[j++]);
    else {
      int e = f_[i].second + o.f_[j].second;
      if (e != 0) out.push_back({f_[i].first, e});
      ++i, ++j;
    }
  }
  Monomial m;
  m.f_ = std::move(out);
  return m;
}

bool Monomial::divides(const Monomial& o) const {
  for (const auto& [v, e] : f_)
    if (o.exponent(v) < e) return false;
  return true;
}

Monomial Monomial::divide(const Monomial& o) const {
  std::vector<std::pair<Var, int>> inv;
  inv.reserve(o.f_.size());
  for (const auto& [v, e] : o.f_) inv.push_back({v, -e});
  Monomial oi;
  oi.f_ = std::move(inv);
  return *this * oi;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  std::vector<std::pair<Var, int>> out;
  size_t i = 0, j = 0;
  while (i < a.f_.size() || j < b.f_.size()) {
    if (j == b.f_.size() || (i < a.f_.size() && a.f_[i].first < b.f_[j].first))
      out.push_back(a.f_[i++]);
    else if (i == a.f_.size() || b.f_[j].first < a.f_[i].first)
      out.push_back(b.f_[j++]);
    else {
      out.push_back({a.f_[i].first, std::max(a.f_[i].second, b.f_[j].second)});
      ++i, ++j;
    }
  }
  Monomial m;
  m.f_ = std::move(out);
  return m;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  std::vector<std::pair<Var, int>> out;
  for (const auto& [v, e] : a.f_) {
    int eb = b.exponent(v);
    int g = std::min(e, eb);
    if (g != 0) out.push_back({v, g});
  }
  Monomial m;
  m.f_ = std::move(out);
  return m;
}

std::string Monomial::str() const {
  if (f_.empty()) return "1";
  std::string s;
  for (const auto& [v, e] : f_) {
    if (!s.empty()) s += "*";
    s += v.str();
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

bool kl_var_less(const Var& u, const Var& v) {
  // larger column wins; within a column the souther (smaller row) wins
  if (u.b != v.b) return u.b < v.b;
  return u.a > v.a;
}

bool kl_lex_less(const Monomial& a, const Monomial& b) {
  // Walk the union of variables from kl-largest to kl-smallest; the first
  // exponent difference decides.
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  std::vector<Var> vars;
  vars.reserve(fa.size() + fb.size());
  for (const auto& [v, e] : fa) vars.push_back(v);
  for (const auto& [v, e] : fb) vars.push_back(v);
  std::sort(vars.begin(), vars.end(), [](const Var& u, const Var& v) {
    return kl_var_less(v, u);  // descending
  });
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  for (const Var& v : vars) {
    int ea = a.exponent(v), eb = b.exponent(v);
    if (ea != eb) return ea < eb;
  }
  return false;
}

bool TermOrder::less(const Monomial& a, const Monomial& b) const {
  switch (kind) {
    case KlLex:
    case Diagonal:
      return kl_lex_less(a, b);
    case GradedThenKl: {
      int da = a.total_degree(), db = b.total_degree();
      if (da != db) return da < db;
      return kl_lex_less(a, b);
    }
  }
  return false;
}

Polynomial Polynomial::term(const Monomial& m, const Rat& c) {
  Polynomial p;
  if (c != 0) p.terms_[m] = c;
  return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) {
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) {
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, -c);
    } else {
      it->second -= c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial r = *this;
  r += o;
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  Polynomial r = *this;
  r -= o;
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  Polynomial r;
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) {
      Monomial m = m1 * m2;
      auto it = r.terms_.find(m);
      if (it == r.terms_.end()) {
        r.terms_.emplace(std::move(m), c1 * c2);
      } else {
        it->second += c1 * c2;
        if (it->second == 0) r.terms_.erase(it);
      }
    }
  return r;
}

Polynomial Polynomial::operator*(const Rat& c) const {
  if (c == 0) return {};
  Polynomial r;
  for (const auto& [m, co] : terms_) r.terms_.emplace(m, co * c);
  return r;
}

bool operator<(const Polynomial& a, const Polynomial& b) {
  auto ia = a.terms_.begin(), ib = b.terms_.begin();
  for (; ia != a.terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
    if (ia->first != ib->first) return ia->first < ib->first;
    int c = cmp(ia->second, ib->second);
    if (c != 0) return c < 0;
  }
  return a.terms_.size() < b.terms_.size();
}

Term Polynomial::leading_term(const TermOrder& ord) const {
  if (terms_.empty()) throw std::invalid_argument("leading term of zero polynomial");
  auto best = terms_.begin();
  for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
    if (ord.less(best->first, it->first)) best = it;
  return Term{best->first, best->second};
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = terms_.begin()->first.total_degree();
  for (const auto& [m, c] : terms_)
    if (m.total_degree() != d) return false;
  return true;
}

int Polynomial::min_total_degree() const {
  if (terms_.empty()) throw std::invalid_argument("degree of zero polynomial");
  int d = terms_.begin()->first.total_degree();
  for (const auto& [m, c] : terms_) d = std::min(d, m.total_degree());
  return d;
}

Polynomial Polynomial::lowest_degree_part() const {
  if (terms_.empty()) return {};
  int d = min_total_degree();
  Polynomial r;
  for (const auto& [m, c] : terms_)
    if (m.total_degree() == d) r.terms_.emplace(m, c);
  return r;
}

Polynomial Polynomial::substitute(const std::function<Polynomial(const Var&)>& sigma) const {
  Polynomial out;
  for (const auto& [m, c] : terms_) {
    Polynomial t(c);
    for (const auto& [v, e] : m.factors()) {
      Polynomial img = sigma(v);
      if (e >= 0) {
        for (int k = 0; k < e; ++k) t = t * img;
      } else {
        if (img.term_count() != 1)
          throw std::invalid_argument("negative exponent needs a monomial image");
        const auto& [im, ic] = *img.terms().begin();
        Monomial inv = Monomial().divide(im);
        Polynomial pinv = Polynomial::term(inv, Rat(1) / ic);
        for (int k = 0; k < -e; ++k) t = t * pinv;
      }
    }
    out += t;
  }
  return out;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [m, c] : terms_) {
    Rat a = c;
    bool neg = a < 0;
    if (neg) a = -a;
    if (s.empty())
      s += neg ? "-" : "";
    else
      s += neg ? " - " : " + ";
    std::string cs = a.get_str();
    if (m.is_one())
      s += cs;
    else if (cs == "1")
      s += m.str();
    else
      s += cs + "*" + m.str();
  }
  return s;
}

Polynomial det(const std::vector<std::vector<Polynomial>>& m) {
  const size_t sz = m.size();
  if (sz == 0) return Polynomial(1);
  for (const auto& row : m)
    if (row.size() != sz) throw std::invalid_argument("det needs a square matrix");

  std::vector<int> rows(sz), cols(sz);
  for (size_t i = 0; i < sz; ++i) rows[i] = int(i), cols[i] = int(i);

  auto rec = [&](auto&& self, std::vector<int>& rs, std::vector<int>& cs) -> Polynomial {
    const size_t k = rs.size();
    if (k == 1) return m[rs[0]][cs[0]];
    // expand along the column with the most zero entries
    size_t best = 0, best_zeros = 0;
    for (size_t j = 0; j < k; ++j) {
      size_t zeros = 0;
      for (size_t i = 0; i < k; ++i)
        if (m[rs[i]][cs[j]].is_zero()) ++zeros;
      if (j == 0 || zeros > best_zeros) best = j, best_zeros = zeros;
    }
    if (best_zeros == k) return {};
    int cj = cs[best];
    std::vector<int> sub_cols;
    sub_cols.reserve(k - 1);
    for (size_t j = 0; j < k; ++j)
      if (j != best) sub_cols.push_back(cs[j]);
    Polynomial acc;
    for (size_t i = 0; i < k; ++i) {
      const Polynomial& e = m[rs[i]][cj];
      if (e.is_zero()) continue;
      std::vector<int> sub_rows;
      sub_rows.reserve(k - 1);
      for (size_t r = 0; r < k; ++r)
        if (r != i) sub_rows.push_back(rs[r]);
      Polynomial minor = self(self, sub_rows, sub_cols);
      Polynomial contrib = e * minor;
      if ((i + best) % 2 == 0)
        acc += contrib;
      else
        acc -= contrib;
    }
    return acc;
  };
  return rec(rec, rows, cols);
}

Polynomial truncated_mul(const Polynomial& a, const Polynomial& b, int bound) {
  Polynomial r;
  for (const auto& [m1, c1] : a.terms())
    for (const auto& [m2, c2] : b.terms()) {
      Monomial m = m1 * m2;
      if (m.total_degree() > bound) continue;
      r += Polynomial::term(m, c1 * c2);
    }
  return r;
}

Polynomial one_minus_var_pow(Var v, int e, int bound) {
  Polynomial r;
  if (e >= 0) {
    // binomial expansion, truncated
    Rat c = 1;
    for (int j = 0; j <= std::min(e, bound); ++j) {
      r += Polynomial::term(Monomial::var(v, j), (j % 2 == 0) ? c : -c);
      c = c * (e - j) / (j + 1);
    }
  } else {
    // (1-t)^e = sum_j C(-e-1+j, j) t^j
    int mdeg = -e;
    Rat c = 1;
    for (int j = 0; j <= bound; ++j) {
      r += Polynomial::term(Monomial::var(v, j), c);
      c = c * (mdeg - 1 + j + 1) / (j + 1);
    }
  }
  return r;
}

}  // namespace kl
