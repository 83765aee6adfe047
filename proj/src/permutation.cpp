#include "kl/permutation.hpp"

#include <algorithm>
#include <sstream>

namespace kl {

Permutation::Permutation(const std::vector<int>& word) {
  if (word.size() > kMaxN) throw std::invalid_argument("permutation too long (n <= 16)");
  n_ = static_cast<int>(word.size());
  std::array<bool, kMaxN + 1> seen{};
  for (int i = 0; i < n_; ++i) {
    int x = word[i];
    if (x < 1 || x > n_ || seen[x]) throw std::invalid_argument("not a permutation word");
    seen[x] = true;
    word_[i] = static_cast<uint8_t>(x);
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> w(n);
  for (int i = 0; i < n; ++i) w[i] = i + 1;
  return Permutation(w);
}

Permutation Permutation::longest(int n) {
  std::vector<int> w(n);
  for (int i = 0; i < n; ++i) w[i] = n - i;
  return Permutation(w);
}

Permutation Permutation::parse(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty permutation");
  std::vector<int> w;
  if (text.find(',') != std::string::npos) {
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (tok.empty()) throw std::invalid_argument("empty entry in permutation");
      w.push_back(std::stoi(tok));
    }
  } else {
    for (char c : text) {
      if (c < '1' || c > '9') throw std::invalid_argument("bad permutation character");
      w.push_back(c - '0');
    }
  }
  return Permutation(w);
}

std::vector<int> Permutation::word() const {
  std::vector<int> w(n_);
  for (int i = 0; i < n_; ++i) w[i] = word_[i];
  return w;
}

std::string Permutation::str() const {
  std::string s;
  bool commas = n_ > 9;
  for (int i = 0; i < n_; ++i) {
    if (commas && i) s += ',';
    s += std::to_string(int(word_[i]));
  }
  return s;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.n_ = n_;
  for (int i = 0; i < n_; ++i) r.word_[word_[i] - 1] = static_cast<uint8_t>(i + 1);
  return r;
}

Permutation Permutation::compose(const Permutation& rhs) const {
  if (n_ != rhs.n_) throw std::invalid_argument("size mismatch");
  Permutation r;
  r.n_ = n_;
  for (int i = 0; i < n_; ++i) r.word_[i] = word_[rhs.word_[i] - 1];
  return r;
}

Permutation Permutation::right_mul_s(int i) const {
  if (i < 1 || i >= n_) throw std::invalid_argument("generator index out of range");
  Permutation r = *this;
  std::swap(r.word_[i - 1], r.word_[i]);
  return r;
}

Permutation Permutation::left_mul_s(int i) const {
  if (i < 1 || i >= n_) throw std::invalid_argument("generator index out of range");
  Permutation r = *this;
  for (int k = 0; k < n_; ++k) {
    if (r.word_[k] == i)
      r.word_[k] = static_cast<uint8_t>(i + 1);
    else if (r.word_[k] == i + 1)
      r.word_[k] = static_cast<uint8_t>(i);
  }
  return r;
}

int Permutation::length() const {
  int inv = 0;
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (word_[i] > word_[j]) ++inv;
  return inv;
}

bool Permutation::is_left_descent(int i) const {
  // position of value i is after position of value i+1
  int pi = 0, pj = 0;
  for (int k = 0; k < n_; ++k) {
    if (word_[k] == i) pi = k;
    if (word_[k] == i + 1) pj = k;
  }
  return pi > pj;
}

int Permutation::last_right_ascent() const {
  for (int i = n_ - 1; i >= 1; --i)
    if (word_[i - 1] < word_[i]) return i;
  return 0;
}

std::vector<int> Permutation::right_descents() const {
  std::vector<int> d;
  for (int i = 1; i < n_; ++i)
    if (is_right_descent(i)) d.push_back(i);
  return d;
}

std::vector<int> Permutation::left_descents() const {
  std::vector<int> d;
  for (int i = 1; i < n_; ++i)
    if (is_left_descent(i)) d.push_back(i);
  return d;
}

std::vector<int> Permutation::reduced_word() const {
  std::vector<int> rev;
  Permutation p = *this;
  for (;;) {
    int i = 0;
    for (int k = 1; k < p.n_; ++k)
      if (p.word_[k - 1] > p.word_[k]) {
        i = k;
        break;
      }
    if (i == 0) break;
    rev.push_back(i);
    p = p.right_mul_s(i);
  }
  std::reverse(rev.begin(), rev.end());
  return rev;
}

uint64_t Permutation::pack() const {
  uint64_t h = 0;
  for (int i = 0; i < n_; ++i) h = (h << 4) | uint64_t(word_[i] - 1);
  return h;
}

RankMatrix::RankMatrix(const Permutation& w) : n_(w.n()), r_(size_t(n_) * n_, 0) {
  for (int i = 1; i <= n_; ++i)
    for (int j = 1; j <= n_; ++j) {
      int c = 0;
      for (int k = 1; k <= j; ++k)
        if (w(k) >= n_ - i + 1) ++c;
      r_[(i - 1) * n_ + (j - 1)] = c;
    }
}

bool bruhat_leq(const Permutation& v, const Permutation& w) {
  if (v.n() != w.n()) throw std::invalid_argument("size mismatch");
  // r_{i,j} = r_{i,j-1} + [i >= n - sigma(j) + 1]: sweep columns, compare rows.
  const int n = v.n();
  int rv[Permutation::kMaxN + 2] = {0};
  int rw[Permutation::kMaxN + 2] = {0};
  for (int j = 1; j <= n; ++j) {
    for (int i = n - v(j) + 1; i <= n; ++i) ++rv[i];
    for (int i = n - w(j) + 1; i <= n; ++i) ++rw[i];
    for (int i = 1; i <= n; ++i)
      if (rv[i] > rw[i]) return false;
  }
  return true;
}

std::vector<Box> rothe_diagram(const Permutation& v) {
  int n = v.n();
  Permutation vinv = v.inverse();
  std::vector<Box> boxes;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i < n - v(j) + 1 && j < vinv(n - i + 1)) boxes.push_back({i, j});
  return boxes;
}

std::vector<Box> essential_set(const Permutation& v) {
  auto boxes = rothe_diagram(v);
  auto in = [&](int r, int c) {
    return std::binary_search(boxes.begin(), boxes.end(), Box{r, c});
  };
  std::vector<Box> ess;
  for (const Box& b : boxes)
    if (!in(b.row + 1, b.col) && !in(b.row, b.col + 1)) ess.push_back(b);
  return ess;
}

std::vector<LabeledBox> canonical_labeling(const Permutation& v) {
  auto boxes = rothe_diagram(v);
  std::sort(boxes.begin(), boxes.end(), reading_order_less);
  std::vector<LabeledBox> out;
  out.reserve(boxes.size());
  size_t k = 0;
  while (k < boxes.size()) {
    size_t k0 = k;
    while (k < boxes.size() && boxes[k].row == boxes[k0].row) {
      out.push_back({boxes[k], boxes[k0].row + int(k - k0)});
      ++k;
    }
  }
  return out;
}

Permutation v_max(const Permutation& v, const Permutation& w) {
  if (v.n() != w.n()) throw std::invalid_argument("size mismatch");
  int n = v.n();
  std::vector<int> word = v.word();

  // Left pass: for each maximal run {s_a..s_b} of left descents of w, the
  // values a..b+1 are rewritten in decreasing order along their positions.
  auto runs = [n](const std::vector<int>& gens) {
    std::vector<std::pair<int, int>> out;  // value/position intervals [a, b+1]
    size_t k = 0;
    while (k < gens.size()) {
      size_t k0 = k;
      while (k + 1 < gens.size() && gens[k + 1] == gens[k] + 1) ++k;
      out.push_back({gens[k0], gens[k] + 1});
      ++k;
    }
    (void)n;
    return out;
  };

  for (auto [lo, hi] : runs(w.left_descents())) {
    std::vector<int> pos;
    for (int p = 0; p < n; ++p)
      if (word[p] >= lo && word[p] <= hi) pos.push_back(p);
    int val = hi;
    for (int p : pos) word[p] = val--;
  }
  for (auto [lo, hi] : runs(w.right_descents())) {
    std::sort(word.begin() + (lo - 1), word.begin() + hi, std::greater<int>());
  }
  return Permutation(word);
}

bool Partition::contains(const Partition& mu) const {
  for (int i = 1; i <= std::max(size(), mu.size()); ++i)
    if (part(i) < mu.part(i)) return false;
  return true;
}

std::optional<CograssData> cograssmannian_data(const Permutation& w) {
  int n = w.n();
  int k = 0;
  for (int i = 1; i < n; ++i)
    if (w(i) < w(i + 1)) {
      if (k != 0) return std::nullopt;
      k = i;
    }
  if (k == 0) return std::nullopt;  // w0 has no ascent
  Partition lam;
  lam.parts.resize(k);
  for (int i = 1; i <= k; ++i) lam.parts[k - i] = n - w(i) + 1 - i;
  return CograssData{k, lam};
}

std::pair<Permutation, Permutation> embed_matrix_schubert(const Permutation& w) {
  int n = w.n();
  if (2 * n > Permutation::kMaxN) throw std::invalid_argument("2n exceeds supported size");
  std::vector<int> star(2 * n), what(2 * n);
  for (int i = 1; i <= n; ++i) {
    star[i - 1] = n + 1 - i;
    star[n + i - 1] = 2 * n + 1 - i;
    what[i - 1] = 2 * n + 1 - w(i);
    what[n + i - 1] = 2 * n + 1 - (n + i);
  }
  return {Permutation(star), Permutation(what)};
}

}  // namespace kl
