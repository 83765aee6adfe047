#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace kl {

// Thrown when a verified theorem-backed invariant fails at runtime.
// The CLI maps this to exit code 3.
struct TheoryViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when a configured resource budget (S-pair count etc.) runs out.
struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Box of the n x n grid, (1,1) = southwest corner, row counted from the bottom.
struct Box {
  int row = 0;
  int col = 0;
  friend bool operator==(const Box&, const Box&) = default;
  friend auto operator<=>(const Box&, const Box&) = default;
};

// Permutation of {1..n} in one-line notation, n <= 16.
class Permutation {
 public:
  static constexpr int kMaxN = 16;

  Permutation() = default;
  explicit Permutation(const std::vector<int>& word);

  static Permutation identity(int n);
  static Permutation longest(int n);  // w0
  // Accepts "31524" (all entries <= 9) or "10,8,6,9,7,5,4,3,2,1".
  static Permutation parse(const std::string& text);

  int n() const { return n_; }
  int operator()(int i) const { return word_[i - 1]; }  // 1-based

  std::vector<int> word() const;
  std::string str() const;  // compact if n <= 9, comma-separated otherwise

  Permutation inverse() const;
  Permutation compose(const Permutation& rhs) const;  // (this o rhs)(i) = this(rhs(i))
  Permutation right_mul_s(int i) const;               // swap positions i, i+1
  Permutation left_mul_s(int i) const;                // swap values i, i+1

  int length() const;  // inversion count
  bool is_right_descent(int i) const { return word_[i - 1] > word_[i]; }
  bool is_left_descent(int i) const;
  int last_right_ascent() const;  // 0 if none (w0)
  std::vector<int> right_descents() const;
  std::vector<int> left_descents() const;
  std::vector<int> reduced_word() const;  // first-descent extraction

  uint64_t pack() const;  // 4 bits per entry; unique for fixed n

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  int n_ = 0;
  std::array<uint8_t, kMaxN> word_{};
};

// Rank matrix r^w, bottom-up row indexing: r(i,j) = #{k <= j : w(k) >= n-i+1}.
class RankMatrix {
 public:
  explicit RankMatrix(const Permutation& w);
  int n() const { return n_; }
  int at(int i, int j) const { return r_[(i - 1) * n_ + (j - 1)]; }

 private:
  int n_;
  std::vector<int> r_;
};

bool bruhat_leq(const Permutation& v, const Permutation& w);

// Rothe diagram boxes per the defining inequalities; sorted by (row, col).
std::vector<Box> rothe_diagram(const Permutation& v);
std::vector<Box> essential_set(const Permutation& v);

struct LabeledBox {
  Box box;
  int label;
};
// Boxes in reading order (rows top to bottom, left to right within a row),
// row i filled with labels i, i+1, ...; the label word is a reduced word for w0*v.
std::vector<LabeledBox> canonical_labeling(const Permutation& v);

// Reading-order comparison: higher row first, then smaller column.
inline bool reading_order_less(const Box& a, const Box& b) {
  return a.row != b.row ? a.row > b.row : a.col < b.col;
}

// Bruhat-maximal element of S_T v S_T' where T, T' are the left/right descent
// sets of w; two-pass segment sorting.
Permutation v_max(const Permutation& v, const Permutation& w);

struct Partition {
  std::vector<int> parts;  // weakly decreasing, >= 0
  int size() const { return static_cast<int>(parts.size()); }
  int part(int i) const {  // 1-based, 0 beyond the end
    return (i >= 1 && i <= size()) ? parts[i - 1] : 0;
  }
  bool contains(const Partition& mu) const;
  friend bool operator==(const Partition&, const Partition&) = default;
};

struct CograssData {
  int ascent;       // the unique k with w(k) < w(k+1)
  Partition shape;  // k parts, trailing zeros kept
};
// Present iff w has exactly one ascent.
std::optional<CograssData> cograssmannian_data(const Permutation& w);

// (w0*w0, w_hat) in S_{2n}; w_hat = w0^{(2n)} (w x 1_n).
std::pair<Permutation, Permutation> embed_matrix_schubert(const Permutation& w);

}  // namespace kl
