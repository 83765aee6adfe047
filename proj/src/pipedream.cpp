#include "kl/pipedream.hpp"

#include <algorithm>
#include <map>

namespace kl {

bool PipeDream::has_cross(const Box& b) const {
  return std::binary_search(crosses.begin(), crosses.end(), b);
}

PipeDream make_dream(const Permutation& v, std::vector<Box> crosses) {
  std::sort(crosses.begin(), crosses.end());
  auto diagram = rothe_diagram(v);
  for (const Box& b : crosses)
    if (!std::binary_search(diagram.begin(), diagram.end(), b))
      throw std::invalid_argument("cross outside D(v)");
  return PipeDream{v, std::move(crosses)};
}

Permutation dream_demazure(const PipeDream& p) {
  auto labeling = canonical_labeling(p.owner);
  Permutation u = Permutation::identity(p.owner.n());
  for (const LabeledBox& lb : labeling)
    if (p.has_cross(lb.box)) u = demazure_mul(u, lb.label);
  return u;
}

void enumerate_pipes(const Permutation& v, const Permutation& target, bool reduced_only,
                     const std::function<bool(const PipeDream&)>& emit) {
  if (v.n() != target.n()) throw std::invalid_argument("size mismatch");
  auto labeling = canonical_labeling(v);
  const int m = static_cast<int>(labeling.size());
  const int target_len = target.length();

  // suffix[k] = Demazure product of the labels k..m-1 (everything crossed).
  std::vector<Permutation> suffix(m + 1, Permutation::identity(v.n()));
  for (int k = m - 1; k >= 0; --k)
    suffix[k] = demazure_mul_left(labeling[k].label, suffix[k + 1]);
  std::vector<std::vector<int>> suffix_word(m + 1);
  for (int k = 0; k <= m; ++k) suffix_word[k] = suffix[k].reduced_word();

  std::vector<Box> chosen;
  bool stop = false;

  auto rec = [&](auto&& self, int k, const Permutation& cur, int count) -> void {
    if (stop) return;
    if (!bruhat_leq(cur, target)) return;  // the product only grows
    if (reduced_only && count > target_len) return;
    Permutation upper = cur;
    for (int i : suffix_word[k]) upper = demazure_mul(upper, i);
    if (!bruhat_leq(target, upper)) return;  // unreachable even crossing everything
    if (k == m) {
      if (cur == target && (!reduced_only || count == target_len)) {
        std::vector<Box> crosses = chosen;
        std::sort(crosses.begin(), crosses.end());
        if (!emit(PipeDream{v, std::move(crosses)})) stop = true;
      }
      return;
    }
    self(self, k + 1, cur, count);
    chosen.push_back(labeling[k].box);
    self(self, k + 1, demazure_mul(cur, labeling[k].label), count + 1);
    chosen.pop_back();
  };
  rec(rec, 0, Permutation::identity(v.n()), 0);
}

std::vector<PipeDream> enumerate_pipes(const Permutation& v, const Permutation& target,
                                       bool reduced_only) {
  std::vector<PipeDream> out;
  enumerate_pipes(v, target, reduced_only, [&](const PipeDream& p) {
    out.push_back(p);
    return true;
  });
  std::sort(out.begin(), out.end(),
            [](const PipeDream& a, const PipeDream& b) { return a.crosses < b.crosses; });
  return out;
}

Box flatten_box(const Permutation& v, const Box& b) {
  auto diagram = rothe_diagram(v);
  int rank = 0;
  for (const Box& d : diagram)
    if (d.col == b.col && d.row <= b.row) ++rank;
  if (rank == 0) throw std::invalid_argument("box not in D(v)");
  return Box{rank, b.col};
}

StrandDiagram flatten(const PipeDream& p) {
  const int n = p.owner.n();
  const Permutation product = dream_demazure(p);
  if (p.size() != product.length())
    throw std::invalid_argument("flatten requires a reduced pipe dream");

  StrandDiagram sd;
  sd.n = n;
  sd.grid.assign(size_t(n) * n, Tile::Elbow);
  for (const Box& b : p.crosses) {
    Box f = flatten_box(p.owner, b);
    sd.grid[(f.row - 1) * n + (f.col - 1)] = Tile::Cross;
  }

  // Trace the strand entering the bottom edge of each column.
  std::vector<int> ends(n);
  for (int c0 = 1; c0 <= n; ++c0) {
    int r = 1, c = c0;
    enum { FromS, FromE } from = FromS;
    for (;;) {
      Tile t = sd.at(r, c);
      bool go_up;  // exit N (else exit W)
      if (t == Tile::Cross)
        go_up = (from == FromS);
      else
        go_up = (from == FromE);
      if (go_up) {
        ++r;
        from = FromS;
        if (r > n) throw TheoryViolation("strand escaped through the top edge");
      } else {
        --c;
        from = FromE;
        if (c == 0) break;
      }
    }
    ends[c0 - 1] = r;
  }
  sd.strand_permutation = Permutation(ends);
  return sd;
}

std::vector<std::vector<int>> strand_crossings(const StrandDiagram& sd) {
  const int n = sd.n;
  // Crosses lie in the strict lower triangle, so only the bottom-entering
  // strands can meet; record who passed each cross tile in which direction.
  std::vector<std::vector<int>> vert(n, std::vector<int>(n, 0));
  std::vector<std::vector<int>> horiz(n, std::vector<int>(n, 0));
  std::vector<std::vector<int>> count(n + 1, std::vector<int>(n + 1, 0));
  auto meet = [&](int a, int b) { ++count[std::min(a, b)][std::max(a, b)]; };
  for (int c0 = 1; c0 <= n; ++c0) {
    int r = 1, c = c0;
    bool vertical = true;  // entered from S
    for (;;) {
      Tile t = sd.at(r, c);
      if (t == Tile::Cross) {
        if (vertical) {
          if (horiz[r - 1][c - 1]) meet(horiz[r - 1][c - 1], c0);
          vert[r - 1][c - 1] = c0;
        } else {
          if (vert[r - 1][c - 1]) meet(vert[r - 1][c - 1], c0);
          horiz[r - 1][c - 1] = c0;
        }
      }
      bool go_up = (t == Tile::Cross) ? vertical : !vertical;
      if (go_up) {
        ++r;
        vertical = true;
        if (r > n) break;
      } else {
        --c;
        vertical = false;
        if (c == 0) break;
      }
    }
  }
  return count;
}

static std::string render_grid(const Permutation& v, const std::vector<Box>& diagram,
                               const std::function<char(const Box&)>& mark) {
  const int n = v.n();
  std::string out;
  for (int r = n; r >= 1; --r) {
    for (int c = 1; c <= n; ++c) {
      Box b{r, c};
      bool in = std::binary_search(diagram.begin(), diagram.end(), b);
      out += in ? mark(b) : (n - v(c) + 1 == r ? 'o' : ' ');
      out += ' ';
    }
    out += '\n';
  }
  return out;
}

std::string render_dream(const PipeDream& p) {
  auto diagram = rothe_diagram(p.owner);
  return render_grid(p.owner, diagram,
                     [&](const Box& b) { return p.has_cross(b) ? '+' : '.'; });
}

std::string render_diagram(const Permutation& v, bool labels) {
  auto diagram = rothe_diagram(v);
  if (!labels)
    return render_grid(v, diagram, [](const Box&) { return '.'; });
  std::map<Box, int> lab;
  for (const LabeledBox& lb : canonical_labeling(v)) lab[lb.box] = lb.label;
  return render_grid(v, diagram, [&](const Box& b) {
    int l = lab.at(b);
    return static_cast<char>(l <= 9 ? '0' + l : 'a' + (l - 10));
  });
}

std::string render_strands(const StrandDiagram& sd) {
  std::string out;
  for (int r = sd.n; r >= 1; --r) {
    for (int c = 1; c <= sd.n; ++c)
      out += sd.at(r, c) == Tile::Cross ? "+ " : ")(";
    out += '\n';
  }
  return out;
}

}  // namespace kl
