#pragma once

#include <functional>
#include <string>
#include <vector>

#include "kl/nilhecke.hpp"
#include "kl/permutation.hpp"

namespace kl {

// Configuration of crosses in a subset of D(v).
struct PipeDream {
  Permutation owner;        // v
  std::vector<Box> crosses;  // sorted by (row, col)

  int size() const { return static_cast<int>(crosses.size()); }
  bool has_cross(const Box& b) const;
  friend bool operator==(const PipeDream&, const PipeDream&) = default;
};

PipeDream make_dream(const Permutation& v, std::vector<Box> crosses);

// Demazure product of the canonical labels of the crossed boxes in reading
// order (rows top to bottom, left to right).
Permutation dream_demazure(const PipeDream& p);

// All P on D(v) with dream product = target (and #P = l(target) when
// reduced_only). Position-by-position backtracking with Demazure pruning.
std::vector<PipeDream> enumerate_pipes(const Permutation& v, const Permutation& target,
                                       bool reduced_only);

// Streaming variant; callback may return false to stop early.
void enumerate_pipes(const Permutation& v, const Permutation& target, bool reduced_only,
                     const std::function<bool(const PipeDream&)>& emit);

enum class Tile : uint8_t { Elbow, Cross };

// Flattening of a reduced pipe dream onto the n x n grid with strands traced.
// Tiles: cross passes strands straight through; elbow joins south<->west and
// east<->north. Strand entering the bottom of column c exits the left edge in
// row strand_permutation(c).
struct StrandDiagram {
  int n = 0;
  std::vector<Tile> grid;  // row-major, (row-1)*n + (col-1), rows from bottom
  Permutation strand_permutation;

  Tile at(int row, int col) const { return grid[(row - 1) * n + (col - 1)]; }
};

// Bijection D(v) -> flatten(D(v)): box (r, c) goes to (rank of r among the
// column-c boxes, c).
Box flatten_box(const Permutation& v, const Box& b);

// Signals std::invalid_argument if p is not reduced (strand guarantees void).
StrandDiagram flatten(const PipeDream& p);

// Crossing count per unordered strand pair of the bottom-entering strands.
std::vector<std::vector<int>> strand_crossings(const StrandDiagram& sd);

// ASCII art: '+' for a cross, '.' for an uncrossed diagram box, ' ' outside;
// top line is row n. With labels=true diagram boxes show canonical labels.
std::string render_dream(const PipeDream& p);
std::string render_diagram(const Permutation& v, bool labels);
// Two characters per tile: ")(" elbow, "+ " cross.
std::string render_strands(const StrandDiagram& sd);

}  // namespace kl
