#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kl/pipedream.hpp"

namespace kl {

// Face of the pipe complex: vertex set F of boxes, labeled by the pipe dream
// with crosses exactly on D(v) \ F.
struct Face {
  std::vector<Box> vertices;  // sorted (row, col)
  PipeDream label;
};

// Subword complex on the vertex set D(v): F is a face iff the Demazure
// product of the canonical labels outside F dominates w0*w. For v not <= w
// this is the empty complex (no faces at all).
class PipeComplex {
 public:
  PipeComplex(const Permutation& v, const Permutation& w);

  const Permutation& v() const { return v_; }
  const Permutation& w() const { return w_; }
  const Permutation& target() const { return target_; }  // w0*w
  const std::vector<Box>& vertex_set() const { return boxes_; }
  const std::vector<int>& word() const { return labels_; }  // Q, reading order
  bool empty_complex() const { return empty_; }

  bool is_face(const std::vector<Box>& f) const;
  const std::vector<Face>& facets() const;
  const std::vector<Face>& interior_faces() const;
  // Every face, as a bitmask over vertex_set() indices (small complexes only).
  std::vector<uint32_t> all_face_masks() const;

  Face face_from_dream(const PipeDream& p) const;
  uint32_t mask_of(const std::vector<Box>& f) const;

 private:
  Permutation v_, w_, target_;
  std::vector<Box> boxes_;   // reading order
  std::vector<int> labels_;  // canonical labels, reading order
  bool empty_ = false;
  mutable std::optional<std::vector<Face>> facets_;
  mutable std::optional<std::vector<Face>> interior_;
};

struct TopologyReport {
  enum Kind { Ball, Sphere, Empty } kind;
  int dimension;        // -1 for the complex {emptyset}
  long long euler_reduced;
  size_t facet_count;
  size_t face_count;
};

// Purity + ridge conditions + reduced Euler characteristic; signals
// TheoryViolation if the subword-complex guarantees fail.
TopologyReport topology_check(const PipeComplex& c);

struct VertexDecomposition {
  bool cone;          // true: last ascent of v is a descent of w
  int ascent;         // i, the last ascent of v
  Box pivot;          // box of z_last (rightmost, then southmost)
  PipeComplex link;   // Delta_{v s_i, w}
  std::optional<PipeComplex> deletion;  // Delta_{v s_i, w s_i} when split
  // Box relabeling D(v) \ {pivot} -> D(v s_i): column-i boxes shift right.
  std::vector<std::pair<Box, Box>> box_map;
};

VertexDecomposition vertex_decompose(const PipeComplex& c);

// Facet-ridge adjacency graph in DOT format.
std::string facet_ridge_dot(const PipeComplex& c);

}  // namespace kl
