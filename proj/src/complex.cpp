#include "kl/complex.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace kl {

PipeComplex::PipeComplex(const Permutation& v, const Permutation& w) : v_(v), w_(w) {
  if (v.n() != w.n()) throw std::invalid_argument("size mismatch");
  target_ = Permutation::longest(v.n()).compose(w);
  for (const LabeledBox& lb : canonical_labeling(v)) {
    boxes_.push_back(lb.box);
    labels_.push_back(lb.label);
  }
  empty_ = !bruhat_leq(v, w);
}

bool PipeComplex::is_face(const std::vector<Box>& f) const {
  if (empty_) return false;
  Permutation u = Permutation::identity(v_.n());
  for (size_t k = 0; k < boxes_.size(); ++k) {
    if (std::find(f.begin(), f.end(), boxes_[k]) == f.end())
      u = demazure_mul(u, labels_[k]);
  }
  return bruhat_leq(target_, u);
}

Face PipeComplex::face_from_dream(const PipeDream& p) const {
  Face f;
  f.label = p;
  for (const Box& b : boxes_)
    if (!p.has_cross(b)) f.vertices.push_back(b);
  std::sort(f.vertices.begin(), f.vertices.end());
  return f;
}

const std::vector<Face>& PipeComplex::facets() const {
  if (!facets_) {
    std::vector<Face> out;
    if (!empty_)
      for (const PipeDream& p : enumerate_pipes(v_, target_, true))
        out.push_back(face_from_dream(p));
    facets_ = std::move(out);
  }
  return *facets_;
}

const std::vector<Face>& PipeComplex::interior_faces() const {
  if (!interior_) {
    std::vector<Face> out;
    if (!empty_)
      for (const PipeDream& p : enumerate_pipes(v_, target_, false))
        out.push_back(face_from_dream(p));
    interior_ = std::move(out);
  }
  return *interior_;
}

uint32_t PipeComplex::mask_of(const std::vector<Box>& f) const {
  uint32_t m = 0;
  for (const Box& b : f) {
    auto it = std::find(boxes_.begin(), boxes_.end(), b);
    if (it == boxes_.end()) throw std::invalid_argument("box outside the vertex set");
    m |= 1u << (it - boxes_.begin());
  }
  return m;
}

std::vector<uint32_t> PipeComplex::all_face_masks() const {
  // Downward closure of the facets; complexes here stay desk-scale.
  std::set<uint32_t> faces;
  for (const Face& f : facets()) {
    if (f.vertices.size() > 22)
      throw std::invalid_argument("face enumeration too large");
    uint32_t fm = mask_of(f.vertices);
    // enumerate submasks
    uint32_t s = fm;
    for (;;) {
      faces.insert(s);
      if (s == 0) break;
      s = (s - 1) & fm;
    }
  }
  return {faces.begin(), faces.end()};
}

TopologyReport topology_check(const PipeComplex& c) {
  TopologyReport rep{};
  if (c.empty_complex()) {
    rep.kind = TopologyReport::Empty;
    rep.dimension = -2;
    rep.euler_reduced = 0;
    return rep;
  }
  const auto& facets = c.facets();
  if (facets.empty()) throw TheoryViolation("nonempty complex without facets");
  const size_t fsize = facets[0].vertices.size();
  for (const Face& f : facets)
    if (f.vertices.size() != fsize)
      throw TheoryViolation("pipe complex is not pure");

  rep.facet_count = facets.size();
  rep.dimension = int(fsize) - 1;

  // ridge incidences
  bool boundary_ridge = false;
  if (fsize > 0) {
    std::map<std::vector<Box>, int> ridge_count;
    for (const Face& f : facets)
      for (size_t drop = 0; drop < fsize; ++drop) {
        std::vector<Box> ridge;
        ridge.reserve(fsize - 1);
        for (size_t k = 0; k < fsize; ++k)
          if (k != drop) ridge.push_back(f.vertices[k]);
        ++ridge_count[ridge];
      }
    for (const auto& [ridge, cnt] : ridge_count) {
      if (cnt > 2) throw TheoryViolation("ridge in more than two facets");
      if (cnt == 1) boundary_ridge = true;
    }
  }

  auto masks = c.all_face_masks();
  rep.face_count = masks.size();
  long long chi = 0;
  for (uint32_t m : masks) chi += (__builtin_popcount(m) % 2 == 0) ? -1 : 1;
  rep.euler_reduced = chi;

  if (fsize == 0) {
    // the complex {emptyset}: the (-1)-sphere
    rep.kind = TopologyReport::Sphere;
    rep.dimension = -1;
    if (chi != -1) throw TheoryViolation("euler characteristic of {emptyset} off");
    return rep;
  }
  rep.kind = boundary_ridge ? TopologyReport::Ball : TopologyReport::Sphere;
  long long expect = rep.kind == TopologyReport::Ball
                         ? 0
                         : (rep.dimension % 2 == 0 ? 1 : -1);
  if (chi != expect) throw TheoryViolation("euler characteristic contradicts ball/sphere");
  return rep;
}

VertexDecomposition vertex_decompose(const PipeComplex& c) {
  const Permutation& v = c.v();
  if (v == Permutation::longest(v.n()))
    throw std::invalid_argument("vertex_decompose needs D(v) nonempty");
  int i = v.last_right_ascent();

  // rightmost, then southmost box of D(v)
  const auto& boxes = c.vertex_set();
  Box pivot = boxes[0];
  for (const Box& b : boxes)
    if (b.col > pivot.col || (b.col == pivot.col && b.row < pivot.row)) pivot = b;
  if (pivot.col != i)
    throw TheoryViolation("z_last is not in the last-ascent column");

  Permutation vs = v.right_mul_s(i);
  bool cone = c.w().is_right_descent(i);

  VertexDecomposition d{cone,
                        i,
                        pivot,
                        PipeComplex(vs, c.w()),
                        cone ? std::nullopt
                             : std::optional<PipeComplex>(PipeComplex(vs, c.w().right_mul_s(i))),
                        {}};

  auto target_boxes = rothe_diagram(vs);
  for (const Box& b : boxes) {
    if (b == pivot) continue;
    Box img = (b.col == i) ? Box{b.row, i + 1} : b;
    if (!std::binary_search(target_boxes.begin(), target_boxes.end(), img))
      throw TheoryViolation("box relabeling misses D(v s_i)");
    d.box_map.push_back({b, img});
  }
  if (d.box_map.size() != target_boxes.size())
    throw TheoryViolation("box relabeling is not a bijection");
  return d;
}

std::string facet_ridge_dot(const PipeComplex& c) {
  const auto& facets = c.facets();
  std::string out = "graph pipe_complex {\n";
  auto name = [&](size_t k) { return "f" + std::to_string(k); };
  for (size_t k = 0; k < facets.size(); ++k) {
    std::string lbl;
    for (const Box& b : facets[k].label.crosses)
      lbl += "(" + std::to_string(b.row) + "," + std::to_string(b.col) + ")";
    out += "  " + name(k) + " [label=\"" + lbl + "\"];\n";
  }
  for (size_t a = 0; a < facets.size(); ++a)
    for (size_t b = a + 1; b < facets.size(); ++b) {
      std::vector<Box> common;
      std::set_intersection(facets[a].vertices.begin(), facets[a].vertices.end(),
                            facets[b].vertices.begin(), facets[b].vertices.end(),
                            std::back_inserter(common));
      if (common.size() + 1 == facets[a].vertices.size())
        out += "  " + name(a) + " -- " + name(b) + ";\n";
    }
  out += "}\n";
  return out;
}

}  // namespace kl
