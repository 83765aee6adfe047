#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "kl/pipedream.hpp"

using namespace kl;

namespace {
uint64_t rng_state = 0xfeedface12345678ULL;
uint64_t rnd() {
  rng_state ^= rng_state << 13;
  rng_state ^= rng_state >> 7;
  rng_state ^= rng_state << 17;
  return rng_state;
}
Permutation random_perm(int n) {
  std::vector<int> w(n);
  for (int i = 0; i < n; ++i) w[i] = i + 1;
  for (int i = n - 1; i > 0; --i) std::swap(w[i], w[rnd() % (i + 1)]);
  return Permutation(w);
}
}  // namespace

TEST_CASE("dream product examples") {
  Permutation v = Permutation::parse("31524");
  CHECK(dream_demazure(make_dream(v, {})) == Permutation::identity(5));
  CHECK(dream_demazure(make_dream(v, rothe_diagram(v))) ==
        Permutation::longest(5).compose(v));
  // first displayed reduced dream and first displayed non-reduced dream
  CHECK(dream_demazure(make_dream(v, {{4, 2}, {2, 1}})) == Permutation::parse("13254"));
  CHECK(dream_demazure(make_dream(v, {{4, 2}, {2, 1}, {2, 4}})) == Permutation::parse("13254"));
  CHECK_THROWS_AS(make_dream(v, {{3, 3}}), std::invalid_argument);
}

TEST_CASE("enumeration counts from the figures") {
  Permutation v = Permutation::parse("31524");
  Permutation w = Permutation::parse("13254");
  auto red = enumerate_pipes(v, w, true);
  CHECK(red.size() == 4);
  auto all = enumerate_pipes(v, w, false);
  CHECK(all.size() == 9);
  // the four reduced dreams of the figure
  std::vector<std::vector<Box>> expect = {{{1, 2}, {2, 4}}, {{1, 2}, {4, 2}},
                                          {{2, 1}, {2, 4}}, {{2, 1}, {4, 2}}};
  for (const auto& crosses : expect) {
    bool found = false;
    for (const PipeDream& p : red)
      if (p.crosses == crosses) found = true;
    CHECK(found);
  }
  // identity target admits only the empty dream
  auto id_only = enumerate_pipes(v, Permutation::identity(5), false);
  REQUIRE(id_only.size() == 1);
  CHECK(id_only[0].crosses.empty());
}

TEST_CASE("every subset has exactly one product") {
  for (int t = 0; t < 50; ++t) {
    Permutation v = random_perm(2 + int(rnd() % 4));
    auto boxes = rothe_diagram(v);
    if (boxes.size() > 12) continue;
    // brute force all subsets, group by Demazure product
    std::map<uint64_t, size_t> by_target;
    size_t total = 0;
    for (uint32_t mask = 0; mask < (1u << boxes.size()); ++mask) {
      std::vector<Box> crosses;
      for (size_t k = 0; k < boxes.size(); ++k)
        if (mask & (1u << k)) crosses.push_back(boxes[k]);
      ++by_target[dream_demazure(make_dream(v, crosses)).pack()];
      ++total;
    }
    CHECK(total == (size_t(1) << boxes.size()));
    // pruned enumeration agrees with the brute force per target
    Permutation target = random_perm(v.n());
    size_t expect = by_target.count(target.pack()) ? by_target[target.pack()] : 0;
    CHECK(enumerate_pipes(v, target, false).size() == expect);
    size_t sum = 0;
    for (const auto& [tp, c] : by_target) sum += c;
    CHECK(sum == total);
  }
}

TEST_CASE("flatten positions from the worked figures") {
  Permutation v = Permutation::parse("31452");
  // column ranks: (4,2) is the third box of column 2
  CHECK(flatten_box(v, {4, 2}) == Box{3, 2});
  CHECK(flatten_box(v, {2, 1}) == Box{2, 1});
  CHECK(flatten_box(v, {1, 3}) == Box{1, 3});

  auto check_strands = [&](std::vector<Box> crosses, std::vector<Box> flat) {
    StrandDiagram sd = flatten(make_dream(v, crosses));
    for (const Box& f : flat) CHECK(sd.at(f.row, f.col) == Tile::Cross);
    int crosses_found = 0;
    for (int r = 1; r <= sd.n; ++r)
      for (int c = 1; c <= sd.n; ++c)
        if (sd.at(r, c) == Tile::Cross) ++crosses_found;
    CHECK(crosses_found == int(flat.size()));
    CHECK(sd.strand_permutation == Permutation::parse("13524"));
  };
  check_strands({{4, 2}, {2, 1}, {2, 2}}, {{3, 2}, {2, 1}, {2, 2}});
  check_strands({{4, 2}, {1, 2}, {1, 3}}, {{3, 2}, {1, 2}, {1, 3}});
  check_strands({{4, 2}, {2, 1}, {1, 3}}, {{3, 2}, {2, 1}, {1, 3}});
}

TEST_CASE("flatten basics") {
  Permutation v = Permutation::parse("31524");
  StrandDiagram sd = flatten(make_dream(v, {}));
  CHECK(sd.strand_permutation == Permutation::identity(5));
  for (int r = 1; r <= 5; ++r)
    for (int c = 1; c <= 5; ++c) CHECK(sd.at(r, c) == Tile::Elbow);
  // non-reduced dreams are rejected
  CHECK_THROWS_AS(flatten(make_dream(v, {{4, 2}, {2, 1}, {2, 4}})), std::invalid_argument);
}

TEST_CASE("flattening the matrix Schubert diagram is the identity placement") {
  auto [star, what] = embed_matrix_schubert(Permutation::parse("2143"));
  (void)what;
  for (const Box& b : rothe_diagram(star)) CHECK(flatten_box(star, b) == b);
}

TEST_CASE("strand permutation equals the dream product, no double crossings") {
  for (int t = 0; t < 120; ++t) {
    Permutation v = random_perm(2 + int(rnd() % 4));
    Permutation target = random_perm(v.n());
    for (const PipeDream& p : enumerate_pipes(v, target, true)) {
      StrandDiagram sd = flatten(p);
      CHECK(sd.strand_permutation == target);
      // crosses stay strictly below the antidiagonal
      for (int r = 1; r <= sd.n; ++r)
        for (int c = 1; c <= sd.n; ++c)
          if (sd.at(r, c) == Tile::Cross) CHECK(r + c <= sd.n);
      auto crossings = strand_crossings(sd);
      for (const auto& row : crossings)
        for (int count : row) CHECK(count <= 1);
    }
  }
}

TEST_CASE("ascii rendering") {
  Permutation v = Permutation::parse("31524");
  std::string art = render_dream(make_dream(v, {{4, 2}, {2, 1}}));
  CHECK(art.find('+') != std::string::npos);
  CHECK(art.find('.') != std::string::npos);
  std::string strands = render_strands(flatten(make_dream(v, {{4, 2}, {2, 1}})));
  CHECK(strands.find(")(") != std::string::npos);
  CHECK(strands.find('+') != std::string::npos);
  CHECK(!render_diagram(v, true).empty());
}
