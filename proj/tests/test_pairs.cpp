// Copyright 2026 The conjtri Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <random>

#include "conjtri/errors.hpp"
#include "conjtri/pairs.hpp"
#include "doctest.h"
#include "support/oracles.hpp"

using namespace conjtri;

namespace {

OrientedConjugated directed_cycle(int n) {
  return canonical_orientation(
      make_conjugated(graphs::cycle(n), graphs::cycle_rotation(n)));
}

/// Counts by trying all 6^n label tuples against the constraints written
/// out directly.
std::size_t brute_neighbor_count(const StarDescriptor& s) {
  const auto alphabet = ordered_pairs(s.palette);
  const std::size_t n = s.neighbors.size();
  auto near = [&](const NeighborEdge& e) {
    return e.side == Side::kTail ? s.center.first() : s.center.second();
  };
  std::vector<std::size_t> idx(n, 0);
  std::size_t count = 0;
  while (true) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      const PairColor& p = alphabet[idx[i]];
      const int c = near(s.neighbors[i]);
      const auto dir = s.neighbors[i].direction;
      if (p == s.center) ok = false;
      if (!dir && p.first() != c && p.second() != c) ok = false;
      if (dir == Direction::kOut && p.first() != c) ok = false;
      if (dir == Direction::kIn && p.second() != c) ok = false;
      for (std::size_t j = 0; j < i && ok; ++j) {
        const PairColor& q = alphabet[idx[j]];
        const bool same_side = s.neighbors[i].side == s.neighbors[j].side;
        const bool share_far = !same_side &&
                               s.neighbors[i].far == s.neighbors[j].far;
        if ((same_side || share_far) && p == q) ok = false;
        if (share_far) {
          const int fi = p.first() == c ? p.second() : p.first();
          const int cj = near(s.neighbors[j]);
          const int fj = q.first() == cj ? q.second() : q.first();
          if (fi != fj) ok = false;
        }
      }
    }
    if (ok) ++count;
    std::size_t i = 0;
    while (i < n && ++idx[i] == alphabet.size()) idx[i++] = 0;
    if (i == n) break;
  }
  return count;
}

}  // namespace

TEST_SUITE("pairs") {
  TEST_CASE("ordered pairs") {
    const auto p3 = ordered_pairs(3);
    REQUIRE(p3.size() == 6);
    std::vector<std::string> names;
    for (const auto& p : p3) names.push_back(to_string(p));
    CHECK(names == std::vector<std::string>{"αβ", "αγ", "βα", "βγ", "γα", "γβ"});
    CHECK(ordered_pairs(1).empty());
    const auto p4 = ordered_pairs(4);
    CHECK(p4.size() == 12);
    for (auto [a, b] : {std::pair{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}})
      CHECK(std::find(p4.begin(), p4.end(), PairColor(a, b)) != p4.end());
    CHECK_THROWS_AS(PairColor(1, 1), RangeError);
    CHECK_THROWS_AS(ordered_pairs(0), RangeError);
  }

  TEST_CASE("ordered pair counts for any palette") {
    for (int k = 1; k <= 8; ++k) {
      const auto ps = ordered_pairs(k);
      CHECK(ps.size() == static_cast<std::size_t>(k * (k - 1)));
      CHECK(std::set<PairColor>(ps.begin(), ps.end()).size() == ps.size());
      CHECK(std::is_sorted(ps.begin(), ps.end()));
    }
  }

  TEST_CASE("induced pair colorings on directed cycles") {
    const auto c3 = directed_cycle(3);
    const auto i3 = induce_edge_coloring(c3, {{0, 1, 2}, 3});
    std::set<PairColor> got;
    for (const auto& p : i3.coloring.pairs) got.insert(*p);
    CHECK(got == std::set<PairColor>{{0, 1}, {1, 2}, {2, 0}});
    CHECK(i3.edge_proper);

    const auto c4 = directed_cycle(4);
    const auto i4 = induce_edge_coloring(c4, {{0, 1, 0, 1}, 2});
    CHECK(i4.edge_proper);
    CHECK(i4.alphabet_size == 2);
    for (EdgeId a = 1; a < 4; ++a)
      CHECK(*i4.coloring.pairs[a - 1] != *i4.coloring.pairs[a]);
  }

  TEST_CASE("two out-neighbors of one color make the pairs clash") {
    const auto oh = canonical_orientation(
        make_conjugated(graphs::octahedron(), graphs::octahedron_rotation()));
    // Antipodal vertices share a color in the unique 3-coloring; find a
    // vertex whose two out-neighbors are antipodal.
    const std::vector<int> colors{0, 1, 2, 1, 2, 0};
    const auto induced = induce_edge_coloring(oh, {colors, 3});
    bool expected_clash = false;
    for (Vertex v = 0; v < 6; ++v) {
      const auto out = oh.arcs.out_arcs(v);
      if (colors[oh.arcs.arc(out[0]).head] == colors[oh.arcs.arc(out[1]).head])
        expected_clash = true;
    }
    CHECK(induced.edge_proper == !expected_clash);
    if (expected_clash) CHECK_FALSE(induced.conflicts.empty());
  }

  TEST_CASE("improper vertex colorings are rejected") {
    try {
      induce_edge_coloring(directed_cycle(3), {{0, 0, 1}, 2});
      FAIL("expected ImproperColoringError");
    } catch (const ImproperColoringError& e) {
      CHECK(e.edges() == std::vector<int>{1});
    }
  }

  TEST_CASE("recovery") {
    const auto c3 = directed_cycle(3);
    const auto induced = induce_edge_coloring(c3, {{0, 1, 2}, 3});
    CHECK(recover_vertex_coloring(c3, induced.coloring).colors ==
          std::vector<int>{0, 1, 2});

    PairEdgeColoring clash{{PairColor(0, 1), PairColor(2, 0), PairColor(2, 0)},
                           3};
    try {
      recover_vertex_coloring(c3, clash);
      FAIL("expected RecoveryConflictError");
    } catch (const RecoveryConflictError& e) {
      CHECK(e.first_color() != e.second_color());
      CHECK(e.first_color() >= 0);
    }

    PairEdgeColoring partial{{PairColor(0, 1), std::nullopt, PairColor(2, 0)},
                             3};
    try {
      recover_vertex_coloring(c3, partial);
      FAIL("expected PartialColoringError");
    } catch (const PartialColoringError& e) {
      CHECK(e.missing() == std::vector<int>{2});
    }
    PairEdgeColoring shortlist{{PairColor(0, 1)}, 3};
    CHECK_THROWS_AS(recover_vertex_coloring(c3, shortlist), PartialColoringError);
  }

  TEST_CASE("neighbor counts for named configurations") {
    const PairColor ab(0, 1);
    CHECK(count_neighbor_pair_colorings(
              make_star(1, 1, ab, OrientationRule::kFree)) == 1);
    const auto s22 = make_star(2, 2, ab, OrientationRule::kFree);
    CHECK(count_neighbor_pair_colorings(s22) == brute_neighbor_count(s22));
    CHECK(count_neighbor_pair_colorings(s22) == 9);

    const auto interior = canonical_interior_star(ab);
    const auto n = count_neighbor_pair_colorings(interior);
    CHECK(n == brute_neighbor_count(interior));
    CHECK(n == 36);
    const auto balanced = make_star(4, 4, ab, OrientationRule::kEulerBalanced);
    CHECK(count_neighbor_pair_colorings(balanced) ==
          brute_neighbor_count(balanced));
    CHECK(count_neighbor_pair_colorings(balanced) == 4);
  }

  TEST_CASE("malformed descriptors") {
    StarDescriptor s = canonical_interior_star();
    s.neighbors.pop_back();
    CHECK_THROWS_AS(count_neighbor_pair_colorings(s), DescriptorError);
    StarDescriptor odd = canonical_interior_star();
    odd.tail_degree = 3;
    CHECK_THROWS_AS(count_neighbor_pair_colorings(odd), DescriptorError);
    StarDescriptor palette = canonical_interior_star();
    palette.center = PairColor(0, 3);
    CHECK_THROWS_AS(count_neighbor_pair_colorings(palette), DescriptorError);
    CHECK_THROWS_AS(make_star(4, 4, PairColor(0, 1), OrientationRule::kFree, 4),
                    DescriptorError);
  }
}

TEST_SUITE("pairs properties") {
  TEST_CASE("neighbor counts are stable under neighbor order") {
    std::mt19937 rng(41);
    for (int shared = 0; shared <= 3; ++shared)
      for (auto rule : {OrientationRule::kFree, OrientationRule::kEulerBalanced})
        for (auto [t, h] : {std::pair{4, 4}, {2, 4}, {4, 2}, {2, 2}}) {
          if (shared > std::min(t, h) - 1) continue;
          auto star = make_star(t, h, PairColor(0, 1), rule, shared);
          const auto base = count_neighbor_pair_colorings(star);
          CHECK(base == brute_neighbor_count(star));
          for (int i = 0; i < 5; ++i) {
            std::shuffle(star.neighbors.begin(), star.neighbors.end(), rng);
            CHECK(count_neighbor_pair_colorings(star) == base);
          }
          // Renaming the center colors is a symmetry of the palette.
          auto renamed = star;
          renamed.center = PairColor(2, 0);
          CHECK(count_neighbor_pair_colorings(renamed) == base);
        }
  }

  TEST_CASE("round trip and alphabet size on generated instances") {
    CorpusRecipe r;
    r.count = 40;
    r.seed = 5;
    for (const auto& inst : generate_corpus(r)) {
      const auto h = make_conjugated(inst.graph, inst.rotation);
      const auto oh = canonical_orientation(h);
      const auto k = is_k_colorable(h.graph(), 3);
      REQUIRE(k.coloring);
      const auto induced = induce_edge_coloring(oh, *k.coloring);
      CHECK(induced.alphabet_size <= 6);
      for (const auto& p : induced.coloring.pairs)
        CHECK(p->first() != p->second());
      CHECK(recover_vertex_coloring(oh, induced.coloring) == *k.coloring);
    }
  }

  TEST_CASE("recover succeeds exactly on the image of induce") {
    const auto oh = directed_cycle(4);
    const auto pairs = ordered_pairs(3);
    std::mt19937 rng(43);
    std::uniform_int_distribution<std::size_t> pick(0, pairs.size() - 1);
    for (int trial = 0; trial < 500; ++trial) {
      PairEdgeColoring pc{{}, 3};
      for (int a = 0; a < 4; ++a) pc.pairs.emplace_back(pairs[pick(rng)]);
      // In the image iff consecutive arcs agree on the vertex between them.
      bool consistent = true;
      for (EdgeId a = 1; a <= 4; ++a) {
        const Arc& arc = oh.arcs.arc(a);
        for (EdgeId b = 1; b <= 4; ++b) {
          const Arc& other = oh.arcs.arc(b);
          if (arc.head == other.tail &&
              pc.pairs[a - 1]->second() != pc.pairs[b - 1]->first())
            consistent = false;
        }
      }
      bool recovered = true;
      try {
        const auto vc = recover_vertex_coloring(oh, pc);
        CHECK(induce_edge_coloring(oh, vc).coloring == pc);
      } catch (const RecoveryConflictError&) {
        recovered = false;
      }
      CHECK(recovered == consistent);
    }
  }
}
