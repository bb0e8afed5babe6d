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

#include "conjtri/pairs.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>

#include "conjtri/errors.hpp"

namespace conjtri {

PairColor::PairColor(int first, int second) : first_(first), second_(second) {
  if (first < 0 || second < 0)
    throw RangeError("pair color components must be non-negative");
  if (first == second)
    throw RangeError("pair color must be heterochromatic");
}

std::string base_color_name(int color) {
  static constexpr std::array<const char*, 8> kNames{
      "α", "β", "γ", "δ", "ε", "ζ", "η", "θ"};
  if (color >= 0 && color < static_cast<int>(kNames.size()))
    return kNames[color];
  return "c" + std::to_string(color);
}

std::string to_string(const PairColor& p) {
  return base_color_name(p.first()) + base_color_name(p.second());
}

std::vector<PairColor> ordered_pairs(int k) {
  if (k < 1) throw RangeError("base palette size must be positive");
  std::vector<PairColor> out;
  out.reserve(static_cast<std::size_t>(k) * (k - 1));
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      if (a != b) out.emplace_back(a, b);
  return out;
}

InducedColoring induce_edge_coloring(const OrientedConjugated& oh,
                                     const VertexColoring& vc) {
  const auto& g = oh.base.graph();
  const auto bad = verify_vertex_coloring(g, vc);
  if (!bad.empty())
    throw ImproperColoringError("vertex coloring is not proper", bad);

  const Digraph& d = oh.arcs;
  InducedColoring out;
  out.coloring.palette = vc.palette;
  out.coloring.pairs.reserve(d.arc_count());
  std::set<PairColor> alphabet;
  for (const auto& [t, h] : d.arcs()) {
    const PairColor p(vc.colors[t], vc.colors[h]);
    out.coloring.pairs.emplace_back(p);
    alphabet.insert(p);
  }
  out.alphabet_size = static_cast<int>(alphabet.size());

  std::set<std::pair<EdgeId, EdgeId>> conflicts;
  for (Vertex v = 0; v < d.vertex_count(); ++v) {
    std::vector<EdgeId> around(d.out_arcs(v).begin(), d.out_arcs(v).end());
    around.insert(around.end(), d.in_arcs(v).begin(), d.in_arcs(v).end());
    for (std::size_t i = 0; i < around.size(); ++i)
      for (std::size_t j = i + 1; j < around.size(); ++j) {
        const EdgeId a = around[i], b = around[j];
        if (out.coloring.pairs[a - 1] == out.coloring.pairs[b - 1])
          conflicts.emplace(std::min(a, b), std::max(a, b));
      }
  }
  out.conflicts.assign(conflicts.begin(), conflicts.end());
  out.edge_proper = out.conflicts.empty();
  return out;
}

VertexColoring recover_vertex_coloring(const OrientedConjugated& oh,
                                       const PairEdgeColoring& pc) {
  const Digraph& d = oh.arcs;
  std::vector<int> missing;
  for (EdgeId a = 1; a <= d.arc_count(); ++a)
    if (a > static_cast<int>(pc.pairs.size()) || !pc.pairs[a - 1])
      missing.push_back(a);
  if (!missing.empty())
    throw PartialColoringError("pair coloring leaves arcs unlabeled", missing);
  if (static_cast<int>(pc.pairs.size()) != d.arc_count())
    throw MismatchError("pair coloring labels " +
                        std::to_string(pc.pairs.size()) + " arcs, graph has " +
                        std::to_string(d.arc_count()));

  VertexColoring vc{std::vector<int>(d.vertex_count(), -1), pc.palette};
  auto put = [&](Vertex v, int color, EdgeId arc) {
    if (vc.colors[v] >= 0 && vc.colors[v] != color)
      throw RecoveryConflictError(v, vc.colors[v], color, arc);
    vc.colors[v] = color;
  };
  for (EdgeId a = 1; a <= d.arc_count(); ++a) {
    const PairColor& p = *pc.pairs[a - 1];
    put(d.arc(a).tail, p.first(), a);
    put(d.arc(a).head, p.second(), a);
  }
  return vc;
}

StarDescriptor make_star(int tail_degree, int head_degree, PairColor center,
                         OrientationRule rule, int shared_far) {
  StarDescriptor star{tail_degree, head_degree, center, {}, 3};
  const int n_tail = tail_degree - 1;
  const int n_head = head_degree - 1;
  if (shared_far < 0 || shared_far > std::min(n_tail, n_head))
    throw DescriptorError("shared_far out of range");
  for (int i = 0; i < n_tail; ++i) {
    NeighborEdge n{Side::kTail, std::nullopt, i + 1};
    // The center leaves the tail, so the tail still needs
    // tail_degree/2 - 1 exits.
    if (rule == OrientationRule::kEulerBalanced)
      n.direction = i < tail_degree / 2 - 1 ? Direction::kOut : Direction::kIn;
    star.neighbors.push_back(n);
  }
  for (int i = 0; i < n_head; ++i) {
    NeighborEdge n{Side::kHead, std::nullopt,
                   i < shared_far ? i + 1 : n_tail + i + 1};
    if (rule == OrientationRule::kEulerBalanced)
      n.direction = i < head_degree / 2 - 1 ? Direction::kIn : Direction::kOut;
    star.neighbors.push_back(n);
  }
  return star;
}

StarDescriptor canonical_interior_star(PairColor center) {
  return make_star(4, 4, center, OrientationRule::kFree);
}

namespace {

void check_descriptor(const StarDescriptor& s) {
  // Degree 1 describes a bare edge with nothing attached at that end.
  auto degree_ok = [](int d) { return d == 1 || d == 2 || d == 4; };
  if (!degree_ok(s.tail_degree) || !degree_ok(s.head_degree))
    throw DescriptorError("endpoint degrees must be 1, 2 or 4");
  if (s.palette < 2) throw DescriptorError("palette must have >= 2 colors");
  if (s.center.first() >= s.palette || s.center.second() >= s.palette)
    throw DescriptorError("center pair outside the palette");
  int n_tail = 0, n_head = 0;
  std::set<int> far_tail, far_head;
  for (const auto& n : s.neighbors) {
    auto& seen = n.side == Side::kTail ? far_tail : far_head;
    if (!seen.insert(n.far).second)
      throw DescriptorError("two neighbors on one side share a far endpoint");
    (n.side == Side::kTail ? n_tail : n_head)++;
  }
  if (n_tail != s.tail_degree - 1 || n_head != s.head_degree - 1)
    throw DescriptorError("neighbor counts do not match endpoint degrees");
}

// Color of the far endpoint of a neighbor labeled p whose shared endpoint
// has color `near`.
int far_color(const PairColor& p, int near) {
  return p.first() == near ? p.second() : p.first();
}

}  // namespace

std::vector<std::vector<PairColor>> enumerate_neighbor_pair_colorings(
    const StarDescriptor& star) {
  check_descriptor(star);
  const auto alphabet = ordered_pairs(star.palette);
  const auto& ns = star.neighbors;
  const std::size_t n = ns.size();
  auto near = [&](const NeighborEdge& e) {
    return e.side == Side::kTail ? star.center.first() : star.center.second();
  };

  // Admissible labels per neighbor, independent of the others.
  std::vector<std::vector<PairColor>> options(n);
  for (std::size_t i = 0; i < n; ++i) {
    const int c = near(ns[i]);
    for (const auto& p : alphabet) {
      if (p == star.center) continue;
      const bool out = p.first() == c, in = p.second() == c;
      if (!out && !in) continue;
      if (ns[i].direction == Direction::kOut && !out) continue;
      if (ns[i].direction == Direction::kIn && !in) continue;
      options[i].push_back(p);
    }
  }

  std::vector<std::vector<PairColor>> result;
  std::vector<PairColor> current;
  current.reserve(n);
  auto compatible = [&](std::size_t i, const PairColor& p) {
    for (std::size_t j = 0; j < i; ++j) {
      const PairColor& q = current[j];
      if (ns[i].side == ns[j].side) {
        if (p == q) return false;
      } else if (ns[i].far == ns[j].far) {
        if (p == q) return false;
        if (far_color(p, near(ns[i])) != far_color(q, near(ns[j])))
          return false;
      }
    }
    return true;
  };
  auto extend = [&](auto&& self, std::size_t i) -> void {
    if (i == n) {
      result.push_back(current);
      return;
    }
    for (const auto& p : options[i]) {
      if (!compatible(i, p)) continue;
      current.push_back(p);
      self(self, i + 1);
      current.pop_back();
    }
  };
  extend(extend, 0);
  return result;
}

std::size_t count_neighbor_pair_colorings(const StarDescriptor& star) {
  return enumerate_neighbor_pair_colorings(star).size();
}

}  // namespace conjtri
