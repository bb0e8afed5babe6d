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

// Ordered-pair edge colors. Along an Euler orientation every arc (u, v) of
// a properly vertex-colored graph carries the pair (color(u), color(v));
// with a base palette of k colors there are k * (k - 1) such pairs.

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "conjtri/coloring.hpp"
#include "conjtri/construct.hpp"

namespace conjtri {

/// Ordered pair of distinct base colors (tail color, head color).
class PairColor {
 public:
  /// Throws RangeError when first == second or either is negative.
  PairColor(int first, int second);

  int first() const { return first_; }
  int second() const { return second_; }

  friend bool operator==(const PairColor&, const PairColor&) = default;
  friend auto operator<=>(const PairColor&, const PairColor&) = default;

 private:
  int first_;
  int second_;
};

/// Greek letter for base colors 0..7 (alpha, beta, ...), "c<i>" beyond.
std::string base_color_name(int color);
/// Concatenated names, e.g. "αβ".
std::string to_string(const PairColor& p);

/// All k * (k - 1) heterochromatic ordered pairs in lexicographic order.
std::vector<PairColor> ordered_pairs(int k);

/// pairs[a - 1] labels arc a; nullopt marks an unlabeled arc.
struct PairEdgeColoring {
  std::vector<std::optional<PairColor>> pairs;
  int palette = 0;

  friend bool operator==(const PairEdgeColoring&,
                         const PairEdgeColoring&) = default;
};

struct InducedColoring {
  PairEdgeColoring coloring;
  /// True iff arcs sharing an endpoint always carry different pairs. Not
  /// implied by properness of the vertex coloring.
  bool edge_proper = false;
  /// Arc pairs (a, b), a < b, sharing an endpoint and a pair color.
  std::vector<std::pair<EdgeId, EdgeId>> conflicts;
  /// Number of distinct pairs used.
  int alphabet_size = 0;
};

/// Labels each arc (u, v) with (vc(u), vc(v)). Throws ImproperColoringError
/// listing monochromatic edges when vc is not proper.
InducedColoring induce_edge_coloring(const OrientedConjugated& oh,
                                     const VertexColoring& vc);

/// Inverse of induce: tail takes the first color, head the second. Throws
/// PartialColoringError listing unlabeled arcs, or RecoveryConflictError at
/// the first vertex (in arc order) asserted two different colors.
VertexColoring recover_vertex_coloring(const OrientedConjugated& oh,
                                       const PairEdgeColoring& pc);

// Local star around one edge ------------------------------------------------

/// Which endpoint of the center edge a neighboring edge is attached to. The
/// center pair's first color belongs to the tail.
enum class Side { kTail, kHead };

/// Direction of a neighboring edge relative to its shared endpoint.
enum class Direction { kOut, kIn };

struct NeighborEdge {
  Side side = Side::kTail;
  /// Unset: either orientation is admissible.
  std::optional<Direction> direction;
  /// Label of the far endpoint. A tail-side and a head-side neighbor with
  /// the same label close a triangle with the center edge, so they are
  /// adjacent and must agree on the far endpoint's color.
  int far = 0;
};

/// Endpoint degrees are 2 or 4 as in a conjugated triangulation; 1 is
/// accepted for a bare end with no neighbors.
struct StarDescriptor {
  int tail_degree = 4;
  int head_degree = 4;
  PairColor center{0, 1};
  std::vector<NeighborEdge> neighbors;
  int palette = 3;
};

enum class OrientationRule {
  /// Every neighbor may point either way.
  kFree,
  /// In-degree equals out-degree at both endpoints, as along an Euler
  /// circuit.
  kEulerBalanced,
};

/// Star with tail_degree - 1 neighbors at the tail and head_degree - 1 at
/// the head. The first `shared_far` neighbors on each side pair up into
/// triangles with the center; all other far endpoints are distinct.
StarDescriptor make_star(int tail_degree, int head_degree, PairColor center,
                         OrientationRule rule, int shared_far = 0);

/// Interior configuration: both endpoints of degree 4, free orientation,
/// six distinct far endpoints.
StarDescriptor canonical_interior_star(PairColor center = PairColor(0, 1));

/// Pair colors for the neighbors (in descriptor order) such that
///  - each pair contains the shared endpoint's color, in the position fixed
///    by the neighbor's direction when one is given;
///  - no two adjacent edges (same side, or the center, or a shared far
///    endpoint) carry equal pairs;
///  - neighbors sharing a far endpoint agree on its color.
/// Throws DescriptorError on a malformed descriptor.
std::vector<std::vector<PairColor>> enumerate_neighbor_pair_colorings(
    const StarDescriptor& star);

std::size_t count_neighbor_pair_colorings(const StarDescriptor& star);

}  // namespace conjtri
