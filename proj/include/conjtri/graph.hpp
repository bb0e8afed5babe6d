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

// Core graph representations shared by every other part of the toolkit.
//
// Vertices are 0-based integers. Edge and arc ids are 1-based and equal to
// the position of the edge in its insertion order plus one; they are stable
// across serialization so that derived objects (line graphs, orientations,
// pair colorings) can be keyed by them reproducibly.

#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace conjtri {

using Vertex = int;
using EdgeId = int;

struct Edge {
  Vertex u;
  Vertex v;

  Vertex other(Vertex w) const { return w == u ? v : u; }
  bool has(Vertex w) const { return w == u || w == v; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Arc {
  Vertex tail;
  Vertex head;
  friend bool operator==(const Arc&, const Arc&) = default;
};

/// Simple undirected graph: no loops, no parallel edges.
class UndirectedGraph {
 public:
  UndirectedGraph() = default;
  /// Throws GraphError on a loop, a parallel edge or an endpoint out of range.
  UndirectedGraph(int vertex_count, std::vector<Edge> edges);

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId id) const { return edges_.at(id - 1); }

  /// Neighbors in increasing order.
  std::span<const Vertex> neighbors(Vertex v) const { return neighbors_[v]; }
  /// Incident edge ids in increasing order.
  std::span<const EdgeId> incident(Vertex v) const { return incident_[v]; }
  int degree(Vertex v) const {
    return static_cast<int>(neighbors_[v].size());
  }

  bool adjacent(Vertex a, Vertex b) const;
  /// Id of the edge joining a and b, if any.
  std::optional<EdgeId> edge_between(Vertex a, Vertex b) const;

  friend bool operator==(const UndirectedGraph& a, const UndirectedGraph& b) {
    return a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_;
  }

 private:
  int vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> neighbors_;
  std::vector<std::vector<EdgeId>> incident_;
};

/// Directed graph without loops and with at most one arc per ordered pair.
/// Two opposite arcs between the same vertices are allowed.
class Digraph {
 public:
  Digraph() = default;
  Digraph(int vertex_count, std::vector<Arc> arcs);

  int vertex_count() const { return vertex_count_; }
  int arc_count() const { return static_cast<int>(arcs_.size()); }

  const std::vector<Arc>& arcs() const { return arcs_; }
  const Arc& arc(EdgeId id) const { return arcs_.at(id - 1); }

  std::span<const EdgeId> out_arcs(Vertex v) const { return out_[v]; }
  std::span<const EdgeId> in_arcs(Vertex v) const { return in_[v]; }
  int out_degree(Vertex v) const { return static_cast<int>(out_[v].size()); }
  int in_degree(Vertex v) const { return static_cast<int>(in_[v].size()); }

  bool has_arc(Vertex tail, Vertex head) const;

  /// Underlying simple graph: one edge per adjacent pair, opposite arcs
  /// merged.
  UndirectedGraph underlying() const;

  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.vertex_count_ == b.vertex_count_ && a.arcs_ == b.arcs_;
  }

 private:
  int vertex_count_ = 0;
  std::vector<Arc> arcs_;
  std::vector<std::vector<EdgeId>> out_;
  std::vector<std::vector<EdgeId>> in_;
};

/// Square 0/1 matrix with zero diagonal.
class AdjacencyMatrix {
 public:
  /// All-zero matrix of order k (k >= 1).
  explicit AdjacencyMatrix(int order);
  /// Row-major entries; throws GraphError on a non-0/1 entry, a nonzero
  /// diagonal or a size that is not order*order.
  AdjacencyMatrix(int order, std::vector<std::uint8_t> entries);

  static AdjacencyMatrix from_digraph(const Digraph& d);

  int order() const { return order_; }
  int at(int row, int col) const { return entries_[row * order_ + col]; }
  void set(int row, int col, bool value);

  /// Total number of unit entries.
  int total() const;
  /// (sum_j P_ij)_i
  std::vector<int> row_sums() const;
  /// (sum_i P_ij)_j
  std::vector<int> column_sums() const;
  bool symmetric() const;

  /// Arcs in row-major order of the unit entries.
  Digraph to_digraph() const;

  const std::vector<std::uint8_t>& entries() const { return entries_; }

  friend bool operator==(const AdjacencyMatrix&,
                         const AdjacencyMatrix&) = default;
  friend auto operator<=>(const AdjacencyMatrix& a, const AdjacencyMatrix& b) {
    return a.entries_ <=> b.entries_;
  }

 private:
  int order_;
  std::vector<std::uint8_t> entries_;
};

/// Fixed-width grid with row sums on the right and column sums underneath.
std::string format_matrix(const AdjacencyMatrix& m);

/// For each vertex, the cyclic (clockwise) order of its incident edge ids.
class RotationSystem {
 public:
  RotationSystem() = default;
  explicit RotationSystem(std::vector<std::vector<EdgeId>> orders)
      : orders_(std::move(orders)) {}

  int vertex_count() const { return static_cast<int>(orders_.size()); }
  std::span<const EdgeId> order(Vertex v) const { return orders_[v]; }
  const std::vector<std::vector<EdgeId>>& orders() const { return orders_; }

  /// Edge following `e` clockwise around `v`.
  EdgeId successor(Vertex v, EdgeId e) const;
  EdgeId predecessor(Vertex v, EdgeId e) const;

  friend bool operator==(const RotationSystem&,
                         const RotationSystem&) = default;

 private:
  std::vector<std::vector<EdgeId>> orders_;
};

/// Throws RotationMismatchError unless every vertex lists exactly its
/// incident edges, each once.
void check_rotation(const UndirectedGraph& g, const RotationSystem& rot);

/// Rotation system whose face tracing reproduces `faces`. Each face is a
/// closed vertex walk a0 -> a1 -> ... -> a0 (the closing vertex is not
/// repeated); every edge must be walked once in each direction.
RotationSystem rotation_from_faces(const UndirectedGraph& g,
                                   const std::vector<std::vector<Vertex>>& faces);

struct DegreeProfile {
  std::vector<int> degrees;
  int max_degree = 0;
  bool all_even = true;
  /// degree -> number of vertices with that degree
  std::map<int, int> histogram;
};

DegreeProfile degree_profile(const UndirectedGraph& g);

/// Vertex sets of the connected components, each sorted, ordered by their
/// smallest vertex.
std::vector<std::vector<Vertex>> connected_components(const UndirectedGraph& g);

bool is_connected(const UndirectedGraph& g);

/// Every 3-clique once, as (a < b < c), in lexicographic order.
std::vector<std::array<Vertex, 3>> find_triangles(const UndirectedGraph& g);

/// True iff some connected component is exactly the complete graph K_n.
bool contains_complete_component(const UndirectedGraph& g, int n);

/// True iff some connected component is a cycle of odd length.
bool contains_odd_cycle_component(const UndirectedGraph& g);

/// Subgraph induced by `vertices`; vertex vertices[i] becomes i.
UndirectedGraph induced_subgraph(const UndirectedGraph& g,
                                 std::span<const Vertex> vertices);

/// Disjoint union; vertices and edge ids of b are shifted after a's.
UndirectedGraph disjoint_union(const UndirectedGraph& a,
                               const UndirectedGraph& b);

inline constexpr int kIsomorphismVertexCap = 10;

/// Witness mapping for an isomorphism: mapping[v] is the image of vertex v.
using VertexMap = std::vector<Vertex>;

/// Backtracking isomorphism test with degree and triangle-count pruning.
/// Throws SizeLimitError above kIsomorphismVertexCap vertices.
std::optional<VertexMap> are_isomorphic(const UndirectedGraph& a,
                                        const UndirectedGraph& b);
std::optional<VertexMap> are_isomorphic(const Digraph& a, const Digraph& b);

struct FaceTrace {
  /// Each face as its cyclic sequence of darts (vertex, edge id) where the
  /// walk leaves `vertex` along `edge`.
  std::vector<std::vector<std::pair<Vertex, EdgeId>>> faces;
  /// V - E + F == 2
  bool planar = false;
  int euler_characteristic = 0;
};

/// Traces the faces of the embedding given by `rot`: after entering v along
/// e, the walk leaves along the clockwise successor of e at v. Throws
/// RotationMismatchError if rot does not cover g.
FaceTrace faces_and_genus_check(const UndirectedGraph& g,
                                const RotationSystem& rot);

/// Named small graphs used throughout tests and examples.
namespace graphs {
UndirectedGraph cycle(int n);
UndirectedGraph path(int n);
UndirectedGraph complete(int n);
UndirectedGraph star(int leaves);
UndirectedGraph empty(int n);
/// 6 vertices, antipodal pairs (0,5), (1,3), (2,4) non-adjacent.
UndirectedGraph octahedron();
/// Planar rotation of octahedron().
RotationSystem octahedron_rotation();
/// Planar rotation of complete(4).
RotationSystem k4_rotation();
/// Rotation of cycle(n) (each vertex has two edges, any order is planar).
RotationSystem cycle_rotation(int n);
}  // namespace graphs

}  // namespace conjtri
