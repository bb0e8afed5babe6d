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

#include "conjtri/graph.hpp"

#include <algorithm>
#include <iomanip>
#include <numeric>
#include <set>
#include <sstream>

#include "conjtri/errors.hpp"

namespace conjtri {

UndirectedGraph::UndirectedGraph(int vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count),
      edges_(std::move(edges)),
      neighbors_(vertex_count < 0 ? 0 : vertex_count),
      incident_(vertex_count < 0 ? 0 : vertex_count) {
  if (vertex_count < 0) throw GraphError("negative vertex count");
  std::set<std::pair<Vertex, Vertex>> seen;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto [u, v] = edges_[i];
    const std::string where = "edge " + std::to_string(i + 1);
    if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count)
      throw GraphError(where + ": endpoint out of range");
    if (u == v) throw GraphError(where + ": self-loop at " + std::to_string(u));
    if (!seen.emplace(std::min(u, v), std::max(u, v)).second)
      throw GraphError(where + ": parallel edge " + std::to_string(u) + "-" +
                       std::to_string(v));
    const auto id = static_cast<EdgeId>(i + 1);
    neighbors_[u].push_back(v);
    neighbors_[v].push_back(u);
    incident_[u].push_back(id);
    incident_[v].push_back(id);
  }
  for (auto& n : neighbors_) std::sort(n.begin(), n.end());
}

bool UndirectedGraph::adjacent(Vertex a, Vertex b) const {
  return std::binary_search(neighbors_[a].begin(), neighbors_[a].end(), b);
}

std::optional<EdgeId> UndirectedGraph::edge_between(Vertex a, Vertex b) const {
  for (EdgeId e : incident_[a])
    if (edges_[e - 1].other(a) == b) return e;
  return std::nullopt;
}

Digraph::Digraph(int vertex_count, std::vector<Arc> arcs)
    : vertex_count_(vertex_count),
      arcs_(std::move(arcs)),
      out_(vertex_count < 0 ? 0 : vertex_count),
      in_(vertex_count < 0 ? 0 : vertex_count) {
  if (vertex_count < 0) throw GraphError("negative vertex count");
  std::set<std::pair<Vertex, Vertex>> seen;
  for (std::size_t i = 0; i < arcs_.size(); ++i) {
    const auto [t, h] = arcs_[i];
    const std::string where = "arc " + std::to_string(i + 1);
    if (t < 0 || h < 0 || t >= vertex_count || h >= vertex_count)
      throw GraphError(where + ": endpoint out of range");
    if (t == h) throw GraphError(where + ": self-loop");
    if (!seen.emplace(t, h).second)
      throw GraphError(where + ": duplicate arc");
    out_[t].push_back(static_cast<EdgeId>(i + 1));
    in_[h].push_back(static_cast<EdgeId>(i + 1));
  }
}

bool Digraph::has_arc(Vertex tail, Vertex head) const {
  return std::any_of(out_[tail].begin(), out_[tail].end(),
                     [&](EdgeId a) { return arcs_[a - 1].head == head; });
}

UndirectedGraph Digraph::underlying() const {
  std::vector<Edge> edges;
  std::set<std::pair<Vertex, Vertex>> seen;
  for (const auto& [t, h] : arcs_)
    if (seen.emplace(std::min(t, h), std::max(t, h)).second)
      edges.push_back({std::min(t, h), std::max(t, h)});
  return UndirectedGraph(vertex_count_, std::move(edges));
}

AdjacencyMatrix::AdjacencyMatrix(int order)
    : order_(order), entries_(order > 0 ? order * order : 0, 0) {
  if (order < 1) throw GraphError("matrix order must be positive");
}

AdjacencyMatrix::AdjacencyMatrix(int order, std::vector<std::uint8_t> entries)
    : order_(order), entries_(std::move(entries)) {
  if (order < 1) throw GraphError("matrix order must be positive");
  if (entries_.size() != static_cast<std::size_t>(order) * order)
    throw GraphError("matrix entry count does not match order");
  for (int i = 0; i < order; ++i) {
    if (at(i, i) != 0) throw GraphError("nonzero diagonal entry");
    for (int j = 0; j < order; ++j)
      if (at(i, j) > 1) throw GraphError("matrix entry is not 0/1");
  }
}

AdjacencyMatrix AdjacencyMatrix::from_digraph(const Digraph& d) {
  AdjacencyMatrix m(d.vertex_count());
  for (const auto& [t, h] : d.arcs()) m.set(t, h, true);
  return m;
}

void AdjacencyMatrix::set(int row, int col, bool value) {
  if (row == col && value) throw GraphError("nonzero diagonal entry");
  entries_[row * order_ + col] = value ? 1 : 0;
}

int AdjacencyMatrix::total() const {
  return std::accumulate(entries_.begin(), entries_.end(), 0);
}

std::vector<int> AdjacencyMatrix::row_sums() const {
  std::vector<int> sums(order_, 0);
  for (int i = 0; i < order_; ++i)
    for (int j = 0; j < order_; ++j) sums[i] += at(i, j);
  return sums;
}

std::vector<int> AdjacencyMatrix::column_sums() const {
  std::vector<int> sums(order_, 0);
  for (int i = 0; i < order_; ++i)
    for (int j = 0; j < order_; ++j) sums[j] += at(i, j);
  return sums;
}

bool AdjacencyMatrix::symmetric() const {
  for (int i = 0; i < order_; ++i)
    for (int j = i + 1; j < order_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

Digraph AdjacencyMatrix::to_digraph() const {
  std::vector<Arc> arcs;
  for (int i = 0; i < order_; ++i)
    for (int j = 0; j < order_; ++j)
      if (at(i, j)) arcs.push_back({i, j});
  return Digraph(order_, std::move(arcs));
}

std::string format_matrix(const AdjacencyMatrix& m) {
  std::ostringstream out;
  const int k = m.order();
  const auto rows = m.row_sums();
  const auto cols = m.column_sums();
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) out << std::setw(3) << m.at(i, j);
    out << " |" << std::setw(3) << rows[i] << '\n';
  }
  out << std::string(3 * k, '-') << "-+\n";
  for (int j = 0; j < k; ++j) out << std::setw(3) << cols[j];
  out << " |" << std::setw(3) << m.total() << '\n';
  return out.str();
}

EdgeId RotationSystem::successor(Vertex v, EdgeId e) const {
  const auto& ord = orders_.at(v);
  auto it = std::find(ord.begin(), ord.end(), e);
  if (it == ord.end())
    throw RotationMismatchError("edge " + std::to_string(e) +
                                " not in rotation of vertex " +
                                std::to_string(v));
  return ++it == ord.end() ? ord.front() : *it;
}

EdgeId RotationSystem::predecessor(Vertex v, EdgeId e) const {
  const auto& ord = orders_.at(v);
  auto it = std::find(ord.begin(), ord.end(), e);
  if (it == ord.end())
    throw RotationMismatchError("edge " + std::to_string(e) +
                                " not in rotation of vertex " +
                                std::to_string(v));
  return it == ord.begin() ? ord.back() : *(it - 1);
}

void check_rotation(const UndirectedGraph& g, const RotationSystem& rot) {
  if (rot.vertex_count() != g.vertex_count())
    throw RotationMismatchError("rotation covers " +
                                std::to_string(rot.vertex_count()) +
                                " vertices, graph has " +
                                std::to_string(g.vertex_count()));
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    std::vector<EdgeId> listed(rot.order(v).begin(), rot.order(v).end());
    std::sort(listed.begin(), listed.end());
    const auto inc = g.incident(v);
    if (!std::equal(listed.begin(), listed.end(), inc.begin(), inc.end()))
      throw RotationMismatchError("rotation of vertex " + std::to_string(v) +
                                  " does not list exactly its incident edges");
  }
}

RotationSystem rotation_from_faces(
    const UndirectedGraph& g, const std::vector<std::vector<Vertex>>& faces) {
  // succ[v][e] = edge leaving v after arriving along e
  std::vector<std::map<EdgeId, EdgeId>> succ(g.vertex_count());
  for (const auto& face : faces) {
    const std::size_t n = face.size();
    for (std::size_t i = 0; i < n; ++i) {
      const Vertex a = face[i];
      const Vertex b = face[(i + 1) % n];
      const Vertex c = face[(i + 2) % n];
      const auto in = g.edge_between(a, b);
      const auto out = g.edge_between(b, c);
      if (!in || !out)
        throw RotationMismatchError("face walk uses a non-edge");
      if (!succ[b].emplace(*in, *out).second)
        throw RotationMismatchError("dart walked twice by the face list");
    }
  }
  std::vector<std::vector<EdgeId>> orders(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) == 0) continue;
    if (static_cast<int>(succ[v].size()) != g.degree(v))
      throw RotationMismatchError("faces do not cover every corner at vertex " +
                                  std::to_string(v));
    EdgeId e = g.incident(v).front();
    for (int i = 0; i < g.degree(v); ++i) {
      orders[v].push_back(e);
      e = succ[v].at(e);
    }
    if (e != orders[v].front())
      throw RotationMismatchError("corners at vertex " + std::to_string(v) +
                                  " do not form a single cycle");
  }
  RotationSystem rot(std::move(orders));
  check_rotation(g, rot);
  return rot;
}

DegreeProfile degree_profile(const UndirectedGraph& g) {
  DegreeProfile p;
  p.degrees.reserve(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const int d = g.degree(v);
    p.degrees.push_back(d);
    p.max_degree = std::max(p.max_degree, d);
    p.all_even = p.all_even && d % 2 == 0;
    ++p.histogram[d];
  }
  return p;
}

std::vector<std::vector<Vertex>> connected_components(
    const UndirectedGraph& g) {
  std::vector<std::vector<Vertex>> blocks;
  std::vector<bool> seen(g.vertex_count(), false);
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> block{s}, stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v))
        if (!seen[w]) {
          seen[w] = true;
          block.push_back(w);
          stack.push_back(w);
        }
    }
    std::sort(block.begin(), block.end());
    blocks.push_back(std::move(block));
  }
  return blocks;
}

bool is_connected(const UndirectedGraph& g) {
  return connected_components(g).size() == 1;
}

std::vector<std::array<Vertex, 3>> find_triangles(const UndirectedGraph& g) {
  std::vector<std::array<Vertex, 3>> out;
  for (Vertex a = 0; a < g.vertex_count(); ++a)
    for (Vertex b : g.neighbors(a)) {
      if (b <= a) continue;
      for (Vertex c : g.neighbors(b))
        if (c > b && g.adjacent(a, c)) out.push_back({a, b, c});
    }
  return out;
}

namespace {

int edges_within(const UndirectedGraph& g, const std::vector<Vertex>& block) {
  int twice = 0;
  for (Vertex v : block) twice += g.degree(v);
  return twice / 2;
}

}  // namespace

bool contains_complete_component(const UndirectedGraph& g, int n) {
  for (const auto& block : connected_components(g)) {
    const int k = static_cast<int>(block.size());
    if (k == n && edges_within(g, block) == k * (k - 1) / 2) return true;
  }
  return false;
}

bool contains_odd_cycle_component(const UndirectedGraph& g) {
  for (const auto& block : connected_components(g)) {
    const auto k = block.size();
    if (k < 3 || k % 2 == 0) continue;
    if (std::all_of(block.begin(), block.end(),
                    [&](Vertex v) { return g.degree(v) == 2; }))
      return true;
  }
  return false;
}

UndirectedGraph induced_subgraph(const UndirectedGraph& g,
                                 std::span<const Vertex> vertices) {
  std::vector<int> index(g.vertex_count(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i)
    index[vertices[i]] = static_cast<int>(i);
  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges())
    if (index[u] >= 0 && index[v] >= 0) edges.push_back({index[u], index[v]});
  return UndirectedGraph(static_cast<int>(vertices.size()), std::move(edges));
}

UndirectedGraph disjoint_union(const UndirectedGraph& a,
                               const UndirectedGraph& b) {
  std::vector<Edge> edges = a.edges();
  const int shift = a.vertex_count();
  for (const auto& [u, v] : b.edges()) edges.push_back({u + shift, v + shift});
  return UndirectedGraph(a.vertex_count() + b.vertex_count(), std::move(edges));
}

namespace graphs {

UndirectedGraph cycle(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return UndirectedGraph(n, std::move(edges));
}

UndirectedGraph path(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return UndirectedGraph(n, std::move(edges));
}

UndirectedGraph complete(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
  return UndirectedGraph(n, std::move(edges));
}

UndirectedGraph star(int leaves) {
  std::vector<Edge> edges;
  for (int i = 1; i <= leaves; ++i) edges.push_back({0, i});
  return UndirectedGraph(leaves + 1, std::move(edges));
}

UndirectedGraph empty(int n) { return UndirectedGraph(n, {}); }

UndirectedGraph octahedron() {
  std::vector<Edge> edges;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) {
      const bool antipodal = (i == 0 && j == 5) || (i == 1 && j == 3) ||
                             (i == 2 && j == 4);
      if (!antipodal) edges.push_back({i, j});
    }
  return UndirectedGraph(6, std::move(edges));
}

RotationSystem octahedron_rotation() {
  // Apex 0, equator 1-2-3-4, apex 5.
  return rotation_from_faces(octahedron(), {{0, 1, 2},
                                            {0, 2, 3},
                                            {0, 3, 4},
                                            {0, 4, 1},
                                            {5, 2, 1},
                                            {5, 3, 2},
                                            {5, 4, 3},
                                            {5, 1, 4}});
}

RotationSystem k4_rotation() {
  return rotation_from_faces(complete(4),
                             {{0, 1, 3}, {1, 2, 3}, {2, 0, 3}, {0, 2, 1}});
}

RotationSystem cycle_rotation(int n) {
  const auto g = cycle(n);
  std::vector<std::vector<EdgeId>> orders;
  for (Vertex v = 0; v < n; ++v)
    orders.emplace_back(g.incident(v).begin(), g.incident(v).end());
  return RotationSystem(std::move(orders));
}

}  // namespace graphs

}  // namespace conjtri
