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

#include <algorithm>
#include <array>
#include <cstdio>
#include <map>
#include <random>

#include "conjtri/construct.hpp"
#include "conjtri/errors.hpp"

namespace conjtri {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

int uniform(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

void insert_after(std::vector<Vertex>& ring, Vertex anchor, Vertex x) {
  auto it = std::find(ring.begin(), ring.end(), anchor);
  ring.insert(it + 1, x);
}

}  // namespace

PlaneGraph generate_stacked_triangulation(int inserts, std::uint64_t seed) {
  if (inserts < 0) throw RangeError("inserts must be non-negative");
  std::mt19937_64 rng(seed);
  const int n = 3 + inserts;
  // Clockwise neighbor order per vertex; a face (a, b, c) is traced
  // a -> b -> c -> a.
  std::vector<std::vector<Vertex>> ring(n);
  ring[0] = {1, 2};
  ring[1] = {2, 0};
  ring[2] = {0, 1};
  std::vector<std::array<Vertex, 3>> faces{{0, 1, 2}, {0, 2, 1}};
  std::vector<Edge> edges{{0, 1}, {1, 2}, {2, 0}};

  for (Vertex x = 3; x < n; ++x) {
    const int f = uniform(rng, 0, static_cast<int>(faces.size()) - 1);
    const auto [a, b, c] = faces[f];
    insert_after(ring[b], a, x);
    insert_after(ring[c], b, x);
    insert_after(ring[a], c, x);
    ring[x] = {a, c, b};
    faces[f] = {a, b, x};
    faces.push_back({b, c, x});
    faces.push_back({c, a, x});
    edges.push_back({x, a});
    edges.push_back({x, b});
    edges.push_back({x, c});
  }

  UndirectedGraph g(n, std::move(edges));
  std::vector<std::vector<EdgeId>> orders(n);
  for (Vertex v = 0; v < n; ++v)
    for (Vertex w : ring[v]) orders[v].push_back(*g.edge_between(v, w));
  return {std::move(g), RotationSystem(std::move(orders))};
}

PlaneGraph medial_graph(const UndirectedGraph& t, const RotationSystem& rot) {
  if (!is_connected(t)) throw GraphError("medial graph needs a connected graph");
  for (Vertex v = 0; v < t.vertex_count(); ++v)
    if (t.degree(v) < 2)
      throw GraphError("medial graph needs minimum degree 2 (vertex " +
                       std::to_string(v) + ")");
  if (!faces_and_genus_check(t, rot).planar)
    throw GraphError("medial graph needs a planar-verified rotation system");

  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex v = 0; v < t.vertex_count(); ++v)
    for (EdgeId e : rot.order(v)) {
      const EdgeId f = rot.successor(v, e);
      pairs.emplace_back(std::min(e, f) - 1, std::max(e, f) - 1);
    }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  std::vector<Edge> edges;
  for (const auto& [a, b] : pairs) edges.push_back({a, b});
  UndirectedGraph m(t.edge_count(), std::move(edges));

  // Around the midpoint of e = (u, v), clockwise: the edge before e at u,
  // the edge after e at v, the edge before e at v, the edge after e at u.
  std::vector<std::vector<EdgeId>> orders(m.vertex_count());
  for (EdgeId e = 1; e <= t.edge_count(); ++e) {
    const auto [u, v] = t.edge(e);
    const std::array<EdgeId, 4> around{
        rot.predecessor(u, e), rot.successor(v, e), rot.predecessor(v, e),
        rot.successor(u, e)};
    auto& order = orders[e - 1];
    for (EdgeId f : around) {
      const EdgeId me = *m.edge_between(e - 1, f - 1);
      if (std::find(order.begin(), order.end(), me) == order.end())
        order.push_back(me);
    }
  }
  return {std::move(m), RotationSystem(std::move(orders))};
}

ConjugatedTriangulation subdivide_edges(const ConjugatedTriangulation& h,
                                        int count, std::uint64_t seed) {
  if (count < 0) throw RangeError("subdivision count must be non-negative");
  if (count == 0) return h;
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges = h.graph().edges();
  int n = h.graph().vertex_count();
  std::optional<std::vector<std::vector<EdgeId>>> orders;
  if (h.rotation()) orders = h.rotation()->orders();

  for (int i = 0; i < count; ++i) {
    const EdgeId e = uniform(rng, 1, static_cast<int>(edges.size()));
    const auto [u, v] = edges[e - 1];
    const Vertex x = n++;
    const EdgeId fresh = static_cast<EdgeId>(edges.size()) + 1;
    edges[e - 1] = {u, x};
    edges.push_back({x, v});
    if (orders) {
      auto& at_v = (*orders)[v];
      *std::find(at_v.begin(), at_v.end(), e) = fresh;
      orders->push_back({e, fresh});
    }
  }
  std::optional<RotationSystem> rot;
  if (orders) rot = RotationSystem(std::move(*orders));
  return make_conjugated(UndirectedGraph(n, std::move(edges)), rot);
}

std::vector<CorpusInstance> generate_corpus(const CorpusRecipe& recipe) {
  if (recipe.min_inserts < 1 || recipe.max_inserts < recipe.min_inserts)
    throw RangeError("corpus recipe needs 1 <= min_inserts <= max_inserts");
  // The medial graph of a stacked triangulation with i inserts has 6 + 6i
  // edges.
  const int max_inserts =
      std::min(recipe.max_inserts, (recipe.max_edges - 6) / 6);
  if (max_inserts < recipe.min_inserts)
    throw RangeError("max_edges too small for the requested inserts");

  std::vector<CorpusInstance> corpus;
  corpus.reserve(recipe.count);
  for (int i = 0; i < recipe.count; ++i) {
    const std::uint64_t s =
        splitmix64(recipe.seed ^ splitmix64(static_cast<std::uint64_t>(i)));
    std::mt19937_64 rng(s);
    const int inserts = uniform(rng, recipe.min_inserts, max_inserts);
    const int base_edges = 6 + 6 * inserts;
    const int max_sub =
        std::max(0, std::min(recipe.max_subdivisions,
                             recipe.max_edges - base_edges));
    const int subdivisions = uniform(rng, 0, max_sub);

    const auto t = generate_stacked_triangulation(inserts, rng());
    auto m = medial_graph(t.graph, t.rotation);
    const auto h = subdivide_edges(make_conjugated(m.graph, m.rotation),
                                   subdivisions, rng());
    char id[32];
    std::snprintf(id, sizeof id, "gen-%04d", i);
    corpus.push_back({id, h.graph(), h.rotation()});
  }
  return corpus;
}

}  // namespace conjtri
