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

// Small-graph isomorphism by backtracking. Candidate images are restricted
// to vertices with the same invariant signature (degrees, triangle count),
// and every partial map is checked against adjacency and non-adjacency.

#include <algorithm>
#include <functional>
#include <vector>

#include "conjtri/errors.hpp"
#include "conjtri/graph.hpp"

namespace conjtri {

namespace {

using Matrix = std::vector<std::vector<bool>>;
using Signature = std::vector<int>;

std::optional<VertexMap> match(const Matrix& a, const Matrix& b,
                               const std::vector<Signature>& sig_a,
                               const std::vector<Signature>& sig_b) {
  const int n = static_cast<int>(a.size());
  if (static_cast<int>(b.size()) != n) return std::nullopt;
  {
    auto sa = sig_a, sb = sig_b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }
  // Map high-constraint vertices first.
  std::vector<Vertex> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](Vertex x, Vertex y) {
    return sig_a[x] > sig_a[y];
  });

  VertexMap map(n, -1);
  std::vector<bool> used(n, false);
  std::function<bool(int)> extend = [&](int depth) {
    if (depth == n) return true;
    const Vertex x = order[depth];
    for (Vertex y = 0; y < n; ++y) {
      if (used[y] || sig_a[x] != sig_b[y]) continue;
      bool ok = true;
      for (int d = 0; d < depth && ok; ++d) {
        const Vertex px = order[d];
        const Vertex py = map[px];
        ok = a[x][px] == b[y][py] && a[px][x] == b[py][y];
      }
      if (!ok) continue;
      map[x] = y;
      used[y] = true;
      if (extend(depth + 1)) return true;
      used[y] = false;
      map[x] = -1;
    }
    return false;
  };
  if (!extend(0)) return std::nullopt;
  return map;
}

void check_cap(int n) {
  if (n > kIsomorphismVertexCap)
    throw SizeLimitError("isomorphism test", n, kIsomorphismVertexCap);
}

Matrix matrix_of(const UndirectedGraph& g) {
  Matrix m(g.vertex_count(), std::vector<bool>(g.vertex_count(), false));
  for (const auto& [u, v] : g.edges()) m[u][v] = m[v][u] = true;
  return m;
}

std::vector<Signature> signatures(const UndirectedGraph& g) {
  std::vector<Signature> sig(g.vertex_count());
  std::vector<int> triangles(g.vertex_count(), 0);
  for (const auto& t : find_triangles(g))
    for (Vertex v : t) ++triangles[v];
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    sig[v] = {g.degree(v), triangles[v]};
  return sig;
}

}  // namespace

std::optional<VertexMap> are_isomorphic(const UndirectedGraph& a,
                                        const UndirectedGraph& b) {
  check_cap(a.vertex_count());
  check_cap(b.vertex_count());
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
    return std::nullopt;
  return match(matrix_of(a), matrix_of(b), signatures(a), signatures(b));
}

std::optional<VertexMap> are_isomorphic(const Digraph& a, const Digraph& b) {
  check_cap(a.vertex_count());
  check_cap(b.vertex_count());
  if (a.vertex_count() != b.vertex_count() || a.arc_count() != b.arc_count())
    return std::nullopt;
  auto prepare = [](const Digraph& d, Matrix& m, std::vector<Signature>& sig) {
    const int n = d.vertex_count();
    m.assign(n, std::vector<bool>(n, false));
    for (const auto& [t, h] : d.arcs()) m[t][h] = true;
    const auto tri = signatures(d.underlying());
    sig.resize(n);
    for (Vertex v = 0; v < n; ++v)
      sig[v] = {d.out_degree(v), d.in_degree(v), tri[v][1]};
  };
  Matrix ma, mb;
  std::vector<Signature> sa, sb;
  prepare(a, ma, sa);
  prepare(b, mb, sb);
  return match(ma, mb, sa, sb);
}

}  // namespace conjtri
