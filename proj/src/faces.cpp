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

#include <vector>

#include "conjtri/errors.hpp"
#include "conjtri/graph.hpp"

namespace conjtri {

FaceTrace faces_and_genus_check(const UndirectedGraph& g,
                                const RotationSystem& rot) {
  check_rotation(g, rot);
  FaceTrace trace;
  // Dart index: 2*(e-1) leaves edge(e).u, 2*(e-1)+1 leaves edge(e).v.
  const int darts = 2 * g.edge_count();
  std::vector<bool> used(darts, false);
  auto dart_of = [&](Vertex v, EdgeId e) {
    return 2 * (e - 1) + (g.edge(e).u == v ? 0 : 1);
  };
  for (int start = 0; start < darts; ++start) {
    if (used[start]) continue;
    std::vector<std::pair<Vertex, EdgeId>> face;
    int d = start;
    while (!used[d]) {
      used[d] = true;
      const EdgeId e = d / 2 + 1;
      const Vertex v = d % 2 == 0 ? g.edge(e).u : g.edge(e).v;
      face.emplace_back(v, e);
      const Vertex w = g.edge(e).other(v);
      d = dart_of(w, rot.successor(w, e));
    }
    trace.faces.push_back(std::move(face));
  }
  // An isolated vertex sits in a face of its own.
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) == 0) trace.faces.emplace_back();
  trace.euler_characteristic = g.vertex_count() - g.edge_count() +
                               static_cast<int>(trace.faces.size());
  trace.planar = trace.euler_characteristic == 2;
  return trace;
}

}  // namespace conjtri
