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

#include "conjtri/construct.hpp"

#include <algorithm>
#include <set>

#include "conjtri/errors.hpp"

namespace conjtri {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPassed:
      return "passed";
    case CheckStatus::kFailed:
      return "failed";
    case CheckStatus::kSkipped:
      return "skipped";
  }
  return "unknown";
}

std::variant<ConjugatedTriangulation, ValidationReport> validate_conjugated(
    const UndirectedGraph& g, const std::optional<RotationSystem>& rot) {
  ValidationReport report;

  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) != 2 && g.degree(v) != 4)
      report.degrees.offenders.push_back(v);
  if (!report.degrees.offenders.empty()) {
    report.degrees.status = CheckStatus::kFailed;
    report.degrees.detail = "degrees must be 2 or 4";
  }

  const auto blocks = connected_components(g);
  if (blocks.empty()) {
    report.connectivity.status = CheckStatus::kFailed;
    report.connectivity.detail = "graph has no vertices";
  } else if (blocks.size() > 1) {
    report.connectivity.status = CheckStatus::kFailed;
    report.connectivity.detail =
        std::to_string(blocks.size()) + " connected components";
    for (std::size_t i = 1; i < blocks.size(); ++i)
      for (Vertex v : blocks[i]) report.connectivity.offenders.push_back(v);
    std::sort(report.connectivity.offenders.begin(),
              report.connectivity.offenders.end());
  }

  if (!rot) {
    report.planarity.status = CheckStatus::kSkipped;
    report.planarity.detail = "no rotation system; planarity unchecked";
  } else {
    try {
      const auto trace = faces_and_genus_check(g, *rot);
      if (!trace.planar) {
        report.planarity.status = CheckStatus::kFailed;
        report.planarity.detail =
            "V - E + F = " + std::to_string(trace.euler_characteristic);
      }
    } catch (const RotationMismatchError& e) {
      report.planarity.status = CheckStatus::kFailed;
      report.planarity.detail = e.what();
    }
  }

  report.triangle_count = static_cast<int>(find_triangles(g).size());

  if (!report.ok()) return report;
  return ConjugatedTriangulation(g, rot, std::move(report));
}

std::string describe_failures(const ValidationReport& report) {
  std::string out;
  auto add = [&](const char* name, const ValidationCheck& c) {
    if (c.ok()) return;
    if (!out.empty()) out += "; ";
    out += std::string(name) + ": " + c.detail;
  };
  add("degrees", report.degrees);
  add("connectivity", report.connectivity);
  add("planarity", report.planarity);
  add("loop_freedom", report.loop_freedom);
  return out;
}

ConjugatedTriangulation make_conjugated(
    const UndirectedGraph& g, const std::optional<RotationSystem>& rot) {
  auto outcome = validate_conjugated(g, rot);
  if (auto* report = std::get_if<ValidationReport>(&outcome))
    throw GraphError("not a conjugated triangulation: " +
                     describe_failures(*report));
  return std::get<ConjugatedTriangulation>(std::move(outcome));
}

LineGraphResult line_graph(const UndirectedGraph& h) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex v = 0; v < h.vertex_count(); ++v) {
    const auto inc = h.incident(v);
    for (std::size_t i = 0; i < inc.size(); ++i)
      for (std::size_t j = i + 1; j < inc.size(); ++j)
        pairs.emplace_back(inc[i] - 1, inc[j] - 1);
  }
  std::sort(pairs.begin(), pairs.end());
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (const auto& [a, b] : pairs) edges.push_back({a, b});

  LineGraphResult result;
  result.graph = UndirectedGraph(h.edge_count(), std::move(edges));
  for (EdgeId e = 1; e <= h.edge_count(); ++e) {
    result.vertex_of_edge.push_back(e - 1);
    result.edge_of_vertex.push_back(e);
  }
  return result;
}

LineGraphResult line_graph(const ConjugatedTriangulation& h) {
  return line_graph(h.graph());
}

EulerCircuit euler_circuit(const UndirectedGraph& g) {
  std::vector<Vertex> odd;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) % 2 != 0) odd.push_back(v);
  if (!odd.empty()) throw EulerError(EulerError::Kind::kOddDegree, odd);

  EulerCircuit circuit;
  Vertex start = -1;
  for (Vertex v = 0; v < g.vertex_count() && start < 0; ++v)
    if (g.degree(v) > 0) start = v;
  if (start < 0) return circuit;

  std::vector<bool> reached(g.vertex_count(), false);
  std::vector<Vertex> stack{start};
  reached[start] = true;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v))
      if (!reached[w]) {
        reached[w] = true;
        stack.push_back(w);
      }
  }
  std::vector<Vertex> unreachable;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) > 0 && !reached[v]) unreachable.push_back(v);
  if (!unreachable.empty())
    throw EulerError(EulerError::Kind::kDisconnected, unreachable);

  std::vector<std::size_t> next(g.vertex_count(), 0);
  std::vector<bool> used(g.edge_count() + 1, false);
  // (vertex, edge used to arrive); 0 marks the start.
  std::vector<std::pair<Vertex, EdgeId>> walk{{start, 0}};
  std::vector<std::pair<Vertex, EdgeId>> done;
  while (!walk.empty()) {
    const Vertex v = walk.back().first;
    const auto inc = g.incident(v);
    while (next[v] < inc.size() && used[inc[next[v]]]) ++next[v];
    if (next[v] < inc.size()) {
      const EdgeId e = inc[next[v]];
      used[e] = true;
      walk.emplace_back(g.edge(e).other(v), e);
    } else {
      done.push_back(walk.back());
      walk.pop_back();
    }
  }
  std::reverse(done.begin(), done.end());
  for (const auto& [v, e] : done) {
    circuit.vertices.push_back(v);
    if (e != 0) circuit.edges.push_back(e);
  }
  return circuit;
}

EulerCircuit euler_circuit(const ConjugatedTriangulation& h) {
  return euler_circuit(h.graph());
}

OrientedConjugated orient_along_circuit(const ConjugatedTriangulation& h,
                                        const EulerCircuit& c) {
  const auto& g = h.graph();
  const int m = g.edge_count();
  if (c.length() != m)
    throw MismatchError("circuit has " + std::to_string(c.length()) +
                        " edges, graph has " + std::to_string(m));
  if (c.vertices.size() != c.edges.size() + 1 ||
      c.vertices.front() != c.vertices.back())
    throw MismatchError("circuit is not a closed walk");
  std::vector<Arc> arcs(m);
  std::vector<bool> seen(m + 1, false);
  for (int i = 0; i < m; ++i) {
    const EdgeId e = c.edges[i];
    if (e < 1 || e > m) throw MismatchError("circuit edge id out of range");
    if (seen[e])
      throw MismatchError("edge " + std::to_string(e) + " traversed twice");
    seen[e] = true;
    const Vertex from = c.vertices[i];
    const Vertex to = c.vertices[i + 1];
    const Edge& edge = g.edge(e);
    if (!(edge.has(from) && edge.other(from) == to))
      throw MismatchError("circuit step " + std::to_string(i + 1) +
                          " does not follow edge " + std::to_string(e));
    arcs[e - 1] = {from, to};
  }
  return {h, Digraph(g.vertex_count(), std::move(arcs))};
}

OrientedConjugated canonical_orientation(const ConjugatedTriangulation& h) {
  return orient_along_circuit(h, euler_circuit(h));
}

}  // namespace conjtri
