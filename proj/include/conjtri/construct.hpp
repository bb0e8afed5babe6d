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

// Validated conjugated triangulations and the objects derived from them:
// line graph, Euler circuit, circuit orientation, plus the generators used
// to build desk-scale corpora (stacked triangulation -> medial graph ->
// edge subdivisions).

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "conjtri/graph.hpp"

namespace conjtri {

enum class CheckStatus { kPassed, kFailed, kSkipped };

std::string to_string(CheckStatus s);

struct ValidationCheck {
  CheckStatus status = CheckStatus::kPassed;
  /// Offending vertices (0-based) or edges (1-based), depending on the check.
  std::vector<int> offenders;
  std::string detail;

  bool ok() const { return status != CheckStatus::kFailed; }
};

struct ValidationReport {
  /// Every degree is 2 or 4; offenders are vertices.
  ValidationCheck degrees;
  /// Exactly one component; offenders are vertices outside vertex 0's.
  ValidationCheck connectivity;
  /// Face trace of the rotation satisfies V - E + F = 2; skipped without a
  /// rotation system.
  ValidationCheck planarity;
  /// No loops or parallel edges (guaranteed by UndirectedGraph, recorded).
  ValidationCheck loop_freedom;
  /// Recorded, not required.
  int triangle_count = 0;

  bool ok() const {
    return degrees.ok() && connectivity.ok() && planarity.ok() &&
           loop_freedom.ok();
  }
};

class ConjugatedTriangulation;

/// Runs every check; returns the instance iff all pass, otherwise the report
/// with each failing check filled in.
std::variant<ConjugatedTriangulation, ValidationReport> validate_conjugated(
    const UndirectedGraph& g, const std::optional<RotationSystem>& rot = {});

/// A graph with all degrees in {2, 4}, connected, and planar whenever a
/// rotation system is attached. Only validate_conjugated creates one.
class ConjugatedTriangulation {
 public:
  const UndirectedGraph& graph() const { return graph_; }
  const std::optional<RotationSystem>& rotation() const { return rotation_; }
  const ValidationReport& report() const { return report_; }
  bool planarity_checked() const { return rotation_.has_value(); }

 private:
  friend std::variant<ConjugatedTriangulation, ValidationReport>
  validate_conjugated(const UndirectedGraph&,
                      const std::optional<RotationSystem>&);

  ConjugatedTriangulation(UndirectedGraph g, std::optional<RotationSystem> rot,
                          ValidationReport report)
      : graph_(std::move(g)),
        rotation_(std::move(rot)),
        report_(std::move(report)) {}

  UndirectedGraph graph_;
  std::optional<RotationSystem> rotation_;
  ValidationReport report_;
};

/// validate_conjugated, throwing GraphError when the instance is invalid.
ConjugatedTriangulation make_conjugated(
    const UndirectedGraph& g, const std::optional<RotationSystem>& rot = {});

/// One-line description of the failing checks of a report.
std::string describe_failures(const ValidationReport& report);

struct LineGraphResult {
  /// Vertex i stands for H-edge i + 1.
  UndirectedGraph graph;
  /// vertex_of_edge[e - 1] is the G-vertex of H-edge e.
  std::vector<Vertex> vertex_of_edge;
  /// edge_of_vertex[q] is the H-edge of G-vertex q.
  std::vector<EdgeId> edge_of_vertex;
};

/// Line graph: one vertex per edge, two adjacent iff the edges share an
/// endpoint. G-edges are listed in lexicographic order of their endpoints.
LineGraphResult line_graph(const UndirectedGraph& h);
LineGraphResult line_graph(const ConjugatedTriangulation& h);

struct EulerCircuit {
  /// v0, v1, ..., vm with vm == v0.
  std::vector<Vertex> vertices;
  /// edges[i] joins vertices[i] and vertices[i + 1].
  std::vector<EdgeId> edges;

  int length() const { return static_cast<int>(edges.size()); }
};

/// Hierholzer's algorithm. The walk starts at the smallest non-isolated
/// vertex and always leaves a vertex by its smallest unused edge id.
/// Throws EulerError on odd degrees or edges in more than one component.
EulerCircuit euler_circuit(const UndirectedGraph& g);
EulerCircuit euler_circuit(const ConjugatedTriangulation& h);

struct OrientedConjugated {
  ConjugatedTriangulation base;
  /// Arc id e is H-edge e directed along the circuit.
  Digraph arcs;
};

/// Throws MismatchError unless `c` is an Euler circuit of h.
OrientedConjugated orient_along_circuit(const ConjugatedTriangulation& h,
                                        const EulerCircuit& c);

/// orient_along_circuit(h, euler_circuit(h)).
OrientedConjugated canonical_orientation(const ConjugatedTriangulation& h);

struct PlaneGraph {
  UndirectedGraph graph;
  RotationSystem rotation;
};

/// Triangle plus `inserts` vertices, each placed in a uniformly chosen face
/// and joined to its three corners.
PlaneGraph generate_stacked_triangulation(int inserts, std::uint64_t seed);

/// Medial graph: one vertex per edge of t (vertex i for edge i + 1), joined
/// when the edges are consecutive around a face. Throws GraphError when t is
/// disconnected, has a vertex of degree < 2, or rot does not verify planar.
PlaneGraph medial_graph(const UndirectedGraph& t, const RotationSystem& rot);

/// Replaces `count` uniformly chosen edges (drawn one at a time from the
/// current graph) by paths of length two. The first half keeps the old edge
/// id; the second half gets the next free id.
ConjugatedTriangulation subdivide_edges(const ConjugatedTriangulation& h,
                                        int count, std::uint64_t seed);

struct CorpusRecipe {
  int count = 100;
  std::uint64_t seed = 1;
  int min_inserts = 1;
  int max_inserts = 8;
  int max_subdivisions = 6;
  /// Subdivisions are capped so that no instance exceeds this many edges.
  int max_edges = 60;
};

struct CorpusInstance {
  std::string id;
  UndirectedGraph graph;
  std::optional<RotationSystem> rotation;
};

/// Deterministic in the recipe; instance i depends only on (seed, i).
std::vector<CorpusInstance> generate_corpus(const CorpusRecipe& recipe);

}  // namespace conjtri
