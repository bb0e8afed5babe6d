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

// Exact vertex and edge coloring plus the classical bounds.
//
// The exact search is DSATUR-ordered backtracking: a greedily found clique
// is precolored 0..q-1, and a new color is only opened as the next unused
// index, which removes color-permutation symmetry. Searches honour a
// deadline and report kTimedOut rather than a wrong answer.

#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "conjtri/graph.hpp"

namespace conjtri {

/// colors[v] for vertex v; -1 marks an unassigned vertex.
struct VertexColoring {
  std::vector<int> colors;
  int palette = 0;

  friend bool operator==(const VertexColoring&,
                         const VertexColoring&) = default;
};

/// colors[e - 1] for edge e; -1 marks an unassigned edge.
struct EdgeColoring {
  std::vector<int> colors;
  int palette = 0;

  friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;
};

using Clock = std::chrono::steady_clock;

struct SolverLimits {
  int max_vertices = 60;
  int max_edges = 60;
  /// Unset means no time limit.
  std::optional<Clock::time_point> deadline;

  static SolverLimits with_budget(std::chrono::milliseconds budget) {
    SolverLimits l;
    l.deadline = Clock::now() + budget;
    return l;
  }
};

struct SearchStats {
  std::uint64_t nodes = 0;
  double elapsed_ms = 0;

  SearchStats& operator+=(const SearchStats& o) {
    nodes += o.nodes;
    elapsed_ms += o.elapsed_ms;
    return *this;
  }
};

enum class SearchStatus { kFound, kExhausted, kTimedOut };

struct KColorResult {
  SearchStatus status = SearchStatus::kExhausted;
  /// Set iff status == kFound.
  std::optional<VertexColoring> coloring;
  SearchStats stats;
};

/// Exact k-colorability. Throws SizeLimitError above limits.max_vertices.
KColorResult is_k_colorable(const UndirectedGraph& g, int k,
                            const SolverLimits& limits = {});

struct ChromaticResult {
  /// False when the deadline hit before the search closed the gap.
  bool exact = false;
  /// Meaningful only when exact.
  int value = 0;
  int lower_bound = 0;
  int upper_bound = 0;
  /// Proper coloring with upper_bound colors (value colors when exact).
  std::optional<VertexColoring> witness;
  SearchStats stats;
};

struct ChromaticClassResult {
  bool exact = false;
  int value = 0;
  int lower_bound = 0;
  int upper_bound = 0;
  std::optional<EdgeColoring> witness;
  SearchStats stats;
};

/// Iterative deepening from the clique lower bound up to the greedy bound.
ChromaticResult chromatic_number(const UndirectedGraph& g,
                                 const SolverLimits& limits = {});

/// Edge chromatic number, found by coloring the line graph. The lower bound
/// also uses |E_c| / floor(|V_c| / 2) per component, since every color class
/// is a matching. Throws SizeLimitError above limits.max_edges.
ChromaticClassResult chromatic_class(const UndirectedGraph& g,
                                     const SolverLimits& limits = {});

struct ColoringBounds {
  int max_degree = 0;
  int clique = 0;
  /// max_degree, or max_degree + 1 when a component is K_{max_degree+1} or
  /// (max_degree == 2) an odd cycle.
  int brooks = 0;
  /// floor(3 * max_degree / 2)
  int shannon = 0;
  /// Colors used by smallest-last greedy.
  int greedy = 0;
};

ColoringBounds coloring_bounds(const UndirectedGraph& g);

/// Smallest-last greedy coloring.
VertexColoring greedy_coloring(const UndirectedGraph& g);

/// A clique found greedily (not necessarily maximum), sorted.
std::vector<Vertex> greedy_clique(const UndirectedGraph& g);

/// Monochromatic edges in id order. Throws PartialColoringError when some
/// vertex is unassigned or the coloring has the wrong size.
std::vector<EdgeId> verify_vertex_coloring(const UndirectedGraph& g,
                                           const VertexColoring& c);

/// Pairs (e, f), e < f, of edges sharing an endpoint and a color, in
/// lexicographic order. Throws PartialColoringError on unassigned edges.
std::vector<std::pair<EdgeId, EdgeId>> verify_edge_coloring(
    const UndirectedGraph& g, const EdgeColoring& c);

/// Number of distinct colors actually used.
int colors_used(const std::vector<int>& colors);

struct ColoringReport {
  ChromaticResult gamma;
  ChromaticClassResult chi;
  ColoringBounds bounds;
};

ColoringReport coloring_report(const UndirectedGraph& g,
                               const SolverLimits& limits = {});

}  // namespace conjtri
