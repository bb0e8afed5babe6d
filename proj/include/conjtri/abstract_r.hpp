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

// Abstract color digraphs: k vertices (one per color class) and one arc per
// ordered color pair that occurs along an Euler orientation. This module
// checks the structural requirements on such digraphs and exhaustively
// scans the small matrix spaces they live in.

#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "conjtri/graph.hpp"

namespace conjtri {

class AbstractDigraph {
 public:
  explicit AbstractDigraph(AdjacencyMatrix matrix);
  explicit AbstractDigraph(const Digraph& digraph);

  int k() const { return matrix_.order(); }
  const Digraph& digraph() const { return digraph_; }
  const AdjacencyMatrix& matrix() const { return matrix_; }

 private:
  AdjacencyMatrix matrix_;
  Digraph digraph_;
};

struct Requirement {
  bool passed = false;
  /// Why it failed (or a short confirmation when it passed).
  std::string evidence;
};

struct RequirementOptions {
  int arc_total = 6;
  /// Smallest admissible total degree (in + out) of a vertex.
  int min_vertex_degree = 4;
};

struct RequirementReport {
  /// r1: number of arcs equals options.arc_total.
  Requirement arc_total;
  /// r2: in-degree == out-degree everywhere and all k vertices connected.
  Requirement euler_circuit;
  /// r3: some directed 3-cycle exists.
  Requirement directed_triangle;
  /// r4: row-sum vector equals column-sum vector.
  Requirement balanced_sums;
  /// r5: every total degree is even and >= options.min_vertex_degree.
  Requirement vertex_degrees;
  /// Alternative reading of r3: the underlying simple graph has girth 3.
  bool girth_three = false;
  /// How r5 was read, recorded with every report.
  std::string vertex_degree_reading;

  bool passed() const {
    return arc_total.passed && euler_circuit.passed &&
           directed_triangle.passed && balanced_sums.passed &&
           vertex_degrees.passed;
  }
};

RequirementReport check_r_requirements(const AbstractDigraph& d,
                                       const RequirementOptions& options = {});

struct RCandidateScan {
  int k = 0;
  /// Zero-diagonal 0/1 matrices of order k with the requested arc total.
  std::size_t scanned = 0;
  /// Of those, how many pass every requirement.
  std::size_t passing = 0;
  /// Passing matrices, one per isomorphism class, in matrix order.
  std::vector<AbstractDigraph> candidates;
};

/// Exhaustive scan for 1 <= k <= 4; throws RangeError otherwise.
RCandidateScan scan_r_candidates(int k, const RequirementOptions& options = {});

std::vector<AbstractDigraph> enumerate_r_candidates(
    int k, const RequirementOptions& options = {});

struct SymmetricP4Census {
  /// All symmetric zero-diagonal 4x4 matrices with three units above the
  /// diagonal, in lexicographic order of the chosen upper cells.
  std::vector<AdjacencyMatrix> matrices;
  /// Isomorphism classes as 1-based indices into `matrices`.
  std::vector<std::vector<int>> classes;
  std::vector<std::string> class_names;
  /// 1-based indices of the matrices whose graph contains a triangle.
  std::vector<int> with_triangle;
  /// Mode count quoted by the reference analysis; kept for comparison.
  int reference_mode_count = 5;
};

SymmetricP4Census enumerate_symmetric_p4();

struct AsymmetricP4Scan {
  /// Zero-diagonal 0/1 matrices of order 4 (2^12).
  std::size_t scanned = 0;
  /// Total 6, every row sum and column sum in {1, 2}.
  std::vector<AdjacencyMatrix> constrained;
  /// Distinct row-sum vectors (and column-sum vectors) among `constrained`.
  std::size_t row_sum_variants = 0;
  std::size_t column_sum_variants = 0;
  /// Distinct (row vector, column vector) combinations that occur.
  std::size_t realized_variant_pairs = 0;
  /// Unordered pairs of variants with repetition, v * (v + 1) / 2.
  std::size_t unordered_variant_pairs = 0;
  /// Members of `constrained` with no two opposite arcs.
  std::size_t antisymmetric = 0;
  /// Matrices whose termwise sums row_i + col_i form {4,4,4,4},
  /// {4,4,4,2} and {4,4,4,0} respectively.
  std::array<std::size_t, 3> condition_hits{};
  /// Matrices meeting at least one condition.
  std::size_t satisfying = 0;
  /// Variant bound quoted by the reference analysis.
  int reference_variant_bound = 21;
};

AsymmetricP4Scan enumerate_asymmetric_p4();

/// Per-digraph figures: largest total degree, chromatic number of the
/// underlying simple graph, exact chromatic class of the arc multigraph
/// (arcs conflict when they share an endpoint) and floor(3 * degree / 2).
struct RFigures {
  int max_degree = 0;
  int gamma = 0;
  int chi = 0;
  int shannon = 0;
};

RFigures r_figures(const AbstractDigraph& d);

/// Doubled complete graph on k vertices: every off-diagonal entry is 1.
AbstractDigraph doubled_complete(int k);
/// Each edge of g replaced by two opposite arcs.
AbstractDigraph doubled(const UndirectedGraph& g);

}  // namespace conjtri
