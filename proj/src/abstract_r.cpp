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

#include "conjtri/abstract_r.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

#include "conjtri/coloring.hpp"
#include "conjtri/errors.hpp"

namespace conjtri {

AbstractDigraph::AbstractDigraph(AdjacencyMatrix matrix)
    : matrix_(std::move(matrix)), digraph_(matrix_.to_digraph()) {}

AbstractDigraph::AbstractDigraph(const Digraph& digraph)
    : matrix_(AdjacencyMatrix::from_digraph(digraph)), digraph_(digraph) {}

namespace {

std::string vec(const std::vector<int>& xs) {
  std::string s = "(";
  for (std::size_t i = 0; i < xs.size(); ++i)
    s += (i ? ";" : "") + std::to_string(xs[i]);
  return s + ")";
}

}  // namespace

RequirementReport check_r_requirements(const AbstractDigraph& d,
                                       const RequirementOptions& options) {
  RequirementReport r;
  const auto& m = d.matrix();
  const int k = d.k();
  const auto rows = m.row_sums();
  const auto cols = m.column_sums();

  const int total = m.total();
  r.arc_total.passed = total == options.arc_total;
  r.arc_total.evidence = "arc total " + std::to_string(total) + ", required " +
                         std::to_string(options.arc_total);

  {
    std::string bad;
    for (int v = 0; v < k; ++v)
      if (rows[v] != cols[v] && bad.empty())
        bad = "vertex " + std::to_string(v) + ": out " +
              std::to_string(rows[v]) + ", in " + std::to_string(cols[v]);
    const bool connected = is_connected(d.digraph().underlying());
    r.euler_circuit.passed = bad.empty() && connected && total > 0;
    if (!bad.empty())
      r.euler_circuit.evidence = bad;
    else if (!connected)
      r.euler_circuit.evidence = "vertices not connected";
    else if (total == 0)
      r.euler_circuit.evidence = "no arcs";
    else
      r.euler_circuit.evidence = "balanced and connected";
  }

  r.directed_triangle.evidence = "no directed 3-cycle";
  for (int a = 0; a < k && !r.directed_triangle.passed; ++a)
    for (int b = 0; b < k && !r.directed_triangle.passed; ++b)
      for (int c = 0; c < k; ++c)
        if (a != b && b != c && a != c && m.at(a, b) && m.at(b, c) &&
            m.at(c, a)) {
          r.directed_triangle.passed = true;
          r.directed_triangle.evidence = "directed 3-cycle " +
                                         std::to_string(a) + "->" +
                                         std::to_string(b) + "->" +
                                         std::to_string(c);
          break;
        }
  r.girth_three = !find_triangles(d.digraph().underlying()).empty();

  r.balanced_sums.passed = rows == cols;
  r.balanced_sums.evidence = "row sums " + vec(rows) + ", column sums " +
                             vec(cols);

  r.vertex_degree_reading =
      "every total degree (in + out) is even and at least " +
      std::to_string(options.min_vertex_degree);
  r.vertex_degrees.passed = true;
  r.vertex_degrees.evidence = "all degrees admissible";
  for (int v = 0; v < k; ++v) {
    const int deg = rows[v] + cols[v];
    if (deg % 2 != 0 || deg < options.min_vertex_degree) {
      r.vertex_degrees.passed = false;
      r.vertex_degrees.evidence =
          "vertex " + std::to_string(v) + " has total degree " +
          std::to_string(deg);
      break;
    }
  }
  return r;
}

RCandidateScan scan_r_candidates(int k, const RequirementOptions& options) {
  if (k < 1 || k > 4) throw RangeError("k must be in 1..4");
  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (i != j) cells.emplace_back(i, j);

  std::vector<AdjacencyMatrix> passing;
  RCandidateScan scan;
  scan.k = k;
  const unsigned limit = 1u << cells.size();
  for (unsigned mask = 0; mask < limit; ++mask) {
    if (std::popcount(mask) != options.arc_total) continue;
    AdjacencyMatrix m(k);
    for (std::size_t c = 0; c < cells.size(); ++c)
      if (mask >> c & 1u) m.set(cells[c].first, cells[c].second, true);
    ++scan.scanned;
    if (check_r_requirements(AbstractDigraph(m), options).passed())
      passing.push_back(std::move(m));
  }
  std::sort(passing.begin(), passing.end());
  scan.passing = passing.size();
  for (auto& m : passing) {
    AbstractDigraph d(std::move(m));
    const bool seen = std::any_of(
        scan.candidates.begin(), scan.candidates.end(),
        [&](const AbstractDigraph& c) {
          return are_isomorphic(c.digraph(), d.digraph()).has_value();
        });
    if (!seen) scan.candidates.push_back(std::move(d));
  }
  return scan;
}

std::vector<AbstractDigraph> enumerate_r_candidates(
    int k, const RequirementOptions& options) {
  return scan_r_candidates(k, options).candidates;
}

SymmetricP4Census enumerate_symmetric_p4() {
  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) cells.emplace_back(i, j);

  SymmetricP4Census census;
  std::vector<UndirectedGraph> graphs;
  for (int a = 0; a < 6; ++a)
    for (int b = a + 1; b < 6; ++b)
      for (int c = b + 1; c < 6; ++c) {
        AdjacencyMatrix m(4);
        for (int cell : {a, b, c}) {
          m.set(cells[cell].first, cells[cell].second, true);
          m.set(cells[cell].second, cells[cell].first, true);
        }
        graphs.push_back(m.to_digraph().underlying());
        census.matrices.push_back(std::move(m));
      }

  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const int index = static_cast<int>(i) + 1;
    if (!find_triangles(graphs[i]).empty())
      census.with_triangle.push_back(index);
    auto it = std::find_if(
        census.classes.begin(), census.classes.end(),
        [&](const std::vector<int>& cls) {
          return are_isomorphic(graphs[cls.front() - 1], graphs[i]).has_value();
        });
    if (it != census.classes.end())
      it->push_back(index);
    else
      census.classes.push_back({index});
  }

  const std::vector<std::pair<std::string, UndirectedGraph>> named{
      {"triangle+K1", disjoint_union(graphs::complete(3), graphs::empty(1))},
      {"path P4", graphs::path(4)},
      {"star K1,3", graphs::star(3)}};
  for (const auto& cls : census.classes) {
    std::string name = "class " + std::to_string(census.class_names.size() + 1);
    for (const auto& [label, g] : named)
      if (are_isomorphic(g, graphs[cls.front() - 1])) name = label;
    census.class_names.push_back(name);
  }
  return census;
}

AsymmetricP4Scan enumerate_asymmetric_p4() {
  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (i != j) cells.emplace_back(i, j);

  AsymmetricP4Scan scan;
  std::set<std::vector<int>> row_variants, col_variants;
  std::set<std::pair<std::vector<int>, std::vector<int>>> realized;
  const std::array<std::multiset<int>, 3> targets{
      std::multiset<int>{4, 4, 4, 4}, std::multiset<int>{4, 4, 4, 2},
      std::multiset<int>{4, 4, 4, 0}};
  auto in_range = [](const std::vector<int>& xs) {
    return std::all_of(xs.begin(), xs.end(),
                       [](int x) { return x == 1 || x == 2; });
  };

  for (unsigned mask = 0; mask < (1u << cells.size()); ++mask) {
    ++scan.scanned;
    if (std::popcount(mask) != 6) continue;
    AdjacencyMatrix m(4);
    for (std::size_t c = 0; c < cells.size(); ++c)
      if (mask >> c & 1u) m.set(cells[c].first, cells[c].second, true);
    const auto rows = m.row_sums();
    const auto cols = m.column_sums();
    if (!in_range(rows) || !in_range(cols)) continue;

    row_variants.insert(rows);
    col_variants.insert(cols);
    realized.emplace(rows, cols);
    bool opposite = false;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) opposite |= m.at(i, j) && m.at(j, i);
    if (!opposite) ++scan.antisymmetric;

    std::multiset<int> termwise;
    for (int i = 0; i < 4; ++i) termwise.insert(rows[i] + cols[i]);
    bool any = false;
    for (std::size_t t = 0; t < targets.size(); ++t)
      if (termwise == targets[t]) {
        ++scan.condition_hits[t];
        any = true;
      }
    if (any) ++scan.satisfying;
    scan.constrained.push_back(std::move(m));
  }
  std::sort(scan.constrained.begin(), scan.constrained.end());
  scan.row_sum_variants = row_variants.size();
  scan.column_sum_variants = col_variants.size();
  scan.realized_variant_pairs = realized.size();
  scan.unordered_variant_pairs =
      scan.row_sum_variants * (scan.row_sum_variants + 1) / 2;
  return scan;
}

RFigures r_figures(const AbstractDigraph& d) {
  RFigures f;
  const auto rows = d.matrix().row_sums();
  const auto cols = d.matrix().column_sums();
  for (int v = 0; v < d.k(); ++v)
    f.max_degree = std::max(f.max_degree, rows[v] + cols[v]);
  f.gamma = chromatic_number(d.digraph().underlying()).value;

  // Arc conflict graph: arcs are vertices, adjacent when they share an
  // endpoint. Its chromatic number is the chromatic class of the multigraph.
  const auto& arcs = d.digraph().arcs();
  std::vector<Edge> conflicts;
  for (std::size_t a = 0; a < arcs.size(); ++a)
    for (std::size_t b = a + 1; b < arcs.size(); ++b) {
      const Arc& x = arcs[a];
      const Arc& y = arcs[b];
      if (x.tail == y.tail || x.tail == y.head || x.head == y.tail ||
          x.head == y.head)
        conflicts.push_back({static_cast<int>(a), static_cast<int>(b)});
    }
  f.chi = chromatic_number(
              UndirectedGraph(static_cast<int>(arcs.size()), conflicts))
              .value;
  f.shannon = 3 * f.max_degree / 2;
  return f;
}

AbstractDigraph doubled_complete(int k) {
  AdjacencyMatrix m(k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (i != j) m.set(i, j, true);
  return AbstractDigraph(std::move(m));
}

AbstractDigraph doubled(const UndirectedGraph& g) {
  AdjacencyMatrix m(std::max(g.vertex_count(), 1));
  for (const auto& [u, v] : g.edges()) {
    m.set(u, v, true);
    m.set(v, u, true);
  }
  return AbstractDigraph(std::move(m));
}

}  // namespace conjtri
