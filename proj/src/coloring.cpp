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

#include "conjtri/coloring.hpp"

#include <algorithm>
#include <set>

#include "conjtri/construct.hpp"
#include "conjtri/errors.hpp"

namespace conjtri {

namespace {

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

class DsaturSearch {
 public:
  DsaturSearch(const UndirectedGraph& g, int k, const SolverLimits& limits)
      : g_(g),
        k_(k),
        deadline_(limits.deadline),
        color_(g.vertex_count(), -1),
        count_(g.vertex_count(), std::vector<int>(std::max(k, 1), 0)),
        sat_(g.vertex_count(), 0) {}

  KColorResult run() {
    const auto start = Clock::now();
    KColorResult result;
    const int n = g_.vertex_count();
    const auto clique = greedy_clique(g_);
    if (static_cast<int>(clique.size()) > k_ || (n > 0 && k_ < 1)) {
      result.status = SearchStatus::kExhausted;
    } else {
      for (std::size_t i = 0; i < clique.size(); ++i)
        assign(clique[i], static_cast<int>(i));
      used_ = static_cast<int>(clique.size());
      if (search(static_cast<int>(clique.size()))) {
        result.status = SearchStatus::kFound;
        result.coloring = VertexColoring{color_, k_};
      } else {
        result.status =
            timed_out_ ? SearchStatus::kTimedOut : SearchStatus::kExhausted;
      }
    }
    result.stats.nodes = nodes_;
    result.stats.elapsed_ms = ms_since(start);
    return result;
  }

 private:
  void assign(Vertex v, int c) {
    color_[v] = c;
    for (Vertex w : g_.neighbors(v))
      if (count_[w][c]++ == 0) ++sat_[w];
  }

  void unassign(Vertex v, int c) {
    color_[v] = -1;
    for (Vertex w : g_.neighbors(v))
      if (--count_[w][c] == 0) --sat_[w];
  }

  // Highest saturation, then most uncolored neighbors, then lowest id.
  Vertex pick() const {
    Vertex best = -1;
    int best_sat = -1, best_deg = -1;
    for (Vertex v = 0; v < g_.vertex_count(); ++v) {
      if (color_[v] >= 0) continue;
      int deg = 0;
      for (Vertex w : g_.neighbors(v)) deg += color_[w] < 0;
      if (sat_[v] > best_sat || (sat_[v] == best_sat && deg > best_deg)) {
        best = v;
        best_sat = sat_[v];
        best_deg = deg;
      }
    }
    return best;
  }

  bool search(int colored) {
    if (colored == g_.vertex_count()) return true;
    ++nodes_;
    if (deadline_ && (nodes_ & 1023) == 0 && Clock::now() > *deadline_) {
      timed_out_ = true;
      return false;
    }
    const Vertex v = pick();
    const int top = std::min(used_, k_ - 1);
    for (int c = 0; c <= top; ++c) {
      if (count_[v][c] != 0) continue;
      const int saved = used_;
      used_ = std::max(used_, c + 1);
      assign(v, c);
      if (search(colored + 1)) return true;
      unassign(v, c);
      used_ = saved;
      if (timed_out_) return false;
    }
    return false;
  }

  const UndirectedGraph& g_;
  const int k_;
  const std::optional<Clock::time_point> deadline_;
  std::vector<int> color_;
  std::vector<std::vector<int>> count_;
  std::vector<int> sat_;
  int used_ = 0;
  std::uint64_t nodes_ = 0;
  bool timed_out_ = false;
};

ChromaticResult solve_chromatic(const UndirectedGraph& g,
                                const SolverLimits& limits, int extra_lower) {
  const auto start = Clock::now();
  ChromaticResult r;
  const int n = g.vertex_count();
  if (n == 0) {
    r.exact = true;
    r.witness = VertexColoring{{}, 0};
    return r;
  }
  auto greedy = greedy_coloring(g);
  r.upper_bound = greedy.palette;
  r.lower_bound = std::max(static_cast<int>(greedy_clique(g).size()),
                           std::min(extra_lower, r.upper_bound));
  r.witness = std::move(greedy);
  for (int k = r.lower_bound; k < r.upper_bound; ++k) {
    auto attempt = is_k_colorable(g, k, limits);
    r.stats += attempt.stats;
    if (attempt.status == SearchStatus::kFound) {
      r.exact = true;
      r.value = r.upper_bound = k;
      r.witness = std::move(attempt.coloring);
      r.stats.elapsed_ms = ms_since(start);
      return r;
    }
    if (attempt.status == SearchStatus::kTimedOut) {
      r.lower_bound = k;
      r.stats.elapsed_ms = ms_since(start);
      return r;
    }
    r.lower_bound = k + 1;
  }
  r.exact = true;
  r.value = r.upper_bound;
  r.stats.elapsed_ms = ms_since(start);
  return r;
}

}  // namespace

KColorResult is_k_colorable(const UndirectedGraph& g, int k,
                            const SolverLimits& limits) {
  if (k < 1) throw RangeError("k must be positive");
  if (g.vertex_count() > limits.max_vertices)
    throw SizeLimitError("vertex coloring", g.vertex_count(),
                         limits.max_vertices);
  return DsaturSearch(g, k, limits).run();
}

ChromaticResult chromatic_number(const UndirectedGraph& g,
                                 const SolverLimits& limits) {
  if (g.vertex_count() > limits.max_vertices)
    throw SizeLimitError("vertex coloring", g.vertex_count(),
                         limits.max_vertices);
  return solve_chromatic(g, limits, 0);
}

ChromaticClassResult chromatic_class(const UndirectedGraph& g,
                                     const SolverLimits& limits) {
  if (g.edge_count() > limits.max_edges)
    throw SizeLimitError("edge coloring", g.edge_count(), limits.max_edges);

  int matching_bound = 0;
  for (const auto& block : connected_components(g)) {
    const int half = static_cast<int>(block.size()) / 2;
    if (half == 0) continue;
    int twice = 0;
    for (Vertex v : block) twice += g.degree(v);
    const int edges = twice / 2;
    matching_bound = std::max(matching_bound, (edges + half - 1) / half);
  }

  SolverLimits line_limits = limits;
  line_limits.max_vertices = limits.max_edges;
  const auto lg = line_graph(g);
  const auto vr = solve_chromatic(lg.graph, line_limits, matching_bound);

  ChromaticClassResult r;
  r.exact = vr.exact;
  r.value = vr.value;
  r.lower_bound = vr.lower_bound;
  r.upper_bound = vr.upper_bound;
  r.stats = vr.stats;
  if (vr.witness) {
    EdgeColoring ec;
    ec.palette = vr.witness->palette;
    ec.colors.resize(g.edge_count());
    for (Vertex q = 0; q < lg.graph.vertex_count(); ++q)
      ec.colors[lg.edge_of_vertex[q] - 1] = vr.witness->colors[q];
    r.witness = std::move(ec);
  }
  return r;
}

std::vector<Vertex> greedy_clique(const UndirectedGraph& g) {
  const int n = g.vertex_count();
  std::vector<Vertex> by_degree(n);
  for (int i = 0; i < n; ++i) by_degree[i] = i;
  std::stable_sort(by_degree.begin(), by_degree.end(), [&](Vertex a, Vertex b) {
    return g.degree(a) > g.degree(b);
  });
  std::vector<Vertex> best;
  for (Vertex s : by_degree) {
    if (g.degree(s) + 1 <= static_cast<int>(best.size())) break;
    std::vector<Vertex> clique{s};
    for (Vertex w : by_degree) {
      if (w == s || !g.adjacent(s, w)) continue;
      if (std::all_of(clique.begin(), clique.end(),
                      [&](Vertex c) { return g.adjacent(c, w); }))
        clique.push_back(w);
    }
    if (clique.size() > best.size()) best = std::move(clique);
  }
  std::sort(best.begin(), best.end());
  return best;
}

VertexColoring greedy_coloring(const UndirectedGraph& g) {
  const int n = g.vertex_count();
  std::vector<int> deg(n);
  std::vector<bool> removed(n, false);
  for (Vertex v = 0; v < n; ++v) deg[v] = g.degree(v);
  std::vector<Vertex> order;
  order.reserve(n);
  for (int i = 0; i < n; ++i) {
    Vertex best = -1;
    for (Vertex v = 0; v < n; ++v)
      if (!removed[v] && (best < 0 || deg[v] < deg[best])) best = v;
    removed[best] = true;
    order.push_back(best);
    for (Vertex w : g.neighbors(best))
      if (!removed[w]) --deg[w];
  }
  VertexColoring c{std::vector<int>(n, -1), 0};
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    std::vector<bool> taken(g.degree(*it) + 1, false);
    for (Vertex w : g.neighbors(*it))
      if (c.colors[w] >= 0 && c.colors[w] < static_cast<int>(taken.size()))
        taken[c.colors[w]] = true;
    int color = 0;
    while (taken[color]) ++color;
    c.colors[*it] = color;
    c.palette = std::max(c.palette, color + 1);
  }
  return c;
}

ColoringBounds coloring_bounds(const UndirectedGraph& g) {
  ColoringBounds b;
  if (g.vertex_count() == 0) return b;
  b.max_degree = degree_profile(g).max_degree;
  b.clique = static_cast<int>(greedy_clique(g).size());
  const bool exceptional =
      contains_complete_component(g, b.max_degree + 1) ||
      (b.max_degree == 2 && contains_odd_cycle_component(g));
  b.brooks = b.max_degree + (exceptional ? 1 : 0);
  b.shannon = 3 * b.max_degree / 2;
  b.greedy = greedy_coloring(g).palette;
  return b;
}

std::vector<EdgeId> verify_vertex_coloring(const UndirectedGraph& g,
                                           const VertexColoring& c) {
  if (static_cast<int>(c.colors.size()) != g.vertex_count())
    throw PartialColoringError(
        "vertex coloring has " + std::to_string(c.colors.size()) +
            " entries for " + std::to_string(g.vertex_count()) + " vertices",
        {});
  std::vector<int> missing;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (c.colors[v] < 0) missing.push_back(v);
  if (!missing.empty())
    throw PartialColoringError("vertex coloring is partial", missing);
  std::vector<EdgeId> bad;
  for (EdgeId e = 1; e <= g.edge_count(); ++e)
    if (c.colors[g.edge(e).u] == c.colors[g.edge(e).v]) bad.push_back(e);
  return bad;
}

std::vector<std::pair<EdgeId, EdgeId>> verify_edge_coloring(
    const UndirectedGraph& g, const EdgeColoring& c) {
  if (static_cast<int>(c.colors.size()) != g.edge_count())
    throw PartialColoringError(
        "edge coloring has " + std::to_string(c.colors.size()) +
            " entries for " + std::to_string(g.edge_count()) + " edges",
        {});
  std::vector<int> missing;
  for (EdgeId e = 1; e <= g.edge_count(); ++e)
    if (c.colors[e - 1] < 0) missing.push_back(e);
  if (!missing.empty())
    throw PartialColoringError("edge coloring is partial", missing);
  std::set<std::pair<EdgeId, EdgeId>> bad;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const auto inc = g.incident(v);
    for (std::size_t i = 0; i < inc.size(); ++i)
      for (std::size_t j = i + 1; j < inc.size(); ++j)
        if (c.colors[inc[i] - 1] == c.colors[inc[j] - 1])
          bad.emplace(std::min(inc[i], inc[j]), std::max(inc[i], inc[j]));
  }
  return {bad.begin(), bad.end()};
}

int colors_used(const std::vector<int>& colors) {
  std::set<int> distinct;
  for (int c : colors)
    if (c >= 0) distinct.insert(c);
  return static_cast<int>(distinct.size());
}

ColoringReport coloring_report(const UndirectedGraph& g,
                               const SolverLimits& limits) {
  return {chromatic_number(g, limits), chromatic_class(g, limits),
          coloring_bounds(g)};
}

}  // namespace conjtri
