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

#include "conjtri/scan.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <filesystem>
#include <functional>
#include <set>
#include <thread>

#include "conjtri/errors.hpp"
#include "conjtri/graph_io.hpp"
#include "conjtri/pairs.hpp"

namespace conjtri {

std::string to_string(Hypothesis h) {
  switch (h) {
    case Hypothesis::kH10: return "H10";
    case Hypothesis::kH11: return "H11";
    case Hypothesis::kH12: return "H12";
    case Hypothesis::kH13: return "H13";
  }
  return "?";
}

Hypothesis parse_hypothesis(const std::string& name) {
  std::string up;
  for (char c : name) up += static_cast<char>(std::toupper(c));
  for (Hypothesis h : kAllHypotheses)
    if (to_string(h) == up) return h;
  throw RangeError("unknown hypothesis '" + name + "'");
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kPass: return "pass";
    case Verdict::kFail: return "fail";
    case Verdict::kIndeterminate: return "indeterminate";
    case Verdict::kNotApplicable: return "not_applicable";
  }
  return "?";
}

void ScanConfig::check() const {
  if (time_budget_ms <= 0) throw RangeError("time budget must be positive");
  if (jobs <= 0) throw RangeError("job count must be positive");
  if (max_n <= 0) throw RangeError("solver cap must be positive");
  if (hypotheses.empty()) throw RangeError("no hypotheses selected");
  if (files.empty() && recipe.count < 0)
    throw RangeError("corpus size must be non-negative");
}

bool InstanceRecord::is_counterexample() const {
  return valid && std::any_of(results.begin(), results.end(), [](auto& kv) {
           return kv.second.verdict == Verdict::kFail;
         });
}

namespace {

// Exhaustive assignment searches used to double-check failures on small
// instances; deliberately independent of the DSATUR solver.

bool for_each_assignment(int n, int k,
                         const std::function<bool(const std::vector<int>&)>& f) {
  std::vector<int> c(n, 0);
  while (true) {
    if (f(c)) return true;
    int i = 0;
    while (i < n && ++c[i] == k) c[i++] = 0;
    if (i == n) return false;
  }
}

bool proper(const UndirectedGraph& g, const std::vector<int>& c) {
  return std::none_of(g.edges().begin(), g.edges().end(),
                      [&](const Edge& e) { return c[e.u] == c[e.v]; });
}

bool oracle_three_colorable(const UndirectedGraph& g) {
  return for_each_assignment(g.vertex_count(), 3, [&](const auto& c) {
    return proper(g, c);
  });
}

bool oracle_edge_colorable(const UndirectedGraph& g, int k) {
  const int m = g.edge_count();
  std::vector<int> c(m, -1);
  std::function<bool(int)> place = [&](int i) {
    if (i == m) return true;
    const Edge& e = g.edges()[i];
    for (int col = 0; col < k; ++col) {
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) {
        const Edge& f = g.edges()[j];
        if (c[j] == col && (f.has(e.u) || f.has(e.v))) ok = false;
      }
      if (!ok) continue;
      c[i] = col;
      if (place(i + 1)) return true;
    }
    c[i] = -1;
    return false;
  };
  return place(0);
}

bool oracle_edge_proper_pairs(const OrientedConjugated& oh) {
  const auto& g = oh.base.graph();
  const Digraph& d = oh.arcs;
  return for_each_assignment(g.vertex_count(), 3, [&](const auto& c) {
    if (!proper(g, c)) return false;
    for (Vertex v = 0; v < d.vertex_count(); ++v) {
      std::set<std::pair<int, int>> pairs;
      std::size_t around = 0;
      for (EdgeId a : d.out_arcs(v)) {
        pairs.emplace(c[d.arc(a).tail], c[d.arc(a).head]);
        ++around;
      }
      for (EdgeId a : d.in_arcs(v)) {
        pairs.emplace(c[d.arc(a).tail], c[d.arc(a).head]);
        ++around;
      }
      if (pairs.size() != around) return false;
    }
    return true;
  });
}

constexpr int kOracleVertexCap = 8;

HypothesisResult judge_bound(bool exact, int value, int lower, int upper,
                             int bound, const char* what) {
  HypothesisResult r;
  const std::string w = what;
  if (exact) {
    r.verdict = value <= bound ? Verdict::kPass : Verdict::kFail;
    r.reason = w + " = " + std::to_string(value);
  } else if (upper <= bound) {
    r.verdict = Verdict::kPass;
    r.reason = w + " <= " + std::to_string(upper) + " (witness)";
  } else if (lower > bound) {
    r.verdict = Verdict::kFail;
    r.reason = w + " >= " + std::to_string(lower);
  } else {
    r.verdict = Verdict::kIndeterminate;
    r.reason = "budget exhausted with " + std::to_string(lower) + " <= " + w +
               " <= " + std::to_string(upper);
  }
  return r;
}

std::string planarity_label(const ValidationReport& r) {
  switch (r.planarity.status) {
    case CheckStatus::kPassed: return "verified";
    case CheckStatus::kFailed: return "failed";
    case CheckStatus::kSkipped: return "unchecked";
  }
  return "unchecked";
}

NeighborCountSection neighbor_count_section() {
  NeighborCountSection s;
  s.reading =
      "center (4,4) edge, 6 distinct far endpoints, palette 3; each "
      "neighbor pair contains its shared endpoint's color and adjacent "
      "edges carry different pairs";
  s.free_orientation = count_neighbor_pair_colorings(canonical_interior_star());
  s.euler_balanced = count_neighbor_pair_colorings(
      make_star(4, 4, PairColor(0, 1), OrientationRule::kEulerBalanced));
  s.agrees = s.free_orientation == s.reference;
  return s;
}

}  // namespace

KColorResult find_edge_proper_pair_coloring(const OrientedConjugated& oh,
                                            const SolverLimits& limits) {
  const Digraph& d = oh.arcs;
  std::set<std::pair<int, int>> extra;
  for (const auto& [u, v] : oh.base.graph().edges()) extra.emplace(u, v);
  auto add_clique = [&](std::span<const EdgeId> arcs, bool heads) {
    for (std::size_t i = 0; i < arcs.size(); ++i)
      for (std::size_t j = i + 1; j < arcs.size(); ++j) {
        const Arc& a = d.arc(arcs[i]);
        const Arc& b = d.arc(arcs[j]);
        const Vertex x = heads ? a.head : a.tail;
        const Vertex y = heads ? b.head : b.tail;
        if (x != y) extra.emplace(std::min(x, y), std::max(x, y));
      }
  };
  for (Vertex v = 0; v < d.vertex_count(); ++v) {
    add_clique(d.out_arcs(v), true);
    add_clique(d.in_arcs(v), false);
  }
  std::vector<Edge> edges;
  for (const auto& [u, v] : extra) edges.push_back({u, v});
  return is_k_colorable(UndirectedGraph(d.vertex_count(), std::move(edges)), 3,
                        limits);
}

std::vector<ScanInstance> load_scan_instances(const ScanConfig& config) {
  std::vector<ScanInstance> out;
  if (!config.files.empty()) {
    for (const auto& path : config.files) {
      GraphFile f = read_graph_file(path);
      out.push_back({std::filesystem::path(path).stem().string(),
                     std::move(f.graph), std::move(f.rotation), path});
    }
    return out;
  }
  const auto& r = config.recipe;
  const std::string source =
      "recipe seed=" + std::to_string(r.seed) +
      " inserts=" + std::to_string(r.min_inserts) + ".." +
      std::to_string(r.max_inserts) +
      " subdivisions<=" + std::to_string(r.max_subdivisions) +
      " max_edges=" + std::to_string(r.max_edges);
  for (auto& inst : generate_corpus(r))
    out.push_back({inst.id, std::move(inst.graph), std::move(inst.rotation),
                   source});
  return out;
}

InstanceRecord scan_instance(const ScanInstance& instance,
                             const ScanConfig& config) {
  const auto start = Clock::now();
  InstanceRecord rec;
  rec.id = instance.id;
  rec.source = instance.source;
  rec.vertices = instance.graph.vertex_count();
  rec.edges = instance.graph.edge_count();
  rec.degree_histogram = degree_profile(instance.graph).histogram;

  auto validated = validate_conjugated(instance.graph, instance.rotation);
  const ValidationReport& vr =
      std::holds_alternative<ConjugatedTriangulation>(validated)
          ? std::get<ConjugatedTriangulation>(validated).report()
          : std::get<ValidationReport>(validated);
  rec.valid = vr.ok();
  rec.validation = rec.valid ? "ok" : describe_failures(vr);
  rec.planarity = planarity_label(vr);
  rec.triangle_count = vr.triangle_count;

  auto finish = [&] {
    rec.elapsed_ms =
        std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    return rec;
  };
  if (!rec.valid) {
    for (Hypothesis h : config.hypotheses)
      rec.results[h] = {Verdict::kNotApplicable,
                        "not a conjugated triangulation: " + rec.validation,
                        std::nullopt};
    return finish();
  }

  const auto& h = std::get<ConjugatedTriangulation>(validated);
  const UndirectedGraph& g = h.graph();
  SolverLimits limits =
      SolverLimits::with_budget(std::chrono::milliseconds(config.time_budget_ms));
  limits.max_vertices = config.max_n;
  limits.max_edges = config.max_n;
  rec.bounds = coloring_bounds(g);
  const bool small = g.vertex_count() <= kOracleVertexCap;
  auto wants = [&](Hypothesis x) {
    return std::find(config.hypotheses.begin(), config.hypotheses.end(), x) !=
           config.hypotheses.end();
  };
  auto oversized = [&](const SizeLimitError& e) {
    return HypothesisResult{Verdict::kIndeterminate, e.what(), std::nullopt};
  };

  const OrientedConjugated oh = canonical_orientation(h);

  if (wants(Hypothesis::kH10) || wants(Hypothesis::kH13)) {
    HypothesisResult r;
    try {
      rec.gamma = chromatic_number(g, limits);
      const auto& gm = *rec.gamma;
      r = judge_bound(gm.exact, gm.value, gm.lower_bound, gm.upper_bound, 3,
                      "gamma");
      if (r.verdict == Verdict::kFail && small)
        r.oracle_confirmed = !oracle_three_colorable(g);
      if (gm.exact && gm.value == 3 && gm.witness) {
        const auto induced = induce_edge_coloring(oh, *gm.witness);
        rec.witness_induced_proper = induced.edge_proper;
        rec.witness_pair_alphabet = induced.alphabet_size;
      }
    } catch (const SizeLimitError& e) {
      r = oversized(e);
    }
    for (Hypothesis x : {Hypothesis::kH10, Hypothesis::kH13})
      if (wants(x)) rec.results[x] = r;
  }

  if (wants(Hypothesis::kH11)) {
    HypothesisResult r;
    try {
      rec.chi = chromatic_class(g, limits);
      const auto& ch = *rec.chi;
      r = judge_bound(ch.exact, ch.value, ch.lower_bound, ch.upper_bound, 6,
                      "chi");
      if (r.verdict == Verdict::kFail && small)
        r.oracle_confirmed = !oracle_edge_colorable(g, 6);
    } catch (const SizeLimitError& e) {
      r = oversized(e);
    }
    rec.results[Hypothesis::kH11] = r;
  }

  if (wants(Hypothesis::kH12)) {
    HypothesisResult r;
    try {
      const KColorResult k = find_edge_proper_pair_coloring(oh, limits);
      rec.h12_stats = k.stats;
      switch (k.status) {
        case SearchStatus::kFound:
          rec.h12_witness = k.coloring;
          r = {Verdict::kPass,
               "3-coloring with edge-proper induced pairs found", std::nullopt};
          break;
        case SearchStatus::kExhausted:
          r = {Verdict::kFail,
               "no proper 3-coloring induces an edge-proper pair coloring",
               std::nullopt};
          if (small) r.oracle_confirmed = !oracle_edge_proper_pairs(oh);
          break;
        case SearchStatus::kTimedOut:
          r = {Verdict::kIndeterminate, "budget exhausted", std::nullopt};
          break;
      }
    } catch (const SizeLimitError& e) {
      r = oversized(e);
    }
    rec.results[Hypothesis::kH12] = r;
  }
  return finish();
}

ScanReport scan_instances(const std::vector<ScanInstance>& instances,
                          const ScanConfig& config) {
  config.check();
  ScanReport report;
  report.config = config;
  report.instances.resize(instances.size());

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < instances.size();)
      report.instances[i] = scan_instance(instances[i], config);
  };
  const int width = std::min<int>(config.jobs,
                                  std::max<std::size_t>(instances.size(), 1));
  std::vector<std::thread> pool;
  for (int t = 1; t < width; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  ScanSummary& s = report.summary;
  s.instances = instances.size();
  for (Hypothesis h : config.hypotheses)
    for (Verdict v : {Verdict::kPass, Verdict::kFail, Verdict::kIndeterminate,
                      Verdict::kNotApplicable})
      s.counts[h][v] = 0;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    InstanceRecord& rec = report.instances[i];
    if (!config.record_timings) rec.elapsed_ms = 0;
    if (!config.record_timings) {
      if (rec.gamma) rec.gamma->stats.elapsed_ms = 0;
      if (rec.chi) rec.chi->stats.elapsed_ms = 0;
      rec.h12_stats.elapsed_ms = 0;
    }
    if (rec.valid) ++s.valid;
    for (const auto& [h, r] : rec.results) ++s.counts[h][r.verdict];
    if (rec.valid && rec.triangle_count == 0 && rec.gamma &&
        rec.gamma->exact && rec.gamma->value == 2)
      s.triangle_free_bipartite.push_back(rec.id);
    if (rec.witness_induced_proper) {
      ++s.induced_checked;
      if (*rec.witness_induced_proper) ++s.induced_proper;
    }
    if (rec.is_counterexample()) {
      s.counterexamples.push_back(rec.id);
      if (!config.counterexample_dir.empty()) {
        std::vector<std::string> comments{"counterexample " + rec.id};
        for (const auto& [h, r] : rec.results)
          if (r.verdict == Verdict::kFail)
            comments.push_back(to_string(h) + " fail: " + r.reason);
        const auto path = std::filesystem::path(config.counterexample_dir) /
                          (rec.id + ".graph");
        write_graph_file(path, instances[i].graph, instances[i].rotation,
                         comments);
        rec.counterexample_file = path.string();
      }
    }
  }
  s.neighbor_count = neighbor_count_section();
  return report;
}

ScanReport run_hypothesis_scan(const ScanConfig& config) {
  config.check();
  ScanReport report = scan_instances(load_scan_instances(config), config);
  if (!config.output.empty())
    write_text_file(config.output, report_to_json(report) + "\n");
  return report;
}

}  // namespace conjtri
