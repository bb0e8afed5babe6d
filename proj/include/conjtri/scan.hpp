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

// Corpus scan for the four coloring hypotheses:
//   H10, H13  gamma(H) <= 3
//   H11       chi(H) <= 6
//   H12       some proper 3-coloring of H induces, along the canonical Euler
//             orientation, a pair coloring that is edge-proper
// Timeouts give kIndeterminate, never kPass or kFail.

#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "conjtri/coloring.hpp"
#include "conjtri/construct.hpp"

namespace conjtri {

enum class Hypothesis { kH10, kH11, kH12, kH13 };
inline constexpr std::array<Hypothesis, 4> kAllHypotheses{
    Hypothesis::kH10, Hypothesis::kH11, Hypothesis::kH12, Hypothesis::kH13};

std::string to_string(Hypothesis h);
/// Accepts "H10".."H13" (case-insensitive). Throws RangeError otherwise.
Hypothesis parse_hypothesis(const std::string& name);

enum class Verdict { kPass, kFail, kIndeterminate, kNotApplicable };
std::string to_string(Verdict v);

/// Name of the H12 reading carried in every report.
inline constexpr const char* kH12Reading =
    "induced-from-global-3-coloring/canonical-euler-orientation";

struct ScanInstance {
  std::string id;
  UndirectedGraph graph;
  std::optional<RotationSystem> rotation;
  /// File path or generator recipe description.
  std::string source;
};

struct ScanConfig {
  /// Graph files; when empty the recipe is used.
  std::vector<std::string> files;
  CorpusRecipe recipe;
  std::vector<Hypothesis> hypotheses{kAllHypotheses.begin(),
                                     kAllHypotheses.end()};
  /// Per-instance budget shared by every solver call on that instance.
  int time_budget_ms = 60000;
  int jobs = 1;
  /// Solver cap on vertices (and edges for the chromatic class).
  int max_n = 60;
  /// Report path; empty skips writing.
  std::string output;
  /// Where counterexample files go; empty skips writing.
  std::string counterexample_dir;
  /// Timings are the only non-deterministic report fields.
  bool record_timings = true;

  /// Throws RangeError on a non-positive budget, job count or cap.
  void check() const;
};

struct HypothesisResult {
  Verdict verdict = Verdict::kNotApplicable;
  std::string reason;
  /// Set on kFail for instances with at most 8 vertices: whether an
  /// exhaustive assignment search agrees that no witness exists.
  std::optional<bool> oracle_confirmed;
};

struct InstanceRecord {
  std::string id;
  std::string source;
  int vertices = 0;
  int edges = 0;
  std::map<int, int> degree_histogram;
  bool valid = false;
  std::string validation;
  /// "verified", "failed" or "unchecked".
  std::string planarity;
  int triangle_count = 0;

  std::optional<ChromaticResult> gamma;
  std::optional<ChromaticClassResult> chi;
  ColoringBounds bounds;
  /// Proper 3-coloring with an edge-proper induced pair coloring.
  std::optional<VertexColoring> h12_witness;
  SearchStats h12_stats;
  /// For a gamma = 3 witness: whether its induced pair coloring is
  /// edge-proper, and how many pair colors it uses.
  std::optional<bool> witness_induced_proper;
  std::optional<int> witness_pair_alphabet;

  std::map<Hypothesis, HypothesisResult> results;
  double elapsed_ms = 0;
  std::optional<std::string> counterexample_file;

  bool is_counterexample() const;
};

struct NeighborCountSection {
  std::string reading;
  std::size_t free_orientation = 0;
  std::size_t euler_balanced = 0;
  std::size_t reference = 16;
  bool agrees = false;
};

struct ScanSummary {
  std::size_t instances = 0;
  std::size_t valid = 0;
  std::map<Hypothesis, std::map<Verdict, std::size_t>> counts;
  std::vector<std::string> counterexamples;
  /// Valid, triangle-free instances with gamma == 2.
  std::vector<std::string> triangle_free_bipartite;
  std::size_t induced_checked = 0;
  std::size_t induced_proper = 0;
  NeighborCountSection neighbor_count;
};

struct ScanReport {
  ScanConfig config;
  std::vector<InstanceRecord> instances;
  ScanSummary summary;
};

/// Loads the corpus named by the config. Throws IoError or FormatError.
std::vector<ScanInstance> load_scan_instances(const ScanConfig& config);

/// Solves and judges one instance under the given budget.
InstanceRecord scan_instance(const ScanInstance& instance,
                             const ScanConfig& config);

/// Scans `instances` with config.jobs workers; records keep input order.
/// Writes counterexample files when configured, but not the report.
ScanReport scan_instances(const std::vector<ScanInstance>& instances,
                          const ScanConfig& config);

/// load + scan + write report (when config.output is set).
ScanReport run_hypothesis_scan(const ScanConfig& config);

/// Proper 3-coloring of h whose induced pair coloring along `oh` is
/// edge-proper, found by 3-coloring h plus edges between every two
/// out-neighbors and every two in-neighbors of a vertex.
KColorResult find_edge_proper_pair_coloring(const OrientedConjugated& oh,
                                            const SolverLimits& limits = {});

/// JSON document with keys summary, instances, config, version.
std::string report_to_json(const ScanReport& report, int indent = 2);

inline constexpr const char* kReportVersion = "1.0.0";

}  // namespace conjtri
