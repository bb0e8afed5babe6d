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

#include <string>

#include "conjtri/scan.hpp"
#include "json.hpp"

namespace conjtri {

namespace {

using nlohmann::json;

json optional_int_list(const std::optional<std::vector<int>>& xs) {
  return xs ? json(*xs) : json(nullptr);
}

json gamma_json(const std::optional<ChromaticResult>& r) {
  if (!r) return nullptr;
  return {{"exact", r->exact},
          {"value", r->exact ? json(r->value) : json(nullptr)},
          {"lower_bound", r->lower_bound},
          {"upper_bound", r->upper_bound},
          {"nodes", r->stats.nodes},
          {"elapsed_ms", r->stats.elapsed_ms}};
}

json chi_json(const std::optional<ChromaticClassResult>& r) {
  if (!r) return nullptr;
  return {{"exact", r->exact},
          {"value", r->exact ? json(r->value) : json(nullptr)},
          {"lower_bound", r->lower_bound},
          {"upper_bound", r->upper_bound},
          {"nodes", r->stats.nodes},
          {"elapsed_ms", r->stats.elapsed_ms}};
}

json instance_json(const InstanceRecord& rec) {
  json hist = json::object();
  for (const auto& [deg, n] : rec.degree_histogram)
    hist[std::to_string(deg)] = n;

  json verdicts = json::object();
  for (const auto& [h, r] : rec.results) {
    verdicts[to_string(h)] = {
        {"verdict", to_string(r.verdict)},
        {"reason", r.reason},
        {"oracle_confirmed",
         r.oracle_confirmed ? json(*r.oracle_confirmed) : json(nullptr)}};
  }

  std::optional<std::vector<int>> vertex_witness, edge_witness, h12_witness;
  if (rec.gamma && rec.gamma->witness) vertex_witness = rec.gamma->witness->colors;
  if (rec.chi && rec.chi->witness) edge_witness = rec.chi->witness->colors;
  if (rec.h12_witness) h12_witness = rec.h12_witness->colors;

  json induced = nullptr;
  if (rec.witness_induced_proper)
    induced = {{"edge_proper", *rec.witness_induced_proper},
               {"pair_alphabet", *rec.witness_pair_alphabet}};

  return {
      {"id", rec.id},
      {"source", rec.source},
      {"vertices", rec.vertices},
      {"edges", rec.edges},
      {"degree_histogram", hist},
      {"valid", rec.valid},
      {"validation", rec.validation},
      {"planarity", rec.planarity},
      {"triangle_count", rec.triangle_count},
      {"gamma", gamma_json(rec.gamma)},
      {"chi", chi_json(rec.chi)},
      {"bounds",
       rec.valid ? json{{"max_degree", rec.bounds.max_degree},
                        {"clique", rec.bounds.clique},
                        {"brooks", rec.bounds.brooks},
                        {"shannon", rec.bounds.shannon},
                        {"greedy", rec.bounds.greedy}}
                 : json(nullptr)},
      {"verdicts", verdicts},
      {"witnesses",
       {{"vertex_coloring", optional_int_list(vertex_witness)},
        {"edge_coloring", optional_int_list(edge_witness)},
        {"h12_coloring", optional_int_list(h12_witness)}}},
      {"induced_pairs", induced},
      {"h12_nodes", rec.h12_stats.nodes},
      {"elapsed_ms", rec.elapsed_ms},
      {"counterexample_file", rec.counterexample_file
                                  ? json(*rec.counterexample_file)
                                  : json(nullptr)}};
}

json summary_json(const ScanSummary& s) {
  json verdicts = json::object();
  for (const auto& [h, counts] : s.counts) {
    json c = json::object();
    for (const auto& [v, n] : counts) c[to_string(v)] = n;
    verdicts[to_string(h)] = c;
  }
  const auto& nc = s.neighbor_count;
  return {
      {"instances", s.instances},
      {"valid", s.valid},
      {"verdicts", verdicts},
      {"counterexamples", s.counterexamples},
      {"triangle_free_gamma_two", s.triangle_free_bipartite},
      {"induced_edge_properness",
       {{"checked", s.induced_checked},
        {"edge_proper", s.induced_proper},
        {"rate", s.induced_checked
                     ? json(static_cast<double>(s.induced_proper) /
                            static_cast<double>(s.induced_checked))
                     : json(nullptr)}}},
      {"neighbor_count",
       {{"reading", nc.reading},
        {"free_orientation", nc.free_orientation},
        {"euler_balanced", nc.euler_balanced},
        {"reference", nc.reference},
        {"agrees", nc.agrees}}}};
}

json config_json(const ScanConfig& c) {
  json hyps = json::array();
  for (Hypothesis h : c.hypotheses) hyps.push_back(to_string(h));
  json out = {{"source", c.files.empty() ? "recipe" : "files"},
              {"files", c.files},
              {"hypotheses", hyps},
              {"time_budget_ms", c.time_budget_ms},
              {"jobs", c.jobs},
              {"max_n", c.max_n},
              {"h12_reading", kH12Reading}};
  if (c.files.empty())
    out["recipe"] = {{"count", c.recipe.count},
                     {"seed", c.recipe.seed},
                     {"min_inserts", c.recipe.min_inserts},
                     {"max_inserts", c.recipe.max_inserts},
                     {"max_subdivisions", c.recipe.max_subdivisions},
                     {"max_edges", c.recipe.max_edges}};
  else
    out["recipe"] = nullptr;
  return out;
}

}  // namespace

std::string report_to_json(const ScanReport& report, int indent) {
  json instances = json::array();
  for (const auto& rec : report.instances)
    instances.push_back(instance_json(rec));
  json doc = {{"version", kReportVersion},
              {"config", config_json(report.config)},
              {"summary", summary_json(report.summary)},
              {"instances", instances}};
  return doc.dump(indent);
}

}  // namespace conjtri
