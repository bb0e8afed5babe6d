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

#include <filesystem>

#include "conjtri/errors.hpp"
#include "conjtri/graph_io.hpp"
#include "conjtri/pairs.hpp"
#include "conjtri/scan.hpp"
#include "doctest.h"
#include "json.hpp"
#include "support/schema_check.hpp"

using namespace conjtri;
using nlohmann::json;

namespace {

ScanInstance named(const std::string& id, UndirectedGraph g,
                   std::optional<RotationSystem> rot) {
  return {id, std::move(g), std::move(rot), "test"};
}

ScanConfig quiet_config() {
  ScanConfig c;
  c.record_timings = false;
  c.time_budget_ms = 20000;
  return c;
}

schema_check::Validator report_validator() {
  return schema_check::Validator(json::parse(read_text_file(
      std::filesystem::path(CONJTRI_SOURCE_DIR) / "schema" /
      "scan_report.schema.json")));
}

std::filesystem::path fresh_dir(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / name;
  std::filesystem::remove_all(dir);
  return dir;
}

}  // namespace

TEST_SUITE("scan") {
  TEST_CASE("square and octahedron") {
    const auto report = scan_instances(
        {named("c4", graphs::cycle(4), graphs::cycle_rotation(4)),
         named("oct", graphs::octahedron(), graphs::octahedron_rotation())},
        quiet_config());
    const auto& c4 = report.instances[0];
    CHECK(c4.gamma->value == 2);
    CHECK(c4.chi->value == 2);
    CHECK(c4.results.at(Hypothesis::kH10).verdict == Verdict::kPass);
    CHECK(c4.results.at(Hypothesis::kH11).verdict == Verdict::kPass);
    CHECK(c4.results.at(Hypothesis::kH12).verdict == Verdict::kPass);
    CHECK(c4.results.at(Hypothesis::kH13).verdict == Verdict::kPass);
    CHECK(report.summary.triangle_free_bipartite ==
          std::vector<std::string>{"c4"});

    const auto& oct = report.instances[1];
    CHECK(oct.gamma->value == 3);
    CHECK(oct.chi->value == 4);
    CHECK(oct.results.at(Hypothesis::kH10).verdict == Verdict::kPass);
    CHECK(oct.results.at(Hypothesis::kH11).verdict == Verdict::kPass);
    CHECK(oct.planarity == "verified");
    REQUIRE(oct.witness_induced_proper);
    CHECK(*oct.witness_pair_alphabet <= 6);
  }

  TEST_CASE("H12 verdicts agree with an exhaustive check") {
    CorpusRecipe r;
    r.count = 40;
    r.seed = 17;
    r.max_inserts = 2;
    r.max_subdivisions = 2;
    ScanConfig cfg = quiet_config();
    cfg.hypotheses = {Hypothesis::kH12};
    for (const auto& inst : generate_corpus(r)) {
      const auto rec =
          scan_instance(named(inst.id, inst.graph, inst.rotation), cfg);
      const auto& res = rec.results.at(Hypothesis::kH12);
      const auto h = make_conjugated(inst.graph, inst.rotation);
      const auto oh = canonical_orientation(h);
      if (res.verdict == Verdict::kPass) {
        REQUIRE(rec.h12_witness);
        CHECK(induce_edge_coloring(oh, *rec.h12_witness).edge_proper);
      } else {
        CHECK(res.verdict == Verdict::kFail);
        if (rec.vertices <= 8) CHECK(res.oracle_confirmed == true);
      }
    }
  }

  TEST_CASE("invalid instances are not judged") {
    const auto report = scan_instances(
        {named("p3", graphs::path(3), std::nullopt)}, quiet_config());
    const auto& rec = report.instances[0];
    CHECK_FALSE(rec.valid);
    for (const auto& [h, r] : rec.results)
      CHECK(r.verdict == Verdict::kNotApplicable);
    CHECK(report.summary.counterexamples.empty());
  }

  TEST_CASE("oversized instances are indeterminate, never pass") {
    CorpusRecipe r;
    r.count = 5;
    ScanConfig cfg = quiet_config();
    cfg.max_n = 5;
    std::vector<ScanInstance> instances;
    for (auto& inst : generate_corpus(r))
      instances.push_back(named(inst.id, inst.graph, inst.rotation));
    const auto report = scan_instances(instances, cfg);
    for (const auto& rec : report.instances)
      for (const auto& [h, res] : rec.results)
        CHECK(res.verdict == Verdict::kIndeterminate);
  }

  TEST_CASE("a tight budget never flips a verdict") {
    CorpusRecipe r;
    r.count = 30;
    r.seed = 3;
    std::vector<ScanInstance> instances;
    for (auto& inst : generate_corpus(r))
      instances.push_back(named(inst.id, inst.graph, inst.rotation));
    const auto full = scan_instances(instances, quiet_config());
    ScanConfig tight = quiet_config();
    tight.time_budget_ms = 1;
    const auto rushed = scan_instances(instances, tight);
    for (std::size_t i = 0; i < instances.size(); ++i)
      for (const auto& [h, res] : rushed.instances[i].results)
        if (res.verdict != Verdict::kIndeterminate)
          CHECK(res.verdict == full.instances[i].results.at(h).verdict);
  }

  TEST_CASE("configuration checks") {
    ScanConfig c;
    c.time_budget_ms = 0;
    CHECK_THROWS_AS(c.check(), RangeError);
    c = ScanConfig{};
    c.jobs = 0;
    CHECK_THROWS_AS(c.check(), RangeError);
    c = ScanConfig{};
    c.hypotheses.clear();
    CHECK_THROWS_AS(c.check(), RangeError);
    CHECK(parse_hypothesis("h12") == Hypothesis::kH12);
    CHECK_THROWS_AS(parse_hypothesis("H9"), RangeError);
    c = ScanConfig{};
    c.files = {"/nonexistent/graph.txt"};
    CHECK_THROWS_AS(run_hypothesis_scan(c), IoError);
  }

  TEST_CASE("reports are schema-valid and summaries match the records") {
    ScanConfig cfg = quiet_config();
    cfg.recipe.count = 15;
    const auto report = run_hypothesis_scan(cfg);
    const json doc = json::parse(report_to_json(report));
    const auto errors = report_validator().validate(doc);
    CHECK(errors.empty());
    for (const auto& e : errors) MESSAGE(e);

    CHECK(doc["instances"].size() == 15);
    for (Hypothesis h : kAllHypotheses) {
      std::map<std::string, std::size_t> tally;
      for (const auto& rec : doc["instances"])
        ++tally[rec["verdicts"][to_string(h)]["verdict"].get<std::string>()];
      for (const auto& [v, n] : doc["summary"]["verdicts"][to_string(h)].items())
        CHECK(n.get<std::size_t>() == tally[v]);
    }
    CHECK(doc["config"]["h12_reading"] == kH12Reading);
    CHECK(doc["summary"]["neighbor_count"]["reference"] == 16);
  }

  TEST_CASE("the schema rejects broken reports") {
    ScanConfig cfg = quiet_config();
    cfg.recipe.count = 2;
    json doc = json::parse(report_to_json(run_hypothesis_scan(cfg)));
    const auto v = report_validator();
    json missing = doc;
    missing.erase("summary");
    CHECK_FALSE(v.validate(missing).empty());
    json bad_verdict = doc;
    bad_verdict["instances"][0]["verdicts"]["H10"]["verdict"] = "maybe";
    CHECK_FALSE(v.validate(bad_verdict).empty());
    json extra = doc;
    extra["instances"][0]["surprise"] = 1;
    CHECK_FALSE(v.validate(extra).empty());
  }

  TEST_CASE("output does not depend on the number of workers") {
    ScanConfig one = quiet_config();
    one.recipe.count = 24;
    ScanConfig many = one;
    many.jobs = 4;
    const json a = json::parse(report_to_json(run_hypothesis_scan(one)));
    const json b = json::parse(report_to_json(run_hypothesis_scan(many)));
    CHECK(a["instances"] == b["instances"]);
    CHECK(a["summary"] == b["summary"]);
  }

  TEST_CASE("counterexample files replay to the same verdicts") {
    const auto dir = fresh_dir("conjtri-scan-cx");
    ScanConfig cfg = quiet_config();
    cfg.recipe.count = 12;
    cfg.counterexample_dir = dir.string();
    const auto report = run_hypothesis_scan(cfg);
    for (const auto& rec : report.instances) {
      if (!rec.is_counterexample()) {
        CHECK_FALSE(rec.counterexample_file);
        continue;
      }
      REQUIRE(rec.counterexample_file);
      ScanConfig replay = quiet_config();
      replay.files = {*rec.counterexample_file};
      const auto again = run_hypothesis_scan(replay);
      REQUIRE(again.instances.size() == 1);
      CHECK(again.instances[0].id == rec.id);
      for (const auto& [h, res] : rec.results)
        CHECK(again.instances[0].results.at(h).verdict == res.verdict);
    }
    std::filesystem::remove_all(dir);
  }
}
