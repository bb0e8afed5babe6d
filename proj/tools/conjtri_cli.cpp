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

// Command-line front end.
//
// Exit codes: 0 completed (hypothesis failures are results), 1 usage error,
// 2 I/O, format or input-structure error.

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "conjtri/abstract_r.hpp"
#include "conjtri/coloring.hpp"
#include "conjtri/construct.hpp"
#include "conjtri/errors.hpp"
#include "conjtri/graph_io.hpp"
#include "conjtri/pairs.hpp"
#include "conjtri/scan.hpp"
#include "json.hpp"

namespace {

using namespace conjtri;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInput = 2;

struct Shared {
  std::vector<std::string> inputs;
  std::string output;
  std::uint64_t seed = 1;
  int timeout_ms = 60000;
  int jobs = 1;
  int max_n = 60;
};

void add_shared(CLI::App* cmd, Shared& s) {
  cmd->add_option("--input,-i", s.inputs, "Graph file(s)");
  cmd->add_option("--output,-o", s.output, "Output path");
  cmd->add_option("--seed", s.seed, "Generator seed");
  cmd->add_option("--timeout-ms", s.timeout_ms, "Per-instance time budget")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--jobs,-j", s.jobs, "Worker threads")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--max-n", s.max_n, "Solver size cap")
      ->check(CLI::PositiveNumber);
}

SolverLimits limits_of(const Shared& s) {
  SolverLimits l =
      SolverLimits::with_budget(std::chrono::milliseconds(s.timeout_ms));
  l.max_vertices = s.max_n;
  l.max_edges = s.max_n;
  return l;
}

GraphFile single_input(const Shared& s) {
  if (s.inputs.size() != 1)
    throw RangeError("exactly one --input file is required");
  return read_graph_file(s.inputs.front());
}

// Writes to --output when given, else stdout.
void emit(const Shared& s, const std::string& text) {
  if (s.output.empty())
    std::cout << text;
  else
    write_text_file(s.output, text);
}

std::string join(const std::vector<int>& xs, int offset = 0) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i)
    out += (i ? " " : "") + std::to_string(xs[i] + offset);
  return out;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::logic_error&) {
      throw RangeError("not an integer: '" + tok + "'");
    }
  }
  return out;
}

int cmd_validate(const Shared& s) {
  const GraphFile f = single_input(s);
  auto outcome = validate_conjugated(f.graph, f.rotation);
  const ValidationReport& r =
      std::holds_alternative<ConjugatedTriangulation>(outcome)
          ? std::get<ConjugatedTriangulation>(outcome).report()
          : std::get<ValidationReport>(outcome);
  std::ostringstream out;
  out << (r.ok() ? "valid" : "invalid") << '\n';
  auto line = [&](const char* name, const ValidationCheck& c) {
    out << name << ": " << to_string(c.status);
    if (!c.detail.empty()) out << " (" << c.detail << ')';
    out << '\n';
  };
  line("degrees", r.degrees);
  line("connectivity", r.connectivity);
  line("planarity", r.planarity);
  line("loop_freedom", r.loop_freedom);
  out << "triangles: " << r.triangle_count << '\n';
  const auto profile = degree_profile(f.graph);
  out << "degree histogram:";
  for (const auto& [d, n] : profile.histogram) out << ' ' << d << 'x' << n;
  out << '\n';
  emit(s, out.str());
  return kExitOk;
}

int cmd_gamma(const Shared& s) {
  const GraphFile f = single_input(s);
  const auto r = chromatic_number(f.graph, limits_of(s));
  const auto b = coloring_bounds(f.graph);
  std::ostringstream out;
  if (r.exact)
    out << "gamma " << r.value << '\n';
  else
    out << "gamma indeterminate " << r.lower_bound << ".." << r.upper_bound
        << '\n';
  out << "bounds clique " << b.clique << " brooks " << b.brooks << " greedy "
      << b.greedy << '\n';
  if (r.witness) out << "witness " << join(r.witness->colors) << '\n';
  out << "nodes " << r.stats.nodes << '\n';
  emit(s, out.str());
  return kExitOk;
}

int cmd_chi(const Shared& s) {
  const GraphFile f = single_input(s);
  const auto r = chromatic_class(f.graph, limits_of(s));
  const auto b = coloring_bounds(f.graph);
  std::ostringstream out;
  if (r.exact)
    out << "chi " << r.value << '\n';
  else
    out << "chi indeterminate " << r.lower_bound << ".." << r.upper_bound
        << '\n';
  out << "bounds max_degree " << b.max_degree << " shannon " << b.shannon
      << '\n';
  if (r.witness) out << "witness " << join(r.witness->colors) << '\n';
  out << "nodes " << r.stats.nodes << '\n';
  emit(s, out.str());
  return kExitOk;
}

int cmd_linegraph(const Shared& s) {
  const GraphFile f = single_input(s);
  const auto lg = line_graph(f.graph);
  emit(s, serialize_graph_file(
              lg.graph, std::nullopt,
              {"line graph: vertex i stands for edge i of the input"}));
  return kExitOk;
}

int cmd_euler(const Shared& s) {
  const GraphFile f = single_input(s);
  const auto c = euler_circuit(f.graph);
  std::ostringstream out;
  out << "length " << c.length() << '\n'
      << "vertices " << join(c.vertices, 1) << '\n'
      << "edges " << join(c.edges) << '\n';
  emit(s, out.str());
  return kExitOk;
}

int cmd_induce(const Shared& s, const std::string& colors) {
  const GraphFile f = single_input(s);
  const auto h = make_conjugated(f.graph, f.rotation);
  const auto oh = canonical_orientation(h);
  VertexColoring vc;
  if (colors.empty()) {
    const auto r = chromatic_number(h.graph(), limits_of(s));
    if (!r.witness) throw RangeError("no coloring found within the budget");
    vc = *r.witness;
  } else {
    vc.colors = parse_int_list(colors);
    if (static_cast<int>(vc.colors.size()) != h.graph().vertex_count())
      throw RangeError("--colors needs one color per vertex");
    vc.palette = *std::max_element(vc.colors.begin(), vc.colors.end()) + 1;
  }
  const auto induced = induce_edge_coloring(oh, vc);
  std::ostringstream out;
  out << "colors " << join(vc.colors) << '\n';
  for (EdgeId a = 1; a <= oh.arcs.arc_count(); ++a) {
    const Arc& arc = oh.arcs.arc(a);
    const PairColor& p = *induced.coloring.pairs[a - 1];
    out << "arc " << a << ' ' << arc.tail + 1 << "->" << arc.head + 1 << ' '
        << p.first() << ':' << p.second() << ' ' << to_string(p) << '\n';
  }
  out << "alphabet " << induced.alphabet_size << '\n'
      << "edge_proper " << (induced.edge_proper ? "true" : "false") << '\n';
  for (const auto& [a, b] : induced.conflicts)
    out << "conflict " << a << ' ' << b << '\n';
  emit(s, out.str());
  return kExitOk;
}

int cmd_recover(const Shared& s, const std::string& pairs) {
  const GraphFile f = single_input(s);
  const auto h = make_conjugated(f.graph, f.rotation);
  const auto oh = canonical_orientation(h);
  PairEdgeColoring pc;
  std::stringstream in(pairs);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    const auto colon = tok.find(':');
    if (colon == std::string::npos)
      throw RangeError("pairs are written first:second, got '" + tok + "'");
    const auto a = parse_int_list(tok.substr(0, colon));
    const auto b = parse_int_list(tok.substr(colon + 1));
    if (a.size() != 1 || b.size() != 1)
      throw RangeError("malformed pair '" + tok + "'");
    pc.pairs.emplace_back(PairColor(a[0], b[0]));
    pc.palette = std::max({pc.palette, a[0] + 1, b[0] + 1});
  }
  std::ostringstream out;
  try {
    const auto vc = recover_vertex_coloring(oh, pc);
    out << "colors " << join(vc.colors) << '\n';
  } catch (const RecoveryConflictError& e) {
    out << "conflict " << e.what() << '\n';
  }
  emit(s, out.str());
  return kExitOk;
}

json matrix_json(const AdjacencyMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.order(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.order(); ++j) row.push_back(m.at(i, j));
    rows.push_back(row);
  }
  return {{"entries", rows},
          {"row_sums", m.row_sums()},
          {"column_sums", m.column_sums()}};
}

int cmd_enum_rk(const Shared& s, const std::vector<int>& ks) {
  json doc = json::array();
  std::ostringstream out;
  for (int k : ks) {
    const auto scan = scan_r_candidates(k);
    out << "k=" << k << ": " << scan.scanned << " matrices with 6 arcs, "
        << scan.passing << " pass, " << scan.candidates.size()
        << " up to isomorphism\n";
    json cands = json::array();
    for (const auto& c : scan.candidates) {
      const auto req = check_r_requirements(c);
      const auto fig = r_figures(c);
      out << format_matrix(c.matrix()) << "rho " << fig.max_degree
          << " gamma " << fig.gamma << " chi " << fig.chi << " shannon "
          << fig.shannon << '\n';
      json m = matrix_json(c.matrix());
      m["rho"] = fig.max_degree;
      m["gamma"] = fig.gamma;
      m["chi"] = fig.chi;
      m["shannon"] = fig.shannon;
      m["girth_three"] = req.girth_three;
      cands.push_back(m);
    }
    doc.push_back({{"k", k},
                   {"scanned", scan.scanned},
                   {"passing", scan.passing},
                   {"candidates", cands}});
  }
  if (s.output.empty())
    std::cout << out.str();
  else
    write_text_file(s.output, doc.dump(2) + "\n");
  return kExitOk;
}

int cmd_enum_p4(const Shared& s) {
  const auto census = enumerate_symmetric_p4();
  const auto asym = enumerate_asymmetric_p4();
  std::ostringstream out;
  out << "symmetric: " << census.matrices.size() << " matrices, "
      << census.classes.size() << " isomorphism classes (reference mode count "
      << census.reference_mode_count << ")\n";
  json classes = json::array();
  for (std::size_t i = 0; i < census.classes.size(); ++i) {
    out << "  " << census.class_names[i] << ": "
        << census.classes[i].size() << " [" << join(census.classes[i]) << "]\n";
    classes.push_back({{"name", census.class_names[i]},
                       {"members", census.classes[i]}});
  }
  out << "  with triangle: " << join(census.with_triangle) << '\n';
  out << "asymmetric: " << asym.constrained.size() << " constrained matrices, "
      << asym.row_sum_variants << " row-sum variants, "
      << asym.realized_variant_pairs << " realized (row, column) pairs, "
      << asym.unordered_variant_pairs << " unordered variant pairs "
      << "(reference bound " << asym.reference_variant_bound << ")\n"
      << "  antisymmetric " << asym.antisymmetric << "; condition hits "
      << asym.condition_hits[0] << '/' << asym.condition_hits[1] << '/'
      << asym.condition_hits[2] << "; satisfying " << asym.satisfying << '\n';
  if (s.output.empty()) {
    std::cout << out.str();
    return kExitOk;
  }
  json mats = json::array();
  for (const auto& m : census.matrices) mats.push_back(matrix_json(m));
  json doc = {
      {"symmetric",
       {{"count", census.matrices.size()},
        {"matrices", mats},
        {"classes", classes},
        {"with_triangle", census.with_triangle},
        {"reference_mode_count", census.reference_mode_count}}},
      {"asymmetric",
       {{"scanned", asym.scanned},
        {"constrained", asym.constrained.size()},
        {"row_sum_variants", asym.row_sum_variants},
        {"column_sum_variants", asym.column_sum_variants},
        {"realized_variant_pairs", asym.realized_variant_pairs},
        {"unordered_variant_pairs", asym.unordered_variant_pairs},
        {"reference_variant_bound", asym.reference_variant_bound},
        {"antisymmetric", asym.antisymmetric},
        {"condition_hits", asym.condition_hits},
        {"satisfying", asym.satisfying}}}};
  write_text_file(s.output, doc.dump(2) + "\n");
  return kExitOk;
}

int cmd_scan(const Shared& s, ScanConfig config,
             const std::vector<std::string>& hyps) {
  config.files = s.inputs;
  config.recipe.seed = s.seed;
  config.time_budget_ms = s.timeout_ms;
  config.jobs = s.jobs;
  config.max_n = s.max_n;
  config.output = s.output;
  if (!hyps.empty()) {
    config.hypotheses.clear();
    for (const auto& h : hyps) config.hypotheses.push_back(parse_hypothesis(h));
  }
  const auto report = run_hypothesis_scan(config);
  const auto& sum = report.summary;
  std::cout << "instances " << sum.instances << ", valid " << sum.valid
            << '\n';
  for (const auto& [h, counts] : sum.counts) {
    std::cout << to_string(h);
    for (const auto& [v, n] : counts) std::cout << ' ' << to_string(v) << '=' << n;
    std::cout << '\n';
  }
  std::cout << "counterexamples " << sum.counterexamples.size() << '\n';
  std::cout << "induced edge-proper " << sum.induced_proper << '/'
            << sum.induced_checked << '\n';
  std::cout << "neighbor count " << sum.neighbor_count.free_orientation
            << " (balanced " << sum.neighbor_count.euler_balanced
            << ", reference " << sum.neighbor_count.reference << ")\n";
  return kExitOk;
}

int cmd_gen(const Shared& s, CorpusRecipe recipe) {
  recipe.seed = s.seed;
  const auto corpus = generate_corpus(recipe);
  if (s.output.empty()) {
    for (const auto& inst : corpus)
      std::cout << serialize_graph_file(inst.graph, inst.rotation,
                                        {"instance " + inst.id});
    return kExitOk;
  }
  for (const auto& inst : corpus)
    write_graph_file(std::filesystem::path(s.output) / (inst.id + ".graph"),
                     inst.graph, inst.rotation, {"instance " + inst.id});
  std::cout << "wrote " << corpus.size() << " instances to " << s.output
            << '\n';
  return kExitOk;
}

void add_recipe(CLI::App* cmd, CorpusRecipe& r) {
  cmd->add_option("--count", r.count, "Corpus size")->check(CLI::NonNegativeNumber);
  cmd->add_option("--min-inserts", r.min_inserts)->check(CLI::NonNegativeNumber);
  cmd->add_option("--max-inserts", r.max_inserts)->check(CLI::NonNegativeNumber);
  cmd->add_option("--max-subdivisions", r.max_subdivisions)
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--max-edges", r.max_edges)->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Conjugated triangulation coloring toolkit"};
  app.require_subcommand(1);
  Shared shared;

  auto* validate = app.add_subcommand("validate", "Check a graph file");
  auto* gamma = app.add_subcommand("gamma", "Exact chromatic number");
  auto* chi = app.add_subcommand("chi", "Exact chromatic class");
  auto* linegraph = app.add_subcommand("linegraph", "Write the line graph");
  auto* euler = app.add_subcommand("euler", "Euler circuit");
  auto* induce = app.add_subcommand("induce", "Pair coloring from a vertex coloring");
  auto* recover = app.add_subcommand("recover", "Vertex coloring from pair colors");
  auto* enum_rk = app.add_subcommand("enum-rk", "Scan abstract color digraphs");
  auto* enum_p4 = app.add_subcommand("enum-p4", "Order-4 matrix census");
  auto* scan = app.add_subcommand("scan", "Hypothesis scan over a corpus");
  auto* gen = app.add_subcommand("gen", "Generate a corpus");
  for (auto* cmd : {validate, gamma, chi, linegraph, euler, induce, recover,
                    enum_rk, enum_p4, scan, gen})
    add_shared(cmd, shared);

  std::string colors;
  induce->add_option("--colors", colors, "Comma-separated vertex colors");
  std::string pairs;
  recover->add_option("--pairs", pairs, "Comma-separated first:second per arc")
      ->required();
  std::vector<int> ks{1, 2, 3, 4};
  enum_rk->add_option("--k", ks, "Orders to scan (1..4)");
  ScanConfig scan_config;
  std::vector<std::string> hyps;
  scan->add_option("--hypotheses", hyps, "Subset of H10 H11 H12 H13")
      ->delimiter(',');
  scan->add_option("--counterexamples", scan_config.counterexample_dir,
                   "Directory for counterexample files");
  add_recipe(scan, scan_config.recipe);
  CorpusRecipe gen_recipe;
  add_recipe(gen, gen_recipe);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (validate->parsed()) return cmd_validate(shared);
    if (gamma->parsed()) return cmd_gamma(shared);
    if (chi->parsed()) return cmd_chi(shared);
    if (linegraph->parsed()) return cmd_linegraph(shared);
    if (euler->parsed()) return cmd_euler(shared);
    if (induce->parsed()) return cmd_induce(shared, colors);
    if (recover->parsed()) return cmd_recover(shared, pairs);
    if (enum_rk->parsed()) return cmd_enum_rk(shared, ks);
    if (enum_p4->parsed()) return cmd_enum_p4(shared);
    if (scan->parsed()) return cmd_scan(shared, scan_config, hyps);
    if (gen->parsed()) return cmd_gen(shared, gen_recipe);
  } catch (const RangeError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DescriptorError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitUsage;
}
