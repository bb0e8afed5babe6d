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

#include "conjtri/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "conjtri/errors.hpp"

namespace conjtri {

namespace {

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

int to_int(std::string_view token, int line, const char* what) {
  int value = 0;
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size())
    throw FormatError(line, std::string("expected integer ") + what +
                                ", got '" + std::string(token) + "'");
  return value;
}

}  // namespace

GraphFile parse_graph_file(std::string_view text) {
  GraphFile file;
  int declared_v = -1;
  int declared_e = -1;
  std::vector<Edge> edges;
  std::set<std::pair<int, int>> seen_edges;
  std::vector<std::vector<EdgeId>> orders;
  std::vector<int> rotation_line;
  bool any_rotation = false;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const auto tok = split(line);
    if (tok.empty()) {
      if (end == text.size()) break;
      continue;
    }

    if (tok[0] == "c") {
      const auto at = line.find('c');
      std::string_view rest = line.substr(at + 1);
      if (!rest.empty() && rest.front() == ' ') rest.remove_prefix(1);
      file.comments.emplace_back(rest);
    } else if (tok[0] == "p") {
      if (declared_v >= 0) throw FormatError(line_no, "duplicate header");
      if (tok.size() != 4 || tok[1] != "conj")
        throw FormatError(line_no, "header must read 'p conj <V> <E>'");
      declared_v = to_int(tok[2], line_no, "vertex count");
      declared_e = to_int(tok[3], line_no, "edge count");
      if (declared_v < 0 || declared_e < 0)
        throw FormatError(line_no, "negative count in header");
      orders.assign(declared_v, {});
      rotation_line.assign(declared_v, 0);
    } else if (tok[0] == "e") {
      if (declared_v < 0) throw FormatError(line_no, "edge before header");
      if (any_rotation)
        throw FormatError(line_no, "edge after rotation lines");
      if (tok.size() != 3) throw FormatError(line_no, "edge needs 2 vertices");
      const int u = to_int(tok[1], line_no, "vertex");
      const int v = to_int(tok[2], line_no, "vertex");
      for (int w : {u, v})
        if (w < 1 || w > declared_v)
          throw FormatError(line_no, "vertex " + std::to_string(w) +
                                         " outside 1.." +
                                         std::to_string(declared_v));
      if (u == v) throw FormatError(line_no, "self-loop");
      if (!seen_edges.insert(std::minmax(u, v)).second)
        throw FormatError(line_no, "parallel edge");
      if (static_cast<int>(edges.size()) == declared_e)
        throw FormatError(line_no, "more edges than the header declares");
      edges.push_back({u - 1, v - 1});
    } else if (tok[0] == "r") {
      if (declared_v < 0) throw FormatError(line_no, "rotation before header");
      if (tok.size() < 2) throw FormatError(line_no, "rotation needs a vertex");
      any_rotation = true;
      const int v = to_int(tok[1], line_no, "vertex");
      if (v < 1 || v > declared_v)
        throw FormatError(line_no, "vertex " + std::to_string(v) +
                                       " outside 1.." +
                                       std::to_string(declared_v));
      if (rotation_line[v - 1] != 0)
        throw FormatError(line_no,
                          "second rotation for vertex " + std::to_string(v));
      rotation_line[v - 1] = line_no;
      for (std::size_t i = 2; i < tok.size(); ++i) {
        const int e = to_int(tok[i], line_no, "edge id");
        if (e < 1 || e > static_cast<int>(edges.size()))
          throw FormatError(line_no, "unknown edge " + std::to_string(e));
        if (!edges[e - 1].has(v - 1))
          throw FormatError(line_no, "edge " + std::to_string(e) +
                                         " is not incident to vertex " +
                                         std::to_string(v));
        orders[v - 1].push_back(e);
      }
    } else {
      throw FormatError(line_no,
                        "unknown line type '" + std::string(tok[0]) + "'");
    }
    if (end == text.size()) break;
  }

  if (declared_v < 0) throw FormatError(0, "missing header");
  if (static_cast<int>(edges.size()) != declared_e)
    throw FormatError(0, "header declares " + std::to_string(declared_e) +
                             " edges, found " + std::to_string(edges.size()));
  file.graph = UndirectedGraph(declared_v, std::move(edges));

  if (any_rotation) {
    for (int v = 0; v < declared_v; ++v) {
      const auto incident = file.graph.incident(v);
      auto listed = orders[v];
      std::sort(listed.begin(), listed.end());
      if (!std::equal(listed.begin(), listed.end(), incident.begin(),
                      incident.end()))
        throw FormatError(rotation_line[v],
                          "rotation of vertex " + std::to_string(v + 1) +
                              " does not list exactly its incident edges");
    }
    file.rotation = RotationSystem(std::move(orders));
  }
  return file;
}

std::string serialize_graph_file(const UndirectedGraph& g,
                                 const std::optional<RotationSystem>& rot,
                                 const std::vector<std::string>& comments) {
  if (rot) check_rotation(g, *rot);
  std::ostringstream out;
  for (const auto& c : comments) out << "c " << c << '\n';
  out << "p conj " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
  if (rot) {
    for (int v = 0; v < g.vertex_count(); ++v) {
      out << "r " << v + 1;
      for (EdgeId e : rot->order(v)) out << ' ' << e;
      out << '\n';
    }
  }
  return out.str();
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  if (path.has_parent_path())
    std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << text;
  if (!out) throw IoError("write failed for " + path.string());
}

GraphFile read_graph_file(const std::filesystem::path& path) {
  return parse_graph_file(read_text_file(path));
}

void write_graph_file(const std::filesystem::path& path,
                      const UndirectedGraph& g,
                      const std::optional<RotationSystem>& rot,
                      const std::vector<std::string>& comments) {
  write_text_file(path, serialize_graph_file(g, rot, comments));
}

}  // namespace conjtri
