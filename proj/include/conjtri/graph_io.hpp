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

// Line-oriented graph files:
//
//   c <comment>
//   p conj <V> <E>
//   e <u> <v>            1-based vertices; edge ids follow line order
//   r <v> <e1> <e2> ...  clockwise rotation at v (optional)
//
// Rotation lines are all-or-nothing: once one appears, every vertex with
// incident edges needs one.

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "conjtri/graph.hpp"

namespace conjtri {

struct GraphFile {
  UndirectedGraph graph;
  std::optional<RotationSystem> rotation;
  /// Comment lines without the leading "c ".
  std::vector<std::string> comments;
};

/// Throws FormatError with the offending line number.
GraphFile parse_graph_file(std::string_view text);

/// Canonical text: comments, header, edges in id order, then one rotation
/// line per vertex when a rotation is given.
std::string serialize_graph_file(const UndirectedGraph& g,
                                 const std::optional<RotationSystem>& rot = {},
                                 const std::vector<std::string>& comments = {});

/// File wrappers; throw IoError when the file cannot be opened.
GraphFile read_graph_file(const std::filesystem::path& path);
void write_graph_file(const std::filesystem::path& path,
                      const UndirectedGraph& g,
                      const std::optional<RotationSystem>& rot = {},
                      const std::vector<std::string>& comments = {});

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace conjtri
