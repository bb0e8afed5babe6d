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

#include "conjtri/errors.hpp"

#include <string>

namespace conjtri {

namespace {

std::string list(const std::vector<int>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(xs[i]);
  }
  return s;
}

}  // namespace

EulerError::EulerError(Kind kind, std::vector<int> vertices)
    : Error(std::string(kind == Kind::kOddDegree ? "odd-degree vertices: "
                                                 : "unreachable vertices: ") +
            list(vertices)),
      kind_(kind),
      vertices_(std::move(vertices)) {}

RecoveryConflictError::RecoveryConflictError(int vertex, int first_color,
                                             int second_color, int arc)
    : Error("vertex " + std::to_string(vertex) + " asserted both color " +
            std::to_string(first_color) + " and color " +
            std::to_string(second_color) + " (arc " + std::to_string(arc) +
            ")"),
      vertex_(vertex),
      first_color_(first_color),
      second_color_(second_color),
      arc_(arc) {}

}  // namespace conjtri
