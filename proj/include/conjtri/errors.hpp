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

#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace conjtri {

/// Base class of every error thrown by the library. Failures that are
/// results (invalid instances, failed hypotheses) are returned as data and
/// never thrown.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A graph, digraph or matrix violates its structural invariants.
class GraphError : public Error {
 public:
  using Error::Error;
};

/// An exact search was asked to handle an instance above its size cap.
class SizeLimitError : public Error {
 public:
  SizeLimitError(const std::string& what, std::size_t size, std::size_t cap)
      : Error(what + ": size " + std::to_string(size) + " exceeds cap " +
              std::to_string(cap)),
        size_(size),
        cap_(cap) {}

  std::size_t size() const { return size_; }
  std::size_t cap() const { return cap_; }

 private:
  std::size_t size_;
  std::size_t cap_;
};

/// A rotation system does not match the incidence structure of its graph.
class RotationMismatchError : public GraphError {
 public:
  using GraphError::GraphError;
};

/// The graph has no Euler circuit. `vertices` lists the offending vertices
/// (odd-degree ones, or the ones unreachable from the start vertex).
class EulerError : public Error {
 public:
  enum class Kind { kOddDegree, kDisconnected };

  EulerError(Kind kind, std::vector<int> vertices);

  Kind kind() const { return kind_; }
  const std::vector<int>& vertices() const { return vertices_; }

 private:
  Kind kind_;
  std::vector<int> vertices_;
};

/// A circuit or coloring does not belong to the graph it was paired with.
class MismatchError : public Error {
 public:
  using Error::Error;
};

/// A coloring leaves some vertex or edge unassigned.
class PartialColoringError : public Error {
 public:
  PartialColoringError(const std::string& what, std::vector<int> missing)
      : Error(what), missing_(std::move(missing)) {}

  /// Unassigned vertices (0-based) or edge/arc ids (1-based).
  const std::vector<int>& missing() const { return missing_; }

 private:
  std::vector<int> missing_;
};

/// A vertex coloring that was required to be proper is not.
class ImproperColoringError : public Error {
 public:
  ImproperColoringError(const std::string& what, std::vector<int> edges)
      : Error(what), edges_(std::move(edges)) {}

  /// Monochromatic edge ids (1-based).
  const std::vector<int>& edges() const { return edges_; }

 private:
  std::vector<int> edges_;
};

/// Pair colors assert two different base colors for one vertex.
class RecoveryConflictError : public Error {
 public:
  RecoveryConflictError(int vertex, int first_color, int second_color,
                        int arc);

  int vertex() const { return vertex_; }
  int first_color() const { return first_color_; }
  int second_color() const { return second_color_; }
  /// The arc whose label produced the second assertion.
  int arc() const { return arc_; }

 private:
  int vertex_;
  int first_color_;
  int second_color_;
  int arc_;
};

/// A local star descriptor is inconsistent (degrees, neighbor counts,
/// palette, far-endpoint labels).
class DescriptorError : public Error {
 public:
  using Error::Error;
};

/// A parameter is outside the range an operation supports.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// A file could not be read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

/// Malformed input text. `line` is 1-based; 0 means "end of input".
class FormatError : public Error {
 public:
  FormatError(int line, const std::string& message)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace conjtri
