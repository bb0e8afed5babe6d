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

#include <random>

#include "conjtri/abstract_r.hpp"
#include "conjtri/errors.hpp"
#include "doctest.h"
#include "support/oracles.hpp"

using namespace conjtri;

namespace {

/// Every zero-diagonal 0/1 matrix of order k.
std::vector<AdjacencyMatrix> all_matrices(int k) {
  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (i != j) cells.emplace_back(i, j);
  std::vector<AdjacencyMatrix> out;
  for (unsigned mask = 0; mask < (1u << cells.size()); ++mask) {
    AdjacencyMatrix m(k);
    for (std::size_t c = 0; c < cells.size(); ++c)
      if (mask >> c & 1u) m.set(cells[c].first, cells[c].second, true);
    out.push_back(m);
  }
  return out;
}

AdjacencyMatrix permuted(const AdjacencyMatrix& m, const std::vector<int>& p) {
  AdjacencyMatrix out(m.order());
  for (int i = 0; i < m.order(); ++i)
    for (int j = 0; j < m.order(); ++j)
      if (m.at(i, j)) out.set(p[i], p[j], true);
  return out;
}

}  // namespace

TEST_SUITE("abstract-r") {
  TEST_CASE("requirements on named digraphs") {
    const auto r3 = check_r_requirements(doubled_complete(3));
    CHECK(r3.passed());
    CHECK(r3.girth_three);
    CHECK(r3.vertex_degree_reading.find("even") != std::string::npos);

    const auto r2 = check_r_requirements(doubled(graphs::path(2)));
    CHECK_FALSE(r2.directed_triangle.passed);
    CHECK(r2.directed_triangle.evidence == "no directed 3-cycle");
    CHECK_FALSE(r2.arc_total.passed);

    const auto p4 = check_r_requirements(doubled(graphs::path(4)));
    CHECK(p4.arc_total.passed);
    CHECK(p4.euler_circuit.passed);
    CHECK(p4.balanced_sums.passed);
    CHECK_FALSE(p4.directed_triangle.passed);
    CHECK_FALSE(p4.girth_three);
    CHECK_FALSE(p4.vertex_degrees.passed);
    CHECK(p4.vertex_degrees.evidence.find("vertex 0") != std::string::npos);
  }

  TEST_CASE("imbalance is pinned to a vertex") {
    AdjacencyMatrix m(3);
    m.set(0, 1, true);
    m.set(0, 2, true);
    const auto r = check_r_requirements(AbstractDigraph(m));
    CHECK_FALSE(r.euler_circuit.passed);
    CHECK(r.euler_circuit.evidence.find("vertex 0") != std::string::npos);
    CHECK_FALSE(r.balanced_sums.passed);
  }

  TEST_CASE("candidate scans for k = 1..4") {
    CHECK(enumerate_r_candidates(1).empty());
    CHECK(enumerate_r_candidates(2).empty());
    const auto k3 = enumerate_r_candidates(3);
    REQUIRE(k3.size() == 1);
    CHECK(k3[0].matrix().row_sums() == std::vector<int>{2, 2, 2});
    CHECK(k3[0].matrix() == doubled_complete(3).matrix());
    const auto k4 = scan_r_candidates(4);
    CHECK(k4.scanned == 924);
    CHECK(k4.candidates.empty());
    CHECK_THROWS_AS(scan_r_candidates(0), RangeError);
    CHECK_THROWS_AS(scan_r_candidates(5), RangeError);
  }

  TEST_CASE("per-case figures are derived") {
    const auto f2 = r_figures(doubled(graphs::path(2)));
    CHECK(f2.max_degree == 2);
    CHECK(f2.gamma == 2);
    const auto f3 = r_figures(doubled_complete(3));
    CHECK(f3.max_degree == 4);
    CHECK(f3.gamma == 3);
    CHECK(f3.chi == 6);
    CHECK(f3.shannon == 6);
  }

  TEST_CASE("symmetric census") {
    const auto c = enumerate_symmetric_p4();
    REQUIRE(c.matrices.size() == 20);
    for (const auto& m : c.matrices) {
      CHECK(m.symmetric());
      CHECK(m.total() == 6);
      for (int i = 0; i < 4; ++i) CHECK(m.at(i, i) == 0);
    }
    std::map<std::string, std::size_t> sizes;
    for (std::size_t i = 0; i < c.classes.size(); ++i)
      sizes[c.class_names[i]] = c.classes[i].size();
    CHECK(sizes == std::map<std::string, std::size_t>{
                       {"triangle+K1", 4}, {"path P4", 12}, {"star K1,3", 4}});
    CHECK(c.with_triangle == std::vector<int>{2, 6, 13, 20});
    CHECK(c.reference_mode_count == 5);
  }

  TEST_CASE("symmetric census partition matches the exhaustive oracle") {
    const auto c = enumerate_symmetric_p4();
    std::vector<UndirectedGraph> gs;
    for (const auto& m : c.matrices) gs.push_back(m.to_digraph().underlying());
    for (const auto& cls : c.classes)
      for (int a : cls)
        for (std::size_t b = 1; b <= gs.size(); ++b) {
          const bool same_class =
              std::find(cls.begin(), cls.end(), static_cast<int>(b)) != cls.end();
          CHECK(oracle::isomorphic(gs[a - 1], gs[b - 1]) == same_class);
        }
  }

  TEST_CASE("asymmetric scan") {
    const auto s = enumerate_asymmetric_p4();
    CHECK(s.scanned == 4096);
    CHECK(s.row_sum_variants == 6);
    CHECK(s.column_sum_variants == 6);
    CHECK(s.satisfying == 0);
    CHECK(s.condition_hits == std::array<std::size_t, 3>{0, 0, 0});
    CHECK(s.unordered_variant_pairs == 21);
    CHECK(s.reference_variant_bound == 21);
    // Every termwise total is 2 * 6 = 12, while {4,4,4,4} needs 16,
    // {4,4,4,2} needs 14 and {4,4,4,0} needs 12 with a vertex of sum 0,
    // which the {1,2} row and column range forbids.
    for (const auto& m : s.constrained) {
      int total = 0;
      for (int i = 0; i < 4; ++i) total += m.row_sums()[i] + m.column_sums()[i];
      CHECK(total == 12);
    }
  }
}

TEST_SUITE("abstract-r properties") {
  TEST_CASE("candidate scans agree with a full re-scan") {
    for (int k = 1; k <= 4; ++k) {
      const auto scan = scan_r_candidates(k);
      std::size_t with_six = 0, passing = 0;
      std::vector<AdjacencyMatrix> pass;
      for (const auto& m : all_matrices(k)) {
        if (m.total() != 6) continue;
        ++with_six;
        // Independent evaluation of the five requirements.
        const auto rows = m.row_sums();
        const auto cols = m.column_sums();
        bool tri = false;
        for (int a = 0; a < k; ++a)
          for (int b = 0; b < k; ++b)
            for (int c = 0; c < k; ++c)
              tri |= m.at(a, b) && m.at(b, c) && m.at(c, a);
        bool degrees = true;
        for (int v = 0; v < k; ++v)
          degrees &= (rows[v] + cols[v]) % 2 == 0 && rows[v] + cols[v] >= 4;
        const bool ok = rows == cols && tri && degrees &&
                        is_connected(m.to_digraph().underlying());
        CHECK(ok == check_r_requirements(AbstractDigraph(m)).passed());
        if (ok) {
          ++passing;
          pass.push_back(m);
        }
      }
      CHECK(scan.scanned == with_six);
      CHECK(scan.passing == passing);
      for (const auto& c : scan.candidates) {
        CHECK(std::find(pass.begin(), pass.end(), c.matrix()) != pass.end());
        CHECK(check_r_requirements(c).passed());
      }
      for (const auto& m : pass)
        CHECK(std::any_of(scan.candidates.begin(), scan.candidates.end(),
                          [&](const AbstractDigraph& c) {
                            return are_isomorphic(c.digraph(),
                                                  m.to_digraph()).has_value();
                          }));
    }
  }

  TEST_CASE("census classes are invariant under relabeling") {
    const auto c = enumerate_symmetric_p4();
    std::mt19937 rng(51);
    for (int trial = 0; trial < 20; ++trial) {
      const auto p = oracle::random_permutation(rng, 4);
      for (std::size_t i = 0; i < c.classes.size(); ++i) {
        const auto& m = c.matrices[c.classes[i].front() - 1];
        const auto image = permuted(m, p);
        const auto it = std::find(c.matrices.begin(), c.matrices.end(), image);
        REQUIRE(it != c.matrices.end());
        const int index = static_cast<int>(it - c.matrices.begin()) + 1;
        CHECK(std::find(c.classes[i].begin(), c.classes[i].end(), index) !=
              c.classes[i].end());
      }
    }
  }

  TEST_CASE("asymmetric verdict does not depend on scan order") {
    const auto s = enumerate_asymmetric_p4();
    std::mt19937 rng(52);
    for (int trial = 0; trial < 10; ++trial) {
      auto order = s.constrained;
      std::shuffle(order.begin(), order.end(), rng);
      std::size_t hits = 0;
      for (const auto& m : order) {
        std::multiset<int> sums;
        for (int i = 0; i < 4; ++i) sums.insert(m.row_sums()[i] + m.column_sums()[i]);
        hits += sums == std::multiset<int>{4, 4, 4, 4} ||
                sums == std::multiset<int>{2, 4, 4, 4} ||
                sums == std::multiset<int>{0, 4, 4, 4};
      }
      CHECK(hits == s.satisfying);
    }
    std::size_t constrained = 0;
    for (const auto& m : all_matrices(4)) {
      auto in_range = [](const std::vector<int>& v) {
        return std::all_of(v.begin(), v.end(),
                           [](int x) { return x == 1 || x == 2; });
      };
      constrained += m.total() == 6 && in_range(m.row_sums()) &&
                     in_range(m.column_sums());
    }
    CHECK(constrained == s.constrained.size());
  }
}
