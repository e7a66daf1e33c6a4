// Copyright 2026 The cisst Authors
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

// Hand-built families shared by the unit, CLI and acceptance tests.

#ifndef CISST_TESTS_FIXTURES_HPP_
#define CISST_TESTS_FIXTURES_HPP_

#include <set>
#include <vector>

#include "cisst/complete.hpp"
#include "cisst/graph.hpp"

namespace fixtures {

using namespace cisst;

inline Graph union_host(int n, const std::vector<std::vector<Edge>>& trees) {
  std::set<Edge> all;
  for (const auto& t : trees) all.insert(t.begin(), t.end());
  return Graph(n, std::vector<Edge>(all.begin(), all.end()));
}

// Nine vertices, S = {0..7}: a star through the outside vertex 8 plus two
// pairing-rule spanning trees on S. The host is exactly the union.
inline TreeFamily nine_vertex_three_trees() {
  const std::vector<Vertex> s{0, 1, 2, 3, 4, 5, 6, 7};
  std::vector<std::vector<Edge>> trees;
  std::vector<Edge> star;
  for (Vertex v : s) star.emplace_back(8, v);
  trees.push_back(star);
  auto cists = complete_cist_edges(s);
  trees.push_back(cists[0]);
  trees.push_back(cists[1]);
  TreeFamily f{union_host(9, trees), TerminalSet(s), {}};
  for (auto& es : trees) f.trees.push_back(SteinerTree::from_edges(es));
  return f;
}

// Relay scenario with u=0, x=1, v=2, a=3, b=4 and S = {u, x, v}.
enum Id : Vertex { u = 0, x = 1, v = 2, a = 3, b = 4 };

inline std::vector<Edge> relay_tree() { return {{u, a}, {a, x}, {x, b}, {b, v}}; }

// Second tree routes u-v through x: internally disjoint but not completely
// independent.
inline TreeFamily relay_through_x() {
  std::vector<std::vector<Edge>> trees{relay_tree(), {{u, x}, {x, v}}};
  TreeFamily f{union_host(5, trees), TerminalSet({u, x, v}), {}};
  for (auto& es : trees) f.trees.push_back(SteinerTree::from_edges(es));
  return f;
}

// Second tree is u-v-x: completely independent.
inline TreeFamily relay_avoiding_x() {
  std::vector<std::vector<Edge>> trees{relay_tree(), {{u, v}, {v, x}}};
  TreeFamily f{union_host(5, trees), TerminalSet({u, x, v}), {}};
  for (auto& es : trees) f.trees.push_back(SteinerTree::from_edges(es));
  return f;
}

}  // namespace fixtures

#endif  // CISST_TESTS_FIXTURES_HPP_
