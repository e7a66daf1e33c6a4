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

#ifndef CISST_VERIFY_HPP_
#define CISST_VERIFY_HPP_

#include <optional>
#include <string>

#include "cisst/graph.hpp"

namespace cisst {

enum class ViolationKind {
  shared_edge,
  extra_shared_vertex,
  path_intersection,
  double_internal,
};

std::string to_string(ViolationKind kind);

// First failure found by a family check. `p < q` index the two trees.
// The witness fields used depend on the kind:
//   shared_edge          edge
//   extra_shared_vertex  vertex
//   path_intersection    path_ends (terminal pair) + vertex (common interior)
//   double_internal      vertex
struct Violation {
  ViolationKind kind;
  int p = 0;
  int q = 0;
  Edge edge{};
  Vertex vertex = -1;
  std::pair<Vertex, Vertex> path_ends{-1, -1};

  std::string describe() const;
  friend bool operator==(const Violation&, const Violation&) = default;
};

// nullopt means the family is completely independent.
using VerifyResult = std::optional<Violation>;

// Checks the raw definition pair by pair: disjoint edges, vertex intersection
// exactly S, and internally disjoint paths for every terminal pair. Scan order
// is p, then q, then sorted terminal pairs.
// Throws Error(malformed_tree) naming the index of a tree that is not an
// S-Steiner tree.
VerifyResult verify_definitional(const TreeFamily& f);

// Edge-disjointness plus "each vertex is internal in at most one tree".
// Linear in the family size. Reports shared_edge before double_internal.
VerifyResult verify_characterization(const TreeFamily& f);

// Re-checks a reported witness directly against the family.
bool confirms(const TreeFamily& f, const Violation& v);

// exact_on_induced + (|V(G)| - |S|).
int max_family_upper_bound_induced(const Graph& g, const TerminalSet& s,
                                   int exact_on_induced);

}  // namespace cisst

#endif  // CISST_VERIFY_HPP_
