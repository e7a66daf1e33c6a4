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

#ifndef CISST_COMPLETE_HPP_
#define CISST_COMPLETE_HPP_

#include <span>
#include <vector>

#include "cisst/graph.hpp"

namespace cisst {

// Edge lists of floor(k/2) completely independent spanning trees on the
// vertices `ids` (k = ids.size() >= 4), assumed pairwise adjacent.
//
// Pairing rule, 1-based positions: tree i owns the pair (2i-1, 2i) joined by
// an edge. A later pair j > i hangs 2j-1 under 2i-1 and 2j under 2i; an
// earlier pair j < i is crossed, 2j-1 under 2i and 2j under 2i-1. An odd
// leftover position k hangs under 2i-1. Every non-owned vertex is a leaf, so
// internal sets are the disjoint pairs, and the crossing keeps the four edges
// between two pairs split two and two.
std::vector<std::vector<Edge>> complete_cist_edges(std::span<const Vertex> ids);

// floor(n/2) CISTs of K_n, S = V. Requires n >= 4.
TreeFamily build_cists_complete(int n);

// n - ceil(|s|/2) CISSTs of K_n: CISTs of K_n[S] (one tree when |s| <= 3)
// followed by one star per outside vertex.
TreeFamily build_cissts_complete(int n, const TerminalSet& s);

// n - ceil(s/2); requires 2 <= s <= n and n >= 4.
int kappa_star_complete(int n, int s);

}  // namespace cisst

#endif  // CISST_COMPLETE_HPP_
