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

// Exhaustive search for the packing number of completely independent
// S-Steiner trees on small hosts (n <= 64).
//
// Two engines:
//
//  * blocks (default). A family is completely independent iff its trees are
//    edge-disjoint and no vertex is internal in two of them. So a family is
//    described by disjoint connected "internal blocks", one per tree. Each
//    terminal outside a block hangs off the block by a single edge. Two
//    blocks can only compete for an edge joining a terminal of one block to
//    a terminal of the other. Whether all hangings fit is a bipartite
//    matching. Blocks are added in increasing order of their minimum vertex,
//    which removes the k! orderings of the same family.
//
//  * tree_packing. Enumerates every S-Steiner tree, sorts them canonically,
//    and packs them depth first in increasing canonical order, keeping the
//    used-edge set and the internal-vertex flags as state. Only practical
//    for very small hosts. It is kept as an independent cross-check.

#ifndef CISST_EXACT_HPP_
#define CISST_EXACT_HPP_

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cisst/graph.hpp"

namespace cisst {

enum class SearchEngine { blocks, tree_packing };

struct SearchConfig {
  std::optional<int> max_trees;
  std::uint64_t node_budget = 200'000'000;
  bool use_symmetry = true;
  std::optional<std::chrono::milliseconds> time_budget;
  int jobs = 1;
  SearchEngine engine = SearchEngine::blocks;

  // Throws Error(out_of_range) on a non-positive budget, cap or job count.
  void validate() const;
};

enum class SearchStatus { exact, indeterminate };

struct SearchResult {
  SearchStatus status = SearchStatus::exact;
  // For exact results lower == upper == the packing number.
  int lower = 0;
  int upper = 0;
  // A family of `lower` trees (empty when lower == 0).
  std::vector<SteinerTree> witness;
  std::uint64_t nodes = 0;
  std::string note;

  bool is_exact() const { return status == SearchStatus::exact; }
  int value() const { return lower; }
};

struct TreeEnumeration {
  std::vector<SteinerTree> trees;
  std::optional<std::string> diagnostic;
};

// Every S-Steiner tree whose internal vertices are allowed by
// `internal_allowed` (empty = all allowed), each once, sorted by
// (edge count, lexicographic edge list). A disconnected host yields no trees
// and a diagnostic.
TreeEnumeration enumerate_steiner_trees(const Graph& g, const TerminalSet& s,
                                        const std::vector<bool>& internal_allowed = {});

// Cheap certified upper bound: min over terminals of the host degree.
int degree_upper_bound(const Graph& g, const TerminalSet& s);

SearchResult exact_kappa_star(const Graph& g, const TerminalSet& s,
                              const SearchConfig& cfg = {});

struct GeneralizedResult {
  SearchResult result;
  // A k-subset attaining the minimum (the first one, in search order).
  std::vector<Vertex> minimizer;
  int subsets_searched = 0;
};

// min over k-subsets S of exact_kappa_star(g, S). With use_symmetry, complete
// and complete bipartite hosts are searched on one subset per vertex orbit.
GeneralizedResult exact_generalized_kappa_star(const Graph& g, int k,
                                               const SearchConfig& cfg = {});

}  // namespace cisst

#endif  // CISST_EXACT_HPP_
