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

// JSON documents for hosts and tree families, DOT rendering.
//
// Graph document:  {"n": 5, "edges": [[0,1], ...],
//                   "bipartite": {"m1": 2, "m2": 3},   (optional)
//                   "terminals": [0, 1]}               (optional)
// Family document: {"terminals": [0, 1],
//                   "trees": [{"vertices": [...], "edges": [[u,v], ...]}, ...]}
//
// Readers throw Error(parse) with a message naming the line (for syntax
// errors) or the offending field path such as "edges[3][1]".

#ifndef CISST_IO_HPP_
#define CISST_IO_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cisst/graph.hpp"

namespace cisst {

struct GraphDocument {
  Graph graph;
  std::optional<BipartiteLabeling> labeling;
  std::optional<TerminalSet> terminals;
};

struct FamilyDocument {
  TerminalSet terminals;
  std::vector<SteinerTree> trees;
};

GraphDocument read_graph_json(std::string_view text);
std::string write_graph_json(const GraphDocument& doc);

FamilyDocument read_family_json(std::string_view text);
std::string write_family_json(const TreeFamily& f);

// "0,3,5" or "x1,y2" (labels need `labeling`). Whitespace around items is
// ignored. Throws Error(parse) or Error(out_of_range).
std::vector<Vertex> parse_vertex_list(std::string_view text,
                                      const BipartiteLabeling* labeling);

// One tree on the whole host: tree edges bold and colored, the rest faint.
std::string tree_dot(const TreeFamily& f, std::size_t index,
                     const BipartiteLabeling* labeling);
// All trees in one picture, one color per tree.
std::string family_dot(const TreeFamily& f, const BipartiteLabeling* labeling);

// 64-bit FNV-1a.
std::uint64_t fnv1a(std::string_view bytes);

}  // namespace cisst

#endif  // CISST_IO_HPP_
