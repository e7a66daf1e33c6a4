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

#include "cisst/reduction.hpp"

#include <algorithm>
#include <map>
#include <vector>

namespace cisst {

SteinerTree strip_leaves_outside(const SteinerTree& t, const TerminalSet& keep) {
  std::vector<Vertex> vertices = t.vertices();
  std::vector<Edge> edges = t.edges();
  while (vertices.size() > 1) {
    std::map<Vertex, int> degree;
    for (const Edge& e : edges) {
      ++degree[e.u];
      ++degree[e.v];
    }
    // The current round's deletion set.
    std::vector<Vertex> doomed;
    for (Vertex v : vertices)
      if (degree[v] <= 1 && !keep.contains(v)) doomed.push_back(v);
    if (doomed.empty()) break;
    if (doomed.size() == vertices.size()) break;
    auto gone = [&](Vertex v) { return std::binary_search(doomed.begin(), doomed.end(), v); };
    std::erase_if(vertices, gone);
    std::erase_if(edges, [&](const Edge& e) { return gone(e.u) || gone(e.v); });
  }
  return SteinerTree(std::move(vertices), std::move(edges));
}

SteinerTree prune_to_subset(const SteinerTree& t, const TerminalSet& s_old,
                            const TerminalSet& s_new) {
  if (!s_new.is_subset_of(s_old))
    throw Error(Errc::not_subset, "new terminal set is not a subset of the old one");
  if (s_new == s_old) return t;
  return strip_leaves_outside(t, s_new);
}

TreeFamily prune_family(const TreeFamily& f, const TerminalSet& s_new) {
  TreeFamily out{f.host, s_new, {}};
  out.trees.reserve(f.trees.size());
  for (const SteinerTree& t : f.trees)
    out.trees.push_back(prune_to_subset(t, f.terminals, s_new));
  return out;
}

}  // namespace cisst
