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

#include "cisst/verify.hpp"

#include <algorithm>
#include <iterator>
#include <map>
#include <vector>

namespace cisst {
namespace {

void require_well_formed(const TreeFamily& f) {
  for (std::size_t k = 0; k < f.trees.size(); ++k) {
    if (auto why = steiner_tree_violation(f.host, f.terminals, f.trees[k]))
      throw Error(Errc::malformed_tree,
                  "tree " + std::to_string(k) + " is not an S-Steiner tree: " + *why);
  }
}

std::vector<Vertex> interior(const std::vector<Vertex>& path) {
  if (path.size() <= 2) return {};
  std::vector<Vertex> mid(path.begin() + 1, path.end() - 1);
  std::sort(mid.begin(), mid.end());
  return mid;
}

std::optional<Vertex> first_common(const std::vector<Vertex>& a,
                                   const std::vector<Vertex>& b) {
  std::vector<Vertex> both;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
  if (both.empty()) return std::nullopt;
  return both.front();
}

VerifyResult check_pair(const TreeFamily& f, int p, int q) {
  const SteinerTree& tp = f.trees[p];
  const SteinerTree& tq = f.trees[q];

  std::vector<Edge> shared;
  std::set_intersection(tp.edges().begin(), tp.edges().end(), tq.edges().begin(),
                        tq.edges().end(), std::back_inserter(shared));
  if (!shared.empty()) {
    Violation v{.kind = ViolationKind::shared_edge, .p = p, .q = q};
    v.edge = shared.front();
    return v;
  }

  std::vector<Vertex> common;
  std::set_intersection(tp.vertices().begin(), tp.vertices().end(), tq.vertices().begin(),
                        tq.vertices().end(), std::back_inserter(common));
  const auto& s = f.terminals.members();
  // Terminals are spanned by both (well-formedness), so only extras can differ.
  for (Vertex w : common) {
    if (!f.terminals.contains(w)) {
      Violation v{.kind = ViolationKind::extra_shared_vertex, .p = p, .q = q};
      v.vertex = w;
      return v;
    }
  }

  for (std::size_t a = 0; a < s.size(); ++a) {
    for (std::size_t b = a + 1; b < s.size(); ++b) {
      auto in_p = interior(tree_path(tp, s[a], s[b]));
      auto in_q = interior(tree_path(tq, s[a], s[b]));
      if (auto w = first_common(in_p, in_q)) {
        Violation v{.kind = ViolationKind::path_intersection, .p = p, .q = q};
        v.path_ends = {s[a], s[b]};
        v.vertex = *w;
        return v;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::string to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::shared_edge:
      return "SHARED_EDGE";
    case ViolationKind::extra_shared_vertex:
      return "EXTRA_SHARED_VERTEX";
    case ViolationKind::path_intersection:
      return "PATH_INTERSECTION";
    case ViolationKind::double_internal:
      return "DOUBLE_INTERNAL";
  }
  return "UNKNOWN";
}

std::string Violation::describe() const {
  std::string out = to_string(kind) + " trees (" + std::to_string(p) + "," +
                    std::to_string(q) + ")";
  switch (kind) {
    case ViolationKind::shared_edge:
      out += " edge {" + std::to_string(edge.u) + "," + std::to_string(edge.v) + "}";
      break;
    case ViolationKind::extra_shared_vertex:
    case ViolationKind::double_internal:
      out += " vertex " + std::to_string(vertex);
      break;
    case ViolationKind::path_intersection:
      out += " terminals " + std::to_string(path_ends.first) + "-" +
             std::to_string(path_ends.second) + " through " + std::to_string(vertex);
      break;
  }
  return out;
}

VerifyResult verify_definitional(const TreeFamily& f) {
  require_well_formed(f);
  const int k = static_cast<int>(f.trees.size());
  for (int p = 0; p < k; ++p)
    for (int q = p + 1; q < k; ++q)
      if (auto v = check_pair(f, p, q)) return v;
  return std::nullopt;
}

VerifyResult verify_characterization(const TreeFamily& f) {
  require_well_formed(f);
  std::map<Edge, int> edge_owner;
  for (int q = 0; q < static_cast<int>(f.trees.size()); ++q) {
    for (const Edge& e : f.trees[q].edges()) {
      auto [it, fresh] = edge_owner.emplace(e, q);
      if (!fresh) {
        Violation v{.kind = ViolationKind::shared_edge, .p = it->second, .q = q};
        v.edge = e;
        return v;
      }
    }
  }
  std::vector<int> internal_owner(f.host.n(), -1);
  for (int q = 0; q < static_cast<int>(f.trees.size()); ++q) {
    for (Vertex w : f.trees[q].internal_vertices()) {
      if (internal_owner[w] >= 0) {
        Violation v{.kind = ViolationKind::double_internal, .p = internal_owner[w], .q = q};
        v.vertex = w;
        return v;
      }
      internal_owner[w] = q;
    }
  }
  return std::nullopt;
}

bool confirms(const TreeFamily& f, const Violation& v) {
  const int k = static_cast<int>(f.trees.size());
  if (v.p < 0 || v.q < 0 || v.p >= k || v.q >= k || v.p == v.q) return false;
  const SteinerTree& tp = f.trees[v.p];
  const SteinerTree& tq = f.trees[v.q];
  switch (v.kind) {
    case ViolationKind::shared_edge:
      return tp.has_edge(v.edge) && tq.has_edge(v.edge);
    case ViolationKind::extra_shared_vertex:
      return tp.has_vertex(v.vertex) && tq.has_vertex(v.vertex) &&
             !f.terminals.contains(v.vertex);
    case ViolationKind::double_internal:
      return tp.degree(v.vertex) > 1 && tq.degree(v.vertex) > 1;
    case ViolationKind::path_intersection: {
      auto [a, b] = v.path_ends;
      if (!f.terminals.contains(a) || !f.terminals.contains(b) || a == b) return false;
      auto in_p = interior(tree_path(tp, a, b));
      auto in_q = interior(tree_path(tq, a, b));
      return std::binary_search(in_p.begin(), in_p.end(), v.vertex) &&
             std::binary_search(in_q.begin(), in_q.end(), v.vertex);
    }
  }
  return false;
}

int max_family_upper_bound_induced(const Graph& g, const TerminalSet& s,
                                   int exact_on_induced) {
  return exact_on_induced + (g.n() - s.size());
}

}  // namespace cisst
