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

#include "cisst/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "union_find.hpp"

namespace cisst {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 0) throw Error(Errc::invalid_size, "negative vertex count");
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    const Edge& e = edges_[k];
    if (e.u == e.v)
      throw Error(Errc::invalid_size,
                  "edges[" + std::to_string(k) + "]: self-loop at " +
                      std::to_string(e.u));
    if (e.u < 0 || e.v >= n)
      throw Error(Errc::invalid_size, "edges[" + std::to_string(k) +
                                          "]: endpoint out of range 0.." +
                                          std::to_string(n - 1));
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end())
    throw Error(Errc::invalid_size, "duplicate edge {" + std::to_string(dup->u) +
                                        "," + std::to_string(dup->v) + "}");
  adj_.assign(n, {});
  for (const Edge& e : edges_) {
    adj_[e.u].push_back(e.v);
    adj_[e.v].push_back(e.u);
  }
  for (auto& row : adj_) std::sort(row.begin(), row.end());
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (!has_vertex(a) || !has_vertex(b)) return false;
  return std::binary_search(adj_[a].begin(), adj_[a].end(), b);
}

bool Graph::is_connected() const {
  if (n_ <= 1) return true;
  std::vector<char> seen(n_, 0);
  std::queue<Vertex> q;
  q.push(0);
  seen[0] = 1;
  int reached = 1;
  while (!q.empty()) {
    Vertex v = q.front();
    q.pop();
    for (Vertex w : adj_[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        q.push(w);
      }
    }
  }
  return reached == n_;
}

Graph Graph::induced(std::span<const Vertex> keep) const {
  std::vector<int> index(n_, -1);
  for (std::size_t k = 0; k < keep.size(); ++k) index[keep[k]] = static_cast<int>(k);
  std::vector<Edge> sub;
  for (const Edge& e : edges_)
    if (index[e.u] >= 0 && index[e.v] >= 0) sub.emplace_back(index[e.u], index[e.v]);
  return Graph(static_cast<int>(keep.size()), std::move(sub));
}

BipartiteLabeling::BipartiteLabeling(int m1, int m2) : m1_(m1), m2_(m2) {
  if (m1 < 2 || m1 > m2)
    throw Error(Errc::invalid_size, "bipartite sides need 2 <= m1 <= m2, got m1=" +
                                        std::to_string(m1) + " m2=" + std::to_string(m2));
}

Vertex BipartiteLabeling::x(int i) const {
  if (i < 1 || i > m1_)
    throw Error(Errc::out_of_range, "x index " + std::to_string(i) + " outside 1.." +
                                        std::to_string(m1_));
  return i - 1;
}

Vertex BipartiteLabeling::y(int j) const {
  if (j < 1 || j > m2_)
    throw Error(Errc::out_of_range, "y index " + std::to_string(j) + " outside 1.." +
                                        std::to_string(m2_));
  return m1_ + j - 1;
}

std::string BipartiteLabeling::label(Vertex v) const {
  if (in_x(v)) return "x" + std::to_string(v + 1);
  if (in_y(v)) return "y" + std::to_string(v - m1_ + 1);
  throw Error(Errc::out_of_range, "vertex " + std::to_string(v) + " not in K_{m1,m2}");
}

Vertex BipartiteLabeling::parse_label(const std::string& label) const {
  if (label.size() < 2 || (label[0] != 'x' && label[0] != 'y'))
    throw Error(Errc::parse, "bad bipartite label '" + label + "'");
  int idx = 0;
  for (std::size_t k = 1; k < label.size(); ++k) {
    if (label[k] < '0' || label[k] > '9')
      throw Error(Errc::parse, "bad bipartite label '" + label + "'");
    idx = idx * 10 + (label[k] - '0');
    if (idx > 1'000'000) throw Error(Errc::parse, "bad bipartite label '" + label + "'");
  }
  return label[0] == 'x' ? x(idx) : y(idx);
}

TerminalSet::TerminalSet(std::vector<Vertex> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end())
    throw Error(Errc::invalid_terminals, "duplicate terminal");
  if (members_.size() < 2)
    throw Error(Errc::invalid_terminals, "terminal set needs at least 2 vertices");
  if (members_.front() < 0) throw Error(Errc::invalid_terminals, "negative terminal id");
}

bool TerminalSet::contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

bool TerminalSet::fits(const Graph& g) const { return members_.back() < g.n(); }

bool TerminalSet::is_subset_of(const TerminalSet& other) const {
  return std::includes(other.members_.begin(), other.members_.end(), members_.begin(),
                       members_.end());
}

SteinerTree::SteinerTree(std::vector<Vertex> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  std::sort(vertices_.begin(), vertices_.end());
  vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
  std::sort(edges_.begin(), edges_.end());
}

SteinerTree SteinerTree::from_edges(std::vector<Edge> edges) {
  std::vector<Vertex> vs;
  for (const Edge& e : edges) {
    vs.push_back(e.u);
    vs.push_back(e.v);
  }
  return SteinerTree(std::move(vs), std::move(edges));
}

bool SteinerTree::has_vertex(Vertex v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool SteinerTree::has_edge(const Edge& e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

int SteinerTree::degree(Vertex v) const {
  return static_cast<int>(std::count_if(edges_.begin(), edges_.end(),
                                        [v](const Edge& e) { return e.touches(v); }));
}

std::vector<Vertex> SteinerTree::internal_vertices() const {
  std::vector<Vertex> endpoints;
  for (const Edge& e : edges_) {
    endpoints.push_back(e.u);
    endpoints.push_back(e.v);
  }
  std::sort(endpoints.begin(), endpoints.end());
  std::vector<Vertex> out;
  for (std::size_t k = 0; k + 1 < endpoints.size(); ++k)
    if (endpoints[k] == endpoints[k + 1] && (out.empty() || out.back() != endpoints[k]))
      out.push_back(endpoints[k]);
  return out;
}

Graph make_complete(int n) {
  if (n < 1) throw Error(Errc::invalid_size, "complete graph needs n >= 1");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b) edges.emplace_back(a, b);
  return Graph(n, std::move(edges));
}

BipartiteGraph make_complete_bipartite(int m1, int m2) {
  BipartiteLabeling bl(m1, m2);
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m1) * m2);
  for (int i = 1; i <= m1; ++i)
    for (int j = 1; j <= m2; ++j) edges.emplace_back(bl.x(i), bl.y(j));
  return {Graph(bl.n(), std::move(edges)), bl};
}

std::optional<std::string> steiner_tree_violation(const Graph& g, const TerminalSet& s,
                                                  const SteinerTree& t) {
  const auto& vs = t.vertices();
  const auto& es = t.edges();
  if (vs.empty()) return "tree has no vertices";
  if (vs.front() < 0 || vs.back() >= g.n()) return "tree vertex outside host";
  if (std::adjacent_find(es.begin(), es.end()) != es.end()) return "duplicate tree edge";
  for (const Edge& e : es) {
    if (!g.has_edge(e.u, e.v))
      return "edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
             "} not in host";
    if (!t.has_vertex(e.u) || !t.has_vertex(e.v))
      return "edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
             "} leaves the vertex set";
  }
  if (es.size() + 1 != vs.size()) return "edge count is not |V|-1";
  detail::UnionFind uf(g.n());
  for (const Edge& e : es)
    if (!uf.unite(e.u, e.v)) return "tree has a cycle";
  for (Vertex v : vs)
    if (uf.find(v) != uf.find(vs.front())) return "tree is disconnected";
  for (Vertex v : s.members())
    if (!t.has_vertex(v)) return "terminal " + std::to_string(v) + " not spanned";
  for (Vertex v : vs)
    if (t.degree(v) <= 1 && !s.contains(v))
      return "non-terminal leaf " + std::to_string(v);
  return std::nullopt;
}

std::vector<Vertex> tree_path(const SteinerTree& t, Vertex a, Vertex b) {
  if (!t.has_vertex(a))
    throw Error(Errc::missing_vertex, "vertex " + std::to_string(a) + " not in tree");
  if (!t.has_vertex(b))
    throw Error(Errc::missing_vertex, "vertex " + std::to_string(b) + " not in tree");
  if (a == b) return {a};
  const auto& vs = t.vertices();
  auto index = [&](Vertex v) {
    return static_cast<std::size_t>(std::lower_bound(vs.begin(), vs.end(), v) - vs.begin());
  };
  std::vector<std::vector<std::size_t>> adj(vs.size());
  for (const Edge& e : t.edges()) {
    adj[index(e.u)].push_back(index(e.v));
    adj[index(e.v)].push_back(index(e.u));
  }
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> parent(vs.size(), kNone);
  const std::size_t src = index(a), dst = index(b);
  parent[src] = src;
  std::queue<std::size_t> q;
  q.push(src);
  while (!q.empty() && parent[dst] == kNone) {
    std::size_t v = q.front();
    q.pop();
    for (std::size_t w : adj[v])
      if (parent[w] == kNone) {
        parent[w] = v;
        q.push(w);
      }
  }
  if (parent[dst] == kNone)
    throw Error(Errc::malformed_tree, "no path between " + std::to_string(a) + " and " +
                                          std::to_string(b));
  std::vector<Vertex> path;
  for (std::size_t v = dst; v != src; v = parent[v]) path.push_back(vs[v]);
  path.push_back(a);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace cisst
