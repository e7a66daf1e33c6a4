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

#ifndef CISST_GRAPH_HPP_
#define CISST_GRAPH_HPP_

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cisst {

using Vertex = int;

enum class Errc {
  invalid_size,
  invalid_terminals,
  out_of_range,
  missing_vertex,
  not_subset,
  wrong_shape,
  wrong_branch,
  degenerate,
  malformed_tree,
  parse,
};

// All library failures throw this. code() drives the CLI exit status.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

// Undirected edge, always stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  Vertex other(Vertex w) const { return w == u ? v : u; }
  bool touches(Vertex w) const { return u == w || v == w; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph on vertices 0..n-1. Immutable after construction.
class Graph {
 public:
  Graph() = default;
  // Throws Error(invalid_size) for self-loops, duplicates or endpoints >= n.
  Graph(int n, std::vector<Edge> edges);

  int n() const { return n_; }
  std::size_t num_edges() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  bool has_edge(Vertex a, Vertex b) const;
  bool has_vertex(Vertex v) const { return v >= 0 && v < n_; }
  bool is_connected() const;

  // Subgraph induced by `keep` (sorted ids); vertex k of the result is keep[k].
  Graph induced(std::span<const Vertex> keep) const;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
};

// Sides of K_{m1,m2}: x_i -> i-1, y_j -> m1+j-1 (1-based i, j).
class BipartiteLabeling {
 public:
  // Requires 2 <= m1 <= m2.
  BipartiteLabeling(int m1, int m2);

  int m1() const { return m1_; }
  int m2() const { return m2_; }
  int n() const { return m1_ + m2_; }
  Vertex x(int i) const;
  Vertex y(int j) const;
  bool in_x(Vertex v) const { return v >= 0 && v < m1_; }
  bool in_y(Vertex v) const { return v >= m1_ && v < m1_ + m2_; }
  // "x3" / "y1" style label for a vertex id.
  std::string label(Vertex v) const;
  // Parses "x3" / "y1"; throws Error(parse) or Error(out_of_range).
  Vertex parse_label(const std::string& label) const;

 private:
  int m1_;
  int m2_;
};

class TerminalSet {
 public:
  // Sorted, duplicate-free, |members| >= 2.
  explicit TerminalSet(std::vector<Vertex> members);

  const std::vector<Vertex>& members() const { return members_; }
  int size() const { return static_cast<int>(members_.size()); }
  bool contains(Vertex v) const;
  bool fits(const Graph& g) const;
  bool is_subset_of(const TerminalSet& other) const;

  friend bool operator==(const TerminalSet&, const TerminalSet&) = default;

 private:
  std::vector<Vertex> members_;
};

// A subtree of the host. Stores its own vertex set; edges are sorted pairs.
// Validity against a host and terminal set is checked by is_steiner_tree.
class SteinerTree {
 public:
  SteinerTree() = default;
  SteinerTree(std::vector<Vertex> vertices, std::vector<Edge> edges);
  // Vertex set taken from the edge endpoints.
  static SteinerTree from_edges(std::vector<Edge> edges);

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  bool has_vertex(Vertex v) const;
  bool has_edge(const Edge& e) const;
  int degree(Vertex v) const;
  // Vertices with tree degree >= 2, ascending.
  std::vector<Vertex> internal_vertices() const;

  friend bool operator==(const SteinerTree&, const SteinerTree&) = default;

 private:
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
};

struct TreeFamily {
  Graph host;
  TerminalSet terminals;
  std::vector<SteinerTree> trees;

  std::size_t size() const { return trees.size(); }
};

Graph make_complete(int n);

struct BipartiteGraph {
  Graph graph;
  BipartiteLabeling labeling;
};
BipartiteGraph make_complete_bipartite(int m1, int m2);

// Empty optional when t is an S-Steiner tree of g, else a description of the
// first violated invariant.
std::optional<std::string> steiner_tree_violation(const Graph& g,
                                                  const TerminalSet& s,
                                                  const SteinerTree& t);

inline bool is_steiner_tree(const Graph& g, const TerminalSet& s,
                            const SteinerTree& t) {
  return !steiner_tree_violation(g, s, t).has_value();
}

// The unique a-b path in t, endpoints included. Throws Error(missing_vertex).
// Assumes t is a tree.
std::vector<Vertex> tree_path(const SteinerTree& t, Vertex a, Vertex b);

}  // namespace cisst

#endif  // CISST_GRAPH_HPP_
