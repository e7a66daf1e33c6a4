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

#include <doctest.h>

#include <random>

#include "cisst/graph.hpp"
#include "oracles.hpp"

using namespace cisst;

namespace {

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected cisst::Error");
  return Errc::parse;
}

// A random tree on `vertices` drawn by attaching each vertex to an earlier one.
std::vector<Edge> random_tree_edges(std::mt19937& rng, const std::vector<Vertex>& vertices) {
  std::vector<Edge> es;
  for (std::size_t k = 1; k < vertices.size(); ++k) {
    std::uniform_int_distribution<std::size_t> pick(0, k - 1);
    es.emplace_back(vertices[k], vertices[pick(rng)]);
  }
  return es;
}

}  // namespace

TEST_CASE("edges are stored as sorted pairs") {
  Edge e(5, 2);
  CHECK(e.u == 2);
  CHECK(e.v == 5);
  CHECK(e == Edge(2, 5));
  CHECK(e.other(2) == 5);
  CHECK(e.touches(5));
  CHECK_FALSE(e.touches(3));
}

TEST_CASE("graph construction rejects bad edges") {
  CHECK(code_of([] { Graph(3, {{0, 0}}); }) == Errc::invalid_size);
  CHECK(code_of([] { Graph(3, {{0, 1}, {1, 0}}); }) == Errc::invalid_size);
  CHECK(code_of([] { Graph(3, {{0, 3}}); }) == Errc::invalid_size);
  Graph g(4, {{2, 3}, {0, 1}});
  CHECK(g.n() == 4);
  CHECK(g.num_edges() == 2);
  CHECK(g.has_edge(1, 0));
  CHECK_FALSE(g.has_edge(1, 2));
  CHECK(g.degree(3) == 1);
  CHECK_FALSE(g.is_connected());
}

TEST_CASE("complete and complete bipartite generators") {
  for (int n = 1; n <= 9; ++n) {
    Graph g = make_complete(n);
    CHECK(g.num_edges() == static_cast<std::size_t>(n * (n - 1) / 2));
    for (int v = 0; v < n; ++v) CHECK(g.degree(v) == n - 1);
  }
  auto b = make_complete_bipartite(2, 3);
  CHECK(b.graph.n() == 5);
  CHECK(b.graph.num_edges() == 6);
  CHECK(b.labeling.x(1) == 0);
  CHECK(b.labeling.x(2) == 1);
  CHECK(b.labeling.y(1) == 2);
  CHECK(b.labeling.y(3) == 4);
  CHECK_FALSE(b.graph.has_edge(0, 1));
  CHECK_FALSE(b.graph.has_edge(2, 4));
  CHECK(b.graph.has_edge(1, 4));
  CHECK(code_of([] { make_complete_bipartite(3, 2); }) != Errc::parse);
  CHECK(code_of([] { make_complete_bipartite(1, 4); }) != Errc::parse);
}

TEST_CASE("bipartite labels round-trip") {
  BipartiteLabeling bl(3, 4);
  for (Vertex v = 0; v < bl.n(); ++v) CHECK(bl.parse_label(bl.label(v)) == v);
  CHECK(bl.label(0) == "x1");
  CHECK(bl.label(3) == "y1");
  CHECK(bl.in_x(2));
  CHECK(bl.in_y(3));
  CHECK(code_of([&] { bl.parse_label("z1"); }) == Errc::parse);
  CHECK(code_of([&] { bl.parse_label("x"); }) == Errc::parse);
  CHECK(code_of([&] { bl.parse_label("x4"); }) == Errc::out_of_range);
  CHECK(code_of([&] { bl.parse_label("y0"); }) == Errc::out_of_range);
}

TEST_CASE("terminal sets") {
  TerminalSet s({4, 1, 2});
  CHECK(s.members() == std::vector<Vertex>{1, 2, 4});
  CHECK(s.contains(2));
  CHECK_FALSE(s.contains(3));
  CHECK(TerminalSet({1, 4}).is_subset_of(s));
  CHECK_FALSE(TerminalSet({0, 4}).is_subset_of(s));
  CHECK(s.fits(make_complete(5)));
  CHECK_FALSE(s.fits(make_complete(4)));
  CHECK(code_of([] { TerminalSet({1}); }) == Errc::invalid_terminals);
  CHECK(code_of([] { TerminalSet({1, 1}); }) == Errc::invalid_terminals);
  CHECK(code_of([] { TerminalSet({-1, 2}); }) == Errc::invalid_terminals);
}

TEST_CASE("steiner tree validation names the failure") {
  const Graph k5 = make_complete(5);
  const TerminalSet s({0, 1, 2});
  // star at 3
  CHECK(is_steiner_tree(k5, s, SteinerTree::from_edges({{3, 0}, {3, 1}, {3, 2}})));
  // path through terminals only
  CHECK(is_steiner_tree(k5, s, SteinerTree::from_edges({{0, 1}, {1, 2}})));
  // non-terminal leaf 4
  CHECK_FALSE(is_steiner_tree(k5, s, SteinerTree::from_edges({{0, 1}, {1, 2}, {2, 4}})));
  // missing terminal 2
  CHECK_FALSE(is_steiner_tree(k5, s, SteinerTree::from_edges({{0, 1}})));
  // cycle
  CHECK_FALSE(is_steiner_tree(k5, s, SteinerTree::from_edges({{0, 1}, {1, 2}, {0, 2}})));
  // disconnected: vertex 3 stored but not reached
  CHECK_FALSE(is_steiner_tree(k5, s, SteinerTree({0, 1, 2, 3}, {{0, 1}, {1, 2}})));
  // edge missing from the host
  const Graph path(3, {{0, 1}, {1, 2}});
  CHECK_FALSE(is_steiner_tree(path, TerminalSet({0, 2}), SteinerTree::from_edges({{0, 2}})));
  CHECK(steiner_tree_violation(k5, s, SteinerTree::from_edges({{0, 1}, {1, 2}, {2, 4}})).has_value());
}

TEST_CASE("tree paths") {
  const SteinerTree t = SteinerTree::from_edges({{0, 3}, {3, 1}, {3, 4}, {4, 2}});
  CHECK(tree_path(t, 0, 2) == std::vector<Vertex>{0, 3, 4, 2});
  CHECK(tree_path(t, 1, 1) == std::vector<Vertex>{1});
  CHECK(code_of([&] { tree_path(t, 0, 9); }) == Errc::missing_vertex);
}

TEST_CASE("property: tree acceptance agrees with an independent checker") {
  std::mt19937 rng(1234);
  for (int round = 0; round < 400; ++round) {
    const int n = 4 + round % 6;
    const Graph g = oracle::random_connected_graph(rng, n, 0.6);
    const TerminalSet s = oracle::random_terminals(rng, n, 2 + round % (n - 1));
    // Candidate: random subset of host edges of the right size, or a random
    // spanning-tree-shaped edge set filtered to host edges.
    std::vector<Vertex> all(n);
    for (int v = 0; v < n; ++v) all[v] = v;
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(std::max<std::size_t>(s.members().size(), 2 + rng() % (n - 1)));
    std::vector<Edge> es;
    for (const Edge& e : random_tree_edges(rng, all))
      es.push_back(g.has_edge(e.u, e.v) || round % 3 ? e : g.edges().front());
    const SteinerTree t(all, es);
    CHECK(is_steiner_tree(g, s, t) == oracle::valid_steiner_tree(g, s, t));
  }
}

TEST_CASE("property: paths reverse and every edge lies on a terminal path") {
  std::mt19937 rng(99);
  for (int round = 0; round < 200; ++round) {
    const int n = 3 + round % 8;
    std::vector<Vertex> all(n);
    for (int v = 0; v < n; ++v) all[v] = v;
    std::shuffle(all.begin(), all.end(), rng);
    const SteinerTree t = SteinerTree::from_edges(random_tree_edges(rng, all));
    // Take the leaves (plus one more vertex) as terminals so the tree is valid.
    std::vector<Vertex> term;
    for (Vertex v : t.vertices())
      if (t.degree(v) <= 1) term.push_back(v);
    if (term.size() < 2) term.push_back(all.front() == term.front() ? all.back() : all.front());
    const TerminalSet s(term);
    REQUIRE(is_steiner_tree(make_complete(n), s, t));

    for (Vertex a : t.vertices())
      for (Vertex b : t.vertices()) {
        auto ab = tree_path(t, a, b);
        auto ba = tree_path(t, b, a);
        std::reverse(ba.begin(), ba.end());
        CHECK(ab == ba);
      }
    for (const Edge& e : t.edges()) {
      bool covered = false;
      for (Vertex a : s.members())
        for (Vertex b : s.members()) {
          auto p = tree_path(t, a, b);
          for (std::size_t k = 0; k + 1 < p.size(); ++k)
            covered |= Edge(p[k], p[k + 1]) == e;
        }
      CHECK(covered);
    }
  }
}

TEST_CASE("induced subgraphs relabel to the kept order") {
  const Graph g(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
  const std::vector<Vertex> keep{0, 2, 4};
  const Graph h = g.induced(keep);
  CHECK(h.n() == 3);
  CHECK(h.num_edges() == 1);
  CHECK(h.has_edge(0, 2));
}
