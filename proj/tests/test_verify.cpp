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

#include "cisst/complete.hpp"
#include "cisst/exact.hpp"
#include "cisst/verify.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace cisst;

TEST_CASE("nine-vertex three-tree family is completely independent") {
  const TreeFamily f = fixtures::nine_vertex_three_trees();
  CHECK(f.size() == 3);
  CHECK_FALSE(verify_definitional(f).has_value());
  CHECK_FALSE(verify_characterization(f).has_value());
  CHECK(oracle::is_cisst_family(f.host, f.terminals, f.trees));
}

TEST_CASE("relay through x: paths meet at x, x internal twice") {
  using namespace fixtures;
  const TreeFamily f = relay_through_x();
  const VerifyResult d = verify_definitional(f);
  REQUIRE(d.has_value());
  CHECK(d->kind == ViolationKind::path_intersection);
  CHECK(d->path_ends == std::pair<Vertex, Vertex>{u, v});
  CHECK(d->vertex == x);
  CHECK(to_string(d->kind) == "PATH_INTERSECTION");

  const VerifyResult c = verify_characterization(f);
  REQUIRE(c.has_value());
  CHECK(c->kind == ViolationKind::double_internal);
  CHECK(c->vertex == x);
  CHECK(c->p == 0);
  CHECK(c->q == 1);
  CHECK(confirms(f, *d));
  CHECK(confirms(f, *c));
}

TEST_CASE("relay avoiding x is completely independent") {
  const TreeFamily f = fixtures::relay_avoiding_x();
  CHECK_FALSE(verify_definitional(f).has_value());
  CHECK_FALSE(verify_characterization(f).has_value());
}

TEST_CASE("shared edge is reported first by both checks") {
  TreeFamily f = build_cissts_complete(6, TerminalSet({0, 1, 2, 3}));
  f.trees[2] = f.trees[0];
  for (const VerifyResult& r : {verify_definitional(f), verify_characterization(f)}) {
    REQUIRE(r.has_value());
    CHECK(r->kind == ViolationKind::shared_edge);
    CHECK(r->p == 0);
    CHECK(r->q == 2);
    CHECK(f.trees[0].has_edge(r->edge));
    CHECK(confirms(f, *r));
    CHECK(r->describe().rfind("SHARED_EDGE", 0) == 0);
  }
}

TEST_CASE("extra shared vertex") {
  // Both trees pass through the non-terminal 2, on disjoint edges.
  const Graph g(5, {{0, 2}, {2, 1}, {0, 3}, {3, 2}, {2, 4}, {4, 1}});
  TreeFamily f{g, TerminalSet({0, 1}), {}};
  f.trees.push_back(SteinerTree::from_edges({{0, 2}, {2, 1}}));
  f.trees.push_back(SteinerTree::from_edges({{0, 3}, {3, 2}, {2, 4}, {4, 1}}));
  const VerifyResult d = verify_definitional(f);
  REQUIRE(d.has_value());
  CHECK(d->kind == ViolationKind::extra_shared_vertex);
  CHECK(d->vertex == 2);
  const VerifyResult c = verify_characterization(f);
  REQUIRE(c.has_value());
  CHECK(c->kind == ViolationKind::double_internal);
  CHECK(c->vertex == 2);
}

TEST_CASE("malformed trees are rejected with their index") {
  TreeFamily f = build_cissts_complete(5, TerminalSet({0, 1, 2}));
  f.trees[1] = SteinerTree::from_edges({{0, 1}});
  for (auto check : {verify_definitional, verify_characterization}) {
    try {
      check(f);
      FAIL("expected malformed_tree");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::malformed_tree);
      CHECK(std::string(e.what()).find('1') != std::string::npos);
    }
  }
}

TEST_CASE("confirms rejects a forged witness") {
  const TreeFamily f = build_cissts_complete(6, TerminalSet({0, 1, 2, 3}));
  Violation forged{.kind = ViolationKind::shared_edge, .p = 0, .q = 1};
  forged.edge = f.trees[0].edges().front();
  CHECK_FALSE(confirms(f, forged));
  Violation internal{.kind = ViolationKind::double_internal, .p = 0, .q = 1};
  internal.vertex = 4;
  CHECK_FALSE(confirms(f, internal));
}

TEST_CASE("empty and single-tree families pass") {
  TreeFamily f{make_complete(4), TerminalSet({0, 1}), {}};
  CHECK_FALSE(verify_definitional(f).has_value());
  CHECK_FALSE(verify_characterization(f).has_value());
  f.trees.push_back(SteinerTree::from_edges({{0, 1}}));
  CHECK_FALSE(verify_definitional(f).has_value());
}

TEST_CASE("upper bound from the induced subgraph") {
  CHECK(max_family_upper_bound_induced(make_complete(9), TerminalSet({0, 1, 2, 3, 4, 5, 6, 7}), 4) == 5);
}

TEST_CASE("property: the two checks agree with each other and with the oracle") {
  std::mt19937 rng(20260101);
  int families = 0, independent = 0;
  auto judge = [&](const TreeFamily& f) {
    const VerifyResult d = verify_definitional(f);
    const VerifyResult c = verify_characterization(f);
    const bool truth = oracle::is_cisst_family(f.host, f.terminals, f.trees);
    CHECK(d.has_value() == c.has_value());
    CHECK(d.has_value() != truth);
    if (d) CHECK(confirms(f, *d));
    if (c) CHECK(confirms(f, *c));
    ++families;
    independent += truth;
  };

  for (int round = 0; round < 1200; ++round) {
    const int n = 4 + round % 7;
    const int s = 2 + static_cast<int>(rng() % (n - 1));
    const TerminalSet terms = oracle::random_terminals(rng, n, s);
    TreeFamily f = round % 2 == 0 ? build_cissts_complete(n, terms)
                                  : TreeFamily{oracle::random_connected_graph(rng, n, 0.55), terms, {}};
    if (round % 2 == 1) {
      const int k = 2 + static_cast<int>(rng() % 3);
      for (int t = 0; t < k; ++t) f.trees.push_back(oracle::random_steiner_tree(rng, f.host, terms));
    }
    judge(f);
    // Single mutation: replace one tree by a random Steiner tree, or by a
    // copy of another tree.
    if (f.size() >= 2) {
      TreeFamily g = f;
      const std::size_t at = rng() % g.size();
      if (rng() % 4 == 0)
        g.trees[at] = g.trees[(at + 1) % g.size()];
      else
        g.trees[at] = oracle::random_steiner_tree(rng, g.host, terms);
      judge(g);
    }
  }
  CHECK(families >= 1000);
  CHECK(independent > 100);
  CHECK(families - independent > 100);
}

TEST_CASE("property: solver witnesses verify on random hosts") {
  std::mt19937 rng(7);
  for (int round = 0; round < 60; ++round) {
    const int n = 5 + round % 5;
    const Graph g = oracle::random_connected_graph(rng, n, 0.6);
    const TerminalSet s = oracle::random_terminals(rng, n, 2 + round % 3);
    const SearchResult r = exact_kappa_star(g, s);
    REQUIRE(r.is_exact());
    const TreeFamily f{g, s, r.witness};
    CHECK(static_cast<int>(f.size()) == r.value());
    CHECK_FALSE(verify_definitional(f).has_value());
    CHECK(oracle::is_cisst_family(g, s, f.trees));
  }
}
