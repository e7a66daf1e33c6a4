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

#include <set>

#include "cisst/bipartite.hpp"
#include "cisst/complete.hpp"
#include "cisst/io.hpp"

using namespace cisst;

namespace {

std::string parse_message(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    CHECK(e.code() == Errc::parse);
    return e.what();
  }
  FAIL("expected a parse error");
  return {};
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("graph documents round-trip") {
  const BipartiteGraph kb = make_complete_bipartite(2, 3);
  const GraphDocument doc{kb.graph, kb.labeling, TerminalSet({0, 2})};
  const std::string text = write_graph_json(doc);
  const GraphDocument back = read_graph_json(text);
  CHECK(back.graph.edges() == kb.graph.edges());
  REQUIRE(back.labeling.has_value());
  CHECK(back.labeling->m1() == 2);
  REQUIRE(back.terminals.has_value());
  CHECK(back.terminals->members() == std::vector<Vertex>{0, 2});
  CHECK(write_graph_json(back) == text);
}

TEST_CASE("family documents round-trip") {
  const TreeFamily f = build_cissts_complete(6, TerminalSet({0, 1, 2, 3}));
  const std::string text = write_family_json(f);
  const FamilyDocument back = read_family_json(text);
  CHECK(back.terminals == f.terminals);
  CHECK(back.trees == f.trees);
}

TEST_CASE("graph diagnostics name the field") {
  CHECK(contains(parse_message([] { read_graph_json(R"({"edges": []})"); }), "n: missing"));
  CHECK(contains(parse_message([] { read_graph_json(R"({"n": 3, "edges": [[0,1],[1,"a"]]})"); }),
                 "edges[1][1]"));
  CHECK(contains(parse_message([] { read_graph_json(R"({"n": 3, "edges": [[0,1],[2,3]]})"); }),
                 "edges[1][1]"));
  CHECK(contains(parse_message([] { read_graph_json(R"({"n": 3, "edges": [[0,1],[1,0]]})"); }),
                 "duplicate"));
  CHECK(contains(parse_message([] { read_graph_json(R"({"n": 3, "edges": [[1,1]]})"); }),
                 "self-loop"));
  CHECK(contains(parse_message([] { read_graph_json(R"({"n": 3, "edges": [], "terminals": [0]})"); }),
                 "terminals"));
  CHECK(contains(parse_message([] {
                   read_graph_json(R"({"n": 4, "edges": [[0,1]], "bipartite": {"m1": 2, "m2": 2}})");
                 }),
                 "same side"));
  CHECK(contains(parse_message([] {
                   read_graph_json(R"({"n": 5, "edges": [], "bipartite": {"m1": 2, "m2": 2}})");
                 }),
                 "bipartite"));
}

TEST_CASE("syntax errors report the line") {
  const std::string msg = parse_message([] { read_graph_json("{\n\"n\": 3,\n\"edges\": [[0,1],\n}"); });
  CHECK(contains(msg, "line 4"));
}

TEST_CASE("family diagnostics name the field") {
  CHECK(contains(parse_message([] { read_family_json(R"({"terminals": [0,1]})"); }), "trees: missing"));
  CHECK(contains(parse_message([] {
                   read_family_json(R"({"terminals": [0,1], "trees": [{"vertices": [0,1]}]})");
                 }),
                 "trees[0].edges"));
}

TEST_CASE("vertex lists accept ids and labels") {
  const BipartiteLabeling bl(5, 6);
  CHECK(parse_vertex_list("0, 1,2", nullptr) == std::vector<Vertex>{0, 1, 2});
  CHECK(parse_vertex_list("x1,x2,y1,y2", &bl) == std::vector<Vertex>{0, 1, 5, 6});
  CHECK(parse_vertex_list("x3,7", &bl) == std::vector<Vertex>{2, 7});
  CHECK_THROWS_AS(parse_vertex_list("x1", nullptr), Error);
  CHECK_THROWS_AS(parse_vertex_list("0,,1", nullptr), Error);
  CHECK_THROWS_AS(parse_vertex_list("1a", nullptr), Error);
}

TEST_CASE("DOT output double-circles terminals and colors each tree") {
  const TreeFamily f = build_cissts_complete(5, TerminalSet({0, 1, 2, 3}));
  const std::string all = family_dot(f, nullptr);
  CHECK(contains(all, "graph family {"));
  for (Vertex v : {0, 1, 2, 3}) CHECK(contains(all, "  " + std::to_string(v) + " [label=\"" + std::to_string(v) + "\", shape=doublecircle]"));
  CHECK_FALSE(contains(all, "4 [label=\"4\", shape=doublecircle]"));
  std::set<std::string> colors;
  for (std::size_t k = 0; k < f.size(); ++k) {
    const std::string one = tree_dot(f, k, nullptr);
    const auto at = one.find("penwidth");
    REQUIRE(at != std::string::npos);
    const auto c = one.rfind("color=", at);
    colors.insert(one.substr(c, at - c));
  }
  CHECK(colors.size() == f.size());
}

TEST_CASE("DOT output uses bipartite labels") {
  const BipartiteLabeling bl(2, 3);
  const TreeFamily f = build_cists_bipartite(2, 3);
  const std::string dot = family_dot(f, &bl);
  CHECK(contains(dot, "label=\"y3\""));
  CHECK(contains(dot, "rank=same"));
}

TEST_CASE("FNV-1a reference values") {
  CHECK(fnv1a("") == 0xcbf29ce484222325ULL);
  CHECK(fnv1a("a") == 0xaf63dc4c8601ec8cULL);
  CHECK(fnv1a("foobar") == 0x85944171f73967e8ULL);
}
