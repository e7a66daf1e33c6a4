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

#include "cisst/io.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <sstream>

#include <json.hpp>

namespace cisst {
namespace {

using json = nlohmann::json;

[[noreturn]] void fail(const std::string& field, const std::string& why) {
  throw Error(Errc::parse, field + ": " + why);
}

json parse_text(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const std::size_t upto = std::min<std::size_t>(e.byte, text.size());
    const auto line = 1 + std::count(text.begin(), text.begin() + upto, '\n');
    throw Error(Errc::parse, "line " + std::to_string(line) + ": malformed JSON");
  }
}

const json& member(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(where + key, "missing");
  return *it;
}

int as_int(const json& j, const std::string& field) {
  if (!j.is_number_integer()) fail(field, "expected an integer");
  const auto v = j.get<long long>();
  if (v < 0 || v > 1'000'000) fail(field, "out of range");
  return static_cast<int>(v);
}

Edge as_edge(const json& j, const std::string& field, int n) {
  if (!j.is_array() || j.size() != 2) fail(field, "expected a 2-element array");
  const int a = as_int(j[0], field + "[0]");
  const int b = as_int(j[1], field + "[1]");
  if (a >= n) fail(field + "[0]", "vertex " + std::to_string(a) + " >= n");
  if (b >= n) fail(field + "[1]", "vertex " + std::to_string(b) + " >= n");
  if (a == b) fail(field, "self-loop");
  return Edge(a, b);
}

std::vector<Vertex> as_vertices(const json& j, const std::string& field, int n) {
  if (!j.is_array()) fail(field, "expected an array");
  std::vector<Vertex> out;
  for (std::size_t k = 0; k < j.size(); ++k) {
    const std::string f = field + "[" + std::to_string(k) + "]";
    const int v = as_int(j[k], f);
    if (n >= 0 && v >= n) fail(f, "vertex " + std::to_string(v) + " >= n");
    out.push_back(v);
  }
  return out;
}

TerminalSet as_terminals(const json& j, const std::string& field, int n) {
  try {
    return TerminalSet(as_vertices(j, field, n));
  } catch (const Error& e) {
    if (e.code() == Errc::parse) throw;
    fail(field, e.what());
  }
}

json edges_json(const std::vector<Edge>& edges) {
  json out = json::array();
  for (const Edge& e : edges) out.push_back({e.u, e.v});
  return out;
}

std::string name_of(Vertex v, const BipartiteLabeling* labeling) {
  return labeling ? labeling->label(v) : std::to_string(v);
}

constexpr std::array<const char*, 12> kPalette = {
    "red",        "blue",   "forestgreen", "darkorange", "purple",    "deeppink",
    "darkcyan",   "brown",  "gold3",       "navy",       "olivedrab", "black"};

void dot_nodes(std::ostringstream& out, const TreeFamily& f, const BipartiteLabeling* labeling) {
  out << "  node [shape=circle];\n";
  for (Vertex v = 0; v < f.host.n(); ++v) {
    out << "  " << v << " [label=\"" << name_of(v, labeling) << "\"";
    if (f.terminals.contains(v)) out << ", shape=doublecircle";
    out << "];\n";
  }
  if (labeling) {
    // Layout hint: one rank per side.
    out << "  { rank=same;";
    for (int i = 1; i <= labeling->m1(); ++i) out << ' ' << labeling->x(i) << ';';
    out << " }\n  { rank=same;";
    for (int j = 1; j <= labeling->m2(); ++j) out << ' ' << labeling->y(j) << ';';
    out << " }\n";
  }
}

}  // namespace

GraphDocument read_graph_json(std::string_view text) {
  const json doc = parse_text(text);
  if (!doc.is_object()) fail("<root>", "expected an object");
  const int n = as_int(member(doc, "n", ""), "n");
  if (n < 1) fail("n", "must be positive");

  const json& ej = member(doc, "edges", "");
  if (!ej.is_array()) fail("edges", "expected an array");
  std::vector<Edge> edges;
  std::set<Edge> seen;
  for (std::size_t k = 0; k < ej.size(); ++k) {
    const std::string field = "edges[" + std::to_string(k) + "]";
    const Edge e = as_edge(ej[k], field, n);
    if (!seen.insert(e).second) fail(field, "duplicate edge");
    edges.push_back(e);
  }

  GraphDocument out{Graph(n, std::move(edges)), std::nullopt, std::nullopt};
  if (auto it = doc.find("bipartite"); it != doc.end()) {
    if (!it->is_object()) fail("bipartite", "expected an object");
    const int m1 = as_int(member(*it, "m1", "bipartite."), "bipartite.m1");
    const int m2 = as_int(member(*it, "m2", "bipartite."), "bipartite.m2");
    if (m1 < 2 || m1 > m2) fail("bipartite", "need 2 <= m1 <= m2");
    if (m1 + m2 != n) fail("bipartite", "m1 + m2 must equal n");
    out.labeling.emplace(m1, m2);
    const auto& edges_read = out.graph.edges();
    for (std::size_t k = 0; k < edges_read.size(); ++k)
      if (out.labeling->in_x(edges_read[k].u) == out.labeling->in_x(edges_read[k].v))
        fail("edges[" + std::to_string(k) + "]", "joins two vertices of the same side");
  }
  if (auto it = doc.find("terminals"); it != doc.end())
    out.terminals = as_terminals(*it, "terminals", n);
  return out;
}

std::string write_graph_json(const GraphDocument& doc) {
  json out;
  out["n"] = doc.graph.n();
  out["edges"] = edges_json(doc.graph.edges());
  if (doc.labeling) out["bipartite"] = {{"m1", doc.labeling->m1()}, {"m2", doc.labeling->m2()}};
  if (doc.terminals) out["terminals"] = doc.terminals->members();
  return out.dump(2) + "\n";
}

FamilyDocument read_family_json(std::string_view text) {
  const json doc = parse_text(text);
  if (!doc.is_object()) fail("<root>", "expected an object");
  TerminalSet terminals = as_terminals(member(doc, "terminals", ""), "terminals", -1);
  const json& tj = member(doc, "trees", "");
  if (!tj.is_array()) fail("trees", "expected an array");
  std::vector<SteinerTree> trees;
  for (std::size_t k = 0; k < tj.size(); ++k) {
    const std::string where = "trees[" + std::to_string(k) + "]";
    if (!tj[k].is_object()) fail(where, "expected an object");
    std::vector<Vertex> vs = as_vertices(member(tj[k], "vertices", where + "."), where + ".vertices", -1);
    const json& ej = member(tj[k], "edges", where + ".");
    if (!ej.is_array()) fail(where + ".edges", "expected an array");
    std::vector<Edge> edges;
    for (std::size_t e = 0; e < ej.size(); ++e)
      edges.push_back(as_edge(ej[e], where + ".edges[" + std::to_string(e) + "]", 1'000'001));
    trees.emplace_back(std::move(vs), std::move(edges));
  }
  return {std::move(terminals), std::move(trees)};
}

std::string write_family_json(const TreeFamily& f) {
  json out;
  out["terminals"] = f.terminals.members();
  json trees = json::array();
  for (const SteinerTree& t : f.trees)
    trees.push_back({{"vertices", t.vertices()}, {"edges", edges_json(t.edges())}});
  out["trees"] = std::move(trees);
  return out.dump(2) + "\n";
}

std::vector<Vertex> parse_vertex_list(std::string_view text, const BipartiteLabeling* labeling) {
  std::vector<Vertex> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    std::string item(text.substr(start, end - start));
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (item.empty()) throw Error(Errc::parse, "empty item in vertex list '" + std::string(text) + "'");
    if (item[0] == 'x' || item[0] == 'y') {
      if (!labeling) throw Error(Errc::parse, "label '" + item + "' needs a bipartite host");
      out.push_back(labeling->parse_label(item));
    } else {
      if (!std::all_of(item.begin(), item.end(), [](char c) { return c >= '0' && c <= '9'; }) ||
          item.size() > 7)
        throw Error(Errc::parse, "bad vertex id '" + item + "'");
      out.push_back(std::stoi(item));
    }
    start = end + 1;
  }
  return out;
}

std::string tree_dot(const TreeFamily& f, std::size_t index, const BipartiteLabeling* labeling) {
  const SteinerTree& t = f.trees.at(index);
  const char* color = kPalette[index % kPalette.size()];
  std::ostringstream out;
  out << "graph T" << index + 1 << " {\n";
  dot_nodes(out, f, labeling);
  for (const Edge& e : f.host.edges()) {
    out << "  " << e.u << " -- " << e.v;
    if (t.has_edge(e))
      out << " [color=" << color << ", penwidth=2.5];\n";
    else
      out << " [color=gray85, style=dotted];\n";
  }
  out << "}\n";
  return out.str();
}

std::string family_dot(const TreeFamily& f, const BipartiteLabeling* labeling) {
  std::ostringstream out;
  out << "graph family {\n";
  dot_nodes(out, f, labeling);
  for (const Edge& e : f.host.edges()) {
    out << "  " << e.u << " -- " << e.v;
    auto owner = std::find_if(f.trees.begin(), f.trees.end(),
                              [&](const SteinerTree& t) { return t.has_edge(e); });
    if (owner == f.trees.end()) {
      out << " [color=gray85, style=dotted];\n";
    } else {
      const auto k = static_cast<std::size_t>(owner - f.trees.begin());
      out << " [color=" << kPalette[k % kPalette.size()] << ", penwidth=2.5, label=\"T"
          << k + 1 << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace cisst
