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

#include "cisst/bipartite.hpp"

#include <algorithm>
#include <stdexcept>

#include "checked.hpp"
#include "cisst/reduction.hpp"

namespace cisst {
namespace {

// Canonical positions: X(k) is the k-th vertex of X after moving S n X to the
// front, Y(k) likewise.
struct Canon {
  int m1 = 0;
  int m2 = 0;
  int s = 0;
  int i = 0;
  std::vector<Vertex> x_ids;
  std::vector<Vertex> y_ids;

  Vertex X(int k) const { return x_ids.at(k - 1); }
  Vertex Y(int k) const { return y_ids.at(k - 1); }
  int a1() const { return std::min(m1 - i, m2 - (s - i)); }
  bool mixed() const { return i >= 1 && s - i >= 1; }
};

Canon canonicalize(const BipartiteLabeling& bl, const TerminalSet& s) {
  if (s.members().back() >= bl.n())
    throw Error(Errc::out_of_range, "terminal outside K_{m1,m2}");
  Canon c;
  c.m1 = bl.m1();
  c.m2 = bl.m2();
  c.s = s.size();
  std::vector<Vertex> x_rest, y_rest;
  for (Vertex v = 0; v < bl.n(); ++v) {
    const bool term = s.contains(v);
    if (bl.in_x(v))
      (term ? c.x_ids : x_rest).push_back(v);
    else
      (term ? c.y_ids : y_rest).push_back(v);
  }
  c.i = static_cast<int>(c.x_ids.size());
  c.x_ids.insert(c.x_ids.end(), x_rest.begin(), x_rest.end());
  c.y_ids.insert(c.y_ids.end(), y_rest.begin(), y_rest.end());
  return c;
}

TreeFamily empty_family(const BipartiteLabeling& bl, const TerminalSet& s) {
  return TreeFamily{make_complete_bipartite(bl.m1(), bl.m2()).graph, s, {}};
}

// Trees built from the literal edge lists can carry a degree-1 relay; those
// leaves are cut so every tree is an S-Steiner tree.
void add_tree(TreeFamily& f, std::vector<Edge> edges) {
  f.trees.push_back(strip_leaves_outside(SteinerTree::from_edges(std::move(edges)),
                                         f.terminals));
}

void require_mixed(const Canon& c) {
  if (!c.mixed())
    throw Error(Errc::wrong_shape,
                "terminal set lies inside one side; use build_star_family");
}

SteinerTree induced_star_tree(const Canon& c) {
  std::vector<Edge> edges;
  for (int j = 1; j <= c.s - 1; ++j) edges.emplace_back(c.X(1), c.Y(j));
  return SteinerTree::from_edges(std::move(edges));
}

TreeFamily join(const TreeFamily& a, const TreeFamily& b) {
  TreeFamily out = a;
  out.trees.insert(out.trees.end(), b.trees.begin(), b.trees.end());
  return out;
}

}  // namespace

std::string to_string(BoundCase c) {
  switch (c) {
    case BoundCase::few_terminals:
      return "few-terminals";
    case BoundCase::x_relay:
      return "x-relay";
    case BoundCase::x_cist:
      return "x-cist";
    case BoundCase::y_cist:
      return "y-cist";
    case BoundCase::y_relay:
      return "y-relay";
    case BoundCase::y_full:
      return "y-full";
    case BoundCase::star_x:
      return "star-X";
    case BoundCase::star_y:
      return "star-Y";
  }
  return "unknown";
}

TreeFamily build_star_family(const BipartiteLabeling& bl, const TerminalSet& s) {
  if (s.members().back() >= bl.n())
    throw Error(Errc::out_of_range, "terminal outside K_{m1,m2}");
  const bool in_x = std::all_of(s.members().begin(), s.members().end(),
                                [&](Vertex v) { return bl.in_x(v); });
  const bool in_y = std::all_of(s.members().begin(), s.members().end(),
                                [&](Vertex v) { return bl.in_y(v); });
  if (!in_x && !in_y)
    throw Error(Errc::wrong_shape,
                "terminal set meets both sides; use assemble_max_family");
  TreeFamily f = empty_family(bl, s);
  const int hubs = in_x ? bl.m2() : bl.m1();
  for (int j = 1; j <= hubs; ++j) {
    const Vertex hub = in_x ? bl.y(j) : bl.x(j);
    std::vector<Edge> edges;
    for (Vertex u : s.members()) edges.emplace_back(hub, u);
    add_tree(f, std::move(edges));
  }
  return detail::checked(std::move(f), "build_star_family");
}

TreeFamily build_i_type(const BipartiteLabeling& bl, const TerminalSet& s) {
  const Canon c = canonicalize(bl, s);
  require_mixed(c);
  TreeFamily f = empty_family(bl, s);
  const int i = c.i, t = c.s - c.i;
  for (int j = 1; j <= c.a1(); ++j) {
    std::vector<Edge> edges;
    const Vertex xr = c.X(i + j), yr = c.Y(t + j);
    for (int k = 1; k <= i; ++k) edges.emplace_back(yr, c.X(k));
    for (int k = 1; k <= t; ++k) edges.emplace_back(xr, c.Y(k));
    edges.emplace_back(xr, yr);
    add_tree(f, std::move(edges));
  }
  return detail::checked(std::move(f), "build_i_type");
}

TreeFamily build_ix_type(const BipartiteLabeling& bl, const TerminalSet& s) {
  const Canon c = canonicalize(bl, s);
  require_mixed(c);
  const int i = c.i, t = c.s - c.i, a1 = c.a1();
  if (a1 != c.m2 - t)
    throw Error(Errc::wrong_branch, "I_X trees need a1 = m2-(s-i)");
  TreeFamily f = empty_family(bl, s);
  const int count = std::max(0, std::min(t, c.m1 - i - a1));
  for (int k = 1; k <= count; ++k) {
    std::vector<Edge> edges;
    const Vertex relay = c.X(i + a1 + k);
    for (int j = 1; j <= t; ++j) edges.emplace_back(relay, c.Y(j));
    for (int j = 1; j <= i; ++j) edges.emplace_back(c.Y(k), c.X(j));
    add_tree(f, std::move(edges));
  }
  return detail::checked(std::move(f), "build_ix_type");
}

TreeFamily build_iy_type(const BipartiteLabeling& bl, const TerminalSet& s) {
  const Canon c = canonicalize(bl, s);
  require_mixed(c);
  const int i = c.i, t = c.s - c.i, a1 = c.a1();
  if (a1 != c.m1 - i)
    throw Error(Errc::wrong_branch, "I_Y trees need a1 = m1-i");
  TreeFamily f = empty_family(bl, s);
  const int count = std::max(0, std::min(i, c.m2 - t - a1));
  for (int l = 1; l <= count; ++l) {
    std::vector<Edge> edges;
    const Vertex relay = c.Y(t + a1 + l);
    for (int j = 1; j <= i; ++j) edges.emplace_back(relay, c.X(j));
    for (int j = 1; j <= t; ++j) edges.emplace_back(c.X(l), c.Y(j));
    add_tree(f, std::move(edges));
  }
  return detail::checked(std::move(f), "build_iy_type");
}

std::vector<std::vector<Edge>> bipartite_cist_edges(std::span<const Vertex> small,
                                                    std::span<const Vertex> large) {
  const int a = static_cast<int>(small.size()), b = static_cast<int>(large.size());
  if (a < 1 || b < a)
    throw Error(Errc::invalid_size, "bipartite CISTs need 1 <= |small| <= |large|");
  auto A = [&](int k) { return small[k - 1]; };
  auto B = [&](int k) { return large[k - 1]; };
  const int pairs = a / 2;
  if (pairs == 0) {
    std::vector<Edge> edges;
    for (int k = 1; k <= b; ++k) edges.emplace_back(A(1), B(k));
    for (int k = 2; k <= a; ++k) edges.emplace_back(B(1), A(k));
    return {edges};
  }
  std::vector<std::vector<Edge>> trees(pairs);
  for (int i = 1; i <= pairs; ++i) {
    auto& edges = trees[i - 1];
    edges.emplace_back(A(2 * i - 1), B(2 * i - 1));
    edges.emplace_back(B(2 * i - 1), A(2 * i));
    edges.emplace_back(A(2 * i), B(2 * i));
    for (int j = 1; j <= pairs; ++j) {
      if (j == i) continue;
      edges.emplace_back(B(2 * j - 1), A(2 * i - 1));
      edges.emplace_back(B(2 * j), A(2 * i));
      edges.emplace_back(A(2 * j - 1), B(2 * i));
      edges.emplace_back(A(2 * j), B(2 * i - 1));
    }
    for (int k = 2 * pairs + 1; k <= b; ++k) edges.emplace_back(B(k), A(2 * i - 1));
    if (a % 2 == 1) edges.emplace_back(A(a), B(2 * i - 1));
  }
  return trees;
}

TreeFamily build_cists_bipartite(int m1, int m2) {
  BipartiteGraph kb = make_complete_bipartite(m1, m2);
  std::vector<Vertex> xs, ys, all;
  for (int k = 1; k <= m1; ++k) xs.push_back(kb.labeling.x(k));
  for (int k = 1; k <= m2; ++k) ys.push_back(kb.labeling.y(k));
  all = xs;
  all.insert(all.end(), ys.begin(), ys.end());
  TreeFamily f{kb.graph, TerminalSet(all), {}};
  for (auto& edges : bipartite_cist_edges(xs, ys)) f.trees.emplace_back(all, std::move(edges));
  return detail::checked(std::move(f), "build_cists_bipartite");
}

TreeFamily build_pruned_cist_family(const BipartiteLabeling& bl, const TerminalSet& s,
                                    Surplus branch) {
  const Canon c = canonicalize(bl, s);
  require_mixed(c);
  const int i = c.i, t = c.s - c.i, a1 = c.a1();
  std::vector<Vertex> xs, ys;
  if (branch == Surplus::x_side) {
    if (a1 != c.m2 - t) throw Error(Errc::wrong_branch, "X-surplus needs a1 = m2-(s-i)");
    for (int k = 1; k <= i; ++k) xs.push_back(c.X(k));
    for (int k = i + a1 + 1; k <= c.m1; ++k) xs.push_back(c.X(k));
    for (int k = 1; k <= t; ++k) ys.push_back(c.Y(k));
  } else {
    if (a1 != c.m1 - i) throw Error(Errc::wrong_branch, "Y-surplus needs a1 = m1-i");
    for (int k = 1; k <= i; ++k) xs.push_back(c.X(k));
    for (int k = 1; k <= t; ++k) ys.push_back(c.Y(k));
    for (int k = t + a1 + 1; k <= c.m2; ++k) ys.push_back(c.Y(k));
  }
  if (xs.empty() || ys.empty())
    throw Error(Errc::degenerate, "sub-bipartite graph has an empty side");

  std::vector<Vertex> spanned = xs;
  spanned.insert(spanned.end(), ys.begin(), ys.end());
  const TerminalSet sub_terminals(spanned);
  const auto lists = xs.size() <= ys.size() ? bipartite_cist_edges(xs, ys)
                                            : bipartite_cist_edges(ys, xs);
  TreeFamily f = empty_family(bl, s);
  for (const auto& edges : lists)
    f.trees.push_back(prune_to_subset(SteinerTree(spanned, edges), sub_terminals, s));
  return detail::checked(std::move(f), "build_pruned_cist_family");
}

FamilyCatalog build_catalog(const BipartiteLabeling& bl, const TerminalSet& s) {
  const Canon c = canonicalize(bl, s);
  require_mixed(c);
  FamilyCatalog cat{build_i_type(bl, s), empty_family(bl, s), empty_family(bl, s),
                    empty_family(bl, s), empty_family(bl, s)};
  cat.a1 = c.a1();
  cat.x_surplus = cat.a1 == c.m2 - (c.s - c.i);
  cat.y_surplus = cat.a1 == c.m1 - c.i;
  if (cat.x_surplus) {
    cat.a2_relay = build_ix_type(bl, s);
    cat.a2_cist = build_pruned_cist_family(bl, s, Surplus::x_side);
  }
  if (cat.y_surplus) {
    cat.a3_relay = build_iy_type(bl, s);
    cat.a3_cist = build_pruned_cist_family(bl, s, Surplus::y_side);
  }
  return cat;
}

std::pair<int, BoundCase> lower_bound_bipartite(int m1, int m2, int s, int i) {
  if (m1 < 2 || m1 > m2 || s < 2)
    throw Error(Errc::out_of_range, "need 2 <= m1 <= m2 and s >= 2");
  if (i < std::max(1, s - m2) || i > std::min(m1, s - 1))
    throw Error(Errc::out_of_range, "i=" + std::to_string(i) + " outside the mixed range");
  if (s <= m2 - m1 + 2) return {m1, BoundCase::few_terminals};
  const int z = m1 + s - m2;
  // Thresholds 2i <= 2z/3, z, 4z/3, 2z compared without division.
  if (3 * i <= z) return {m1 - i, BoundCase::x_relay};
  if (2 * i <= z) return {m2 - (s - i) + (z - i) / 2, BoundCase::x_cist};
  if (3 * i <= 2 * z) return {m1 - i + i / 2, BoundCase::y_cist};
  if (i <= z) return {m2 - s + i, BoundCase::y_relay};
  return {m1, BoundCase::y_full};
}

BoundReport bound_report(int m1, int m2, int s) {
  if (m1 < 2 || m1 > m2) throw Error(Errc::out_of_range, "need 2 <= m1 <= m2");
  if (s < 2 || s > m1 + m2) throw Error(Errc::out_of_range, "need 2 <= s <= m1+m2");
  BoundReport r;
  r.m1 = m1;
  r.m2 = m2;
  r.s = s;
  if (s <= m2) r.per_i.push_back({0, BoundCase::star_y, m1});
  for (int i = std::max(1, s - m2); i <= std::min(m1, s - 1); ++i) {
    auto [value, label] = lower_bound_bipartite(m1, m2, s, i);
    r.per_i.push_back({i, label, value});
  }
  if (s <= m1) r.per_i.push_back({s, BoundCase::star_x, m2});

  auto best = std::min_element(r.per_i.begin(), r.per_i.end(),
                               [](const BoundEntry& a, const BoundEntry& b) {
                                 return a.value < b.value;
                               });
  r.minimum = best->value;
  r.argmin_i = best->i;

  r.floor_bound_applies = s >= m2 - m1 + 3;
  if (r.floor_bound_applies) {
    const int z = m1 + s - m2;
    r.closed_form_floor = m1 - (z + 2) / 3;
    if (3 * r.minimum < 3 * m1 - (z + 2))
      throw std::logic_error("floor bound violated at m1=" + std::to_string(m1) +
                             " m2=" + std::to_string(m2) + " s=" + std::to_string(s));
  }
  return r;
}

TreeFamily assemble_max_family(const BipartiteLabeling& bl, const TerminalSet& s) {
  const Canon c = canonicalize(bl, s);
  if (!c.mixed()) return build_star_family(bl, s);

  const FamilyCatalog cat = build_catalog(bl, s);
  TreeFamily best = empty_family(bl, s);
  if (c.s <= c.m2 - c.m1 + 2 && c.i == 1) {
    best.trees.push_back(induced_star_tree(c));
    best = join(best, cat.a1_trees);
  } else {
    std::vector<TreeFamily> options;
    if (cat.x_surplus) {
      options.push_back(join(cat.a1_trees, cat.a2_relay));
      options.push_back(join(cat.a1_trees, cat.a2_cist));
    }
    if (cat.y_surplus) {
      options.push_back(join(cat.a1_trees, cat.a3_relay));
      options.push_back(join(cat.a1_trees, cat.a3_cist));
    }
    for (auto& option : options)
      if (option.size() > best.size()) best = std::move(option);
  }
  best = detail::checked(std::move(best), "assemble_max_family");

  const int bound = lower_bound_bipartite(c.m1, c.m2, c.s, c.i).first;
  if (static_cast<int>(best.size()) < bound)
    throw std::logic_error("assembled family of size " + std::to_string(best.size()) +
                           " is below the bound " + std::to_string(bound));
  return best;
}

}  // namespace cisst
