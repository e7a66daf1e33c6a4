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

#include "cisst/complete.hpp"

#include <algorithm>
#include <numeric>

#include "checked.hpp"

namespace cisst {

std::vector<std::vector<Edge>> complete_cist_edges(std::span<const Vertex> ids) {
  const int k = static_cast<int>(ids.size());
  if (k < 4) throw Error(Errc::invalid_size, "pairing rule needs at least 4 vertices");
  const int pairs = k / 2;
  // 1-based position -> vertex id
  auto at = [&](int pos) { return ids[pos - 1]; };
  std::vector<std::vector<Edge>> trees(pairs);
  for (int i = 1; i <= pairs; ++i) {
    auto& edges = trees[i - 1];
    const Vertex lo = at(2 * i - 1), hi = at(2 * i);
    edges.emplace_back(lo, hi);
    for (int j = 1; j <= pairs; ++j) {
      if (j == i) continue;
      if (j > i) {
        edges.emplace_back(at(2 * j - 1), lo);
        edges.emplace_back(at(2 * j), hi);
      } else {
        edges.emplace_back(at(2 * j - 1), hi);
        edges.emplace_back(at(2 * j), lo);
      }
    }
    if (k % 2 == 1) edges.emplace_back(at(k), lo);
  }
  return trees;
}

TreeFamily build_cists_complete(int n) {
  if (n < 4) throw Error(Errc::invalid_size, "CISTs of K_n need n >= 4");
  std::vector<Vertex> all(n);
  std::iota(all.begin(), all.end(), 0);
  TreeFamily f{make_complete(n), TerminalSet(all), {}};
  for (auto& edges : complete_cist_edges(all))
    f.trees.emplace_back(all, std::move(edges));
  return detail::checked(std::move(f), "build_cists_complete");
}

TreeFamily build_cissts_complete(int n, const TerminalSet& s) {
  if (n < 1) throw Error(Errc::invalid_size, "complete graph needs n >= 1");
  if (s.size() > n || s.members().back() >= n)
    throw Error(Errc::out_of_range, "terminal set does not fit in K_" + std::to_string(n));
  const auto& terms = s.members();
  TreeFamily f{make_complete(n), s, {}};

  if (terms.size() == 2) {
    f.trees.push_back(SteinerTree(terms, {Edge(terms[0], terms[1])}));
  } else if (terms.size() == 3) {
    f.trees.push_back(
        SteinerTree(terms, {Edge(terms[0], terms[1]), Edge(terms[0], terms[2])}));
  } else {
    for (auto& edges : complete_cist_edges(terms))
      f.trees.emplace_back(terms, std::move(edges));
  }

  for (Vertex v = 0; v < n; ++v) {
    if (s.contains(v)) continue;
    std::vector<Vertex> vs = terms;
    vs.push_back(v);
    std::vector<Edge> star;
    for (Vertex u : terms) star.emplace_back(v, u);
    f.trees.emplace_back(std::move(vs), std::move(star));
  }
  return detail::checked(std::move(f), "build_cissts_complete");
}

int kappa_star_complete(int n, int s) {
  if (n < 4 || s < 2 || s > n)
    throw Error(Errc::out_of_range, "kappa_star_complete needs 2 <= s <= n and n >= 4");
  return n - (s + 1) / 2;
}

}  // namespace cisst
