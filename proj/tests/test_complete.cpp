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

#include <numeric>

#include "cisst/complete.hpp"
#include "cisst/verify.hpp"
#include "oracles.hpp"

using namespace cisst;

namespace {

std::vector<Vertex> first(int s) {
  std::vector<Vertex> v(s);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

}  // namespace

TEST_CASE("pairing rule on four vertices") {
  const auto trees = complete_cist_edges(first(4));
  REQUIRE(trees.size() == 2);
  // Pair (0,1) hosts the other pair straight, pair (2,3) hosts it crossed.
  auto a = trees[0], b = trees[1];
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  CHECK(a == std::vector<Edge>{{0, 1}, {0, 2}, {1, 3}});
  CHECK(b == std::vector<Edge>{{0, 3}, {1, 2}, {2, 3}});
}

TEST_CASE("pairing rule attaches an odd vertex to the first of each pair") {
  const auto trees = complete_cist_edges(first(5));
  REQUIRE(trees.size() == 2);
  CHECK(std::count(trees[0].begin(), trees[0].end(), Edge(0, 4)) == 1);
  CHECK(std::count(trees[1].begin(), trees[1].end(), Edge(2, 4)) == 1);
}

TEST_CASE("spanning families of K_n") {
  for (int n = 4; n <= 14; ++n) {
    const TreeFamily f = build_cists_complete(n);
    CHECK(static_cast<int>(f.size()) == n / 2);
    CHECK(oracle::is_cisst_family(f.host, f.terminals, f.trees));
  }
  CHECK_THROWS_AS(build_cists_complete(3), Error);
}

TEST_CASE("terminal families of K_n reach n - ceil(s/2)") {
  for (int n = 4; n <= 12; ++n)
    for (int s = 2; s <= n; ++s) {
      const TreeFamily f = build_cissts_complete(n, TerminalSet(first(s)));
      CHECK(static_cast<int>(f.size()) == n - (s + 1) / 2);
      CHECK(static_cast<int>(f.size()) == kappa_star_complete(n, s));
      CHECK_FALSE(verify_definitional(f).has_value());
      CHECK_FALSE(verify_characterization(f).has_value());
    }
}

TEST_CASE("terminal families on scattered terminals") {
  const TreeFamily f = build_cissts_complete(9, TerminalSet({1, 3, 4, 8}));
  CHECK(f.size() == 7);
  CHECK(oracle::is_cisst_family(f.host, f.terminals, f.trees));
}

TEST_CASE("small terminal sets") {
  // s = 2: the edge plus n-2 relays; s = 3: a path plus n-3 stars.
  CHECK(build_cissts_complete(4, TerminalSet({0, 1})).size() == 3);
  CHECK(build_cissts_complete(5, TerminalSet({0, 1, 2})).size() == 3);
}

TEST_CASE("constructor ranges") {
  auto code = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::parse;
  };
  CHECK(code([] { build_cissts_complete(3, TerminalSet({0, 1, 2, 3})); }) == Errc::out_of_range);
  CHECK(code([] { build_cissts_complete(4, TerminalSet({0, 4})); }) == Errc::out_of_range);
  CHECK(code([] { kappa_star_complete(3, 2); }) == Errc::out_of_range);
  CHECK(code([] { kappa_star_complete(5, 6); }) == Errc::out_of_range);
  CHECK(code([] { complete_cist_edges(first(3)); }) == Errc::invalid_size);
}
