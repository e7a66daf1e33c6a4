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

// Tree families for K_{m1,m2}.
//
// Mixed terminal sets are handled in canonical position: with i = |S n X|,
// the terminals become x_1..x_i and y_1..y_{s-i}, the remaining vertices of
// each side follow in ascending id order, and results are mapped back. Any
// permutation within a side is an automorphism of K_{m1,m2}.
//
// With a1 = min{m1-i, m2-(s-i)}:
//   I-type   tree j <= a1 uses fresh relays x_{i+j}, y_{s-i+j}.
//   I_X-type (X surplus, a1 = m2-(s-i)) tree k uses relay x_{i+a1+k} and
//            terminal hub y_k.
//   I_Y-type (Y surplus, a1 = m1-i) tree l uses relay y_{s-i+a1+l} and
//            terminal hub x_l.
//   Pruned CIST families take the CISTs of the complete bipartite graph on the
//   terminals plus the vertices no I-type tree touches, cut back to S.

#ifndef CISST_BIPARTITE_HPP_
#define CISST_BIPARTITE_HPP_

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cisst/graph.hpp"

namespace cisst {

enum class Surplus { x_side, y_side };

struct FamilyCatalog {
  TreeFamily a1_trees;       // I-type
  TreeFamily a2_relay;       // I_X-type
  TreeFamily a2_cist;        // pruned CISTs of K_{m1-a1, s-i}
  TreeFamily a3_relay;       // I_Y-type
  TreeFamily a3_cist;        // pruned CISTs of K_{i, m2-a1}
  int a1 = 0;
  bool x_surplus = false;    // a1 == m2-(s-i): a2_* are populated
  bool y_surplus = false;    // a1 == m1-i:     a3_* are populated
};

// Which lower-bound regime produced f(i).
enum class BoundCase {
  few_terminals,    // s <= m2-m1+2: value m1
  x_relay,          // 3i <= z:             m1-i
  x_cist,           // 3i > z, 2i <= z:     m2-(s-i)+floor((z-i)/2)
  y_cist,           // z < 2i, 3i <= 2z:    m1-i+floor(i/2)
  y_relay,          // 2z < 3i, i <= z:     m2-s+i
  y_full,           // i > z:               m1
  star_x,           // S inside X: m2
  star_y,           // S inside Y: m1
};

std::string to_string(BoundCase c);

struct BoundEntry {
  int i;
  BoundCase label;
  int value;
};

struct BoundReport {
  int m1 = 0;
  int m2 = 0;
  int s = 0;
  std::vector<BoundEntry> per_i;
  int minimum = 0;
  int argmin_i = 0;
  // s >= m2-m1+3: min f(i) >= m1 - (z+2)/3 holds and closed_form_floor is
  // m1 - floor((z+2)/3).
  bool floor_bound_applies = false;
  int closed_form_floor = 0;
};

// Stars through each vertex of the opposite side. S must lie inside one side.
TreeFamily build_star_family(const BipartiteLabeling& bl, const TerminalSet& s);

// Mixed S only (Error(wrong_shape) otherwise).
TreeFamily build_i_type(const BipartiteLabeling& bl, const TerminalSet& s);
TreeFamily build_ix_type(const BipartiteLabeling& bl, const TerminalSet& s);
TreeFamily build_iy_type(const BipartiteLabeling& bl, const TerminalSet& s);

// Edge lists of max(floor(|small|/2), 1) CISTs of the complete bipartite
// graph between `small` and `large` (|small| <= |large|, both non-empty).
// With floor(|small|/2) == 0 the single tree is a double star.
std::vector<std::vector<Edge>> bipartite_cist_edges(std::span<const Vertex> small,
                                                    std::span<const Vertex> large);

// floor(m1/2) CISTs of K_{m1,m2}. Requires 2 <= m1 <= m2.
TreeFamily build_cists_bipartite(int m1, int m2);

TreeFamily build_pruned_cist_family(const BipartiteLabeling& bl, const TerminalSet& s,
                                    Surplus branch);

FamilyCatalog build_catalog(const BipartiteLabeling& bl, const TerminalSet& s);

// f(i) for a mixed terminal set with i terminals in X.
// Requires 2 <= m1 <= m2, s >= 2, max{1, s-m2} <= i <= min{m1, s-1}.
std::pair<int, BoundCase> lower_bound_bipartite(int m1, int m2, int s, int i);

// f(i) at every feasible i, one-sided cases included. Requires 2 <= s <= m1+m2.
BoundReport bound_report(int m1, int m2, int s);

// Best verified family from the catalog; its size is at least f(i).
TreeFamily assemble_max_family(const BipartiteLabeling& bl, const TerminalSet& s);

}  // namespace cisst

#endif  // CISST_BIPARTITE_HPP_
