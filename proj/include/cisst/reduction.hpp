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

#ifndef CISST_REDUCTION_HPP_
#define CISST_REDUCTION_HPP_

#include "cisst/graph.hpp"

namespace cisst {

// Removes, round by round, every current leaf that is not in `keep`, until a
// round removes nothing. All leaves of a round go at once. Vertex ids are
// preserved. A lone vertex is never removed.
SteinerTree strip_leaves_outside(const SteinerTree& t, const TerminalSet& keep);

// Converts an s_old-Steiner tree into an s_new-Steiner tree by iterated
// non-terminal leaf deletion. Throws Error(not_subset) unless s_new is a
// subset of s_old; s_new == s_old returns t unchanged.
SteinerTree prune_to_subset(const SteinerTree& t, const TerminalSet& s_old,
                            const TerminalSet& s_new);

// prune_to_subset applied to every tree; the host is kept.
TreeFamily prune_family(const TreeFamily& f, const TerminalSet& s_new);

}  // namespace cisst

#endif  // CISST_REDUCTION_HPP_
