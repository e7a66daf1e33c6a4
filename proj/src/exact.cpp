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

#include "cisst/exact.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <functional>
#include <limits>
#include <mutex>
#include <queue>
#include <thread>

#include "cisst/reduction.hpp"
#include "union_find.hpp"

namespace cisst {
namespace {

using Mask = std::uint64_t;
using Clock = std::chrono::steady_clock;
using Deadline = std::optional<Clock::time_point>;

constexpr Mask bit(int v) { return Mask{1} << v; }
// Bits strictly above v; above(-1) is everything.
constexpr Mask above(int v) { return v >= 63 ? 0 : (~Mask{0} << (v + 1)); }
constexpr Mask at_or_above(int v) { return ~Mask{0} << v; }
inline int lowest(Mask m) { return std::countr_zero(m); }
inline int count(Mask m) { return std::popcount(m); }

struct Instance {
  int n = 0;
  std::vector<Mask> nbr;
  Mask terminals = 0;
  Mask allowed = 0;
  std::vector<int> terms;
};

Instance make_instance(const Graph& g, const TerminalSet& s,
                       const std::vector<bool>& internal_allowed) {
  if (g.n() > 64) throw Error(Errc::invalid_size, "exact search supports at most 64 vertices");
  if (!s.fits(g)) throw Error(Errc::out_of_range, "terminal outside the host");
  if (!internal_allowed.empty() && static_cast<int>(internal_allowed.size()) != g.n())
    throw Error(Errc::invalid_size, "internal-allowed mask has the wrong length");
  Instance in;
  in.n = g.n();
  in.nbr.assign(g.n(), 0);
  for (const Edge& e : g.edges()) {
    in.nbr[e.u] |= bit(e.v);
    in.nbr[e.v] |= bit(e.u);
  }
  for (Vertex v : s.members()) {
    in.terminals |= bit(v);
    in.terms.push_back(v);
  }
  for (int v = 0; v < g.n(); ++v)
    if (internal_allowed.empty() || internal_allowed[v]) in.allowed |= bit(v);
  return in;
}

Mask component_of(const Instance& in, int v) {
  Mask seen = bit(v), frontier = bit(v);
  while (frontier) {
    Mask next = 0;
    for (Mask f = frontier; f; f &= f - 1) next |= in.nbr[lowest(f)];
    next &= ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

bool terminals_connected(const Instance& in) {
  return (component_of(in, in.terms.front()) & in.terminals) == in.terminals;
}

// Decides whether every terminal can hang off every block it is not part of,
// using pairwise distinct edges.
class AttachSolver {
 public:
  explicit AttachSolver(const Instance& in) : in_(in) {}

  // `hang`, when given, receives per block the (terminal, block vertex) edges.
  bool solve(const std::vector<Mask>& blocks, std::vector<std::vector<Edge>>* hang) {
    int owner[64];
    std::fill(owner, owner + in_.n, -1);
    for (int t = 0; t < static_cast<int>(blocks.size()); ++t)
      for (Mask b = blocks[t]; b; b &= b - 1) owner[lowest(b)] = t;

    demands_.clear();
    if (hang) hang->assign(blocks.size(), {});
    for (int t = 0; t < static_cast<int>(blocks.size()); ++t) {
      for (int u : in_.terms) {
        if (blocks[t] & bit(u)) continue;
        const Mask cand = in_.nbr[u] & blocks[t];
        if (!cand) return false;
        // An edge is contested only between terminals internal to two blocks.
        const Mask free_cand = owner[u] < 0 ? cand : (cand & ~in_.terminals);
        if (free_cand) {
          if (hang) (*hang)[t].emplace_back(u, lowest(free_cand));
          continue;
        }
        demands_.push_back({t, u, cand});
      }
    }
    if (demands_.empty()) return true;

    keys_.clear();
    for (const auto& d : demands_)
      for (Mask c = d.cand; c; c &= c - 1) keys_.push_back(Edge(d.u, lowest(c)));
    std::sort(keys_.begin(), keys_.end());
    keys_.erase(std::unique(keys_.begin(), keys_.end()), keys_.end());
    adj_.assign(demands_.size(), {});
    for (std::size_t d = 0; d < demands_.size(); ++d)
      for (Mask c = demands_[d].cand; c; c &= c - 1) {
        auto it = std::lower_bound(keys_.begin(), keys_.end(), Edge(demands_[d].u, lowest(c)));
        adj_[d].push_back(static_cast<int>(it - keys_.begin()));
      }
    match_.assign(keys_.size(), -1);
    for (std::size_t d = 0; d < demands_.size(); ++d) {
      seen_.assign(keys_.size(), 0);
      if (!augment(static_cast<int>(d))) return false;
    }
    if (hang) {
      for (std::size_t e = 0; e < keys_.size(); ++e) {
        if (match_[e] < 0) continue;
        const auto& d = demands_[match_[e]];
        (*hang)[d.block].emplace_back(d.u, keys_[e].other(d.u));
      }
    }
    return true;
  }

 private:
  struct Demand {
    int block;
    int u;
    Mask cand;
  };

  bool augment(int d) {
    for (int e : adj_[d]) {
      if (seen_[e]) continue;
      seen_[e] = 1;
      if (match_[e] < 0 || augment(match_[e])) {
        match_[e] = d;
        return true;
      }
    }
    return false;
  }

  const Instance& in_;
  std::vector<Demand> demands_;
  std::vector<Edge> keys_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> match_;
  std::vector<char> seen_;
};

struct Outcome {
  bool found = false;
  bool aborted = false;
  std::uint64_t nodes = 0;
  std::uint64_t nodes_at_success = 0;
  std::vector<Mask> blocks;
};

// Depth-first search for `target` disjoint blocks.
class BlockSearch {
 public:
  BlockSearch(const Instance& in, int target, std::uint64_t cap, Deadline deadline)
      : in_(in), target_(target), cap_(cap), deadline_(deadline), attach_(in) {}

  // Feasible first blocks in search order.
  std::vector<Mask> first_blocks(Outcome& out) {
    std::vector<Mask> firsts;
    collect_ = &firsts;
    dfs(0, -1);
    collect_ = nullptr;
    out.nodes = nodes_;
    out.aborted = aborted_;
    return firsts;
  }

  Outcome run_from(Mask first) {
    Outcome out;
    blocks_ = {first};
    const bool found = dfs(first, lowest(first));
    out.found = found;
    out.aborted = aborted_;
    out.nodes = nodes_;
    out.nodes_at_success = nodes_;
    if (found) out.blocks = blocks_;
    return out;
  }

 private:
  // Upper bound on how many more blocks fit inside `avail`.
  int room(Mask avail) const {
    int best = count(avail);
    for (int w : in_.terms) best = std::min(best, count(in_.nbr[w] & avail) + ((avail >> w) & 1 ? 1 : 0));
    return best;
  }

  bool tick() {
    ++nodes_;
    if (nodes_ > cap_) {
      aborted_ = true;
      --nodes_;
      return false;
    }
    if (deadline_ && (nodes_ & 4095) == 0 && Clock::now() > *deadline_) aborted_ = true;
    return !aborted_;
  }

  bool dfs(Mask used, int last_min) {
    const int have = static_cast<int>(blocks_.size());
    if (have >= target_ && !collect_) return true;
    const Mask avail = in_.allowed & ~used & above(last_min);
    if (have + room(avail) < target_) return false;
    for (Mask rest = avail; rest; rest &= rest - 1) {
      const int v = lowest(rest);
      const Mask from_v = avail & at_or_above(v);
      if (have + room(from_v) < target_) break;
      if (grow(bit(v), in_.nbr[v] & from_v & ~bit(v), 0, from_v, v, used)) return true;
      if (aborted_) return false;
    }
    return false;
  }

  // Enumerates each connected subset of `avail` containing v exactly once.
  bool grow(Mask cur, Mask frontier, Mask excluded, Mask avail, int v, Mask used) {
    if (aborted_) return false;
    if (!frontier) return visit(cur, v, used);
    const int u = lowest(frontier);
    const Mask next = cur | bit(u);
    const Mask reach = (frontier & ~bit(u)) | (in_.nbr[u] & avail & ~next & ~excluded);
    if (grow(next, reach, excluded, avail, v, used)) return true;
    return grow(cur, frontier & ~bit(u), excluded | bit(u), avail, v, used);
  }

  bool visit(Mask block, int v, Mask used) {
    if (!tick()) return false;
    for (int u : in_.terms)
      if (!(block & bit(u)) && !(in_.nbr[u] & block)) return false;
    blocks_.push_back(block);
    if (attach_.solve(blocks_, nullptr)) {
      if (collect_) {
        collect_->push_back(block);
      } else if (dfs(used | block, v)) {
        return true;
      }
    }
    blocks_.pop_back();
    return false;
  }

  const Instance& in_;
  const int target_;
  const std::uint64_t cap_;
  const Deadline deadline_;
  AttachSolver attach_;
  std::vector<Mask> blocks_;
  std::vector<Mask>* collect_ = nullptr;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
};

// Runs "are there `target` trees?" with the same node accounting for any job
// count: first-level enumeration, then first-block tasks charged in order.
Outcome decide(const Instance& in, int target, std::uint64_t budget, Deadline deadline,
               int jobs) {
  Outcome head;
  std::vector<Mask> firsts = BlockSearch(in, target, budget, deadline).first_blocks(head);
  if (head.aborted) return head;
  const std::uint64_t remaining = budget - head.nodes;

  std::vector<Outcome> results(firsts.size());
  std::vector<char> ran(firsts.size(), 0);
  if (jobs <= 1) {
    std::uint64_t spent = 0;
    for (std::size_t t = 0; t < firsts.size(); ++t) {
      results[t] = BlockSearch(in, target, remaining - spent, deadline).run_from(firsts[t]);
      ran[t] = 1;
      spent += results[t].nodes;
      if (results[t].found || results[t].aborted) break;
    }
  } else {
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> first_hit{firsts.size()};
    auto worker = [&] {
      for (;;) {
        const std::size_t t = next.fetch_add(1);
        if (t >= firsts.size() || t > first_hit.load()) return;
        results[t] = BlockSearch(in, target, remaining, deadline).run_from(firsts[t]);
        ran[t] = 1;
        if (results[t].found || results[t].aborted) {
          std::size_t cur = first_hit.load();
          while (t < cur && !first_hit.compare_exchange_weak(cur, t)) {
          }
        }
      }
    };
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  // Replay in task order against the shared budget.
  Outcome out;
  std::uint64_t spent = head.nodes;
  for (std::size_t t = 0; t < firsts.size(); ++t) {
    if (!ran[t]) break;
    const Outcome& r = results[t];
    if (r.found && spent + r.nodes_at_success <= budget) {
      out.found = true;
      out.blocks = r.blocks;
      out.nodes = spent + r.nodes_at_success;
      return out;
    }
    if (r.aborted || spent + r.nodes > budget) {
      out.aborted = true;
      out.nodes = std::min(budget, spent + r.nodes);
      return out;
    }
    spent += r.nodes;
  }
  out.nodes = spent;
  return out;
}

std::vector<SteinerTree> witness_trees(const Instance& in, const Graph& g,
                                       const TerminalSet& s,
                                       const std::vector<Mask>& blocks) {
  AttachSolver attach(in);
  std::vector<std::vector<Edge>> hang;
  if (!attach.solve(blocks, &hang))
    throw std::logic_error("witness blocks lost their attachment matching");
  std::vector<SteinerTree> trees;
  for (std::size_t t = 0; t < blocks.size(); ++t) {
    std::vector<Edge> edges;
    // BFS spanning tree of the block from its lowest vertex.
    const int root = lowest(blocks[t]);
    Mask reached = bit(root);
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (Mask nb = in.nbr[v] & blocks[t] & ~reached; nb; nb &= nb - 1) {
        const int w = lowest(nb);
        reached |= bit(w);
        edges.emplace_back(v, w);
        q.push(w);
      }
    }
    edges.insert(edges.end(), hang[t].begin(), hang[t].end());
    std::vector<Vertex> vs;
    for (Mask b = blocks[t] | in.terminals; b; b &= b - 1) vs.push_back(lowest(b));
    trees.push_back(strip_leaves_outside(SteinerTree(std::move(vs), std::move(edges)), s));
  }
  (void)g;
  return trees;
}

Deadline deadline_for(const SearchConfig& cfg) {
  if (!cfg.time_budget) return std::nullopt;
  return Clock::now() + *cfg.time_budget;
}

SearchResult finish(SearchResult r, const std::optional<int>& cap) {
  if (cap && r.lower >= *cap && r.lower < r.upper) {
    r.status = SearchStatus::indeterminate;
    r.note = "stopped at max_trees";
  }
  return r;
}

SearchResult search_blocks(const Instance& in, const Graph& g, const TerminalSet& s,
                           const SearchConfig& cfg, int proven_upper) {
  SearchResult r;
  r.upper = proven_upper;
  const Deadline deadline = deadline_for(cfg);
  std::uint64_t spent = 0;
  int last_target = proven_upper;
  if (cfg.max_trees) last_target = std::min(last_target, *cfg.max_trees);
  for (int target = 1; target <= last_target; ++target) {
    Outcome o = decide(in, target, cfg.node_budget - spent, deadline, cfg.jobs);
    spent += o.nodes;
    r.nodes = spent;
    if (o.found) {
      r.lower = target;
      r.witness = witness_trees(in, g, s, o.blocks);
      continue;
    }
    if (o.aborted) {
      r.status = SearchStatus::indeterminate;
      r.note = spent >= cfg.node_budget ? "node budget exhausted" : "time budget exhausted";
      return r;
    }
    r.upper = r.lower;
    return r;
  }
  return finish(r, cfg.max_trees);
}

struct PackedTree {
  std::vector<Mask> edge_bits;
  Mask internal = 0;
};

// Raw enumeration; the caller owns the connectivity policy.
std::vector<SteinerTree> all_steiner_trees(const Graph& g, const TerminalSet& s,
                                           const Instance& in) {
  std::vector<SteinerTree> out;
  const auto& terms = s.members();
  if (terms.size() == 2 && g.has_edge(terms[0], terms[1]))
    out.push_back(SteinerTree(terms, {Edge(terms[0], terms[1])}));

  std::vector<int> outside;
  std::function<void(Mask, Mask, Mask, Mask)> grow;
  auto emit_for_block = [&](Mask block) {
    outside.clear();
    for (int u : in.terms)
      if (!(block & bit(u))) {
        if (!(in.nbr[u] & block)) return;
        outside.push_back(u);
      }
    std::vector<Edge> inner;
    for (const Edge& e : g.edges())
      if ((block & bit(e.u)) && (block & bit(e.v))) inner.push_back(e);
    const int k = count(block);
    std::vector<Edge> chosen;
    std::vector<int> deg(in.n, 0);

    std::function<void(std::size_t)> hang = [&](std::size_t idx) {
      if (idx == outside.size()) {
        for (Mask b = block; b; b &= b - 1)
          if (deg[lowest(b)] < 2) return;
        std::vector<Vertex> vs;
        for (Mask b = block | in.terminals; b; b &= b - 1) vs.push_back(lowest(b));
        out.push_back(SteinerTree(std::move(vs), chosen));
        return;
      }
      const int u = outside[idx];
      for (Mask c = in.nbr[u] & block; c; c &= c - 1) {
        const int w = lowest(c);
        chosen.emplace_back(u, w);
        ++deg[w];
        ++deg[u];
        hang(idx + 1);
        --deg[w];
        --deg[u];
        chosen.pop_back();
      }
    };

    std::function<void(std::size_t, int)> span = [&](std::size_t idx, int picked) {
      if (picked == k - 1) {
        detail::UnionFind uf(in.n);
        for (const Edge& e : chosen) uf.unite(e.u, e.v);
        const int root = uf.find(lowest(block));
        for (Mask b = block; b; b &= b - 1)
          if (uf.find(lowest(b)) != root) return;
        hang(0);
        return;
      }
      if (inner.size() - idx < static_cast<std::size_t>(k - 1 - picked)) return;
      // Take inner[idx] unless it closes a cycle.
      {
        detail::UnionFind uf(in.n);
        bool cycle = false;
        for (const Edge& e : chosen) uf.unite(e.u, e.v);
        if (!uf.unite(inner[idx].u, inner[idx].v)) cycle = true;
        if (!cycle) {
          chosen.push_back(inner[idx]);
          ++deg[inner[idx].u];
          ++deg[inner[idx].v];
          span(idx + 1, picked + 1);
          --deg[inner[idx].u];
          --deg[inner[idx].v];
          chosen.pop_back();
        }
      }
      span(idx + 1, picked);
    };
    span(0, 0);
  };

  grow = [&](Mask cur, Mask frontier, Mask excluded, Mask avail) {
    if (!frontier) {
      emit_for_block(cur);
      return;
    }
    const int u = lowest(frontier);
    const Mask next = cur | bit(u);
    grow(next, (frontier & ~bit(u)) | (in.nbr[u] & avail & ~next & ~excluded), excluded, avail);
    grow(cur, frontier & ~bit(u), excluded | bit(u), avail);
  };
  for (Mask rest = in.allowed; rest; rest &= rest - 1) {
    const int v = lowest(rest);
    const Mask avail = in.allowed & at_or_above(v);
    grow(bit(v), in.nbr[v] & avail & ~bit(v), 0, avail);
  }

  std::sort(out.begin(), out.end(), [](const SteinerTree& a, const SteinerTree& b) {
    if (a.edges().size() != b.edges().size()) return a.edges().size() < b.edges().size();
    return a.edges() < b.edges();
  });
  return out;
}

SearchResult search_tree_packing(const Instance& in, const Graph& g, const TerminalSet& s,
                                 const SearchConfig& cfg, int proven_upper) {
  const std::vector<SteinerTree> trees = all_steiner_trees(g, s, in);
  const std::size_t words = (g.num_edges() + 63) / 64;
  std::vector<PackedTree> packed;
  for (const SteinerTree& t : trees) {
    PackedTree p;
    p.edge_bits.assign(words, 0);
    for (const Edge& e : t.edges()) {
      const auto idx = std::lower_bound(g.edges().begin(), g.edges().end(), e) - g.edges().begin();
      p.edge_bits[idx / 64] |= Mask{1} << (idx % 64);
    }
    for (Vertex v : t.internal_vertices()) p.internal |= bit(v);
    packed.push_back(std::move(p));
  }

  SearchResult r;
  r.upper = proven_upper;
  int goal = proven_upper;
  if (cfg.max_trees) goal = std::min(goal, *cfg.max_trees);
  const Deadline deadline = deadline_for(cfg);
  std::vector<std::size_t> stack, best;
  std::vector<Mask> used(words, 0);
  bool aborted = false;

  std::function<void(std::size_t, Mask)> dfs = [&](std::size_t start, Mask internal) {
    if (static_cast<int>(stack.size()) > static_cast<int>(best.size())) best = stack;
    if (static_cast<int>(best.size()) >= goal) return;
    if (stack.size() + (packed.size() - start) <= best.size()) return;
    for (std::size_t t = start; t < packed.size() && !aborted; ++t) {
      if (static_cast<int>(best.size()) >= goal) return;
      ++r.nodes;
      if (r.nodes > cfg.node_budget ||
          (deadline && (r.nodes & 4095) == 0 && Clock::now() > *deadline)) {
        aborted = true;
        return;
      }
      const PackedTree& p = packed[t];
      if (p.internal & internal) continue;
      bool clash = false;
      for (std::size_t w = 0; w < words && !clash; ++w) clash = (p.edge_bits[w] & used[w]) != 0;
      if (clash) continue;
      for (std::size_t w = 0; w < words; ++w) used[w] |= p.edge_bits[w];
      stack.push_back(t);
      dfs(t + 1, internal | p.internal);
      stack.pop_back();
      for (std::size_t w = 0; w < words; ++w) used[w] &= ~p.edge_bits[w];
    }
  };
  dfs(0, 0);

  r.lower = static_cast<int>(best.size());
  for (std::size_t t : best) r.witness.push_back(trees[t]);
  if (aborted) {
    r.status = SearchStatus::indeterminate;
    r.note = r.nodes > cfg.node_budget ? "node budget exhausted" : "time budget exhausted";
    r.nodes = std::min(r.nodes, cfg.node_budget);
    return r;
  }
  if (r.lower < goal) r.upper = r.lower;
  return finish(r, cfg.max_trees);
}

bool next_combination(std::vector<int>& c, int n) {
  const int k = static_cast<int>(c.size());
  int i = k - 1;
  while (i >= 0 && c[i] == n - k + i) --i;
  if (i < 0) return false;
  ++c[i];
  for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
  return true;
}

// Orbit representatives of k-subsets under the obvious automorphisms of K_n
// and K_{p,q}; empty when the host is neither.
std::vector<std::vector<Vertex>> orbit_representatives(const Graph& g, int k) {
  const int n = g.n();
  if (static_cast<long long>(g.num_edges()) * 2 == static_cast<long long>(n) * (n - 1)) {
    std::vector<Vertex> first(k);
    for (int v = 0; v < k; ++v) first[v] = v;
    return {first};
  }
  if (n < 2 || !g.is_connected()) return {};
  std::vector<int> side(n, -1);
  side[0] = 0;
  std::queue<Vertex> q;
  q.push(0);
  while (!q.empty()) {
    Vertex v = q.front();
    q.pop();
    for (Vertex w : g.neighbors(v)) {
      if (side[w] < 0) {
        side[w] = 1 - side[v];
        q.push(w);
      } else if (side[w] == side[v]) {
        return {};
      }
    }
  }
  std::vector<Vertex> a, b;
  for (Vertex v = 0; v < n; ++v) (side[v] == 0 ? a : b).push_back(v);
  if (g.num_edges() != a.size() * b.size()) return {};
  std::vector<std::vector<Vertex>> reps;
  for (int i = 0; i <= k; ++i) {
    if (i > static_cast<int>(a.size()) || k - i > static_cast<int>(b.size())) continue;
    std::vector<Vertex> rep(a.begin(), a.begin() + i);
    rep.insert(rep.end(), b.begin(), b.begin() + (k - i));
    std::sort(rep.begin(), rep.end());
    reps.push_back(std::move(rep));
  }
  return reps;
}

}  // namespace

void SearchConfig::validate() const {
  if (node_budget == 0) throw Error(Errc::out_of_range, "node budget must be positive");
  if (time_budget && time_budget->count() <= 0)
    throw Error(Errc::out_of_range, "time budget must be positive");
  if (max_trees && *max_trees < 1) throw Error(Errc::out_of_range, "max_trees must be >= 1");
  if (jobs < 1) throw Error(Errc::out_of_range, "jobs must be >= 1");
}

TreeEnumeration enumerate_steiner_trees(const Graph& g, const TerminalSet& s,
                                        const std::vector<bool>& internal_allowed) {
  const Instance in = make_instance(g, s, internal_allowed);
  if (!g.is_connected()) return {{}, "host graph is disconnected"};
  return {all_steiner_trees(g, s, in), std::nullopt};
}

int degree_upper_bound(const Graph& g, const TerminalSet& s) {
  int best = std::numeric_limits<int>::max();
  for (Vertex w : s.members()) best = std::min(best, g.degree(w));
  return best;
}

SearchResult exact_kappa_star(const Graph& g, const TerminalSet& s, const SearchConfig& cfg) {
  cfg.validate();
  const Instance in = make_instance(g, s, {});
  if (!terminals_connected(in)) {
    SearchResult r;
    r.note = "terminals lie in different components";
    return r;
  }
  const int proven_upper = degree_upper_bound(g, s);
  return cfg.engine == SearchEngine::blocks
             ? search_blocks(in, g, s, cfg, proven_upper)
             : search_tree_packing(in, g, s, cfg, proven_upper);
}

GeneralizedResult exact_generalized_kappa_star(const Graph& g, int k, const SearchConfig& cfg) {
  if (k < 2 || k > g.n()) throw Error(Errc::out_of_range, "need 2 <= k <= n");
  cfg.validate();
  std::vector<std::vector<Vertex>> subsets;
  if (cfg.use_symmetry) subsets = orbit_representatives(g, k);
  const bool enumerate_all = subsets.empty();

  GeneralizedResult out;
  int lower = std::numeric_limits<int>::max();
  int upper = std::numeric_limits<int>::max();
  auto consider = [&](const std::vector<Vertex>& members) {
    SearchResult r = exact_kappa_star(g, TerminalSet(members), cfg);
    ++out.subsets_searched;
    out.result.nodes += r.nodes;
    lower = std::min(lower, r.lower);
    if (r.upper < upper) {
      upper = r.upper;
      out.minimizer = members;
      out.result.witness = r.witness;
    }
  };
  if (enumerate_all) {
    std::vector<int> c(k);
    for (int v = 0; v < k; ++v) c[v] = v;
    do {
      consider(std::vector<Vertex>(c.begin(), c.end()));
    } while (next_combination(c, g.n()));
  } else {
    for (const auto& rep : subsets) consider(rep);
  }
  out.result.lower = lower;
  out.result.upper = upper;
  out.result.status = lower == upper ? SearchStatus::exact : SearchStatus::indeterminate;
  if (!out.result.is_exact()) out.result.note = "some subsets hit a budget";
  return out;
}

}  // namespace cisst
