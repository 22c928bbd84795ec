// Copyright 2026 The countkernel Authors
//
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

#include "countkernel/oracle.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <numeric>
#include <queue>
#include <set>
#include <string>
#include <unordered_set>

namespace countkernel {

namespace {

void guard_size(const MultiGraph& g, std::size_t limit, const char* what) {
  if (g.num_vertices() > limit) {
    throw OracleGuardError(std::string(what) + ": " + std::to_string(g.num_vertices()) +
                           " vertices exceed the oracle limit of " + std::to_string(limit));
  }
}

// Calls fn(mask) for every subset of n elements with exactly s bits set.
template <typename Fn>
void for_each_subset(std::size_t n, std::size_t s, Fn&& fn) {
  if (s > n) return;
  if (s == 0) {
    fn(std::uint32_t{0});
    return;
  }
  std::uint32_t mask = (std::uint32_t{1} << s) - 1;
  const std::uint32_t limit = std::uint32_t{1} << n;
  while (mask < limit) {
    fn(mask);
    const std::uint32_t low = mask & (~mask + 1);
    const std::uint32_t ripple = mask + low;
    mask = (((ripple ^ mask) >> 2) / low) | ripple;
  }
}

struct IndexedEdges {
  VertexSet ids;  // index -> vertex id
  std::vector<std::array<std::uint32_t, 3>> edges;  // (i, j, multiplicity)
};

IndexedEdges index_graph(const MultiGraph& g) {
  IndexedEdges out;
  out.ids = g.vertices();
  std::vector<std::uint32_t> index(g.id_bound(), 0);
  for (std::uint32_t i = 0; i < out.ids.size(); ++i) index[out.ids[i]] = i;
  for (const Edge& e : g.edges()) out.edges.push_back({index[e.u], index[e.v], e.multiplicity});
  return out;
}

bool acyclic_without(const IndexedEdges& ix, std::uint32_t removed) {
  std::array<std::uint32_t, 32> parent{};
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [i, j, m] : ix.edges) {
    if ((removed >> i) & 1U || (removed >> j) & 1U) continue;
    if (m > 1) return false;
    const auto a = find(i);
    const auto b = find(j);
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

VertexSet mask_to_set(const VertexSet& ids, std::uint32_t mask) {
  VertexSet out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if ((mask >> i) & 1U) out.push_back(ids[i]);
  }
  return out;
}

std::vector<VertexSet> minimum_fvs_sets(const MultiGraph& g, int k) {
  guard_size(g, kBruteForceMaxVertices, "brute_min_fvs");
  const IndexedEdges ix = index_graph(g);
  const std::size_t n = ix.ids.size();
  std::vector<VertexSet> found;
  for (int s = 0; s <= k && static_cast<std::size_t>(s) <= n; ++s) {
    for_each_subset(n, static_cast<std::size_t>(s), [&](std::uint32_t mask) {
      if (acyclic_without(ix, mask)) found.push_back(mask_to_set(ix.ids, mask));
    });
    if (!found.empty()) break;
  }
  std::sort(found.begin(), found.end());
  return found;
}

std::vector<VertexSet> minimum_ds_sets(const MultiGraph& g, int k) {
  guard_size(g, kBruteForceMaxVertices, "brute_min_ds");
  if (!g.is_simple()) throw GraphError("brute_min_ds: graph has parallel edges");
  const IndexedEdges ix = index_graph(g);
  const std::size_t n = ix.ids.size();
  std::vector<std::uint32_t> closed(n);
  for (std::size_t i = 0; i < n; ++i) closed[i] = std::uint32_t{1} << i;
  for (const auto& [i, j, m] : ix.edges) {
    closed[i] |= std::uint32_t{1} << j;
    closed[j] |= std::uint32_t{1} << i;
  }
  const std::uint32_t all = n == 0 ? 0 : static_cast<std::uint32_t>((std::uint64_t{1} << n) - 1);
  std::vector<VertexSet> found;
  for (int s = 0; s <= k && static_cast<std::size_t>(s) <= n; ++s) {
    for_each_subset(n, static_cast<std::size_t>(s), [&](std::uint32_t mask) {
      std::uint32_t covered = 0;
      for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1) covered |= closed[std::countr_zero(rest)];
      if (covered == all) found.push_back(mask_to_set(ix.ids, mask));
    });
    if (!found.empty()) break;
  }
  std::sort(found.begin(), found.end());
  return found;
}

CountPair summarize(const std::vector<VertexSet>& sets) {
  if (sets.empty()) return CountPair::none();
  return CountPair::of(static_cast<std::int64_t>(sets.front().size()), BigCount(sets.size()));
}

// ---------------------------------------------------------------------------
// Cycle branching.

void prune_acyclic_part(MultiGraph& h) {
  std::vector<VertexId> queue;
  for (VertexId v : h.vertices()) {
    if (h.degree(v) <= 1) queue.push_back(v);
  }
  while (!queue.empty()) {
    const VertexId v = queue.back();
    queue.pop_back();
    if (!h.has_vertex(v)) continue;
    const VertexSet nbs = h.neighbors(v);
    h.remove_vertex(v);
    for (VertexId w : nbs) {
      if (h.degree(w) <= 1) queue.push_back(w);
    }
  }
}

// Vertices of a shortest cycle of a graph with minimum degree two.
VertexSet shortest_cycle(const MultiGraph& h) {
  for (const Edge& e : h.edges()) {
    if (e.multiplicity > 1) return {e.u, e.v};
  }
  VertexSet best;
  const VertexId bound = h.id_bound();
  for (VertexId root : h.vertices()) {
    std::vector<int> dist(bound, -1);
    std::vector<VertexId> parent(bound, root);
    std::queue<VertexId> q;
    dist[root] = 0;
    q.push(root);
    bool done = false;
    while (!q.empty() && !done) {
      const VertexId x = q.front();
      q.pop();
      for (const auto& [y, m] : h.incident(x)) {
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          parent[y] = x;
          q.push(y);
        } else if (parent[x] != y) {
          const auto len = static_cast<std::size_t>(dist[x] + dist[y] + 1);
          if (best.empty() || len < best.size()) {
            VertexSet cyc;
            for (VertexId a = x; a != root; a = parent[a]) cyc.push_back(a);
            for (VertexId b = y; b != root; b = parent[b]) cyc.push_back(b);
            cyc.push_back(root);
            cyc = make_vertex_set(std::move(cyc));
            // Both branches may share a prefix; only accept genuine cycles.
            if (cyc.size() == len) best = std::move(cyc);
          }
          done = true;
          break;
        }
      }
    }
    if (best.size() == 3) break;
  }
  return best;
}

void branch_fvs(MultiGraph h, VertexSet& chosen, int budget, std::set<VertexSet>& found) {
  prune_acyclic_part(h);
  if (h.empty()) {
    found.insert(make_vertex_set(chosen));
    return;
  }
  if (budget == 0) return;
  for (VertexId v : shortest_cycle(h)) {
    chosen.push_back(v);
    MultiGraph next = h;
    next.remove_vertex(v);
    branch_fvs(std::move(next), chosen, budget - 1, found);
    chosen.pop_back();
  }
}

void branch_ds(const std::vector<std::uint64_t>& closed, std::uint64_t covered, std::uint64_t all,
               std::uint64_t chosen, int budget, std::set<std::uint64_t>& found) {
  if (covered == all) {
    found.insert(chosen);
    return;
  }
  if (budget == 0) return;
  // Undominated vertex with the fewest candidates.
  int pick = -1;
  int pick_size = 65;
  for (std::uint64_t rest = all & ~covered; rest != 0; rest &= rest - 1) {
    const int x = std::countr_zero(rest);
    const int size = std::popcount(closed[x]);
    if (size < pick_size) {
      pick = x;
      pick_size = size;
    }
  }
  for (std::uint64_t cand = closed[pick]; cand != 0; cand &= cand - 1) {
    const int y = std::countr_zero(cand);
    branch_ds(closed, covered | closed[y], all, chosen | (std::uint64_t{1} << y), budget - 1, found);
  }
}

// ---------------------------------------------------------------------------
// Minor search on simple graphs with at most 12 vertices. Vertices are
// bit positions; adj[i] is the neighbour mask of i (zero if absent).

using Adjacency = std::array<std::uint16_t, kMinorSearchMaxVertices>;

struct MinorState {
  Adjacency adj{};
  std::uint16_t alive = 0;
};

void remove_bit(MinorState& s, int v) {
  for (std::uint16_t rest = s.adj[v]; rest != 0; rest &= rest - 1) {
    s.adj[std::countr_zero(rest)] &= static_cast<std::uint16_t>(~(1U << v));
  }
  s.adj[v] = 0;
  s.alive &= static_cast<std::uint16_t>(~(1U << v));
}

void add_edge_bits(MinorState& s, int a, int b) {
  s.adj[a] |= static_cast<std::uint16_t>(1U << b);
  s.adj[b] |= static_cast<std::uint16_t>(1U << a);
}

// Deletes vertices of degree <= 1 and suppresses degree-2 vertices. Both
// preserve planarity, and K5 and K3,3 have minimum degree three.
void reduce(MinorState& s) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::uint16_t rest = s.alive; rest != 0; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      const int d = std::popcount(s.adj[v]);
      if (d <= 1) {
        remove_bit(s, v);
        changed = true;
      } else if (d == 2) {
        const int a = std::countr_zero(s.adj[v]);
        const int b = 15 - std::countl_zero(s.adj[v]);
        remove_bit(s, v);
        add_edge_bits(s, a, b);
        changed = true;
      }
    }
  }
}

bool is_k33_on(const MinorState& s, std::uint16_t six) {
  // Fix the lowest vertex on side A and try every pair to join it.
  const int first = std::countr_zero(six);
  const std::uint16_t others = six & static_cast<std::uint16_t>(~(1U << first));
  for (std::uint16_t r1 = others; r1 != 0; r1 &= r1 - 1) {
    for (std::uint16_t r2 = r1 & (r1 - 1); r2 != 0; r2 &= r2 - 1) {
      const std::uint16_t side_a = static_cast<std::uint16_t>((1U << first) | (r1 & -r1) | (r2 & -r2));
      const std::uint16_t side_b = six & static_cast<std::uint16_t>(~side_a);
      bool ok = true;
      for (std::uint16_t ra = side_a; ra != 0 && ok; ra &= ra - 1) {
        ok = (s.adj[std::countr_zero(ra)] & side_b) == side_b;
      }
      if (ok) return true;
    }
  }
  return false;
}

class MinorSearch {
 public:
  bool run(MinorState s) {
    reduce(s);
    const int n = std::popcount(s.alive);
    if (n < 5) return false;
    int twice_m = 0;
    for (std::uint16_t rest = s.alive; rest != 0; rest &= rest - 1) twice_m += std::popcount(s.adj[std::countr_zero(rest)]);
    const int m = twice_m / 2;
    if (n == 5) return m == 10;
    if (n == 6 && is_k33_on(s, s.alive)) return true;
    if (!visited_.insert(key(s)).second) return false;

    for (std::uint16_t rest = s.alive; rest != 0; rest &= rest - 1) {
      const int a = std::countr_zero(rest);
      for (std::uint16_t nb = s.adj[a] & static_cast<std::uint16_t>(~((2U << a) - 1)); nb != 0; nb &= nb - 1) {
        const int b = std::countr_zero(nb);
        // Contract b into a.
        MinorState c = s;
        const std::uint16_t merged = static_cast<std::uint16_t>((c.adj[a] | c.adj[b]) & ~((1U << a) | (1U << b)));
        remove_bit(c, b);
        for (std::uint16_t r = merged; r != 0; r &= r - 1) add_edge_bits(c, a, std::countr_zero(r));
        if (run(c)) return true;
        // Delete edge {a, b}.
        MinorState d = s;
        d.adj[a] &= static_cast<std::uint16_t>(~(1U << b));
        d.adj[b] &= static_cast<std::uint16_t>(~(1U << a));
        if (run(d)) return true;
      }
    }
    return false;
  }

 private:
  static std::string key(const MinorState& s) {
    std::string out(sizeof(std::uint16_t) * (kMinorSearchMaxVertices + 1), '\0');
    std::copy_n(reinterpret_cast<const char*>(s.adj.data()), sizeof(std::uint16_t) * kMinorSearchMaxVertices,
                out.data());
    std::copy_n(reinterpret_cast<const char*>(&s.alive), sizeof(std::uint16_t),
                out.data() + sizeof(std::uint16_t) * kMinorSearchMaxVertices);
    return out;
  }

  std::unordered_set<std::string> visited_;
};

}  // namespace

CountPair brute_min_fvs(const MultiGraph& g, int k) { return summarize(minimum_fvs_sets(g, k)); }

CountPair brute_min_ds(const MultiGraph& g, int k) { return summarize(minimum_ds_sets(g, k)); }

std::vector<VertexSet> enumerate_min_ds(const MultiGraph& g, int k) { return minimum_ds_sets(g, k); }

std::vector<VertexSet> enumerate_min_fvs(const MultiGraph& g, int k) { return minimum_fvs_sets(g, k); }

CountPair branching_min_fvs(const MultiGraph& g, int k) {
  if (k > kBranchingMaxBudget) throw OracleGuardError("branching_min_fvs: k exceeds the oracle limit");
  for (int s = 0; s <= k; ++s) {
    std::set<VertexSet> found;
    VertexSet chosen;
    branch_fvs(g, chosen, s, found);
    if (!found.empty()) return CountPair::of(s, BigCount(found.size()));
  }
  return CountPair::none();
}

CountPair branching_min_ds(const MultiGraph& g, int k) {
  if (k > kBranchingMaxBudget) throw OracleGuardError("branching_min_ds: k exceeds the oracle limit");
  guard_size(g, 64, "branching_min_ds");
  if (!g.is_simple()) throw GraphError("branching_min_ds: graph has parallel edges");
  const IndexedEdges ix = index_graph(g);
  const std::size_t n = ix.ids.size();
  std::vector<std::uint64_t> closed(n);
  for (std::size_t i = 0; i < n; ++i) closed[i] = std::uint64_t{1} << i;
  for (const auto& [i, j, m] : ix.edges) {
    closed[i] |= std::uint64_t{1} << j;
    closed[j] |= std::uint64_t{1} << i;
  }
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  for (int s = 0; s <= k; ++s) {
    std::set<std::uint64_t> found;
    branch_ds(closed, 0, all, 0, s, found);
    if (!found.empty()) return CountPair::of(s, BigCount(found.size()));
  }
  return CountPair::none();
}

bool has_k5_or_k33_minor(const MultiGraph& g) {
  guard_size(g, kMinorSearchMaxVertices, "has_k5_or_k33_minor");
  const IndexedEdges ix = index_graph(g);
  MinorState s;
  for (std::size_t i = 0; i < ix.ids.size(); ++i) s.alive |= static_cast<std::uint16_t>(1U << i);
  for (const auto& [i, j, m] : ix.edges) add_edge_bits(s, static_cast<int>(i), static_cast<int>(j));
  return MinorSearch().run(s);
}

}  // namespace countkernel
