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

#include "countkernel/fvs_count.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <utility>
#include <stdexcept>
#include <string>

#include "countkernel/fvs_reduce.hpp"

namespace countkernel {

WeightedMultiGraph WeightedMultiGraph::unit(MultiGraph g) {
  std::vector<std::uint64_t> w(g.id_bound(), 1);
  return {std::move(g), std::move(w)};
}

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

// Recursion state of the disjoint counting algorithm. `in_w` marks the
// undeletable set W; `weight` is indexed by vertex id.
struct State {
  MultiGraph g;
  std::vector<std::uint64_t> weight;
  std::vector<char> in_w;

  bool forbidden(VertexId v) const { return v < in_w.size() && in_w[v]; }

  State without(std::initializer_list<VertexId> vs) const {
    State s = *this;
    for (VertexId v : vs) s.g.remove_vertex(v);
    return s;
  }
  State with_forbidden(std::initializer_list<VertexId> vs) const {
    State s = *this;
    for (VertexId v : vs) s.in_w[v] = 1;
    return s;
  }
};

// True iff G[W + extra] has a cycle.
bool induced_has_cycle(const State& s, std::initializer_list<VertexId> extra) {
  auto inside = [&](VertexId x) {
    return s.forbidden(x) || std::find(extra.begin(), extra.end(), x) != extra.end();
  };
  UnionFind uf(s.g.id_bound());
  for (const Edge& e : s.g.edges()) {
    if (!inside(e.u) || !inside(e.v)) continue;
    if (e.multiplicity > 1 || !uf.unite(e.u, e.v)) return true;
  }
  return false;
}

class DisjointCounter {
 public:
  explicit DisjointCounter(BranchOrder order) : order_(order) {}

  CountPair solve(State s, int k) {
    if (k < 0) return CountPair::none();
    if (induced_has_cycle(s, {})) return CountPair::none();

    simplify(s);
    std::vector<VertexId> free = free_vertices(s);
    if (free.empty()) return CountPair::of(0, 1);

    // An isolated 2-cycle of degree-2 vertices: exactly one of the pair is
    // taken. Contracting it would need a self-loop.
    if (const auto pair = find_two_cycle(s, free)) {
      const auto [v, u] = *pair;
      const BigCount w = BigCount(s.weight[v]) + BigCount(s.weight[u]);
      return CountPair::of(1, 0) + CountPair::of(1, w) * solve(s.without({v, u}), k - 1);
    }

    // W's components, for the cycle tests below.
    UnionFind comp(s.g.id_bound());
    for (const Edge& e : s.g.edges()) {
      if (s.forbidden(e.u) && s.forbidden(e.v)) comp.unite(e.u, e.v);
    }

    // Vertex that closes a cycle with W: it is in every solution.
    for (VertexId v : free) {
      bool cycle = false;
      std::vector<std::size_t> seen;
      for (const auto& [x, m] : s.g.incident(v)) {
        if (!s.forbidden(x)) continue;
        const std::size_t root = comp.find(x);
        if (m > 1 || std::find(seen.begin(), seen.end(), root) != seen.end()) {
          cycle = true;
          break;
        }
        seen.push_back(root);
      }
      if (cycle) return take(s, v, k);
    }

    // Vertex with two or more neighbours in W, all in distinct components.
    for (VertexId v : free) {
      if (w_neighbors(s, v) >= 2) {
        const CountPair keep = solve(s.with_forbidden({v}), k);
        return oplus(keep, take(s, v, k));
      }
    }

    // Forest H = G - W. Pick a non-leaf with at most one non-leaf neighbour.
    auto h_degree = [&](VertexId x) {
      std::size_t d = 0;
      for (const auto& [y, m] : s.g.incident(x)) {
        if (!s.forbidden(y)) d += m;
      }
      return d;
    };
    auto is_leaf = [&](VertexId x) { return h_degree(x) <= 1; };

    std::optional<VertexId> pivot;
    for (VertexId v : free) {
      if (is_leaf(v)) continue;
      std::size_t inner = 0;
      for (const auto& [y, m] : s.g.incident(v)) {
        if (!s.forbidden(y) && !is_leaf(y)) ++inner;
      }
      if (inner <= 1) {
        pivot = v;
        break;
      }
    }
    if (!pivot) throw std::logic_error("dj_fvs: no branching vertex in a non-trivial forest");
    const VertexId v = *pivot;

    // Leaf children c of v with N_G(c) = {v, x} for some x in W.
    std::vector<VertexId> children;
    for (const auto& [c, m] : s.g.incident(v)) {
      if (s.forbidden(c) || !is_leaf(c)) continue;
      const VertexSet nb = s.g.neighbors(c);
      if (nb.size() == 2 && contains(nb, v)) {
        const VertexId x = nb[0] == v ? nb[1] : nb[0];
        if (s.forbidden(x)) children.push_back(c);
      }
    }
    if (order_ == BranchOrder::kLargestFirst) std::reverse(children.begin(), children.end());

    const std::size_t v_in_w = w_neighbors(s, v);
    if (v_in_w == 1) {
      if (children.empty()) throw std::logic_error("dj_fvs: branching vertex without a leaf child");
      const VertexId c = children.front();
      CountPair neither = CountPair::none();
      if (!induced_has_cycle(s, {v, c})) neither = solve(s.with_forbidden({v, c}), k);
      const CountPair only_v = take(s, v, k);
      const CountPair only_c =
          CountPair::of(1, 0) + CountPair::of(1, s.weight[c]) * solve(s.without({c}).with_forbidden({v}), k - 1);
      return oplus(oplus(neither, only_v), only_c);
    }
    if (v_in_w == 0) {
      if (children.size() < 2) throw std::logic_error("dj_fvs: branching vertex with fewer than two leaf children");
      const VertexId c1 = children[0];
      const VertexId c2 = children[1];
      CountPair none_taken = CountPair::none();
      if (!induced_has_cycle(s, {v, c1, c2})) none_taken = solve(s.with_forbidden({v, c1, c2}), k);
      const CountPair only_v = take(s, v, k);
      const CountPair only_c1 = CountPair::of(1, 0) + CountPair::of(1, s.weight[c1]) *
                                                          solve(s.without({c1}).with_forbidden({v, c2}), k - 1);
      const CountPair only_c2 = CountPair::of(1, 0) + CountPair::of(1, s.weight[c2]) *
                                                          solve(s.without({c2}).with_forbidden({v, c1}), k - 1);
      const BigCount w12 = BigCount(s.weight[c1]) * BigCount(s.weight[c2]);
      const CountPair both_c =
          CountPair::of(2, 0) + CountPair::of(1, w12) * solve(s.without({c1, c2}).with_forbidden({v}), k - 2);
      return oplus(oplus(oplus(oplus(none_taken, only_v), only_c1), only_c2), both_c);
    }
    throw std::logic_error("dj_fvs: branching vertex has " + std::to_string(v_in_w) + " neighbours in W");
  }

 private:
  // (1, 0) + (1, w(v)) * DJ(G - v, W, k - 1)
  CountPair take(const State& s, VertexId v, int k) {
    return CountPair::of(1, 0) + CountPair::of(1, s.weight[v]) * solve(s.without({v}), k - 1);
  }

  std::vector<VertexId> free_vertices(const State& s) const {
    std::vector<VertexId> out;
    for (VertexId v : s.g.vertices()) {
      if (!s.forbidden(v)) out.push_back(v);
    }
    if (order_ == BranchOrder::kLargestFirst) std::reverse(out.begin(), out.end());
    return out;
  }

  static std::size_t w_neighbors(const State& s, VertexId v) {
    std::size_t n = 0;
    for (const auto& [x, m] : s.g.incident(v)) n += s.forbidden(x) ? 1 : 0;
    return n;
  }

  std::optional<std::pair<VertexId, VertexId>> find_two_cycle(const State& s,
                                                              const std::vector<VertexId>& free) const {
    for (VertexId v : free) {
      if (s.g.degree(v) != 2) continue;
      const auto& inc = s.g.incident(v);
      const auto [u, m] = *inc.begin();
      if (m == 2 && !s.forbidden(u) && s.g.degree(u) == 2) return std::pair{v, u};
    }
    return std::nullopt;
  }

  // Removes free vertices of degree <= 1 and contracts edges between two
  // free degree-2 vertices, summing their weights, until neither applies.
  void simplify(State& s) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (VertexId v : free_vertices(s)) {
        if (s.g.degree(v) <= 1) {
          s.g.remove_vertex(v);
          changed = true;
        }
      }
      if (changed) continue;
      for (VertexId v : free_vertices(s)) {
        if (s.g.degree(v) != 2) continue;
        const auto& inc = s.g.incident(v);
        std::optional<VertexId> partner;
        for (const auto& [u, m] : inc) {
          if (m == 1 && !s.forbidden(u) && s.g.degree(u) == 2) {
            partner = u;
            break;
          }
        }
        if (!partner) continue;
        const std::uint64_t merged_weight = s.weight[v] + s.weight[*partner];
        Contraction c = contract_edge(s.g, v, *partner);
        s.g = std::move(c.graph);
        s.weight.resize(s.g.id_bound(), 0);
        s.in_w.resize(s.g.id_bound(), 0);
        s.weight[c.merged] = merged_weight;
        changed = true;
        break;
      }
    }
  }

  BranchOrder order_;
};

State make_state(const WeightedMultiGraph& g, const VertexSet& w_set) {
  for (VertexId v : g.graph.vertices()) {
    if (v >= g.weight.size() || g.weight[v] == 0) {
      throw GraphError("dj_fvs: vertex " + std::to_string(v) + " has no positive weight");
    }
  }
  State s{g.graph, g.weight, std::vector<char>(g.graph.id_bound(), 0)};
  s.weight.resize(g.graph.id_bound(), 0);
  for (VertexId x : w_set) {
    if (!g.graph.has_vertex(x)) throw GraphError("dj_fvs: W contains unknown vertex " + std::to_string(x));
    s.in_w[x] = 1;
  }
  return s;
}

}  // namespace

CountPair dj_fvs(const WeightedMultiGraph& g, const VertexSet& w_set, int k, BranchOrder order) {
  const VertexSet w_sorted = make_vertex_set(w_set);
  State s = make_state(g, w_sorted);
  if (!is_feedback_vertex_set(g.graph, w_sorted)) throw GraphError("dj_fvs: W is not a feedback vertex set");
  return DisjointCounter(order).solve(std::move(s), k);
}

CountPair fvs_compression(const MultiGraph& g, int k, const VertexSet& z, BranchOrder order) {
  const VertexSet zs = make_vertex_set(z);
  for (VertexId x : zs) {
    if (!g.has_vertex(x)) throw GraphError("fvs_compression: Z contains unknown vertex " + std::to_string(x));
  }
  if (!is_feedback_vertex_set(g, zs)) throw GraphError("fvs_compression: Z is not a feedback vertex set");
  if (zs.size() > 30) throw GraphError("fvs_compression: |Z| > 30 is not supported");

  CountPair best = CountPair::none();
  const std::uint64_t subsets = std::uint64_t{1} << zs.size();
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    VertexSet taken;
    VertexSet kept;
    for (std::size_t i = 0; i < zs.size(); ++i) ((mask >> i) & 1U ? taken : kept).push_back(zs[i]);
    const int budget = k - static_cast<int>(taken.size());
    if (budget < 0) continue;
    const auto rest = WeightedMultiGraph::unit(delete_vertices(g, taken));
    const CountPair sub = CountPair::of(static_cast<std::int64_t>(taken.size()), 0) + dj_fvs(rest, kept, budget, order);
    best = oplus(best, sub);
  }
  return best;
}

CountPair count_min_fvs_pair(const MultiGraph& g, int k) {
  if (k < 0) return CountPair::none();
  const VertexSet z = approx_fvs(g);
  // |z| <= rho * fvn, so a larger z means fvn > k.
  if (z.size() > static_cast<std::size_t>(kApproxRatio) * static_cast<std::size_t>(k)) return CountPair::none();
  return fvs_compression(g, k, z);
}

BigCount count_min_fvs(const MultiGraph& g, int k) { return count_min_fvs_pair(g, k).count; }

}  // namespace countkernel
