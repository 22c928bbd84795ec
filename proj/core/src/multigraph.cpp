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

#include "countkernel/multigraph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace countkernel {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[std::max(a, b)] = std::min(a, b);
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

MultiGraph::MultiGraph(std::size_t n) : adj_(n), present_(n, true), num_vertices_(n) {}

VertexId MultiGraph::add_vertex() {
  const auto id = static_cast<VertexId>(present_.size());
  adj_.emplace_back();
  present_.push_back(true);
  ++num_vertices_;
  return id;
}

void MultiGraph::ensure_vertex(VertexId v) {
  if (v >= present_.size()) {
    adj_.resize(std::size_t{v} + 1);
    present_.resize(std::size_t{v} + 1, false);
  }
  if (!present_[v]) {
    present_[v] = true;
    ++num_vertices_;
  }
}

void MultiGraph::require_vertex(VertexId v) const {
  if (!has_vertex(v)) throw GraphError("unknown vertex " + std::to_string(v));
}

Multiplicity MultiGraph::multiplicity(VertexId u, VertexId v) const noexcept {
  if (!has_vertex(u) || !has_vertex(v)) return 0;
  const auto& nb = adj_[u];
  const auto it = nb.find(v);
  return it == nb.end() ? 0 : it->second;
}

void MultiGraph::add_edge(VertexId u, VertexId v, Multiplicity count) {
  if (count == 0) return;
  set_multiplicity(u, v, multiplicity(u, v) + count);
}

void MultiGraph::set_multiplicity(VertexId u, VertexId v, Multiplicity count) {
  require_vertex(u);
  require_vertex(v);
  if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
  const Multiplicity old = multiplicity(u, v);
  if (old == count) return;
  num_edges_ = num_edges_ - old + count;
  if (count == 0) {
    adj_[u].erase(v);
    adj_[v].erase(u);
    --num_pairs_;
    return;
  }
  if (old == 0) ++num_pairs_;
  adj_[u][v] = count;
  adj_[v][u] = count;
}

void MultiGraph::remove_edge_one(VertexId u, VertexId v) {
  const Multiplicity m = multiplicity(u, v);
  if (m == 0) {
    throw GraphError("no edge {" + std::to_string(u) + ", " + std::to_string(v) + "}");
  }
  set_multiplicity(u, v, m - 1);
}

void MultiGraph::remove_edges_between(VertexId u, VertexId v) {
  if (multiplicity(u, v) > 0) set_multiplicity(u, v, 0);
}

void MultiGraph::remove_vertex(VertexId v) {
  require_vertex(v);
  for (const auto& [w, m] : adj_[v]) {
    adj_[w].erase(v);
    num_edges_ -= m;
    --num_pairs_;
  }
  adj_[v].clear();
  present_[v] = false;
  --num_vertices_;
}

std::size_t MultiGraph::degree(VertexId v) const {
  require_vertex(v);
  std::size_t d = 0;
  for (const auto& [w, m] : adj_[v]) d += m;
  return d;
}

VertexSet MultiGraph::neighbors(VertexId v) const {
  require_vertex(v);
  VertexSet out;
  out.reserve(adj_[v].size());
  for (const auto& [w, m] : adj_[v]) out.push_back(w);
  return out;
}

const std::map<VertexId, Multiplicity>& MultiGraph::incident(VertexId v) const {
  require_vertex(v);
  return adj_[v];
}

VertexSet MultiGraph::vertices() const {
  VertexSet out;
  out.reserve(num_vertices_);
  for (VertexId v = 0; v < present_.size(); ++v) {
    if (present_[v]) out.push_back(v);
  }
  return out;
}

std::vector<Edge> MultiGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_pairs_);
  for (VertexId u = 0; u < present_.size(); ++u) {
    if (!present_[u]) continue;
    for (auto it = adj_[u].upper_bound(u); it != adj_[u].end(); ++it) {
      out.push_back({u, it->first, it->second});
    }
  }
  return out;
}

Multiplicity MultiGraph::max_multiplicity() const noexcept {
  Multiplicity best = 0;
  for (const auto& nb : adj_) {
    for (const auto& [w, m] : nb) best = std::max(best, m);
  }
  return best;
}

bool operator==(const MultiGraph& a, const MultiGraph& b) {
  return a.vertices() == b.vertices() && a.edges() == b.edges();
}

std::size_t degree(const MultiGraph& g, VertexId v) { return g.degree(v); }

bool is_forest(const MultiGraph& g) {
  DisjointSets sets(g.id_bound());
  for (const Edge& e : g.edges()) {
    if (e.multiplicity > 1 || !sets.unite(e.u, e.v)) return false;
  }
  return true;
}

VertexSet v_neq2(const MultiGraph& g) {
  VertexSet out;
  for (VertexId v : g.vertices()) {
    if (g.degree(v) != 2) out.push_back(v);
  }
  return out;
}

std::vector<Chain> chains(const MultiGraph& g) {
  const VertexId bound = g.id_bound();
  std::vector<char> in_chain(bound, 0);
  for (VertexId v : g.vertices()) in_chain[v] = g.degree(v) == 2;

  std::vector<char> seen(bound, 0);
  std::vector<Chain> out;
  for (VertexId start : g.vertices()) {
    if (!in_chain[start] || seen[start]) continue;

    // Collect the component, then find an end of the path (a vertex with an
    // edge leaving the component) if there is one.
    std::vector<VertexId> comp;
    std::vector<VertexId> stack{start};
    seen[start] = 1;
    while (!stack.empty()) {
      const VertexId x = stack.back();
      stack.pop_back();
      comp.push_back(x);
      for (const auto& [y, m] : g.incident(x)) {
        if (in_chain[y] && !seen[y]) {
          seen[y] = 1;
          stack.push_back(y);
        }
      }
    }

    Chain chain;
    VertexSet ends;      // path ends, i.e. members with an outside edge
    VertexSet outside;   // N_G(component)
    for (VertexId x : comp) {
      bool has_outside = false;
      for (const auto& [y, m] : g.incident(x)) {
        if (!in_chain[y]) {
          has_outside = true;
          outside.push_back(y);
        }
      }
      if (has_outside) ends.push_back(x);
    }
    chain.endpoints = make_vertex_set(std::move(outside));
    std::sort(ends.begin(), ends.end());

    auto outside_neighbor = [&](VertexId x) {
      for (const auto& [y, m] : g.incident(x)) {
        if (!in_chain[y]) return y;
      }
      return x;
    };

    VertexId first;
    if (ends.empty()) {
      first = *std::min_element(comp.begin(), comp.end());
    } else if (ends.size() == 1) {
      first = ends.front();
    } else {
      // Two path ends: start at the one attached to the lower-id endpoint,
      // falling back to the lower-id end when both attach to the same vertex.
      const VertexId a = ends[0];
      const VertexId b = ends[1];
      first = outside_neighbor(b) < outside_neighbor(a) ? b : a;
    }

    // Walk the path. Each member has at most two chain neighbours.
    VertexId prev = first;
    VertexId cur = first;
    chain.path.push_back(first);
    while (chain.path.size() < comp.size()) {
      VertexId next = cur;
      for (const auto& [y, m] : g.incident(cur)) {
        if (in_chain[y] && y != prev && y != cur) {
          next = y;
          break;
        }
      }
      if (next == cur) {
        // Only possible at the start of a cycle walk when the sole chain
        // neighbour is `prev`; cycles of length two land here.
        for (const auto& [y, m] : g.incident(cur)) {
          if (in_chain[y] && y != cur) {
            next = y;
            break;
          }
        }
      }
      prev = cur;
      cur = next;
      chain.path.push_back(cur);
    }
    if (ends.empty() && chain.path.size() > 2) {
      // Walk the cycle towards the smaller neighbour of the start vertex.
      if (chain.path[1] > chain.path.back()) std::reverse(chain.path.begin() + 1, chain.path.end());
    }
    out.push_back(std::move(chain));
  }
  return out;
}

Contraction contract_edge(const MultiGraph& g, VertexId u, VertexId v) {
  if (!g.has_vertex(u) || !g.has_vertex(v)) throw GraphError("contract_edge: unknown vertex");
  if (g.multiplicity(u, v) == 0) {
    throw GraphError("contract_edge: vertices " + std::to_string(u) + " and " + std::to_string(v) +
                     " are not adjacent");
  }
  Contraction out{g, 0};
  MultiGraph& h = out.graph;
  const VertexId s = h.add_vertex();
  for (VertexId x : {u, v}) {
    for (const auto& [y, m] : g.incident(x)) {
      if (y == u || y == v) continue;
      h.add_edge(s, y, m);
    }
  }
  h.remove_vertex(u);
  h.remove_vertex(v);
  out.merged = s;
  return out;
}

std::vector<VertexSet> connected_components(const MultiGraph& g) {
  std::vector<char> seen(g.id_bound(), 0);
  std::vector<VertexSet> out;
  for (VertexId start : g.vertices()) {
    if (seen[start]) continue;
    VertexSet comp;
    std::queue<VertexId> queue;
    queue.push(start);
    seen[start] = 1;
    while (!queue.empty()) {
      const VertexId x = queue.front();
      queue.pop();
      comp.push_back(x);
      for (const auto& [y, m] : g.incident(x)) {
        if (!seen[y]) {
          seen[y] = 1;
          queue.push(y);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

MultiGraph delete_vertices(const MultiGraph& g, const VertexSet& s) {
  MultiGraph h = g;
  for (VertexId v : s) h.remove_vertex(v);
  return h;
}

MultiGraph delete_edge_one(const MultiGraph& g, VertexId u, VertexId v) {
  MultiGraph h = g;
  h.remove_edge_one(u, v);
  return h;
}

MultiGraph induced_subgraph(const MultiGraph& g, const VertexSet& keep) {
  MultiGraph h = g;
  for (VertexId v : g.vertices()) {
    if (!contains(keep, v)) h.remove_vertex(v);
  }
  return h;
}

bool is_feedback_vertex_set(const MultiGraph& g, const VertexSet& s) {
  DisjointSets sets(g.id_bound());
  for (const Edge& e : g.edges()) {
    if (contains(s, e.u) || contains(s, e.v)) continue;
    if (e.multiplicity > 1 || !sets.unite(e.u, e.v)) return false;
  }
  return true;
}

VertexSet make_vertex_set(std::vector<VertexId> vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

bool contains(const VertexSet& s, VertexId v) { return std::binary_search(s.begin(), s.end(), v); }

}  // namespace countkernel
