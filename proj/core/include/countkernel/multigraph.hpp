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

#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace countkernel {

using VertexId = std::uint32_t;
using Multiplicity = std::uint32_t;

/// Sorted, duplicate-free list of vertices.
using VertexSet = std::vector<VertexId>;

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Edge {
  VertexId u = 0;  // u < v
  VertexId v = 0;
  Multiplicity multiplicity = 1;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Undirected multigraph without self-loops.
///
/// Vertex ids are never renumbered: deleting a vertex leaves a hole, and
/// add_vertex() hands out the smallest id that has never been used. Edges
/// are stored as a multiplicity per unordered pair.
class MultiGraph {
 public:
  MultiGraph() = default;
  /// Graph with vertices 0..n-1 and no edges.
  explicit MultiGraph(std::size_t n);

  VertexId add_vertex();
  /// Makes `v` present. Ids beyond the current range are allowed; the
  /// skipped ids are treated as used.
  void ensure_vertex(VertexId v);
  /// Adds `count` parallel copies of {u, v}.
  void add_edge(VertexId u, VertexId v, Multiplicity count = 1);
  /// Sets the multiplicity of {u, v}; zero removes the pair.
  void set_multiplicity(VertexId u, VertexId v, Multiplicity count);
  void remove_edge_one(VertexId u, VertexId v);
  void remove_edges_between(VertexId u, VertexId v);
  void remove_vertex(VertexId v);

  bool has_vertex(VertexId v) const noexcept {
    return v < present_.size() && present_[v];
  }
  bool has_edge(VertexId u, VertexId v) const noexcept { return multiplicity(u, v) > 0; }
  Multiplicity multiplicity(VertexId u, VertexId v) const noexcept;

  std::size_t degree(VertexId v) const;
  /// Distinct neighbours, ascending.
  VertexSet neighbors(VertexId v) const;
  /// Neighbour -> multiplicity, ascending by neighbour.
  const std::map<VertexId, Multiplicity>& incident(VertexId v) const;

  std::size_t num_vertices() const noexcept { return num_vertices_; }
  /// Sum of all multiplicities.
  std::size_t num_edges() const noexcept { return num_edges_; }
  /// Number of vertex pairs with nonzero multiplicity.
  std::size_t num_edge_pairs() const noexcept { return num_pairs_; }
  bool empty() const noexcept { return num_vertices_ == 0; }

  /// Upper bound (exclusive) on every id handed out so far.
  VertexId id_bound() const noexcept { return static_cast<VertexId>(present_.size()); }

  VertexSet vertices() const;
  /// All edges with u < v, sorted by (u, v).
  std::vector<Edge> edges() const;
  Multiplicity max_multiplicity() const noexcept;
  bool is_simple() const noexcept { return max_multiplicity() <= 1; }

  friend bool operator==(const MultiGraph& a, const MultiGraph& b);

 private:
  void require_vertex(VertexId v) const;

  std::vector<std::map<VertexId, Multiplicity>> adj_;
  std::vector<bool> present_;
  std::size_t num_vertices_ = 0;
  std::size_t num_edges_ = 0;
  std::size_t num_pairs_ = 0;
};

/// Maximal path or cycle of degree-2 vertices.
struct Chain {
  /// Chain vertices in adjacency order. For a proper chain, path.front()
  /// is attached to the lower-id endpoint.
  std::vector<VertexId> path;
  /// N_G(path), ascending; empty when the chain is a whole cycle.
  VertexSet endpoints;

  bool is_cycle() const noexcept { return endpoints.empty(); }
  friend bool operator==(const Chain&, const Chain&) = default;
};

std::size_t degree(const MultiGraph& g, VertexId v);

/// True iff g has no cycle; an edge of multiplicity >= 2 is a 2-cycle.
bool is_forest(const MultiGraph& g);

/// Vertices whose degree is not two, ascending.
VertexSet v_neq2(const MultiGraph& g);

/// One chain per component of g - V_{!=2}(g), ordered by smallest member.
std::vector<Chain> chains(const MultiGraph& g);

struct Contraction {
  MultiGraph graph;
  VertexId merged = 0;
};

/// Merges adjacent u and v into a fresh vertex. All u-v edges vanish; edges
/// to a common neighbour add up in multiplicity.
Contraction contract_edge(const MultiGraph& g, VertexId u, VertexId v);

/// Components as ascending vertex lists, ordered by smallest member.
std::vector<VertexSet> connected_components(const MultiGraph& g);

MultiGraph delete_vertices(const MultiGraph& g, const VertexSet& s);
MultiGraph delete_edge_one(const MultiGraph& g, VertexId u, VertexId v);

/// Induced subgraph on `keep`; ids are preserved.
MultiGraph induced_subgraph(const MultiGraph& g, const VertexSet& keep);

/// True iff removing `s` from g leaves a forest.
bool is_feedback_vertex_set(const MultiGraph& g, const VertexSet& s);

/// Sorts and deduplicates.
VertexSet make_vertex_set(std::vector<VertexId> vs);
bool contains(const VertexSet& s, VertexId v);

}  // namespace countkernel
