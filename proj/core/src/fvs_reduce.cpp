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

#include "countkernel/fvs_reduce.hpp"

#include <algorithm>
#include <iterator>
#include <vector>

namespace countkernel {

MultiGraph apply_r1(const MultiGraph& g) {
  MultiGraph h = g;
  for (const Edge& e : g.edges()) {
    if (e.multiplicity > 2) h.set_multiplicity(e.u, e.v, 2);
  }
  return h;
}

MultiGraph apply_r2(const MultiGraph& g) {
  MultiGraph h = g;
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
  return h;
}

MultiGraph degree_reduce(const MultiGraph& g, int k, VertexId v, const VertexSet& y_v) {
  if (!g.has_vertex(v)) throw GraphError("degree_reduce: unknown vertex " + std::to_string(v));
  if (k < 0) throw GraphError("degree_reduce: negative parameter");
  if (g.max_multiplicity() > 2) throw GraphError("degree_reduce: graph is not reduced by R1");
  for (VertexId y : y_v) {
    if (!g.has_vertex(y)) throw GraphError("degree_reduce: Y_v has unknown vertex " + std::to_string(y));
  }
  if (contains(y_v, v)) throw GraphError("degree_reduce: v must not belong to Y_v");
  if (!is_feedback_vertex_set(g, y_v)) throw GraphError("degree_reduce: Y_v is not a feedback vertex set");

  VertexSet removed = y_v;
  removed.push_back(v);
  removed = make_vertex_set(std::move(removed));
  const auto trees = connected_components(delete_vertices(g, removed));

  std::vector<int> tree_of(g.id_bound(), -1);
  for (std::size_t t = 0; t < trees.size(); ++t) {
    for (VertexId x : trees[t]) tree_of[x] = static_cast<int>(t);
  }
  auto touched_trees = [&](VertexId x) {
    std::vector<int> out;
    for (const auto& [y, m] : g.incident(x)) {
      if (tree_of[y] >= 0) out.push_back(tree_of[y]);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  };

  const std::vector<int> at_v = touched_trees(v);
  std::vector<char> marked(trees.size(), 0);
  const auto quota = static_cast<std::size_t>(k) + 2;
  for (VertexId u : y_v) {
    std::vector<int> both;
    std::ranges::set_intersection(at_v, touched_trees(u), std::back_inserter(both));
    std::size_t count = std::ranges::count_if(both, [&](int t) { return marked[t] != 0; });
    for (int t : both) {
      if (count >= quota) break;
      if (!marked[t]) {
        marked[t] = 1;
        ++count;
      }
    }
  }

  MultiGraph out = g;
  for (const auto& [y, m] : g.incident(v)) {
    if (tree_of[y] >= 0 && !marked[tree_of[y]]) out.remove_edges_between(v, y);
  }
  return out;
}

KernelResult kernelize_fvs(const MultiGraph& g, int k) {
  KernelResult result;
  if (k < 0) {
    result.trivially_zero = true;
    return result;
  }
  const std::size_t budget = static_cast<std::size_t>(kApproxRatio) * static_cast<std::size_t>(k);

  MultiGraph h = apply_r1(g);
  const VertexSet x = approx_fvs(h);
  if (x.size() > budget) {
    result.trivially_zero = true;
    return result;
  }

  int k_cur = k;
  for (VertexId v : x) {
    const VertexSet y_v = approx_fvs(h, v);
    if (y_v.size() > budget) {
      // Every solution of size <= k contains v.
      h.remove_vertex(v);
      if (--k_cur < 0) {
        result.trivially_zero = true;
        return result;
      }
      continue;
    }
    h = degree_reduce(h, k_cur, v, y_v);
  }

  result.graph = apply_r2(h);
  result.k = k_cur;
  return result;
}

}  // namespace countkernel
