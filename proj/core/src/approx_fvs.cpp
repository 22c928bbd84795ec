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

#include <algorithm>
#include <iterator>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "countkernel/fvs_reduce.hpp"

namespace countkernel {

namespace {

using Weight = boost::multiprecision::cpp_rational;

void prune_low_degree(MultiGraph& h) {
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

// A cycle in which every vertex but at most one has degree two.
std::optional<VertexSet> find_semidisjoint_cycle(const MultiGraph& h) {
  for (const Chain& c : chains(h)) {
    if (c.endpoints.size() > 1) continue;
    std::vector<VertexId> cycle = c.path;
    if (c.endpoints.size() == 1) cycle.push_back(c.endpoints.front());
    return make_vertex_set(std::move(cycle));
  }
  return std::nullopt;
}

}  // namespace

VertexSet approx_fvs(const MultiGraph& g, std::optional<VertexId> forbidden) {
  if (forbidden && !g.has_vertex(*forbidden)) {
    throw GraphError("approx_fvs: unknown forbidden vertex " + std::to_string(*forbidden));
  }
  std::vector<Weight> weight(g.id_bound(), Weight(1));
  if (forbidden) weight[*forbidden] = Weight(2 * g.num_vertices() + 1);

  MultiGraph h = g;
  std::vector<VertexId> picked;  // in removal order
  for (;;) {
    prune_low_degree(h);
    if (h.empty()) break;

    const VertexSet live = h.vertices();
    const auto zero = std::find_if(live.begin(), live.end(), [&](VertexId v) { return weight[v] == 0; });
    if (zero != live.end()) {
      picked.push_back(*zero);
      h.remove_vertex(*zero);
      continue;
    }

    if (const auto cycle = find_semidisjoint_cycle(h)) {
      Weight eps = weight[cycle->front()];
      for (VertexId v : *cycle) eps = std::min(eps, weight[v]);
      for (VertexId v : *cycle) weight[v] -= eps;
      continue;
    }

    // Every vertex has degree >= 2 here.
    bool first = true;
    Weight eps;
    for (VertexId v : live) {
      const Weight ratio = weight[v] / Weight(h.degree(v) - 1);
      if (first || ratio < eps) eps = ratio;
      first = false;
    }
    for (VertexId v : live) weight[v] -= eps * Weight(h.degree(v) - 1);
  }

  VertexSet solution = make_vertex_set(picked);
  for (auto it = picked.rbegin(); it != picked.rend(); ++it) {
    VertexSet without;
    without.reserve(solution.size());
    std::copy_if(solution.begin(), solution.end(), std::back_inserter(without),
                 [&](VertexId x) { return x != *it; });
    if (is_feedback_vertex_set(g, without)) solution = std::move(without);
  }

  if (forbidden && contains(solution, *forbidden)) {
    throw std::logic_error("approx_fvs: forbidden vertex survived reverse deletion");
  }
  return solution;
}

}  // namespace countkernel
