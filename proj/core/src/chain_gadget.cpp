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

#include "countkernel/chain_gadget.hpp"

#include <algorithm>
#include <stdexcept>

namespace countkernel {

std::vector<int> power_decompose(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("power_decompose: n must be positive");
  std::vector<int> out;
  for (int p = 63; p >= 0; --p) {
    if ((n >> p) & 1U) out.push_back(p);
  }
  return out;
}

namespace {

const Chain& find_matching_chain(const std::vector<Chain>& all, const Chain& c) {
  const VertexSet wanted = make_vertex_set(c.path);
  for (const Chain& candidate : all) {
    if (candidate.path.size() == wanted.size() && make_vertex_set(candidate.path) == wanted) {
      if (candidate.endpoints != c.endpoints) break;
      return candidate;
    }
  }
  throw GraphError("replace_chain: argument is not a chain of the graph");
}

VertexId outside_neighbor(const MultiGraph& g, VertexId x, const VertexSet& members) {
  for (const auto& [y, m] : g.incident(x)) {
    if (!contains(members, y)) return y;
  }
  throw GraphError("replace_chain: chain end without an outside neighbour");
}

}  // namespace

GadgetResult replace_chain(const MultiGraph& g, const Chain& c, int k) {
  if (c.path.empty()) throw GraphError("replace_chain: empty chain");
  const auto all = chains(g);
  const Chain& chain = find_matching_chain(all, c);
  const VertexSet members = make_vertex_set(chain.path);

  VertexId left = 0;
  VertexId right = 0;
  std::vector<VertexId> replaced;
  VertexSet replacement;
  if (chain.is_cycle()) {
    // The smallest member (path.front()) acts as both endpoints.
    left = right = chain.path.front();
    replaced.assign(chain.path.begin() + 1, chain.path.end());
    replacement.push_back(left);
  } else if (chain.path.size() == 1) {
    const auto& inc = g.incident(chain.path.front());
    left = inc.begin()->first;
    right = inc.rbegin()->first;
    replaced = chain.path;
  } else {
    left = outside_neighbor(g, chain.path.front(), members);
    right = outside_neighbor(g, chain.path.back(), members);
    replaced = chain.path;
  }

  GadgetResult out{g, k, {}};
  MultiGraph& h = out.graph;
  for (VertexId x : replaced) h.remove_vertex(x);

  std::vector<VertexId> spine{left};
  for (int p : power_decompose(replaced.size())) {
    const VertexId w = h.add_vertex();
    replacement.push_back(w);
    for (int i = 0; i < p; ++i) {
      const VertexId a = h.add_vertex();
      const VertexId b = h.add_vertex();
      h.add_edge(w, a, 2);
      h.add_edge(a, b, 2);
      replacement.push_back(a);
      replacement.push_back(b);
    }
    spine.push_back(w);
    out.k += p;
  }
  spine.push_back(right);
  for (std::size_t i = 0; i + 1 < spine.size(); ++i) h.add_edge(spine[i], spine[i + 1]);

  out.replacement = make_vertex_set(std::move(replacement));
  return out;
}

ChainReplacement replace_all_chains(const MultiGraph& g, int k, std::uint64_t threshold) {
  ChainReplacement out{false, g, k};
  const auto all = chains(g);
  for (const Chain& c : all) {
    if (c.path.size() > threshold) {
      out.too_long = true;
      return out;
    }
  }
  for (const Chain& c : all) {
    GadgetResult step = replace_chain(out.graph, c, out.k);
    out.graph = std::move(step.graph);
    out.k = step.k;
  }
  return out;
}

}  // namespace countkernel
