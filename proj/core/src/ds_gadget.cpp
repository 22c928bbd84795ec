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

#include "countkernel/ds_gadget.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <utility>

namespace countkernel {

std::vector<WideDiamond> find_wide_diamonds(const MultiGraph& g) {
  if (!g.is_simple()) throw GraphError("find_wide_diamonds: graph has parallel edges");
  std::map<std::pair<VertexId, VertexId>, VertexSet> groups;
  for (VertexId c : g.vertices()) {
    if (g.degree(c) != 2) continue;
    const VertexSet nb = g.neighbors(c);
    groups[{nb[0], nb[1]}].push_back(c);
  }
  std::vector<WideDiamond> out;
  out.reserve(groups.size());
  for (auto& [ends, members] : groups) out.push_back({std::move(members), ends.first, ends.second});
  std::sort(out.begin(), out.end(),
            [](const WideDiamond& a, const WideDiamond& b) { return a.members.front() < b.members.front(); });
  return out;
}

GadgetResult replace_wide_diamond(const MultiGraph& g, const WideDiamond& d, int k) {
  if (!g.is_simple()) throw GraphError("replace_wide_diamond: graph has parallel edges");
  if (d.v == d.u) throw GraphError("replace_wide_diamond: endpoints coincide");
  if (d.members.empty()) throw GraphError("replace_wide_diamond: empty diamond");
  const VertexSet members = make_vertex_set(d.members);
  const VertexSet ends = make_vertex_set({d.v, d.u});
  for (VertexId c : members) {
    if (!g.has_vertex(c) || g.neighbors(c) != ends) {
      throw GraphError("replace_wide_diamond: vertex " + std::to_string(c) + " is not adjacent to exactly the endpoints");
    }
  }

  GadgetResult out{g, k, members};
  if (members.size() <= 4) return out;

  // A 2^0 share is a single member adjacent to both endpoints, so an odd
  // remainder keeps a fourth original member instead of an empty gadget.
  const std::size_t kept = 3 + ((members.size() - 3) & 1U);
  VertexSet replacement(members.begin(), members.begin() + static_cast<std::ptrdiff_t>(kept));
  MultiGraph& h = out.graph;
  for (auto it = members.begin() + static_cast<std::ptrdiff_t>(kept); it != members.end(); ++it) h.remove_vertex(*it);

  for (int p : power_decompose(members.size() - 3)) {
    if (p == 0) continue;
    const VertexId x_v = h.add_vertex();
    const VertexId x_u = h.add_vertex();
    h.add_edge(x_v, d.v);
    h.add_edge(x_u, d.u);
    replacement.push_back(x_v);
    replacement.push_back(x_u);
    for (int i = 0; i < p; ++i) {
      const VertexId a = h.add_vertex();
      const VertexId b = h.add_vertex();
      const VertexId e = h.add_vertex();
      h.add_edge(a, b);
      h.add_edge(a, x_v);
      h.add_edge(a, x_u);
      h.add_edge(b, x_v);
      h.add_edge(b, x_u);
      h.add_edge(e, b);
      replacement.insert(replacement.end(), {a, b, e});
    }
    out.k += p;
  }
  out.replacement = make_vertex_set(std::move(replacement));
  return out;
}

std::string to_string(DiamondProperty p) {
  switch (p) {
    case DiamondProperty::kEndpointHit:
      return "endpoint-hit";
    case DiamondProperty::kBothEndpointsNoMember:
      return "both-endpoints-no-member";
    case DiamondProperty::kAtMostOneMember:
      return "at-most-one-member";
  }
  return "unknown";
}

std::vector<DiamondProperty> diamond_observation_check(const MultiGraph& /*g*/, const WideDiamond& d,
                                                       const VertexSet& x) {
  const VertexSet xs = make_vertex_set(x);
  const bool has_v = contains(xs, d.v);
  const bool has_u = contains(xs, d.u);
  const auto in_c = std::count_if(d.members.begin(), d.members.end(), [&](VertexId c) { return contains(xs, c); });

  std::vector<DiamondProperty> violated;
  if (!has_v && !has_u) violated.push_back(DiamondProperty::kEndpointHit);
  if (has_v && has_u && in_c > 0) violated.push_back(DiamondProperty::kBothEndpointsNoMember);
  if (in_c > 1) violated.push_back(DiamondProperty::kAtMostOneMember);
  return violated;
}

}  // namespace countkernel
