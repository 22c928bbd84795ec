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

#include <string>
#include <vector>

#include "countkernel/chain_gadget.hpp"
#include "countkernel/multigraph.hpp"

namespace countkernel {

/// Vertices that all have exactly the two neighbours v and u.
struct WideDiamond {
  VertexSet members;
  VertexId v = 0;  // v < u
  VertexId u = 0;

  friend bool operator==(const WideDiamond&, const WideDiamond&) = default;
};

/// Groups the degree-2 vertices of a simple graph by their neighbour pair.
/// One diamond per pair, ordered by smallest member. Throws GraphError on a
/// graph with parallel edges.
std::vector<WideDiamond> find_wide_diamonds(const MultiGraph& g);

/// Keeps the three smallest members of `d` and replaces the rest by one
/// gadget per power 2^p (p >= 1) in |C| - 3: vertices x_v (adjacent to v)
/// and x_u (adjacent to u), and for each i < p a pair a_i, b_i adjacent to
/// each other and to both x_v and x_u, with a pendant e_i on b_i. When
/// |C| - 3 is odd a fourth member is kept in place of the 2^0 share. The
/// parameter grows by the sum of the exponents. Diamonds with at most four
/// members are returned unchanged.
///
/// Throws GraphError if g is not simple, the endpoints coincide, the
/// member set is empty, or some member's neighbourhood is not {v, u}.
GadgetResult replace_wide_diamond(const MultiGraph& g, const WideDiamond& d, int k);

enum class DiamondProperty {
  kEndpointHit,           // X meets {v, u}
  kBothEndpointsNoMember, // {v, u} in X implies X avoids C
  kAtMostOneMember,       // |X n C| <= 1
};

std::string to_string(DiamondProperty p);

/// Properties a minimum dominating set X must satisfy on a diamond with at
/// least three members; returns the ones X violates.
std::vector<DiamondProperty> diamond_observation_check(const MultiGraph& g, const WideDiamond& d,
                                                       const VertexSet& x);

}  // namespace countkernel
