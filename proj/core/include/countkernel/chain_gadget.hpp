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
#include <vector>

#include "countkernel/multigraph.hpp"

namespace countkernel {

/// Exponents of the binary expansion of n, descending. Throws on n == 0.
std::vector<int> power_decompose(std::uint64_t n);

struct GadgetResult {
  MultiGraph graph;
  int k = 0;
  /// Vertices of the replacement structure, ascending. For a cycle chain
  /// this includes the chain vertex kept as the shared endpoint.
  VertexSet replacement;
};

/// Replaces chain `c` of g by one gadget per power of two in |C| (|C| - 1
/// for a whole-cycle chain, whose smallest vertex stays as the endpoint).
/// A gadget for 2^p chain vertices is a vertex w on the path between its
/// flanks plus p pairs (a_i, b_i) with double edges w-a_i and a_i-b_i.
/// The parameter grows by the sum of the exponents.
///
/// Throws GraphError if `c` is not a chain of g.
GadgetResult replace_chain(const MultiGraph& g, const Chain& c, int k);

struct ChainReplacement {
  /// Some chain has more than `threshold` vertices; nothing was replaced.
  bool too_long = false;
  MultiGraph graph;
  int k = 0;
};

ChainReplacement replace_all_chains(const MultiGraph& g, int k, std::uint64_t threshold);

}  // namespace countkernel
