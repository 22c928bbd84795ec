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

#include "countkernel/count_pair.hpp"
#include "countkernel/multigraph.hpp"

namespace countkernel {

/// Multigraph with a positive weight per vertex, indexed by VertexId.
struct WeightedMultiGraph {
  MultiGraph graph;
  std::vector<std::uint64_t> weight;

  static WeightedMultiGraph unit(MultiGraph g);
};

/// Which qualifying vertex the disjoint-FVS recursion branches on. The
/// result does not depend on it; the knob exists for testing that claim.
enum class BranchOrder { kSmallestFirst, kLargestFirst };

/// Weighted disjoint minimum FVS sum: (a, b) where a is the minimum size of
/// a feedback vertex set of g avoiding `w_set` and b sums, over all such
/// sets S of size a, the product of the weights in S. (inf, 0) if a > k.
///
/// Throws GraphError if `w_set` is not a feedback vertex set of g, names an
/// unknown vertex, or a weight is missing or zero.
CountPair dj_fvs(const WeightedMultiGraph& g, const VertexSet& w_set, int k,
                 BranchOrder order = BranchOrder::kSmallestFirst);

/// Combines dj_fvs over every subset X of `z` (the part of the solution
/// inside z). Returns (feedback vertex number, #minFVS(g, k)), or (inf, 0)
/// when the feedback vertex number exceeds k.
CountPair fvs_compression(const MultiGraph& g, int k, const VertexSet& z,
                          BranchOrder order = BranchOrder::kSmallestFirst);

/// Number of minimum feedback vertex sets of g of size at most k.
BigCount count_min_fvs(const MultiGraph& g, int k);

/// Same as count_min_fvs but also reports the minimum size.
CountPair count_min_fvs_pair(const MultiGraph& g, int k);

}  // namespace countkernel
