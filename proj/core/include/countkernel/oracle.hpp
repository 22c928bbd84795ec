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

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "countkernel/count_pair.hpp"
#include "countkernel/multigraph.hpp"

namespace countkernel {

/// Raised when an instance exceeds an oracle's size guard.
class OracleGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kBruteForceMaxVertices = 20;
inline constexpr std::size_t kMinorSearchMaxVertices = 12;
inline constexpr int kBranchingMaxBudget = 40;

/// Subset enumeration by increasing size: (feedback vertex number, number
/// of minimum FVSs) if the number is at most k, else (inf, 0).
CountPair brute_min_fvs(const MultiGraph& g, int k);

/// Same for dominating sets (N[S] = V). Requires a simple graph.
CountPair brute_min_ds(const MultiGraph& g, int k);

/// Every minimum dominating set of size at most k, each sorted, in
/// lexicographic order. Same guard as brute_min_ds.
std::vector<VertexSet> enumerate_min_ds(const MultiGraph& g, int k);

/// Every minimum feedback vertex set of size at most k.
std::vector<VertexSet> enumerate_min_fvs(const MultiGraph& g, int k);

/// Cycle-branching enumeration with deduplication; no vertex guard, cost
/// grows with k. For desk-scale graphs beyond the brute-force guard.
CountPair branching_min_fvs(const MultiGraph& g, int k);

/// Neighbourhood-branching enumeration for dominating sets; at most 64
/// vertices.
CountPair branching_min_ds(const MultiGraph& g, int k);

/// Exhaustive minor search over edge deletions and contractions (parallel
/// edges ignored). At most 12 vertices.
bool has_k5_or_k33_minor(const MultiGraph& g);

}  // namespace countkernel
