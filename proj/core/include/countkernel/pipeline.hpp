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
#include <optional>
#include <string>

#include "countkernel/count_pair.hpp"
#include "countkernel/multigraph.hpp"

namespace countkernel {

/// Which branch of the counting kernelization produced the answer.
enum class CountPath {
  kTriviallyZero,  // the kernel proved there is no FVS of size <= k
  kDirectCount,    // a chain exceeded the threshold; counted exactly
  kReduced,        // every chain replaced by a gadget
};

std::string to_string(CountPath path);

struct PipelineOptions {
  /// Chains longer than min(2^k, chain_cap) trigger the direct count.
  std::uint64_t chain_cap = 4096;
  /// Also count the reduced instance.
  bool solve = false;
};

struct PipelineResult {
  CountPath path = CountPath::kTriviallyZero;
  /// (minimum FVS size of the input, #minFVS(input, k)) when known. For the
  /// reduced path it is set only with PipelineOptions::solve.
  std::optional<CountPair> count;
  /// The reduced instance (kReduced only).
  MultiGraph graph;
  int k = 0;
};

/// Either the exact count or an instance (graph, k) of size polynomial in
/// k with the same number of minimum feedback vertex sets.
PipelineResult count_kernelize(const MultiGraph& g, int k, const PipelineOptions& options = {});

/// min(2^k, cap), saturating.
std::uint64_t chain_threshold(int k, std::uint64_t cap);

}  // namespace countkernel
