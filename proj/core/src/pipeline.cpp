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

#include "countkernel/pipeline.hpp"

#include <algorithm>
#include <stdexcept>

#include "countkernel/chain_gadget.hpp"
#include "countkernel/fvs_count.hpp"
#include "countkernel/fvs_reduce.hpp"

namespace countkernel {

std::string to_string(CountPath path) {
  switch (path) {
    case CountPath::kTriviallyZero:
      return "trivially-zero";
    case CountPath::kDirectCount:
      return "direct-count";
    case CountPath::kReduced:
      return "reduced";
  }
  return "unknown";
}

std::uint64_t chain_threshold(int k, std::uint64_t cap) {
  if (k < 0) throw std::invalid_argument("chain_threshold: negative parameter");
  const std::uint64_t power = k >= 63 ? UINT64_MAX : std::uint64_t{1} << k;
  return std::min(power, cap);
}

PipelineResult count_kernelize(const MultiGraph& g, int k, const PipelineOptions& options) {
  if (k < 0) throw std::invalid_argument("count_kernelize: negative parameter");
  PipelineResult out;

  const KernelResult kernel = kernelize_fvs(g, k);
  if (kernel.trivially_zero) {
    out.path = CountPath::kTriviallyZero;
    out.count = CountPair::none();
    return out;
  }

  // Vertices the kernel deleted are in every solution.
  const int forced = k - kernel.k;
  auto lift = [&](CountPair p, int shift) {
    if (!p.is_infinite()) p.size += shift;
    return p;
  };

  ChainReplacement replaced = replace_all_chains(kernel.graph, kernel.k, chain_threshold(k, options.chain_cap));
  if (replaced.too_long) {
    out.path = CountPath::kDirectCount;
    out.count = lift(count_min_fvs_pair(kernel.graph, kernel.k), forced);
    return out;
  }

  out.path = CountPath::kReduced;
  out.graph = std::move(replaced.graph);
  out.k = replaced.k;
  if (options.solve) out.count = lift(count_min_fvs_pair(out.graph, out.k), k - out.k);
  return out;
}

}  // namespace countkernel
