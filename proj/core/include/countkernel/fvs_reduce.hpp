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

#include "countkernel/multigraph.hpp"

namespace countkernel {

/// Approximation ratio of approx_fvs(). Every "rho * k" threshold in the
/// kernel and the counter uses this constant.
inline constexpr int kApproxRatio = 2;

/// Size guarantees of kernelize_fvs() for parameter k and ratio rho.
struct KernelBounds {
  std::int64_t rho = kApproxRatio;
  std::int64_t k = 0;

  /// rho*k + rho^2*k^2*(k+4)
  std::int64_t max_v_neq2() const noexcept { return rho * k + rho * rho * k * k * (k + 4); }
  /// rho*k + 2*rho^2*k^2*(k+4)
  std::int64_t max_chains() const noexcept { return rho * k + 2 * rho * rho * k * k * (k + 4); }
};

/// Caps every multiplicity at two.
MultiGraph apply_r1(const MultiGraph& g);

/// Removes vertices of degree at most one until none is left.
MultiGraph apply_r2(const MultiGraph& g);

/// Feedback vertex set of size at most kApproxRatio * OPT, where OPT is the
/// optimum among feedback vertex sets avoiding `forbidden` (if given). The
/// result never contains `forbidden`.
///
/// Local-ratio algorithm for weighted FVS with semidisjoint-cycle and
/// degree weightings followed by reverse deletion; `forbidden` gets weight
/// 2|V|+1 and every other vertex weight 1.
VertexSet approx_fvs(const MultiGraph& g, std::optional<VertexId> forbidden = std::nullopt);

/// Deletes edges between `v` and trees of G - (Y_v + v) that are not marked.
/// For each u in Y_v (ascending), trees adjacent to both v and u are marked
/// in order of their smallest vertex until k+2 of them are marked. The
/// result satisfies deg(v) <= |Y_v| * (k+4) and keeps every FVS of size <= k.
///
/// Throws GraphError if g has a multiplicity above two, v is unknown or in
/// Y_v, or Y_v is not a feedback vertex set of g.
MultiGraph degree_reduce(const MultiGraph& g, int k, VertexId v, const VertexSet& y_v);

struct KernelResult {
  /// The input has no feedback vertex set of size <= k.
  bool trivially_zero = false;
  MultiGraph graph;
  int k = 0;
};

/// Reduces (g, k) to (g', k') with #minFVS(g, k) = #minFVS(g', k'), k' <= k,
/// and |V_{!=2}(g')|, |chains(g')| within KernelBounds{kApproxRatio, k}.
KernelResult kernelize_fvs(const MultiGraph& g, int k);

}  // namespace countkernel
